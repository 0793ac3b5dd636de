"""Burau representation and the classical invariants it carries: Alexander
polynomial, link determinant, homology of the double branched cover, Arf.

The reduced representation acts on the (n-1)-dimensional quotient of the
permutation module spanned by differences of adjacent strand coordinates;
generator matrices differ from the identity in a single column.  Matrices
compose in word order by right multiplication.

For the double branched cover we use the n-strand permutation-module action
evaluated at t = -1: its fixed row-sum gives one extra free rank, so the
homology presentation is (matrix - identity) with one unit of corank removed.
This matches the Seifert-matrix computation on every fixture it was checked
against (see the test suite).
"""

from __future__ import annotations

from .algebra import LaurentPoly, UsageError, _is_prime, corank_mod_p
from .braid import BraidWord, closure_components


def _laurent_identity(size: int):
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    return [[one if r == c else zero for c in range(size)] for r in range(size)]


def _reduced_generator(n: int, letter: int):
    """Reduced Burau image of a single letter; columns indexed 0..n-2."""
    m = _laurent_identity(n - 1)
    i = abs(letter)
    c = i - 1
    t = LaurentPoly.t()
    tinv = LaurentPoly.t(-1)
    if letter > 0:
        if i >= 2:
            m[i - 2][c] = t
        m[i - 1][c] = LaurentPoly.t(1, -1)
        if i <= n - 2:
            m[i][c] = LaurentPoly.one()
    else:
        if i >= 2:
            m[i - 2][c] = LaurentPoly.one()
        m[i - 1][c] = LaurentPoly.t(-1, -1)
        if i <= n - 2:
            m[i][c] = tinv
    return m


def _mat_mul(a, b):
    size = len(a)
    out = []
    for r in range(size):
        row = []
        for c in range(size):
            acc = LaurentPoly.zero()
            for k in range(size):
                if not a[r][k].is_zero() and not b[k][c].is_zero():
                    acc = acc + a[r][k] * b[k][c]
            row.append(acc)
        out.append(row)
    return out


def reduced_burau(b: BraidWord) -> tuple[tuple[LaurentPoly, ...], ...]:
    """Reduced Burau matrix of the braid word, over integer Laurent
    polynomials; (n-1) x (n-1)."""
    if b.strands < 2:
        raise UsageError("reduced representation needs at least 2 strands")
    acc = _laurent_identity(b.strands - 1)
    for letter in b.word:
        acc = _mat_mul(acc, _reduced_generator(b.strands, letter))
    return tuple(tuple(row) for row in acc)


def _det(m) -> LaurentPoly:
    size = len(m)
    if size == 0:
        return LaurentPoly.one()
    if size == 1:
        return m[0][0]
    total = LaurentPoly.zero()
    sign = 1
    for c in range(size):
        if not m[0][c].is_zero():
            minor = [[row[k] for k in range(size) if k != c] for row in m[1:]]
            term = m[0][c] * _det(minor)
            total = total + (term if sign > 0 else -term)
        sign = -sign
    return total


def alexander_poly(b: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure, canonicalized up to +-t^k
    (lowest exponent 0, lowest coefficient positive); the zero polynomial
    for split closures."""
    if b.strands == 1:
        return LaurentPoly.one()  # closure is the unknot
    m = [list(row) for row in reduced_burau(b)]
    for k in range(len(m)):
        m[k][k] = m[k][k] - 1
    d = _det(m)
    if d.is_zero():
        return LaurentPoly.zero()
    fuller = LaurentPoly(0, (1,) * b.strands)  # 1 + t + ... + t^(n-1)
    return d.divexact(fuller).canonical()


def determinant(b: BraidWord) -> int:
    """|Alexander(-1)|, the order of the double cover's first homology when
    finite; 0 for split closures."""
    return abs(alexander_poly(b).evaluate_int(-1))


def _unreduced_generator_at_minus_one(n: int, letter: int):
    m = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    i = abs(letter)
    # 2x2 block in strand coordinates i-1, i (0-based), evaluated at t = -1
    if letter > 0:
        block = ((2, -1), (1, 0))
    else:
        block = ((0, 1), (-1, 2))
    for r in range(2):
        for c in range(2):
            m[i - 1 + r][i - 1 + c] = block[r][c]
    return m


def double_cover_presentation(b: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Integer matrix presenting H1 of the double branched cover plus one
    free summand (the row-sum fixed vector)."""
    n = b.strands
    acc = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for letter in b.word:
        g = _unreduced_generator_at_minus_one(n, letter)
        acc = [[sum(acc[r][k] * g[k][c] for k in range(n)) for c in range(n)]
               for r in range(n)]
    for k in range(n):
        acc[k][k] -= 1
    return tuple(tuple(row) for row in acc)


def double_cover_homology(b: BraidWord, p: int) -> int:
    """d_p = dim over F_p of H1 of the double branched cover of the closure."""
    if not _is_prime(p):
        raise UsageError("p must be prime, got %d" % p)
    return corank_mod_p(double_cover_presentation(b), p) - 1


def arf_knot(b: BraidWord) -> int:
    """Arf invariant of a knot closure, from the determinant mod 8."""
    if closure_components(b) != 1:
        raise UsageError("Arf is only defined here for knots")
    r = determinant(b) % 8
    if r in (1, 7):
        return 0
    if r in (3, 5):
        return 1
    raise UsageError("knot determinant must be odd, got residue %d" % r)


def burau_mod_p(b: BraidWord, p: int, t0: int) -> tuple[tuple[int, ...], ...]:
    """Reduced Burau evaluated at t = t0 over F_p."""
    if b.strands < 2:
        raise UsageError("reduced representation needs at least 2 strands")
    if not _is_prime(p):
        raise UsageError("p must be prime, got %d" % p)
    if t0 % p == 0:
        raise UsageError("t0 must be a unit mod p")
    n = b.strands
    size = n - 1
    acc = [[1 if r == c else 0 for c in range(size)] for r in range(size)]
    for letter in b.word:
        g = [[x.evaluate_mod(t0, p) for x in row]
             for row in _reduced_generator(n, letter)]
        acc = [[sum(acc[r][k] * g[k][c] for k in range(size)) % p
                for c in range(size)] for r in range(size)]
    return tuple(tuple(row) for row in acc)
