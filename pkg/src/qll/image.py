"""Classifying braid-group images in exact matrix representations.

Two families are supported.  For the diagram algebra at a root of unity the
braid generators act by left multiplication on the semisimple quotient: the
bilinear form (x, y) -> closure-trace(x.y) has a radical that is a two-sided
ideal, and the induced action on the quotient is faithful to the braiding on
the fusion-theoretic endomorphism spaces.  (On the full diagram algebra the
action contains unipotent parts at small l and every verdict would be
"infinite", so the quotient is the representation that carries the structure
worth classifying.)  For the reduced Burau family the generators are
evaluated at an invertible residue mod p.

Verdicts are exact certificates in both directions: finiteness is an
enumerated multiplication closure, and infiniteness is a word whose matrix
violates the Galois-trace bound satisfied by every matrix of finite
projective order (all eigenvalue magnitudes 1 at every complex embedding, so
every conjugate of tr(M^m) has magnitude at most the dimension).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .algebra import (CycFraction, CyclotomicNumber, UsageError, _is_prime,
                      euler_phi)
from .braid import BraidWord
from .burau import burau_mod_p
from .tl_jones import (closure_loop_count, diagram_basis, e_diagram,
                       loop_parameter, tl_compose)

_DEFAULT_BOUND = 10 ** 6
_STAGE_BOUND = 50_000
_WITNESS_LEN = 6
_TRACE_POWERS = 6
_TRACE_DOUBLINGS = 6


# ---------------------------------------------------------------------------
# exact matrices

class CycMatrix:
    """Square matrix over Q(zeta_N): integer-coefficient entries over one
    positive denominator, in lowest terms."""

    __slots__ = ("order", "den", "rows")

    def __init__(self, order: int, rows, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        entries = [[e.embed(order) for e in row] for row in rows]
        dim = len(entries)
        if any(len(row) != dim for row in entries):
            raise UsageError("matrix must be square")
        if den < 0:
            den = -den
            entries = [[-e for e in row] for row in entries]
        g = den
        for row in entries:
            for e in row:
                g = gcd(g, e.content())
        if g > 1:
            den //= g
            entries = [[CyclotomicNumber(order, [c // g for c in e.coeffs])
                        for e in row] for row in entries]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "rows", tuple(tuple(row) for row in entries))

    def __setattr__(self, *a):
        raise AttributeError("CycMatrix is immutable")

    @staticmethod
    def from_fractions(order: int, rows) -> "CycMatrix":
        den = 1
        for row in rows:
            for e in row:
                den = den * e.den // gcd(den, e.den)
        nums = [[e.num.embed(order) * (den // e.den) for e in row] for row in rows]
        return CycMatrix(order, nums, den)

    @staticmethod
    def identity(order: int, dim: int) -> "CycMatrix":
        one = CyclotomicNumber.one(order)
        zero = CyclotomicNumber.zero(order)
        return CycMatrix(order, [[one if r == c else zero for c in range(dim)]
                                 for r in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def identity_like(self) -> "CycMatrix":
        return CycMatrix.identity(self.order, self.dim)

    def mul(self, other: "CycMatrix") -> "CycMatrix":
        if self.order != other.order or self.dim != other.dim:
            raise UsageError("matrix shapes/orders differ")
        n = self.dim
        bcols = [[other.rows[k][c] for k in range(n)] for c in range(n)]
        rows = []
        for r in range(n):
            arow = self.rows[r]
            rows.append([_dot(arow, bcols[c]) for c in range(n)])
        return CycMatrix(self.order, rows, self.den * other.den)

    def fraction_rows(self):
        return [[CycFraction(e, self.den) for e in row] for row in self.rows]

    def trace(self) -> CycFraction:
        acc = CyclotomicNumber.zero(self.order)
        for i in range(self.dim):
            acc = acc + self.rows[i][i]
        return CycFraction(acc, self.den)

    def det(self) -> CycFraction:
        rows = self.fraction_rows()
        n = self.dim
        det = CycFraction.from_cyc(CyclotomicNumber.one(self.order))
        for c in range(n):
            pr = next((r for r in range(c, n) if not rows[r][c].is_zero()), None)
            if pr is None:
                return CycFraction(CyclotomicNumber.zero(self.order), 1)
            if pr != c:
                rows[c], rows[pr] = rows[pr], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c].inverse()
            for r in range(c + 1, n):
                if not rows[r][c].is_zero():
                    f = rows[r][c] * inv
                    rows[r] = [rows[r][k] - f * rows[c][k] for k in range(n)]
        return det

    def inverse(self) -> "CycMatrix":
        return CycMatrix.from_fractions(self.order, _frac_inverse(self.fraction_rows()))

    def key(self):
        return ("cyc", self.order, self.den,
                tuple(tuple(e.coeffs for e in row) for row in self.rows))

    def canonical_key(self, projective: bool):
        if not projective:
            return self.key()
        first = next((e for row in self.rows for e in row if not e.is_zero()), None)
        if first is None:
            return self.key()
        best = None
        for unit in _unit_scalars(self.order):
            cand = (first * unit).coeffs
            if best is None or cand < best[0]:
                best = (cand, unit)
        unit = best[1]
        rows = [[e * unit for e in row] for row in self.rows]
        return ("cyc", self.order, self.den,
                tuple(tuple(e.coeffs for e in row) for row in rows))

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "CycMatrix(order=%d, dim=%d, den=%d)" % (self.order, self.dim, self.den)


def _dot(arow, bcol):
    acc = None
    for a, b in zip(arow, bcol):
        if a.is_zero() or b.is_zero():
            continue
        term = a * b
        acc = term if acc is None else acc + term
    return acc if acc is not None else CyclotomicNumber.zero(arow[0].order)


def _unit_scalars(order: int):
    """The roots of unity of Q(zeta_order): zeta^j, and their negatives when
    the order is odd (for even order -1 is already a power)."""
    out = []
    z = CyclotomicNumber.one(order)
    step = CyclotomicNumber.zeta(order) if order > 1 else None
    for _ in range(order):
        out.append(z)
        if order % 2:
            out.append(-z)
        if step is not None:
            z = z * step
    return out


def _frac_inverse(rows):
    n = len(rows)
    aug = [list(rows[r]) + [CycFraction.from_cyc(1 if c == r else 0)
                            for c in range(n)] for r in range(n)]
    for c in range(n):
        pr = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
        if pr is None:
            raise UsageError("matrix is singular")
        aug[c], aug[pr] = aug[pr], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [aug[r][k] - f * aug[c][k] for k in range(2 * n)]
    return [row[n:] for row in aug]


class FpMatrix:
    """Square matrix over F_p."""

    __slots__ = ("p", "rows")

    def __init__(self, p: int, rows):
        if not _is_prime(p):
            raise UsageError("p must be prime, got %d" % p)
        entries = tuple(tuple(x % p for x in row) for row in rows)
        if any(len(row) != len(entries) for row in entries):
            raise UsageError("matrix must be square")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "rows", entries)

    def __setattr__(self, *a):
        raise AttributeError("FpMatrix is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def identity_like(self) -> "FpMatrix":
        n = self.dim
        return FpMatrix(self.p, [[1 if r == c else 0 for c in range(n)]
                                 for r in range(n)])

    def mul(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p or self.dim != other.dim:
            raise UsageError("matrix shapes/moduli differ")
        n, p = self.dim, self.p
        return FpMatrix(p, [[sum(self.rows[r][k] * other.rows[k][c]
                                 for k in range(n)) % p
                             for c in range(n)] for r in range(n)])

    def inverse(self) -> "FpMatrix":
        n, p = self.dim, self.p
        aug = [list(self.rows[r]) + [1 if c == r else 0 for c in range(n)]
               for r in range(n)]
        for c in range(n):
            pr = next((r for r in range(c, n) if aug[r][c] % p), None)
            if pr is None:
                raise UsageError("matrix is singular")
            aug[c], aug[pr] = aug[pr], aug[c]
            inv = pow(aug[c][c], -1, p)
            aug[c] = [x * inv % p for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [(aug[r][k] - f * aug[c][k]) % p for k in range(2 * n)]
        return FpMatrix(p, [row[n:] for row in aug])

    def key(self):
        return ("fp", self.p, self.rows)

    def canonical_key(self, projective: bool):
        if not projective:
            return self.key()
        first = next((x for row in self.rows for x in row if x), None)
        if first is None:
            return self.key()
        inv = pow(first, -1, self.p)
        return ("fp", self.p,
                tuple(tuple(x * inv % self.p for x in row) for row in self.rows))

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "FpMatrix(p=%d, dim=%d)" % (self.p, self.dim)


# ---------------------------------------------------------------------------
# representation specs

@dataclass(frozen=True)
class RepSpec:
    """A braid representation family: diagram algebra at the root indexed by
    l ("tl"), or reduced Burau mod p at t = t0 ("burau")."""

    family: str
    strands: int
    l: int = 0
    p: int = 0
    t0: int = 0

    def __post_init__(self):
        if self.family == "tl":
            if self.l < 3:
                raise UsageError("need l >= 3")
            if not 1 <= self.strands <= 6:
                raise UsageError("diagram basis capped at 6 strands")
        elif self.family == "burau":
            if not _is_prime(self.p):
                raise UsageError("p must be prime, got %d" % self.p)
            if self.t0 % self.p == 0:
                raise UsageError("t0 must be a unit mod p")
            if self.strands < 2:
                raise UsageError("reduced representation needs at least 2 strands")
        else:
            raise UsageError("unknown family %r" % self.family)


@dataclass(frozen=True)
class ImageReport:
    verdict: str  # "finite-abelian" | "finite" | "infinite" | "unknown"
    order: int | None = None
    witness: tuple | None = None
    generators: int = 0
    notes: tuple = ()


@lru_cache(maxsize=None)
def _quotient_coordinates(n: int, l: int):
    """Pivot data of the closure-trace form on the diagram basis: returns
    (basis, index map, Gram rows, pivot row indices, pivot column indices)."""
    basis = diagram_basis(n)
    index = {d.partner: k for k, d in enumerate(basis)}
    delta = loop_parameter(l)
    d = len(basis)
    powers = [CyclotomicNumber.one(4 * l)]
    for _ in range(2 * n):
        powers.append(powers[-1] * delta)
    comp = [[None] * d for _ in range(d)]
    gram = [[None] * d for _ in range(d)]
    for s in range(d):
        for t in range(d):
            res, k = tl_compose(basis[s], basis[t])
            loops = k + closure_loop_count(res) - 1
            comp[s][t] = (index[res.partner], k)
            gram[s][t] = CycFraction(powers[loops], 1)
    piv_rows, piv_cols = _echelon_pivots(gram)
    return basis, index, comp, gram, piv_rows, piv_cols


def _echelon_pivots(G):
    rows = [list(r) for r in G]
    idx = list(range(len(rows)))
    piv_rows, piv_cols = [], []
    r = 0
    for c in range(len(rows[0]) if rows else 0):
        pr = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        idx[r], idx[pr] = idx[pr], idx[r]
        piv_rows.append(idx[r])
        piv_cols.append(c)
        inv = rows[r][c].inverse()
        for i in range(r + 1, len(rows)):
            if not rows[i][c].is_zero():
                f = rows[i][c] * inv
                rows[i] = [rows[i][k] - f * rows[r][k] for k in range(len(rows[i]))]
        r += 1
    return piv_rows, piv_cols


def quotient_dimension(n: int, l: int) -> int:
    """Dimension of the semisimple quotient the braid generators act on."""
    _, _, _, _, piv_rows, _ = _quotient_coordinates(n, l)
    return len(piv_rows)


@lru_cache(maxsize=None)
def _tl_generators(n: int, l: int):
    if n == 1:
        return ()
    N = 4 * l
    basis, index, comp, gram, I, J = _quotient_coordinates(n, l)
    delta = loop_parameter(l)
    A = CycFraction(CyclotomicNumber.zeta(N), 1)
    Ainv = CycFraction(CyclotomicNumber.zeta(N, N - 1), 1)
    r = len(I)
    C = [[gram[I[b]][J[a]] for b in range(r)] for a in range(r)]
    C_inv = _frac_inverse(C)
    gens = []
    for i in range(1, n):
        e_i = e_diagram(n, i)
        left = []  # e_i . d_s, as (result index, loops)
        for s, d in enumerate(basis):
            res, k = tl_compose(e_i, d)
            left.append((index[res.partner], k))
        dpow = [CycFraction(CyclotomicNumber.one(N), 1)]
        for _ in range(n):
            dpow.append(dpow[-1] * CycFraction(delta, 1))
        W = []
        for a in range(r):
            row = []
            for b in range(r):
                s = I[b]
                t, k = left[s]
                row.append(A * gram[s][J[a]] + Ainv * dpow[k] * gram[t][J[a]])
            W.append(row)
        M = [[None] * r for _ in range(r)]
        for x in range(r):
            for y in range(r):
                acc = CycFraction(CyclotomicNumber.zero(N), 1)
                for k in range(r):
                    acc = acc + W[x][k] * C_inv[k][y]
                M[x][y] = acc
        gens.append(CycMatrix.from_fractions(N, M))
    return tuple(gens)


def rep_generators(spec: RepSpec):
    """The images of sigma_1 .. sigma_{n-1}, as exact matrices."""
    if spec.family == "tl":
        return _tl_generators(spec.strands, spec.l)
    return tuple(FpMatrix(spec.p, burau_mod_p(BraidWord(spec.strands, (i,)),
                                              spec.p, spec.t0))
                 for i in range(1, spec.strands))


# ---------------------------------------------------------------------------
# closure enumeration

def group_closure(gens, bound: int = _DEFAULT_BOUND, projective: bool = False):
    """Exact order of the group generated, or None once `bound` distinct
    elements are exceeded.  A finite multiplicative closure of invertible
    matrices already contains every inverse, so multiplying by the generators
    alone is enough.  Projective mode counts elements up to scalar."""
    if not gens:
        return 1
    ident = gens[0].identity_like()
    seen = {ident.canonical_key(projective)}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                w = m.mul(g)
                k = w.canonical_key(projective)
                if k not in seen:
                    if len(seen) >= bound:
                        return None
                    seen.add(k)
                    nxt.append(w)
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# infinite-order certificate

def _is_root_of_unity(x: CyclotomicNumber) -> bool:
    for unit in _unit_scalars(x.order):
        if x == unit:
            return True
    return False


def _trace_certificate(M: CycMatrix) -> bool:
    """True only if M provably has infinite projective order.

    If M had finite projective order, M = scalar * U with U of finite order,
    and |det M| = 1 at every embedding forces |scalar| = 1 everywhere; then
    every Galois conjugate of tr(M^m) has magnitude <= dim.  Writing the
    trace as x / d, a rational trace of (x conj(x))^r above
    phi(N) * (dim*d)^(2r) therefore certifies some conjugate exceeds the
    bound — an exact integer comparison."""
    dim, N = M.dim, M.order
    phi_n = euler_phi(N)
    P = M
    for m in range(1, _TRACE_POWERS + 1):
        if m > 1:
            P = P.mul(M)
        tr = P.trace()
        x, d = tr.num, tr.den
        if x.is_zero():
            continue
        y = x * x.conjugate()
        base = (dim * d) ** 2
        r = 1
        for _ in range(_TRACE_DOUBLINGS + 1):
            if y.trace_to_int() > phi_n * base ** r:
                return True
            y = y * y
            r *= 2
    return False


def _reduced_extensions(word, alphabet):
    last = word[-1] if word else None
    for a in alphabet:
        if last is not None and a == -last:
            continue
        yield a


def infinite_order_witness(gens, max_len: int = _WITNESS_LEN):
    """Search words in the generators (shortest first, then by alphabet
    order sigma_1, sigma_1^-1, sigma_2, ...) for a matrix certified to have
    infinite projective order; None if no word up to max_len certifies."""
    if not gens:
        return None
    for g in gens:
        if not isinstance(g, CycMatrix):
            raise UsageError("the certificate needs cyclotomic entries")
        det = g.det()
        if det.den != 1 or not _is_root_of_unity(det.num):
            raise UsageError("generator determinant is not a root of unity")
    by_letter = {}
    for i, g in enumerate(gens, start=1):
        by_letter[i] = g
        by_letter[-i] = g.inverse()
    alphabet = [s * i for i in range(1, len(gens) + 1) for s in (1, -1)]
    seen = set()
    frontier = [((), gens[0].identity_like())]
    for _ in range(max_len):
        nxt = []
        for word, M in frontier:
            for a in _reduced_extensions(word, alphabet):
                w2 = word + (a,)
                M2 = M.mul(by_letter[a])
                k = M2.canonical_key(True)
                if k in seen:
                    continue  # same subtree of products, found earlier/shorter
                seen.add(k)
                if _trace_certificate(M2):
                    return w2
                nxt.append((w2, M2))
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# classification

def classify_image(spec: RepSpec, bound: int = _DEFAULT_BOUND) -> ImageReport:
    """Classify the projective closure of the braid image as finite abelian,
    finite (with exact order), infinite (with witness word), or unknown."""
    gens = rep_generators(spec)
    notes = []
    if spec.family == "tl":
        notes.append("quotient dimension %d of diagram algebra dimension %d"
                     % (gens[0].dim if gens else 1, len(diagram_basis(spec.strands))))
    else:
        notes.append("reduced representation of dimension %d over F_%d at t=%d"
                     % (spec.strands - 1, spec.p, spec.t0))
    if not gens:
        return ImageReport("finite-abelian", order=1, generators=0,
                           notes=tuple(notes + ["no generators: trivial image"]))

    if spec.family == "tl":
        witness = infinite_order_witness(gens, max_len=4)
        if witness is not None:
            notes.append("trace bound violated at a power of the witness")
            return ImageReport("infinite", witness=witness,
                               generators=len(gens), notes=tuple(notes))

    stage = min(_STAGE_BOUND, bound)
    order = group_closure(gens, stage, projective=True)
    if order is None and stage < bound:
        order = group_closure(gens, bound, projective=True)
    if order is None:
        if spec.family == "tl":
            witness = infinite_order_witness(gens, max_len=_WITNESS_LEN)
            if witness is not None:
                notes.append("trace bound violated at a power of the witness")
                return ImageReport("infinite", witness=witness,
                                   generators=len(gens), notes=tuple(notes))
        notes.append("closure exceeded bound %d without a certificate" % bound)
        return ImageReport("unknown", generators=len(gens), notes=tuple(notes))

    abelian = all(gens[i].mul(gens[j]).canonical_key(True) ==
                  gens[j].mul(gens[i]).canonical_key(True)
                  for i in range(len(gens)) for j in range(i))
    verdict = "finite-abelian" if abelian else "finite"
    notes.append("projective order %d" % order)
    return ImageReport(verdict, order=order, generators=len(gens),
                       notes=tuple(notes))
