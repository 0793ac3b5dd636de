"""Command-line front end for braid-closure link invariants.

Subcommands:

* ``invariants``  -- evaluate selected invariants of one braid closure.
* ``check-table`` -- run the identity-check suite over a corpus of links
  with frozen expected values (bundled corpus by default).
* ``image``       -- classify the image of a braid-group representation.
* ``hom``         -- count or estimate homomorphisms from a link group.
* ``version``     -- print the package version.

Reports are emitted as text (default) or machine-readable JSON (``--json``).
With ``--no-timings`` two runs on identical inputs produce byte-identical
JSON.  Exit codes: 0 all checks pass, 1 identity failure, 2 usage error,
3 budget refusal.  The ``QLL_BUDGET`` environment variable overrides the
default enumeration budget where no explicit ``--budget``/``--bound`` flag
is given.

Corpus files are UTF-8 lines ``name ; strands ; word ; key=value, ...``
with ``#`` comments.  Braid words are space-separated nonzero integers
(sign = crossing sign, magnitude = strand position).  Expected-value keys:
``components``, ``det``, ``d3``, ``d5``, ``arf``, ``jones.l3``,
``jones.l4`` (integer-valued specializations only) and ``hom.<groupspec>``
for the built-in group specs of :func:`qll.homcount.builtin_group`.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import __version__
from .algebra import BudgetError, CyclotomicNumber, LaurentPoly, UsageError
from .braid import BraidWord, closure_components, linking_matrix, parse_braid
from .burau import alexander_poly, arf_knot, determinant, double_cover_homology
from .homcount import (
    FiniteGroup,
    builtin_group,
    hom_count_estimate,
    hom_count_exact,
    wirtinger_hom_count,
)
from .image import RepSpec, classify_image
from .tl_jones import jones_at_root, kauffman_bracket_statesum

DEFAULT_BUDGET = 10**9
DEFAULT_IMAGE_BOUND = 10**6

# Levels checked by the closed-form-vs-state-sum oracle in check-table.
ORACLE_LEVELS = (3, 4, 5, 6, 7, 10)

# Abelian groups for the |G|^components law, checked on every corpus entry.
ABELIAN_LAW_GROUPS = ("cyclic 2", "cyclic 3", "cyclic 6")

_SCALAR_KEYS = frozenset(
    ["components", "det", "d3", "d5", "arf", "jones.l3", "jones.l4"]
)


# ---------------------------------------------------------------------------
# corpus files


@dataclass(frozen=True)
class CorpusEntry:
    """One corpus line: a named braid plus frozen expected values."""

    name: str
    braid: BraidWord
    expected: tuple[tuple[str, int], ...]


def parse_corpus(text: str, source: str = "<corpus>") -> list[CorpusEntry]:
    """Parse corpus text; raise UsageError with line numbers on bad input."""
    entries: list[CorpusEntry] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(";")]
        if len(fields) not in (3, 4):
            raise UsageError(
                "%s:%d: expected 'name ; strands ; word [; key=value, ...]'"
                % (source, lineno)
            )
        name = fields[0]
        if not name:
            raise UsageError("%s:%d: empty entry name" % (source, lineno))
        if name in seen:
            raise UsageError(
                "%s:%d: duplicate entry name %r" % (source, lineno, name)
            )
        seen.add(name)
        try:
            strands = int(fields[1])
        except ValueError:
            raise UsageError(
                "%s:%d: strand count %r is not an integer"
                % (source, lineno, fields[1])
            ) from None
        try:
            braid = parse_braid(fields[2], strands)
        except UsageError as exc:
            raise UsageError("%s:%d: %s" % (source, lineno, exc)) from None
        expected: list[tuple[str, int]] = []
        if len(fields) == 4 and fields[3]:
            for item in fields[3].split(","):
                key, sep, value_text = item.partition("=")
                key, value_text = key.strip(), value_text.strip()
                if not sep or not key or not value_text:
                    raise UsageError(
                        "%s:%d: malformed expected value %r"
                        % (source, lineno, item.strip())
                    )
                if key not in _SCALAR_KEYS and not (
                    key.startswith("hom.") and len(key) > 4
                ):
                    raise UsageError(
                        "%s:%d: unknown expected key %r" % (source, lineno, key)
                    )
                if any(key == k for k, _ in expected):
                    raise UsageError(
                        "%s:%d: duplicate expected key %r" % (source, lineno, key)
                    )
                try:
                    value = int(value_text)
                except ValueError:
                    raise UsageError(
                        "%s:%d: expected value for %r is not an integer: %r"
                        % (source, lineno, key, value_text)
                    ) from None
                expected.append((key, value))
        entries.append(CorpusEntry(name, braid, tuple(expected)))
    return entries


def bundled_corpus_text() -> str:
    return (
        resources.files("qll").joinpath("data/links.corpus").read_text("utf-8")
    )


# ---------------------------------------------------------------------------
# value rendering


def _approx(v: CyclotomicNumber) -> str:
    z = v.to_complex()
    return "%.6f%+.6fi" % (z.real, z.imag)


def _cyc_json(v: CyclotomicNumber) -> dict:
    out: dict = {"order": v.order, "coeffs": list(v.coeffs), "approx": _approx(v)}
    if v.is_rational_integer():
        out["integer"] = v.as_int()
    return out


def _cyc_text(v: CyclotomicNumber) -> str:
    if v.is_rational_integer():
        return str(v.as_int())
    terms = " ".join(
        "%+d*z^%d" % (coeff, power)
        for power, coeff in enumerate(v.coeffs)
        if coeff
    )
    return "(%s in Q(zeta_%d)) ~ %s" % (terms, v.order, _approx(v))


def _poly_text(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for power in range(p.high, p.low - 1, -1):
        coeff = p.coeffs[power - p.low]
        if not coeff:
            continue
        magnitude = abs(coeff)
        if power == 0:
            body = str(magnitude)
        else:
            body = ("t" if magnitude == 1 else "%dt" % magnitude) + (
                "" if power == 1 else "^%d" % power
            )
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts)


def _poly_json(p: LaurentPoly) -> dict:
    return {"low": p.low, "coeffs": list(p.coeffs), "text": _poly_text(p)}


def _fraction_json(f: Fraction) -> dict:
    return {
        "numerator": f.numerator,
        "denominator": f.denominator,
        "approx": "%.6f" % float(f),
    }


def _fraction_text(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else "%d/%d" % (
        f.numerator,
        f.denominator,
    )


def _word_text(word: tuple[int, ...]) -> str:
    return " ".join(str(letter) for letter in word) if word else "(empty)"


# ---------------------------------------------------------------------------
# identity-check suite


def _row(check: str, ok: bool, detail: str) -> dict:
    return {"check": check, "verdict": "pass" if ok else "fail", "detail": detail}


def _skip(check: str, reason: str) -> dict:
    return {"check": check, "verdict": "skip", "detail": reason}


class _GroupCache:
    """Build each group spec once per run; surface bad specs as check rows."""

    def __init__(self) -> None:
        self._groups: dict[str, FiniteGroup] = {}

    def get(self, spec: str) -> FiniteGroup:
        if spec not in self._groups:
            self._groups[spec] = builtin_group(spec)
        return self._groups[spec]


def _l6_targets(c: int, d3: int) -> tuple[CyclotomicNumber, CyclotomicNumber]:
    """The pair ±i^(c-1) (i√3)^d3 in Q(zeta_24)."""
    i_unit = CyclotomicNumber.zeta(24, 6)
    sqrt3 = CyclotomicNumber.zeta(24, 2) + CyclotomicNumber.zeta(24, 22)
    target = CyclotomicNumber.one(24)
    for _ in range(c - 1):
        target = target * i_unit
    i_sqrt3 = i_unit * sqrt3
    for _ in range(d3):
        target = target * i_sqrt3
    return target, -target


def _check_expected(
    entry: CorpusEntry,
    key: str,
    value: int,
    jones_at,
    c: int,
    budget: int,
    groups: _GroupCache,
) -> dict:
    name = "expected:%s" % key
    try:
        if key == "components":
            actual: object = c
        elif key == "det":
            actual = determinant(entry.braid)
        elif key == "d3":
            actual = double_cover_homology(entry.braid, 3)
        elif key == "d5":
            actual = double_cover_homology(entry.braid, 5)
        elif key == "arf":
            actual = arf_knot(entry.braid)
        elif key in ("jones.l3", "jones.l4"):
            v = jones_at(3 if key == "jones.l3" else 4)
            if not v.is_rational_integer():
                return _row(
                    name, False, "expected %d, got %s" % (value, _cyc_text(v))
                )
            actual = v.as_int()
        else:  # hom.<groupspec>, vocabulary enforced by parse_corpus
            actual = hom_count_exact(entry.braid, groups.get(key[4:]), budget)
    except BudgetError as exc:
        return _skip(name, str(exc))
    except UsageError as exc:
        return _row(name, False, "expected %d, got error: %s" % (value, exc))
    return _row(name, actual == value, "expected %d, got %s" % (value, actual))


def run_entry_checks(
    entry: CorpusEntry, budget: int, groups: _GroupCache
) -> list[dict]:
    """All identity checks for one corpus entry, in a fixed order."""
    b = entry.braid
    c = closure_components(b)
    rows: list[dict] = []
    jones_cache: dict[int, CyclotomicNumber] = {}

    def jones_at(l: int) -> CyclotomicNumber:
        if l not in jones_cache:
            jones_cache[l] = jones_at_root(b, l)
        return jones_cache[l]

    # (i) closed form vs state-sum oracle, exact cyclotomic equality
    try:
        mismatch = None
        for l in ORACLE_LEVELS:
            lhs, rhs = jones_at(l), kauffman_bracket_statesum(b, l)
            if lhs != rhs:
                mismatch = (l, lhs, rhs)
                break
        if mismatch is None:
            rows.append(
                _row(
                    "jones-vs-statesum",
                    True,
                    "equal at l=%s" % ",".join(str(l) for l in ORACLE_LEVELS),
                )
            )
        else:
            l, lhs, rhs = mismatch
            rows.append(
                _row(
                    "jones-vs-statesum",
                    False,
                    "l=%d: closed form %s, state sum %s"
                    % (l, _cyc_text(lhs), _cyc_text(rhs)),
                )
            )
    except BudgetError as exc:
        rows.append(_skip("jones-vs-statesum", str(exc)))

    # (ii) level 3: V = (-1)^(c-1)
    sign = -1 if (c - 1) % 2 else 1
    v3 = jones_at(3)
    rows.append(
        _row(
            "l3-component-sign",
            v3.is_rational_integer() and v3.as_int() == sign,
            "V=%s, (-1)^(c-1)=%d with c=%d" % (_cyc_text(v3), sign, c),
        )
    )

    # (iii) level 4: V = 0 or |V|^2 = 2^(c-1); knots carry the Arf sign
    v4 = jones_at(4)
    if v4.is_zero():
        ok, detail = True, "V=0"
    else:
        modulus_sq = v4 * v4.conjugate()
        ok = (
            modulus_sq.is_rational_integer()
            and modulus_sq.as_int() == 2 ** (c - 1)
        )
        detail = "V*Vbar=%s, 2^(c-1)=%d" % (_cyc_text(modulus_sq), 2 ** (c - 1))
        if ok and c == 1:
            arf = arf_knot(b)
            ok = v4.is_rational_integer() and v4.as_int() == (-1) ** arf
            detail += "; V(i)=%s, (-1)^Arf=%d" % (_cyc_text(v4), (-1) ** arf)
    rows.append(_row("l4-modulus-arf", ok, detail))

    # (iv) level 6: V = +-i^(c-1) (i sqrt 3)^d3, sign observed and logged
    v6 = jones_at(6)
    d3 = double_cover_homology(b, 3)
    plus, minus = _l6_targets(c, d3)
    if v6 == plus:
        ok, observed = True, "+"
    elif v6 == minus:
        ok, observed = True, "-"
    else:
        ok, observed = False, "none"
    rows.append(
        _row(
            "l6-d3-identity",
            ok,
            "V=%s, i^(c-1)(i*sqrt3)^d3=%s, d3=%d, sign=%s"
            % (_cyc_text(v6), _cyc_text(plus), d3, observed),
        )
    )

    # (v) frozen expected literals
    for key, value in entry.expected:
        rows.append(_check_expected(entry, key, value, jones_at, c, budget, groups))

    # (vi) abelian hom-count law |G|^c
    for spec in ABELIAN_LAW_GROUPS:
        name = "abelian-law:%s" % spec
        try:
            group = groups.get(spec)
            count = hom_count_exact(b, group, budget)
        except BudgetError as exc:
            rows.append(_skip(name, str(exc)))
            continue
        rows.append(
            _row(
                name,
                count == group.size**c,
                "H=%d, |G|^c=%d with c=%d" % (count, group.size**c, c),
            )
        )
    return rows


# ---------------------------------------------------------------------------
# subcommand handlers (each returns a JSON-able report dict and an exit code)


def _budget_default() -> int:
    raw = os.environ.get("QLL_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError("QLL_BUDGET must be an integer, got %r" % raw) from None
    if value <= 0:
        raise UsageError("QLL_BUDGET must be positive, got %d" % value)
    return value


def _image_bound_default() -> int:
    raw = os.environ.get("QLL_BUDGET")
    return DEFAULT_IMAGE_BOUND if raw is None else _budget_default()


def _positive_int(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise UsageError("%s must be an integer, got %r" % (what, text)) from None
    if value <= 0:
        raise UsageError("%s must be positive, got %d" % (what, value))
    return value


def _cmd_invariants(args: argparse.Namespace) -> tuple[dict, int]:
    budget = args.budget if args.budget is not None else _budget_default()
    b = parse_braid(args.word, args.strands)
    started = time.perf_counter()
    results: dict = {}
    if args.components:
        results["components"] = closure_components(b)
    if args.linking:
        matrix = linking_matrix(b)
        total = sum(
            matrix[i][j]
            for i in range(len(matrix))
            for j in range(i + 1, len(matrix))
        )
        results["linking"] = {"matrix": [list(r) for r in matrix], "total": total}
    if args.jones:
        results["jones"] = {
            str(l): _cyc_json(jones_at_root(b, l)) for l in sorted(set(args.jones))
        }
    if args.alexander:
        results["alexander"] = _poly_json(alexander_poly(b))
    if args.det:
        results["det"] = determinant(b)
    if args.dp:
        results["dp"] = {
            str(p): double_cover_homology(b, p) for p in sorted(set(args.dp))
        }
    if args.arf:
        results["arf"] = arf_knot(b)
    if args.hom:
        hom: dict = {}
        for spec in args.hom:
            if spec not in hom:
                hom[spec] = hom_count_exact(b, builtin_group(spec), budget)
        results["hom"] = hom
    if args.hom_estimate:
        estimates = []
        for spec, samples_text, seed_text in args.hom_estimate:
            samples = _positive_int(samples_text, "sample count")
            seed = int(seed_text) if seed_text.lstrip("-").isdigit() else None
            if seed is None:
                raise UsageError("seed must be an integer, got %r" % seed_text)
            estimate, stderr = hom_count_estimate(
                b, builtin_group(spec), samples, seed
            )
            estimates.append(
                {
                    "group": spec,
                    "samples": samples,
                    "seed": seed,
                    "estimate": _fraction_json(estimate),
                    "stderr": _fraction_json(stderr),
                }
            )
        results["hom_estimate"] = estimates
    if not results:
        raise UsageError(
            "no invariants requested; pass at least one of --components, "
            "--linking, --jones, --alexander, --det, --dp, --arf, --hom, "
            "--hom-estimate"
        )
    report = {
        "command": "invariants",
        "input": {"strands": b.strands, "word": list(b.word)},
        "results": results,
    }
    if not args.no_timings:
        report["timings"] = {"total_s": time.perf_counter() - started}
    return report, 0


def _cmd_check_table(args: argparse.Namespace) -> tuple[dict, int]:
    budget = args.budget if args.budget is not None else _budget_default()
    if args.corpus is not None:
        try:
            with open(args.corpus, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise UsageError("cannot read corpus: %s" % exc) from None
        source = args.corpus
    else:
        text, source = bundled_corpus_text(), "bundled"
    entries = parse_corpus(text, source)
    groups = _GroupCache()
    started = time.perf_counter()
    entry_reports = []
    passed = failed = skipped = 0
    for entry in entries:
        entry_started = time.perf_counter()
        rows = run_entry_checks(entry, budget, groups)
        passed += sum(1 for r in rows if r["verdict"] == "pass")
        failed += sum(1 for r in rows if r["verdict"] == "fail")
        skipped += sum(1 for r in rows if r["verdict"] == "skip")
        entry_report = {
            "name": entry.name,
            "strands": entry.braid.strands,
            "word": list(entry.braid.word),
            "checks": rows,
        }
        if not args.no_timings:
            entry_report["elapsed_s"] = time.perf_counter() - entry_started
        entry_reports.append(entry_report)
    report = {
        "command": "check-table",
        "source": source,
        "entries": entry_reports,
        "summary": {
            "entries": len(entries),
            "checks": passed + failed + skipped,
            "passed": passed,
            "failed": failed,
            "skipped": skipped,
        },
    }
    if not args.no_timings:
        report["timings"] = {"total_s": time.perf_counter() - started}
    return report, 1 if failed else 0


def _cmd_image(args: argparse.Namespace) -> tuple[dict, int]:
    if (args.tl is None) == (args.burau is None):
        raise UsageError("pass exactly one of --tl L or --burau P T0")
    if args.tl is not None:
        spec = RepSpec(family="tl", strands=args.strands, l=args.tl)
    else:
        p, t0 = args.burau
        spec = RepSpec(family="burau", strands=args.strands, p=p, t0=t0)
    bound = args.bound if args.bound is not None else _image_bound_default()
    started = time.perf_counter()
    rep = classify_image(spec, bound)
    report = {
        "command": "image",
        "input": {
            "family": spec.family,
            "strands": spec.strands,
            "l": spec.l,
            "p": spec.p,
            "t0": spec.t0,
            "bound": bound,
        },
        "verdict": rep.verdict,
        "order": rep.order,
        "witness": None if rep.witness is None else list(rep.witness),
        "generators": rep.generators,
        "notes": list(rep.notes),
    }
    if not args.no_timings:
        report["timings"] = {"total_s": time.perf_counter() - started}
    return report, 0


def _cmd_hom(args: argparse.Namespace) -> tuple[dict, int]:
    budget = args.budget if args.budget is not None else _budget_default()
    b = parse_braid(args.word, args.strands)
    if args.estimate is not None and args.wirtinger:
        raise UsageError("--estimate and --wirtinger are mutually exclusive")
    group = builtin_group(args.group)
    started = time.perf_counter()
    results: dict = {"group": args.group, "group_order": group.size}
    if args.estimate is not None:
        samples_text, seed_text = args.estimate
        samples = _positive_int(samples_text, "sample count")
        try:
            seed = int(seed_text)
        except ValueError:
            raise UsageError("seed must be an integer, got %r" % seed_text) from None
        estimate, stderr = hom_count_estimate(b, group, samples, seed)
        results["method"] = "estimate"
        results["samples"] = samples
        results["seed"] = seed
        results["estimate"] = _fraction_json(estimate)
        results["stderr"] = _fraction_json(stderr)
    else:
        counter = wirtinger_hom_count if args.wirtinger else hom_count_exact
        results["method"] = "wirtinger" if args.wirtinger else "hurwitz"
        results["count"] = counter(b, group, budget)
    report = {
        "command": "hom",
        "input": {"strands": b.strands, "word": list(b.word)},
        "results": results,
    }
    if not args.no_timings:
        report["timings"] = {"total_s": time.perf_counter() - started}
    return report, 0


def _cmd_version(args: argparse.Namespace) -> tuple[dict, int]:
    return {"command": "version", "package": "qll", "version": __version__}, 0


# ---------------------------------------------------------------------------
# text rendering


def _render_invariants(report: dict) -> str:
    lines = [
        "strands: %d" % report["input"]["strands"],
        "word: %s" % _word_text(tuple(report["input"]["word"])),
    ]
    results = report["results"]
    if "components" in results:
        lines.append("components: %d" % results["components"])
    if "linking" in results:
        matrix = results["linking"]["matrix"]
        lines.append(
            "linking: total=%d matrix=%s"
            % (
                results["linking"]["total"],
                ";".join(",".join(str(x) for x in row) for row in matrix),
            )
        )
    for l, value in results.get("jones", {}).items():
        lines.append("jones[%s]: %s" % (l, _json_value_text(value)))
    if "alexander" in results:
        lines.append("alexander: %s" % results["alexander"]["text"])
    if "det" in results:
        lines.append("det: %d" % results["det"])
    for p, value in results.get("dp", {}).items():
        lines.append("d%s: %d" % (p, value))
    if "arf" in results:
        lines.append("arf: %d" % results["arf"])
    for spec, count in results.get("hom", {}).items():
        lines.append("hom[%s]: %d" % (spec, count))
    for record in results.get("hom_estimate", []):
        lines.append(
            "hom-estimate[%s]: %s +- %s (samples=%d, seed=%d)"
            % (
                record["group"],
                _json_fraction_text(record["estimate"]),
                _json_fraction_text(record["stderr"]),
                record["samples"],
                record["seed"],
            )
        )
    if "timings" in report:
        lines.append("elapsed: %.3fs" % report["timings"]["total_s"])
    return "\n".join(lines)


def _json_value_text(value: dict) -> str:
    if "integer" in value:
        return str(value["integer"])
    terms = " ".join(
        "%+d*z^%d" % (coeff, power)
        for power, coeff in enumerate(value["coeffs"])
        if coeff
    )
    return "(%s in Q(zeta_%d)) ~ %s" % (terms, value["order"], value["approx"])


def _json_fraction_text(value: dict) -> str:
    if value["denominator"] == 1:
        return str(value["numerator"])
    return "%d/%d" % (value["numerator"], value["denominator"])


def _render_check_table(report: dict) -> str:
    lines = [
        "check-table: source=%s entries=%d"
        % (report["source"], report["summary"]["entries"])
    ]
    for entry in report["entries"]:
        for row in entry["checks"]:
            lines.append(
                "[%s] %s :: %s :: %s"
                % (
                    row["verdict"].upper(),
                    entry["name"],
                    row["check"],
                    row["detail"],
                )
            )
    summary = report["summary"]
    lines.append(
        "summary: checks=%d passed=%d failed=%d skipped=%d"
        % (
            summary["checks"],
            summary["passed"],
            summary["failed"],
            summary["skipped"],
        )
    )
    if "timings" in report:
        lines.append("elapsed: %.3fs" % report["timings"]["total_s"])
    return "\n".join(lines)


def _render_image(report: dict) -> str:
    spec = report["input"]
    if spec["family"] == "tl":
        head = "image: tl l=%d strands=%d bound=%d" % (
            spec["l"],
            spec["strands"],
            spec["bound"],
        )
    else:
        head = "image: burau p=%d t0=%d strands=%d bound=%d" % (
            spec["p"],
            spec["t0"],
            spec["strands"],
            spec["bound"],
        )
    lines = [head, "verdict: %s" % report["verdict"]]
    if report["order"] is not None:
        lines.append("order: %d" % report["order"])
    if report["witness"] is not None:
        lines.append("witness: %s" % _word_text(tuple(report["witness"])))
    for note in report["notes"]:
        lines.append("note: %s" % note)
    if "timings" in report:
        lines.append("elapsed: %.3fs" % report["timings"]["total_s"])
    return "\n".join(lines)


def _render_hom(report: dict) -> str:
    results = report["results"]
    lines = [
        "strands: %d" % report["input"]["strands"],
        "word: %s" % _word_text(tuple(report["input"]["word"])),
        "group: %s (order %d)" % (results["group"], results["group_order"]),
        "method: %s" % results["method"],
    ]
    if results["method"] == "estimate":
        lines.append(
            "estimate: %s +- %s (samples=%d, seed=%d)"
            % (
                _json_fraction_text(results["estimate"]),
                _json_fraction_text(results["stderr"]),
                results["samples"],
                results["seed"],
            )
        )
    else:
        lines.append("count: %d" % results["count"])
    if "timings" in report:
        lines.append("elapsed: %.3fs" % report["timings"]["total_s"])
    return "\n".join(lines)


def _render_version(report: dict) -> str:
    return "%s %s" % (report["package"], report["version"])


_RENDERERS = {
    "invariants": _render_invariants,
    "check-table": _render_check_table,
    "image": _render_image,
    "hom": _render_hom,
    "version": _render_version,
}


# ---------------------------------------------------------------------------
# argument parsing and dispatch


class _ArgumentParser(argparse.ArgumentParser):
    # raise instead of exiting so main() can map parse problems to exit code 2
    def error(self, message: str):
        raise UsageError(message)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument(
        "--no-timings",
        action="store_true",
        help="omit timings (byte-deterministic output)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="qll", description="Link invariants of braid closures."
    )
    sub = parser.add_subparsers(dest="cmd")

    inv = sub.add_parser("invariants", help="invariants of one braid closure")
    inv.add_argument("--strands", type=int, required=True)
    inv.add_argument("--word", required=True, help="space-separated letters")
    inv.add_argument(
        "--jones", type=int, action="append", metavar="L", help="Jones at level L"
    )
    inv.add_argument("--alexander", action="store_true")
    inv.add_argument("--det", action="store_true")
    inv.add_argument(
        "--dp",
        type=int,
        action="append",
        metavar="P",
        help="double-cover homology rank at odd prime P",
    )
    inv.add_argument("--arf", action="store_true", help="Arf invariant (knots)")
    inv.add_argument(
        "--hom",
        action="append",
        metavar="GROUP",
        help="exact homomorphism count into a built-in group",
    )
    inv.add_argument(
        "--hom-estimate",
        nargs=3,
        action="append",
        metavar=("GROUP", "SAMPLES", "SEED"),
        help="seeded sampling estimate of the homomorphism count",
    )
    inv.add_argument("--components", action="store_true")
    inv.add_argument("--linking", action="store_true")
    inv.add_argument("--budget", type=int)
    _add_common_flags(inv)
    inv.set_defaults(handler=_cmd_invariants)

    check = sub.add_parser(
        "check-table", help="identity-check suite over a link corpus"
    )
    check.add_argument(
        "--corpus", help="corpus file path (default: bundled corpus)"
    )
    check.add_argument("--budget", type=int)
    _add_common_flags(check)
    check.set_defaults(handler=_cmd_check_table)

    image = sub.add_parser("image", help="classify a braid representation image")
    image.add_argument("--strands", type=int, required=True)
    image.add_argument("--tl", type=int, metavar="L")
    image.add_argument("--burau", type=int, nargs=2, metavar=("P", "T0"))
    image.add_argument("--bound", type=int, help="group-enumeration cap")
    _add_common_flags(image)
    image.set_defaults(handler=_cmd_image)

    hom = sub.add_parser("hom", help="homomorphism count for one braid closure")
    hom.add_argument("--strands", type=int, required=True)
    hom.add_argument("--word", required=True)
    hom.add_argument("--group", required=True, metavar="GROUP")
    hom.add_argument(
        "--wirtinger",
        action="store_true",
        help="count via the planar-diagram oracle",
    )
    hom.add_argument(
        "--estimate", nargs=2, metavar=("SAMPLES", "SEED"), help="sampling mode"
    )
    hom.add_argument("--budget", type=int)
    _add_common_flags(hom)
    hom.set_defaults(handler=_cmd_hom)

    version = sub.add_parser("version", help="print package version")
    _add_common_flags(version)
    version.set_defaults(handler=_cmd_version)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "cmd", None) is None:
            raise UsageError("a subcommand is required (see --help)")
        report, code = args.handler(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except BudgetError as exc:
        print("budget refused: %s" % exc, file=sys.stderr)
        return 3
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_RENDERERS[report["command"]](report) + "\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
