"""Command-line front end.

Exit codes: 0 success, 1 a law/validation check found violations,
2 malformed input or unusable arguments (details on standard error).
All output is deterministic byte-for-byte for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .errors import DegreeMismatch, GammaCalcError, NotGenerated
from .gammaset import GammaSet
from .pointed import FinPointedSet
from .prolong import assembly, circle, day_smash, prolong
from .serialize import (
    coend_table_to_json,
    dumps,
    gamma_set_from_json,
    gamma_set_to_json,
)
from .spheres import (
    boundary_mod_outer_iso,
    cofiber_sequence_spheres,
    partition_correspondence,
    set_partitions,
    sphere_table,
)

# command-line runs default to a working budget; an explicit env var still wins
_CLI_BUDGET = "20000000"


class _Malformed(Exception):
    pass


def _read_gamma(path: str) -> GammaSet:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise _Malformed(f"{path}: {e}") from e
    except json.JSONDecodeError as e:
        raise _Malformed(f"{path}: invalid JSON: {e}") from e
    try:
        return gamma_set_from_json(data)
    except (ValueError, TypeError, GammaCalcError) as e:
        raise _Malformed(f"{path}: {e}") from e


def _write_gamma(path: str, A: GammaSet) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(gamma_set_to_json(A)))


def _print_levels(A: GammaSet, out) -> None:
    for k in range(A.bound + 1):
        lv = A.level(k)
        out.write(f"level {k}: total {lv.total}, nonbase {lv.size}\n")


def _parse_point_arg(arg: str) -> FinPointedSet:
    m = re.fullmatch(r"X:(\d+)", arg)
    if not m:
        raise _Malformed(f"expected X:<size>, got {arg!r}")
    return FinPointedSet(int(m.group(1)))


def _common_bound(A: GammaSet, B: GammaSet, flag: int | None) -> int:
    # products default to depth <= 2: coend sizes explode with the output
    # degree, and the interesting comparisons all live low
    bound = min(A.bound, B.bound, 2) if flag is None else flag
    if bound < 0 or bound > min(A.bound, B.bound):
        raise _Malformed(
            f"--bound {bound} outside the stored range 0..{min(A.bound, B.bound)}"
        )
    return bound


# --- verbs -----------------------------------------------------------------


def _cmd_eval(args, out) -> int:
    A = _read_gamma(args.functor)
    if not 0 <= args.at <= A.bound:
        raise _Malformed(f"--at {args.at} beyond the stored bound {A.bound}")
    lv = A.level(args.at)
    out.write(f"level {args.at}: total {lv.total}, nonbase {lv.size}\n")
    return 0


def _cmd_prolong(args, out) -> int:
    A = _read_gamma(args.functor)
    X = _parse_point_arg(args.at)
    tb = prolong(A, X)
    out.write(dumps(coend_table_to_json(tb)))
    return 0


def _cmd_smash(args, out) -> int:
    A, B = _read_gamma(args.left), _read_gamma(args.right)
    day = day_smash(A, B, _common_bound(A, B, args.bound))
    if args.output:
        _write_gamma(args.output, day.gamma)
    else:
        _print_levels(day.gamma, out)
    return 0


def _cmd_circle(args, out) -> int:
    A, B = _read_gamma(args.left), _read_gamma(args.right)
    circ = circle(A, B, _common_bound(A, B, args.bound))
    if args.output:
        _write_gamma(args.output, circ.gamma)
    else:
        _print_levels(circ.gamma, out)
    return 0


def _cmd_assembly(args, out) -> int:
    A, B = _read_gamma(args.left), _read_gamma(args.right)
    bound = _common_bound(A, B, args.bound)
    try:
        day = day_smash(A, B, bound)
        circ = circle(A, B, bound)
        asm = assembly(day, circ)
    except (NotGenerated, DegreeMismatch) as e:
        raise _Malformed(f"assembly not computable on these inputs: {e}") from e
    for k in range(bound + 1):
        out.write(f"level {k}: {list(asm.level(k).table)}\n")
    if args.check:
        try:
            asm.validate()
        except GammaCalcError as e:
            sys.stderr.write(f"assembly naturality FAILED: {e}\n")
            return 1
        out.write("assembly natural: OK\n")
    return 0


_SUPERSCRIPTS = "⁰¹²³⁴⁵⁶⁷⁸⁹"


def _sup(n: int) -> str:
    return "".join(_SUPERSCRIPTS[int(c)] for c in str(n))


def _cmd_spheres(args, out) -> int:
    n, bound = args.n, args.max_degree
    if n < 1 or bound < n:
        raise _Malformed("need --n >= 1 and --max-degree >= --n")
    G = "Γ" + _sup(n)
    out.write(
        f"sphere functor {G} through degree {bound}"
        " (all counts are totals and include the basepoint)\n"
    )
    cols = (
        (G, 5), (f"∂{G}", 6), (f"∂_out{G}", 8),
        (f"{G}/∂{G}", 8), (f"{G}/∂_out{G}", 10), (f"∂{G}/∂_out{G}", 12),
    )
    widths = [max(w, len(name)) for name, w in cols]
    out.write("level | " + " | ".join(
        name.rjust(w) for (name, _), w in zip(cols, widths)) + "\n")
    rows = sphere_table(n, bound)
    for row in rows:
        cells = (
            row.total, row.boundary_total, row.outer_total,
            row.mod_boundary_total, row.mod_outer_total,
            row.boundary_mod_outer_total,
        )
        out.write(f"{row.level:5d} | " + " | ".join(
            str(c).rjust(w) for c, w in zip(cells, widths)) + "\n")
    at_n = rows[n]
    out.write(f"∂{G}({n})={at_n.boundary_total}  ∂_out{G}({n})={at_n.outer_total}\n")
    parts = set_partitions(n)
    shown = ["".join("{" + ",".join(map(str, b)) + "}" for b in p) for p in parts]
    out.write(f"partitions of {{1..{n}}}: {len(parts)} — " + " ".join(shown) + "\n")
    corr = partition_correspondence(n, bound)
    verdict = "OK" if corr.distinct and corr.order_reversing else "FAILED"
    out.write(f"partition ↔ monogenic subobject correspondence: {verdict}\n")
    if n == 2:
        iso = boundary_mod_outer_iso(bound)
        out.write(f"∂Γ²/∂_outΓ² ≅ Γ¹: {'OK' if iso is not None else 'FAILED'}\n")
    cof = cofiber_sequence_spheres(n, bound)
    cverdict = "OK" if cof.injective and cof.exact else "FAILED"
    out.write(f"cofiber sequence levelwise exact: {cverdict}\n")
    return 0


def _cmd_cofibrant(args, out) -> int:
    from .gammaset import is_cofibrant

    A = _read_gamma(args.functor)
    out.write(f"cofibrant: {'yes' if is_cofibrant(A) else 'no'}\n")
    return 0


def _cmd_validate(args, out) -> int:
    A = _read_gamma(args.functor)
    try:
        A.validate()
    except GammaCalcError as e:
        sys.stderr.write(f"invalid: {e}\n")
        return 1
    out.write(f"valid: bound {A.bound}, levels {[lv.size for lv in A.levels]}\n")
    return 0


# --- law suites ------------------------------------------------------------


def _suite_strength(size: int):
    from .theories import check_strong_monad, suite_monads

    return [
        check_strong_monad(monad, max_total=size, name=f"strength:{name}")
        for name, monad in suite_monads()
    ]


def _suite_theory(size: int):
    from .theories import (
        free_semilattice_theory,
        reader_theory,
        trivial_theory,
        validate_theory,
    )

    return [
        validate_theory(th)
        for th in (trivial_theory(), reader_theory(), free_semilattice_theory())
    ]


def _suite_morita(size: int):
    from .theories import (
        LawReport,
        endomorphism_gamma_ring,
        free_semilattice_theory,
        lambda_monad_morphism,
        monad_from_theory,
        reader_theory,
        ring_matches_assembly,
        ring_matches_strength,
        suite_monads,
        trivial_theory,
        validate_ring,
    )

    from .theories import SmashMonad

    reports = []
    for name, monad in suite_monads():
        _comps, rep, bij = lambda_monad_morphism(monad, max_total=size)
        reports.append(rep)
        summary = LawReport(f"comparison-bijectivity:{name}")
        summary.tick(len(bij))
        # a monoid-built monad must have a bijective comparison everywhere
        if isinstance(monad, SmashMonad) and not all(bij.values()):
            summary.note("monoid-monad-not-bijective", {"pattern": dict(bij)})
        reports.append(summary)
    for th in (trivial_theory(), reader_theory(), free_semilattice_theory()):
        ring = endomorphism_gamma_ring(th)
        reports.append(validate_ring(ring))
        reports.append(ring_matches_assembly(th, ring))
        reports.append(ring_matches_strength(th, ring))
    return reports


def _suite_algebras(size: int):
    from .algebras import (
        canonical_presentation,
        enumerate_algebras,
        free_algebra,
        free_module_comparison,
        is_algebra_map,
        split_coequalizer_check,
        tensor_hom_adjunction,
        validate_algebra,
    )
    from .theories import LawReport, suite_monads

    monads = dict(suite_monads())
    reports = []
    for name in ("one-slot", "finite-subsets", "smash-monoid"):
        T = monads[name]
        rep = LawReport(f"algebras:{name}")
        for s in range(size):
            free = free_algebra(T, FinPointedSet(s))
            rep.tick()
            try:
                validate_algebra(T, free)
            except GammaCalcError as e:
                rep.note("free-algebra-laws", {"carrier": s, "error": str(e)})
                continue
            for alg in enumerate_algebras(T, FinPointedSet(s)):
                rep.tick()
                if not split_coequalizer_check(T, alg):
                    rep.note("split-fork", {"carrier": s})
                coeq, q = canonical_presentation(T, alg)
                j = T.eta(alg.carrier).then(q)
                rep.tick()
                if not (j.is_iso() and is_algebra_map(T, alg, coeq, j)):
                    rep.note("canonical-presentation", {"carrier": s})
        reports.append(rep)
        reports.append(free_module_comparison(T, FinPointedSet(min(size, 2))))
    P = monads["finite-subsets"]
    x_alg = free_algebra(P, FinPointedSet(1))
    for y_alg in enumerate_algebras(P, FinPointedSet(1)):
        reports.append(
            tensor_hom_adjunction(P, FinPointedSet(2), x_alg, y_alg)
        )
    return reports


def _suite_bar(size: int):
    from .algebras import check_bar_identities, enumerate_algebras, free_algebra
    from .theories import suite_monads

    monads = dict(suite_monads())
    reports = []
    for name in ("one-slot", "finite-subsets", "smash-monoid"):
        T = monads[name]
        reports.append(check_bar_identities(T, free_algebra(T, FinPointedSet(1)), k=2))
    for alg in enumerate_algebras(monads["finite-subsets"], FinPointedSet(2))[:2]:
        reports.append(check_bar_identities(monads["finite-subsets"], alg, k=1))
    for alg in enumerate_algebras(monads["smash-monoid"], FinPointedSet(2))[:2]:
        reports.append(check_bar_identities(monads["smash-monoid"], alg, k=2))
    return reports


_SUITES = {
    "strength": _suite_strength,
    "theory": _suite_theory,
    "morita": _suite_morita,
    "algebras": _suite_algebras,
    "bar": _suite_bar,
}


def _cmd_laws(args, out) -> int:
    reports = _SUITES[args.suite](args.size)
    bad = sum(len(r.violations) for r in reports)
    if args.json:
        out.write(dumps([r.as_dict() for r in reports]))
    else:
        for r in reports:
            out.write(f"{r.suite}: checked {r.checked}, violations {len(r.violations)}\n")
            for v in r.violations:
                out.write(f"  {v['law']}: {dumps(v['witness']).rstrip()}\n")
        out.write(f"TOTAL: {len(reports)} reports, {bad} violations\n")
    return 1 if bad else 0


# --- argument wiring -------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gammacalc",
        description="compute with tabulated pointed-set functors and their monads",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="print one level of a stored functor")
    p.add_argument("functor")
    p.add_argument("--at", type=int, required=True)
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("prolong", help="extend a functor to a pointed set")
    p.add_argument("functor")
    p.add_argument("at", metavar="X:<size>")
    p.set_defaults(fn=_cmd_prolong)

    for verb, fn, blurb in (
        ("smash", _cmd_smash, "convolution product of two stored functors"),
        ("circle", _cmd_circle, "substitution product of two stored functors"),
    ):
        p = sub.add_parser(verb, help=blurb)
        p.add_argument("left")
        p.add_argument("right")
        p.add_argument("-o", "--output")
        p.add_argument("--bound", type=int, default=None)
        p.set_defaults(fn=fn)

    p = sub.add_parser("assembly", help="compare convolution to substitution")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--check", action="store_true")
    p.set_defaults(fn=_cmd_assembly)

    p = sub.add_parser("spheres", help="boundary tables for a representable")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(fn=_cmd_spheres)

    p = sub.add_parser("cofibrant", help="test levelwise-free symmetric actions")
    p.add_argument("functor")
    p.set_defaults(fn=_cmd_cofibrant)

    p = sub.add_parser("laws", help="run a law suite")
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p.add_argument("--size", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_laws)

    p = sub.add_parser("validate", help="functoriality check of a stored functor")
    p.add_argument("functor")
    p.set_defaults(fn=_cmd_validate)

    return ap


def main(argv=None) -> int:
    # the library default budget is deliberately conservative; command-line
    # runs get a working default, and an explicit env var still wins
    os.environ.setdefault("GAMMACALC_BUDGET", _CLI_BUDGET)
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except _Malformed as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except GammaCalcError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
