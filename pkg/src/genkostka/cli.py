"""Command-line front end.

Exit codes: 0 success, 1 counterexample or map precondition failure, 2 usage.
Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .catabolism import (
    NotCatabolizable,
    block_permutation,
    column_catabolism,
    conjugate,
    ct_polynomial,
    ct_transpose,
    enumerate_cct,
    enumerate_ct,
    row_catabolism,
)
from .core import (
    QPoly,
    RectSeq,
    format_rects,
    gamma_weight,
    is_dominant,
    mirror,
    n_stat,
    num_letters,
    parse_rects,
    partition,
    total_size,
)
from .kostka import DegreeOverflow, k_poly_recurrence, k_poly_symmetrizer
from .lrtab import LRContext, PreconditionError, enumerate_lrt, lr_transpose, lrt_polynomial, switch_adjacent
from .riggedconf import (
    RiggedConfiguration,
    enumerate_configurations,
    enumerate_rc,
    omega_complement,
    rc_duality,
    rc_polynomial,
    rc_transpose,
    zeta_embed,
)
from .tableaux import RealizationError, Tableau, column_strict_tableaux, dual_tableau, evacuation
from .verify import ALL_SUITES, Bounds, run_suite, suite_monotonicity

ROUTES = ("symmetrizer", "recurrence", "rc", "ct", "lrt-orbit", "lrt-min")
KINDS = ("lrt", "rc", "ct", "cct", "configs", "cst")
MAPS = ("ev", "sp", "dual", "lr-transpose", "rc-transpose", "omega", "zeta", "cat", "ccat", "ct-transpose", "conj")


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ parsing


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _lambda(text: str) -> tuple[int, ...]:
    parts = _ints(text)
    if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise argparse.ArgumentTypeError(f"{text!r} is not a partition")
    return partition(parts)


def _rects(text: str) -> RectSeq:
    try:
        return parse_rects(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _instance(args, need_size: bool = True) -> tuple[tuple[int, ...], RectSeq]:
    if args.lam is None or args.rects is None:
        raise UsageError("--lambda and --rects are required")
    if need_size and sum(args.lam) != total_size(args.rects):
        raise UsageError(f"|lambda| = {sum(args.lam)} but the rectangles have {total_size(args.rects)} cells")
    return args.lam, args.rects


def _emit(obj, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _to_json(x):
    return x.to_json() if hasattr(x, "to_json") else x


# ------------------------------------------------------------------ compute


def compute(lam, R: RectSeq, route: str, normalization: str = "charge") -> QPoly:
    """K_{lam;R} by the named route, in charge or cocharge normalization."""
    N = n_stat(R)
    if route in ("ct", "lrt-min") and not is_dominant(R):
        raise PreconditionError(f"route {route} needs a dominant rectangle sequence")
    if route == "rc":
        P = rc_polynomial(lam, R)
        return P if normalization == "cocharge" else _mirror(P, N)
    if route == "symmetrizer":
        K = k_poly_symmetrizer(lam, R)
    elif route == "recurrence":
        K = k_poly_recurrence(lam, R)
    elif route == "ct":
        K = ct_polynomial(lam, R)
    elif route == "lrt-orbit":
        K = lrt_polynomial(lam, R, "orbit")
    elif route == "lrt-min":
        K = lrt_polynomial(lam, R, "min")
    else:
        raise UsageError(f"unknown route {route!r}")
    return K if normalization == "charge" else _mirror(K, N)


def _mirror(P: QPoly, N: int) -> QPoly:
    if P.degree > N:
        raise DegreeOverflow(f"degree {P.degree} exceeds n(R) = {N}; cannot renormalize", P, N)
    return mirror(P, N)


def cmd_compute(args) -> int:
    lam, R = _instance(args)
    P = compute(lam, R, args.route, args.normalization)
    obj = {
        "lambda": list(lam),
        "rects": format_rects(R),
        "route": args.route,
        "normalization": args.normalization,
        "polynomial": str(P),
        "coefficients": P.to_json(),
    }
    _emit(obj, str(P), args.format)
    return 0


# ---------------------------------------------------------------- enumerate


def enumerate_objects(kind: str, lam, R: RectSeq) -> list:
    if kind == "lrt":
        return enumerate_lrt(lam, R)
    if kind == "rc":
        return enumerate_rc(lam, R)
    if kind == "ct":
        return enumerate_ct(lam, R)
    if kind == "cct":
        return enumerate_cct(lam, R)
    if kind == "configs":
        return enumerate_configurations(lam, R)
    if kind == "cst":
        return list(column_strict_tableaux(lam, gamma_weight(R)))
    raise UsageError(f"unknown kind {kind!r}")


def cmd_enumerate(args) -> int:
    lam, R = _instance(args)
    objs = enumerate_objects(args.kind, lam, R)
    if args.count:
        _emit({"kind": args.kind, "count": len(objs)}, str(len(objs)), args.format)
        return 0
    if args.format == "json":
        print(json.dumps([_to_json(x) for x in objs], sort_keys=True))
    else:
        print("\n\n".join(str(x) for x in objs))
    return 0


# ---------------------------------------------------------------------- map


def _load(source: str | None):
    if source is None or source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("{", "[")):
        text = source
    else:
        with open(source) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"input is not JSON: {e}")


def _as_tableau(data) -> Tableau:
    if isinstance(data, dict) and "tableau" in data:
        data = data["tableau"]
    if not isinstance(data, dict) or "rows" not in data:
        raise UsageError("expected a tableau object with a 'rows' field")
    return Tableau.from_json(data)


def _as_rc(data) -> RiggedConfiguration:
    if isinstance(data, dict) and "rc" in data:
        data = data["rc"]
    if not isinstance(data, dict) or "nu" not in data:
        raise UsageError("expected a rigged configuration object with a 'nu' field")
    return RiggedConfiguration.from_json(data)


def _need_rects(args) -> RectSeq:
    if args.rects is None:
        raise UsageError(f"map {args.name} needs --rects")
    return args.rects


def apply_map(name: str, data, args):
    """The image of the JSON object `data` under the named map."""
    if name in ("rc-transpose", "omega", "zeta") or (name == "dual" and isinstance(data, dict) and ("nu" in data or "rc" in data)):
        rc = _as_rc(data)
        if name == "rc-transpose":
            return rc_transpose(rc)
        if name == "omega":
            return omega_complement(rc)
        if name == "zeta":
            return zeta_embed(rc)
        return rc_duality(rc, args.k)
    T = _as_tableau(data)
    if name == "ev":
        n = args.n if args.n is not None else (num_letters(args.rects) if args.rects else max((x for _, _, x in T.cells()), default=0))
        return evacuation(T, n)
    if name == "dual":
        if args.k is None:
            raise UsageError("map dual on a tableau needs --k")
        n = args.n if args.n is not None else num_letters(_need_rects(args))
        return dual_tableau(T, args.k, n)
    R = _need_rects(args)
    if name == "sp":
        if args.p is None:
            raise UsageError("map sp needs --p")
        return switch_adjacent(T, args.p, LRContext(R))
    if name == "lr-transpose":
        return lr_transpose(T, LRContext(R))
    if name == "cat":
        return row_catabolism(T, R[0])
    if name == "ccat":
        return column_catabolism(T, R[0])
    if name == "ct-transpose":
        return ct_transpose(T, R)
    if name == "conj":
        if args.order is not None:
            u = block_permutation(R, args.order)
        elif args.perm is not None:
            u = args.perm
        else:
            raise UsageError("map conj needs --order or --perm")
        return conjugate(u, T)
    raise UsageError(f"unknown map {name!r}")


def cmd_map(args) -> int:
    data = _load(args.input)
    try:
        img = apply_map(args.name, data, args)
    except UsageError:
        raise
    except (PreconditionError, NotCatabolizable, RealizationError, ValueError, TypeError) as e:
        diag = {"error": type(e).__name__, "map": args.name, "message": str(e)}
        print(json.dumps(diag, sort_keys=True), file=sys.stderr)
        return 1
    _emit(img.to_json(), str(img), args.format)
    return 0


# ------------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    b = Bounds(max_cells=args.max_cells, max_rect=args.max_rect, max_seq=args.max_seq)
    names = ALL_SUITES if args.suite == "all" else (args.suite,)
    only = None
    if args.lam is not None or args.rects is not None:
        only = _instance(args)
    failures = total = 0
    t0 = time.perf_counter()
    for name in names:
        if args.against:
            if name != "monotonicity" or only is None:
                raise UsageError("--against applies to 'verify monotonicity' with --lambda and --rects")
            reports = [suite_monotonicity(only[0], only[1], b, args.against)]
        elif only is not None and name == "fishel":
            raise UsageError("the fishel suite does not take --lambda/--rects")
        else:
            reports = run_suite(name, b, args.seed, only)
        for rep in reports:
            total += 1
            failures += not rep.ok
            if args.format == "json":
                print(json.dumps(rep.to_json(), sort_keys=True))
            elif not rep.ok:
                print(f"FAIL {name} {json.dumps(rep.instance, sort_keys=True)}")
                for c in rep.failures:
                    print(f"  {c.name}: {json.dumps(c.detail, sort_keys=True)}")
    summary = {"suites": list(names), "instances": total, "failures": failures}
    if args.format == "json":
        print(json.dumps({"summary": summary}, sort_keys=True))
    else:
        print(f"{'ok' if not failures else 'FAILED'}: {total} instances, {failures} with counterexamples")
    print(f"verify finished in {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    return 1 if failures else 0


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genkostka", description="Generalized Kostka polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lambda", dest="lam", type=_lambda, help="partition, e.g. 5,4,3,2,2,1")
    common.add_argument("--rects", type=_rects, help="rectangles ROWSxCOLS, e.g. 2x3,4x2,3x1")
    common.add_argument("--format", choices=("text", "json"), default="text")

    c = sub.add_parser("compute", parents=[common], help="compute K_{lambda;R}(q)")
    c.add_argument("--route", choices=ROUTES, default="recurrence")
    c.add_argument("--normalization", choices=("charge", "cocharge"), default="charge")
    c.set_defaults(func=cmd_compute)

    e = sub.add_parser("enumerate", parents=[common], help="list combinatorial objects")
    e.add_argument("kind", choices=KINDS)
    e.add_argument("--count", action="store_true", help="print the cardinality only")
    e.set_defaults(func=cmd_enumerate)

    m = sub.add_parser("map", parents=[common], help="apply a bijection to a JSON object")
    m.add_argument("name", choices=MAPS)
    m.add_argument("--input", help="JSON file, inline JSON, or - for stdin (default)")
    m.add_argument("--p", type=int, help="position for sp")
    m.add_argument("--k", type=int, help="box width for dual")
    m.add_argument("--n", type=int, help="alphabet size for ev and dual")
    m.add_argument("--order", type=_ints, help="target positions of the rectangles for conj")
    m.add_argument("--perm", type=_ints, help="letter permutation for conj")
    m.set_defaults(func=cmd_map)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=ALL_SUITES + ("all",))
    v.add_argument("--max-cells", type=int, default=Bounds.max_cells)
    v.add_argument("--max-rect", type=int, default=Bounds.max_rect)
    v.add_argument("--max-seq", type=int, default=Bounds.max_seq)
    v.add_argument("--seed", type=int, default=None, help="shuffles execution order only")
    v.add_argument("--against", type=_rects, action="append", help="comparison sequence for monotonicity")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"genkostka: error: {e}", file=sys.stderr)
        return 2
    except (PreconditionError, DegreeOverflow) as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}, sort_keys=True), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
