"""Command line interface: ``cosine-zeros-lab``.

Exit status: 0 when every checked inequality holds, 2 when a falsifiable
bound is violated, 1 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .errors import CoslabError, NoStructureFound, PersistError
from .poly import DEFAULT_PRECISION, CosinePoly

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


def _int_set(text: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}") from None
    if not vals or any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError("frequencies must be non-negative integers")
    return vals


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _read_poly(path: str) -> CosinePoly:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise PersistError(f"cannot read coefficients: {exc.strerror or exc}", path) from exc
    except ValueError as exc:
        raise PersistError(f"invalid JSON ({exc})", path) from exc
    if isinstance(obj, list):
        obj = {"coeffs": obj}
    return CosinePoly.from_json(obj)


def cmd_zeros(args) -> int:
    from .zeros import count_zeros

    if not args.precision > 0:
        raise ValueError("--precision must be positive")
    p = CosinePoly.from_set(args.set)
    rep = count_zeros(p, precision=args.precision)
    digits = max(1, math.ceil(-math.log10(args.precision))) + 3
    out = rep.to_json(digits)
    out["set"] = sorted(set(args.set))
    _emit(out)
    return EXIT_OK


def cmd_search(args) -> int:
    from .harness import brute_force_Z, resume_search, verify_records

    if args.out:
        res = resume_search(args.n, args.box, args.out, jobs=args.jobs, lenient=args.lenient)
    else:
        res = brute_force_Z(args.n, args.box, jobs=args.jobs)
    bad = verify_records(res.records, fraction=args.verify_fraction, seed=0)
    _emit({
        "N": res.N,
        "box": res.box,
        "Z_box": res.min_Z,
        "minimizers": [list(A) for A in res.minimizers],
        "subsets": len(res.records),
        "recount_mismatches": [list(r.A) for r in bad],
    })
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_verify(args) -> int:
    from . import verify as V

    if args.lemma == "3.3":
        rows = V.lemma33_rows(grid=args.grid or 512)
    elif args.lemma == "3.4":
        rows = V.lemma34_rows(count=args.count or 10_000, seed=args.seed, tol=args.tol)
    elif args.lemma == "3.5":
        rows = V.lemma35_rows(grid=args.grid or 4096)
    elif args.lemma == "l1":
        rows = V.l1_rows(V.default_family(args.count or 100, seed=args.seed))
    else:
        reps = V.master_reports(V.default_family(args.count or 100, seed=args.seed),
                                V.recovery_family(args.count // 2 if args.count else 50, seed=args.seed + 7))
        rows = V.master_rows(reps)
    if args.csv:
        try:
            V.write_csv(rows, args.csv)
        except OSError as exc:
            raise PersistError(f"cannot write CSV: {exc.strerror or exc}", args.csv) from exc
    failed = [r for r in rows if not r.ok]
    constants = {r.lemma: r.fitted_constant for r in rows if "drift" not in r.parameter and r.lemma != "l1-blocks"}
    _emit({"lemma": args.lemma, "rows": len(rows), "failed": len(failed),
           "fitted_constants": constants, "first_failures": [r.as_dict() for r in failed[:5]]})
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_structure(args) -> int:
    from .structure import analyze_structure

    g = _read_poly(args.coeffs)
    try:
        res = analyze_structure(g, args.dprime_bound)
    except NoStructureFound as exc:
        _emit({"structured": False, "reason": str(exc)})
        return EXIT_OK
    out = res.partition.to_json()
    out.update({
        "structured": True,
        "d": res.d,
        "d_prime": res.d_prime,
        "carrier": res.carrier,
        "K": res.partition.K,
        "raw_K": res.raw.K,
        "greedy_K": res.greedy_K,
        "long_intervals": [list(x) for x in res.long_intervals],
        "notes": list(res.notes),
    })
    _emit(out)
    return EXIT_OK


def cmd_tilde(args) -> int:
    from .smoothing import block_form, build_tilde, check_tilde_properties
    from .structure import find_periodic_partition

    g = _read_poly(args.coeffs) if args.coeffs else CosinePoly.from_set(args.set)
    gt = build_tilde(g, args.period)
    M = max(abs(c) for c in g.coeffs)
    props = check_tilde_properties(g, args.period, gt, M)
    part = find_periodic_partition(g.coeffs, args.period)
    bf = block_form(gt, part, M)
    out = {
        "P": args.period,
        "K": part.K,
        "K_tilde": bf.K_tilde,
        "properties": {k: (str(v) if k == "max_abs_coeff" else v) for k, v in props.items()},
        "tilde": gt.to_json(),
        "blocks": bf.to_json()["blocks"],
    }
    _emit(out)
    ok = props["value_at_zero"] and props["lattice"] and props["within_4M"] and props["degree_ok"]
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cosine-zeros-lab", description=__doc__.splitlines()[0])
    ap.add_argument("--precision", type=float, default=DEFAULT_PRECISION,
                    help="default tolerance (env COSLAB_PRECISION)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeros", help="count zeros of f_A = sum_{n in A} cos(n t)")
    p.add_argument("--set", type=_int_set, required=True)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("search", help="exhaustive Z_box(N, box)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="JSON-lines file; an existing file is resumed")
    p.add_argument("--lenient", action="store_true", help="skip malformed lines when resuming")
    p.add_argument("--verify-fraction", type=float, default=0.01)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--lemma", choices=["3.3", "3.4", "3.5", "l1", "master"], required=True)
    p.add_argument("--csv")
    p.add_argument("--count", type=int)
    p.add_argument("--grid", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("structure", help="detect a periodic partition")
    p.add_argument("--coeffs", required=True, help='JSON file: {"coeffs": [...]} or a list')
    p.add_argument("--dprime-bound", type=int, default=16)
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("tilde", help="smoothed polynomial and its block form")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--set", type=_int_set)
    src.add_argument("--coeffs")
    p.add_argument("--period", type=int, required=True)
    p.set_defaults(func=cmd_tilde)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except (PersistError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (CoslabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
