"""Command line interface.

Exit status: 0 when the check passes, 1 when it fails, 2 for usage and I/O
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .construct import (EdgeColoring, build_affine_coloring, build_cyclic_coloring,
                        build_m2_coloring, intersection_size_counts)
from .core import vertex_masks
from .gcol import read_coloring, write_coloring
from .mandate import parse_mandate
from .replay import replay_all
from .search import DifferenceSet, extend_to_maximal, search_split
from .splitgraph import DEFAULT_DELETIONS, load_splitting, default_splitting, validate_splitting
from .verify import DEFAULT_FAILURE_CAP, check_atom_property, verify_good

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _cap(text: str) -> Optional[int]:
    if text.lower() in ("none", "all", "-1"):
        return None
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("failure cap must be >= 0 or 'none'")
    return value


def _add_family_args(p: argparse.ArgumentParser, required: bool = False) -> None:
    p.add_argument("--family", choices=["m2", "cyclic", "affine"], required=required,
                   help="build a colouring instead of reading one")
    p.add_argument("--splitting", type=Path, help="splitting-graph JSON (m2 family)")
    p.add_argument("--delete", type=_int_list, default=None,
                   help="extra points to delete from the splitting graph")
    p.add_argument("--modulus", type=int, help="modulus (cyclic family)")
    p.add_argument("--class", dest="classes", action="append", default=[], metavar="NAME=LIST",
                   help="colour class of residues, e.g. r=1,4 (cyclic family; repeatable)")
    p.add_argument("--q", type=int, help="prime order of the affine plane (affine family)")


def _add_source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", type=Path, help="GCOL1 colouring file")
    p.add_argument("--ground", type=_int_list, metavar="M,K",
                   help="declare vertices of --in as the K-subsets of [M] in canonical order")
    _add_family_args(p)


def _add_run_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=_positive, default=None)
    p.add_argument("--failure-cap", type=_cap, default=DEFAULT_FAILURE_CAP)
    p.add_argument("--report", type=Path, help="write the JSON report here (default: stdout)")


def _splitting(args):
    if args.splitting is None:
        extra = set(args.delete) if args.delete is not None else set()
        return default_splitting(DEFAULT_DELETIONS | extra)
    return load_splitting(args.splitting, args.delete or ())


def _build_family(args) -> EdgeColoring:
    if args.family == "m2":
        return build_m2_coloring(_splitting(args))
    if args.family == "cyclic":
        if args.modulus is None or not args.classes:
            raise UsageError("--family cyclic needs --modulus and at least one --class")
        classes = {}
        for spec in args.classes:
            name, _, residues = spec.partition("=")
            if not name or not _:
                raise UsageError(f"bad --class {spec!r}; expected NAME=LIST")
            classes[name] = _int_list(residues)
        return build_cyclic_coloring(args.modulus, classes)
    if args.family == "affine":
        if args.q is None:
            raise UsageError("--family affine needs --q")
        return build_affine_coloring(args.q)
    raise UsageError("no colouring family given")


def _load_source(args) -> EdgeColoring:
    if (args.infile is None) == (args.family is None):
        raise UsageError("give exactly one of --in and --family")
    if args.family is not None:
        return _build_family(args)
    c = read_coloring(args.infile)
    if args.ground:
        if len(args.ground) != 2:
            raise UsageError("--ground takes M,K")
        m, k = args.ground
        masks = vertex_masks(m, k)
        if len(masks) != c.N:
            raise UsageError(f"C({m},{k}) = {len(masks)} does not match N = {c.N}")
        c = EdgeColoring(c.labels, c.matrix, vertices=masks, ground=(m, k))
    return c


def _emit(report: dict, path: Optional[Path]) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_construct(args) -> int:
    c = _build_family(args)
    write_coloring(c, args.out)
    _log(f"wrote {c.N}-vertex colouring with labels {','.join(c.labels)} to {args.out}")
    return EXIT_PASS


def cmd_verify(args) -> int:
    c = _load_source(args)
    mandate = parse_mandate(args.mandate)
    report = verify_good(c, mandate, threads=args.threads, failure_cap=args.failure_cap)
    _emit(report.to_dict(), args.report)
    _log(f"verify: {'PASS' if report.passed else 'FAIL'} "
         f"({report.stats['need_checks']} need checks, {report.wall_time:.1f}s)")
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_check_splitting(args) -> int:
    g = load_splitting(args.spec, args.delete or ())
    report = validate_splitting(g)
    _emit({"points": list(g.points), **report.to_dict()}, args.report)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_replay(args) -> int:
    g = _splitting(args)
    start = time.perf_counter()
    report = replay_all(build_m2_coloring(g), g, threads=args.threads, failure_cap=args.failure_cap)
    _emit(report.to_dict(), args.report)
    _log(f"replay: {'PASS' if report.passed else 'FAIL'} ({time.perf_counter() - start:.1f}s)")
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_atoms(args) -> int:
    c = _load_source(args)
    report = check_atom_property(c, threads=args.threads)
    _emit(report.to_dict(), args.report)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_search(args) -> int:
    blue = DifferenceSet(args.modulus, args.blue or ())
    if args.maximal:
        blue = extend_to_maximal(blue)
    red = blue.complement()
    result = search_split(blue, red, budget=args.budget, seed=args.seed)
    lines = "".join(json.dumps(entry) + "\n" for entry in result.trace)
    if args.trace is None:
        sys.stdout.write(lines)
    else:
        args.trace.write_text(lines, encoding="utf-8")
    summary = {"modulus": args.modulus, "blue": sorted(blue.diffs), "found": result.found,
               "evaluations": result.evaluations, "reason": result.reason,
               "best": result.best.to_dict() if result.best else None}
    if args.report is not None:
        _emit(summary, args.report)
    _log(json.dumps(summary))
    return EXIT_PASS if result.found else EXIT_FAIL


def cmd_stats(args) -> int:
    c = _load_source(args)
    out = {"vertices": c.N, "labels": list(c.labels), "edge_counts": c.edge_counts()}
    degrees = {}
    for i, name in enumerate(c.labels):
        deg = (c.matrix == i).sum(axis=1)
        degrees[name] = {"min": int(deg.min()), "max": int(deg.max())}
    out["degrees"] = degrees
    if c.vertices is not None:
        out["edge_counts_by_intersection"] = {str(j): v for j, v in intersection_size_counts(c).items()}
    _emit(out, args.report)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="goodcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a colouring and write a GCOL1 file")
    _add_family_args(p, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the goodness conditions")
    _add_source_args(p)
    p.add_argument("--mandate", default="m2", help="m<n>, lyndon:<l>, or a JSON file")
    _add_run_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-splitting", help="search a splitting graph for K4, K4,3, K5,2")
    p.add_argument("--spec", type=Path, required=True)
    p.add_argument("--delete", type=_int_list, default=None)
    p.add_argument("--report", type=Path)
    p.set_defaults(func=cmd_check_splitting)

    p = sub.add_parser("replay", help="replay the witness families on every edge")
    p.add_argument("--splitting", type=Path)
    p.add_argument("--delete", type=_int_list, default=None)
    _add_run_args(p)
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("atoms", help="check the atom property of the colour relations")
    _add_source_args(p)
    p.add_argument("--threads", type=_positive, default=None)
    p.add_argument("--report", type=Path)
    p.set_defaults(func=cmd_atoms)

    p = sub.add_parser("search-cyclic", help="search b0/b1 splits of a sum-free cyclic blue class")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--blue", type=_int_list, default=None, help="blue residues")
    p.add_argument("--maximal", action="store_true", help="greedily extend --blue to a maximal sum-free set")
    p.add_argument("--budget", type=_positive, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", type=Path, help="JSONL trace file (default: stdout)")
    p.add_argument("--report", type=Path)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("stats", help="edge counts by label and by intersection size")
    _add_source_args(p)
    p.add_argument("--report", type=Path)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        _log(f"error: {exc}")
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
