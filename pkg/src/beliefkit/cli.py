"""Batch command-line front end.

Subcommands: validate, eval, combine, reduce, verify, bench. Exit codes:
0 success, 1 input or validation error, 2 reduction-specific failure
(negative-mass solution, singular system). Every randomized path needs an
explicit --seed so reported results are reproducible.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from typing import Sequence

from . import evidence
from .combine import conjunctive, conjunctive_many, conjunctive_via_q
from .core import Frame, Mask, MassFunction, make_bba, make_frame
from .errors import (
    BeliefError,
    FrameMismatch,
    FrameTooLarge,
    FrameTooLargeForOracle,
    NegativeMassSolution,
    SingularSystem,
    UnknownLabel,
)
from .io import read_bba, write_bba
from .kmeans import KMeansConfig, kmeans_reduce
from .linear import (
    least_committed_isopignistic,
    reduce_betp_bel,
    reduce_betp_pl,
    reduction_report,
)
from .oracle import oracle_body, oracle_conjunctive

VERIFY_CAP = 10


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise _UsageError(message)


def parse_set_expr(frame: Frame, expr: str) -> Mask:
    """Comma-separated labels; empty string is the empty set; the token
    ``X`` is the full frame unless ``X`` is itself a label."""
    expr = expr.strip()
    if not expr:
        return 0
    if expr == "X" and "X" not in frame.labels:
        return frame.full_mask
    mask = 0
    for name in expr.split(","):
        name = name.strip()
        if name not in frame.labels:
            raise UnknownLabel(f"label {name!r} is not in the frame")
        mask |= frame.singleton(frame.index_of(name))
    return mask


def _explosion_sources(n: int) -> list[MassFunction]:
    frame = make_frame([f"x{i + 1}" for i in range(n)])
    full = frame.full_mask
    return [
        make_bba(frame, [(full, 0.5), (full & ~(1 << i), 0.5)]) for i in range(n)
    ]


def _print_report(report) -> None:
    rows = [
        ("input_size", str(report.input_size)),
        ("output_size", str(report.output_size)),
        ("betp_deviation", f"{report.betp_deviation:.6g}"),
        ("secondary_deviation", f"{report.secondary_deviation:.6g}"),
        ("negative_mass_flag", "true" if report.negative_mass_flag else "false"),
    ]
    width = max(len(key) for key, _ in rows) + 1
    for key, value in rows:
        print(f"{key + ':':<{width}} {value}")


def cmd_validate(args) -> int:
    m = read_bba(args.path)
    total = math.fsum(v for _, v in m.items())
    print(f"ok: |m|={m.focal_count}, m(∅)={m.mass_on_empty:g}, sum={total:.9f}")
    return 0


def cmd_eval(args) -> int:
    m = read_bba(args.path)
    for kind in ("bel", "pl", "q", "betp"):
        expr = getattr(args, kind)
        if expr is not None:
            value = getattr(evidence, kind)(m, parse_set_expr(m.frame, expr))
            print(f"{value:.12f}")
            return 0
    raise _UsageError("one of --bel/--pl/--q/--betp is required")


def cmd_combine(args) -> int:
    if len(args.paths) < 2:
        raise _UsageError("combine needs at least two bba files")
    ms = [read_bba(p) for p in args.paths]
    if args.via == "q":
        if len(ms) != 2:
            raise _UsageError("--via q combines exactly two bbas")
        result = conjunctive_via_q(ms[0], ms[1])
    else:
        result = conjunctive_many(ms)
    print(f"|m|={result.focal_count}, m(∅)={result.mass_on_empty:.12g}")
    if args.out:
        write_bba(result, args.out)
    return 0


def _reduce_once(m: MassFunction, args):
    """Dispatch one reduction; returns (reduced, report)."""
    if args.method == "isopignistic":
        reduced = least_committed_isopignistic(m)
        return reduced, reduction_report(m, reduced)
    if args.method == "linear-pl":
        return reduce_betp_pl(m)
    if args.method == "linear-bel":
        return reduce_betp_bel(m)
    if args.method == "kmeans":
        if args.k is None:
            raise _UsageError("--method kmeans requires --k")
        if args.restarts > 1 and args.seed is None:
            raise _UsageError("randomized restarts require an explicit --seed")
        cfg = KMeansConfig(
            k=args.k,
            max_iterations=args.max_iterations,
            restarts=args.restarts,
            seed=args.seed if args.seed is not None else 0,
            closed_world=args.closed_world,
        )
        reduced, _, report = kmeans_reduce(m, cfg)
        return reduced, report
    raise _UsageError(f"unknown method {args.method!r}")


def cmd_reduce(args) -> int:
    m = read_bba(args.path)
    reduced, report = _reduce_once(m, args)
    _print_report(report)
    if args.out:
        write_bba(reduced, args.out)
    return 0


def cmd_verify(args) -> int:
    m = read_bba(args.path)
    frame = m.frame
    if frame.n > VERIFY_CAP:
        raise FrameTooLargeForOracle(f"verify is capped at n={VERIFY_CAP}")
    ok = True
    for kind in ("bel", "pl", "q", "betp"):
        fast = getattr(evidence, kind)
        dev = max(
            abs(fast(m, a) - oracle_body(m, kind, a)) for a in frame.subsets()
        )
        passed = dev <= 1e-12
        ok = ok and passed
        print(f"{kind}: max|fast-oracle| = {dev:.3e} {'PASS' if passed else 'FAIL'}")
    if args.other:
        m2 = read_bba(args.other)
        if m2.frame != frame:
            raise FrameMismatch("bbas to combine must share a frame")
        fast = conjunctive(m, m2)
        slow = oracle_conjunctive(m, m2)
        dev = max(
            abs(fast.mass(a) - slow.mass(a)) for a in frame.subsets()
        )
        passed = dev <= 1e-12
        ok = ok and passed
        print(f"conjunctive: max|fast-oracle| = {dev:.3e} {'PASS' if passed else 'FAIL'}")
    return 0 if ok else 1


def cmd_bench(args) -> int:
    if args.scenario != "explosion":
        raise _UsageError(f"unknown scenario {args.scenario!r}")
    n = args.n
    if n < 2:
        raise _UsageError("--n must be at least 2")
    if args.reduce_every is None and n > 20:
        raise FrameTooLarge("unreduced explosion runs are capped at n=20")
    if args.reduce_every is not None and args.method is None:
        raise _UsageError("--reduce-every needs --method")
    sources = _explosion_sources(n)
    lines = ["step,size_before,size_after,wall_ms,betp_dev,secondary_dev"]
    acc = sources[0]
    for step, source in enumerate(sources[1:], start=1):
        t0 = time.perf_counter()
        acc = conjunctive(acc, source)
        size_before = acc.focal_count
        betp_dev = 0.0
        secondary_dev = 0.0
        if args.reduce_every is not None and step % args.reduce_every == 0:
            within_budget = (
                args.method == "kmeans"
                and args.k is not None
                and acc.focal_count <= args.k
            )
            if not within_budget:
                acc, report = _reduce_once(acc, args)
                betp_dev = report.betp_deviation
                secondary_dev = report.secondary_deviation
        wall_ms = (time.perf_counter() - t0) * 1000.0
        lines.append(
            f"{step},{size_before},{acc.focal_count},{wall_ms:.3f},"
            f"{betp_dev:.6g},{secondary_dev:.6g}"
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _add_reduce_options(sub) -> None:
    sub.add_argument(
        "--method",
        choices=["isopignistic", "linear-pl", "linear-bel", "kmeans"],
        default=None,
    )
    sub.add_argument("--k", type=int, default=None)
    sub.add_argument("--max-iterations", type=int, default=None)
    sub.add_argument("--restarts", type=int, default=1)
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--closed-world", action="store_true")


def build_parser() -> _Parser:
    parser = _Parser(prog="beliefkit", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("validate", help="parse and validate a bba file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = subs.add_parser("eval", help="evaluate a body of evidence on a set")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group(required=True)
    for kind in ("bel", "pl", "q", "betp"):
        group.add_argument(f"--{kind}", metavar="SET")
    p.set_defaults(func=cmd_eval)

    p = subs.add_parser("combine", help="conjunctive combination of bba files")
    p.add_argument("paths", nargs="+")
    p.add_argument("--via", choices=["focal", "q"], default="focal")
    p.add_argument("--out")
    p.set_defaults(func=cmd_combine)

    p = subs.add_parser("reduce", help="bound the focal-set size of a bba")
    p.add_argument("path")
    _add_reduce_options(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reduce)

    p = subs.add_parser("verify", help="cross-check fast paths against oracles")
    p.add_argument("path")
    p.add_argument("other", nargs="?", default=None)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("bench", help="scaling scenarios, emits CSV")
    p.add_argument("--scenario", default="explosion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reduce-every", type=int, default=None)
    _add_reduce_options(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except NegativeMassSolution as exc:
        print(f"error: NegativeMassSolution: {exc}", file=sys.stderr)
        for cand, value in zip(exc.candidates, exc.solution):
            print(f"  mask {cand:#x}: {value:+.17g}", file=sys.stderr)
        return 2
    except SingularSystem as exc:
        print(f"error: SingularSystem: {exc}", file=sys.stderr)
        return 2
    except (BeliefError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
