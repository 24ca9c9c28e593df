"""Command-line interface: generation, correlation, construction, conditions, search.

Every command writes one machine-readable JSON report (schema "1") to
standard output; human-readable tables go to standard error under --pretty.
Exit codes: 0 success, 1 verdict/reproduction failure, 2 input error,
3 exhaustive-search budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import reproduce as _reproduce
from .conditions import (
    ConditionReport,
    check_condition_A,
    check_condition_B,
    check_condition_open,
)
from .correlation import (
    CorrelationProfile,
    DeltaReport,
    autocorrelation,
    cross_correlation,
    fast_cross_correlation,
    is_two_level,
    signal_set_delta,
)
from .interleaving import build_signal_set, parse_shift_sequence
from .search import (
    BudgetExceededError,
    SearchOutcome,
    SearchSpec,
    run_search,
    sample_random,
    verify_open_nonexistence,
)
from .sequences import (
    LfsrSpec,
    PeriodicSequence,
    format_sequence,
    gen_legendre,
    gen_mseq,
    parse_sequence,
)

SCHEMA_VERSION = "1"


def _value_json(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def _profile_json(profile: CorrelationProfile) -> dict:
    return {
        "modulus": profile.modulus,
        "period": profile.period,
        "values": [_value_json(c) for c in profile.values],
    }


def _delta_json(report: DeltaReport) -> dict:
    return {
        "delta": _value_json(report.delta),
        "period": report.period,
        "member_count": report.member_count,
        "witnesses": [
            {"i": w.i, "j": w.j, "tau": w.tau, "value": _value_json(w.value)}
            for w in report.witnesses
        ],
    }


def _condition_json(report: ConditionReport) -> dict:
    return {
        "condition": report.condition,
        "verdict": report.verdict,
        "first_failure_s": report.first_failure_s,
        "per_s": [
            {
                "s": c.s,
                "passed": c.passed,
                "observed": c.observed,
                "required": c.required,
                "values": list(c.profile.values),
                "multiplicity": [list(pair) for pair in c.profile.multiplicity],
            }
            for c in report.checks
        ],
    }


def _outcome_json(outcome: SearchOutcome) -> dict:
    return {
        "witnesses": [str(w) for w in outcome.witnesses],
        "examined": outcome.examined,
        "satisfying": outcome.satisfying,
        "exhaustive": outcome.exhaustive,
    }


def _emit(args, command: str, inputs: dict, results: dict, started: float, pretty_lines=None):
    report = {
        "schema": SCHEMA_VERSION,
        "command": command,
        "argv": list(args._argv),
        "inputs": inputs,
        "results": results,
        "timing": {"seconds": time.perf_counter() - started},
    }
    print(json.dumps(report, indent=2))
    if args.pretty and pretty_lines:
        print("\n".join(pretty_lines), file=sys.stderr)


def _cmd_gen(args) -> int:
    started = time.perf_counter()
    if args.kind == "mseq":
        spec = LfsrSpec(
            args.degree,
            tuple(int(c) for c in args.poly),
            tuple(int(c) for c in args.state),
        )
        seq = gen_mseq(spec)
        inputs = {"degree": args.degree, "poly": args.poly, "state": args.state}
    else:
        seq = gen_legendre(args.v, args.zero)
        inputs = {"v": args.v, "zero": args.zero}
    results = {
        "sequence": format_sequence(seq),
        "period": seq.period,
        "two_level": is_two_level(seq),
    }
    _emit(
        args,
        f"gen {args.kind}",
        inputs,
        results,
        started,
        [f"sequence {results['sequence']} (period {seq.period}, two-level: {results['two_level']})"],
    )
    return 0


def _cmd_correlate(args) -> int:
    started = time.perf_counter()
    a = parse_sequence(args.a)
    if args.auto:
        if args.b is not None:
            raise ValueError("--auto and --b are mutually exclusive")
        b = a
    elif args.b is not None:
        b = parse_sequence(args.b)
    else:
        raise ValueError("provide --b or --auto")
    corr = fast_cross_correlation if args.fast else cross_correlation
    profile = corr(a, b)
    results = {"profile": _profile_json(profile), "method": "fast" if args.fast else "direct"}
    if args.auto:
        results["two_level"] = is_two_level(a)
    pretty = ["tau  value"] + [f"{tau:>3}  {val}" for tau, val in enumerate(profile.values)]
    _emit(args, "correlate", {"a": args.a, "b": args.b, "auto": args.auto}, results, started, pretty)
    return 0


def _cmd_build(args) -> int:
    started = time.perf_counter()
    a = parse_sequence(args.a)
    b = parse_sequence(args.b)
    e = parse_shift_sequence(args.e)
    ss = build_signal_set(a, b, e)
    for note in ss.notes:
        print(f"warning: {note}", file=sys.stderr)
    results = {
        "v": ss.v,
        "period": ss.period,
        "member_count": len(ss.members),
        "members": [format_sequence(m) for m in ss.members],
        "notes": list(ss.notes),
    }
    pretty = [f"built {len(ss.members)} members of period {ss.period}"]
    if args.delta:
        report = signal_set_delta(ss.members, threads=args.threads)
        results["delta"] = _delta_json(report)
        pretty.append(
            f"delta {report.delta} attained at {len(report.witnesses)} (i, j, tau) points"
        )
    _emit(args, "build", {"a": args.a, "b": args.b, "e": args.e}, results, started, pretty)
    return 0


_CHECKERS = {
    "A": check_condition_A,
    "B": check_condition_B,
    "open": check_condition_open,
}


def _cmd_check(args) -> int:
    started = time.perf_counter()
    e = parse_shift_sequence(args.e)
    report = _CHECKERS[args.cond](e)
    results = _condition_json(report)
    pretty = [f"condition {report.condition}: {'pass' if report.verdict else 'fail'}"]
    for c in report.checks:
        mark = "ok " if c.passed else "FAIL"
        pretty.append(
            f"  s={c.s} {mark} observed {c.observed} (required {c.required}); "
            f"differences {list(c.profile.values)}"
        )
    _emit(args, "check", {"e": args.e, "cond": args.cond}, results, started, pretty)
    return 0 if report.verdict else 1


def _cmd_search(args) -> int:
    started = time.perf_counter()
    progress = None
    if args.progress:
        progress = lambda n: print(f"examined={n}", file=sys.stderr)
    if args.sample:
        outcome = sample_random(
            args.v, args.pred, args.sample, seed=args.seed, limit=args.limit
        )
        strategy = "sample"
    else:
        spec = SearchSpec(
            args.v, args.pred, limit=args.limit, strategy=args.strategy, force=args.force
        )
        outcome = run_search(spec, threads=args.threads, progress=progress)
        strategy = args.strategy
    results = _outcome_json(outcome)
    results["strategy"] = strategy
    pretty = [
        f"examined {outcome.examined}, satisfying {outcome.satisfying}, "
        f"exhaustive {outcome.exhaustive}"
    ] + [f"  witness {w}" for w in outcome.witnesses]
    _emit(
        args,
        "search",
        {"v": args.v, "pred": args.pred, "limit": args.limit, "sample": args.sample},
        results,
        started,
        pretty,
    )
    return 0


def _cmd_verify_nonexistence(args) -> int:
    started = time.perf_counter()
    table = verify_open_nonexistence(args.vmax, force=args.force)
    entries = []
    for v, ent in sorted(table.items()):
        entries.append(
            {
                "v": v,
                "exists": ent.exists,
                "witness": str(ent.witness) if ent.witness else None,
                "witnesses": [str(w) for w in ent.witnesses],
                "examined": ent.examined,
                "exhaustive": ent.exhaustive,
            }
        )
    confirmed = all(
        (not ent.exists) if v > 2 else any(w.entries == (0, 1) for w in ent.witnesses)
        for v, ent in table.items()
    )
    results = {"entries": entries, "confirmed": confirmed}
    pretty = ["  v  exists  examined  witnesses"]
    for row in entries:
        pretty.append(
            f"{row['v']:>3}  {str(row['exists']).lower():<6}  {row['examined']:>8}  "
            f"{' '.join(row['witnesses']) or '-'}"
        )
    _emit(args, "verify-nonexistence", {"vmax": args.vmax}, results, started, pretty)
    return 0 if confirmed else 1


def _cmd_reproduce(args) -> int:
    started = time.perf_counter()
    results = _reproduce.run_all(seed=args.seed)
    ok = _reproduce.all_passed(results)
    lines = []
    for r in results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    if args.json:
        report = {
            "schema": SCHEMA_VERSION,
            "command": "reproduce",
            "argv": list(args._argv),
            "inputs": {"seed": args.seed},
            "results": {
                "checks": [
                    {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
                ],
                "all_passed": ok,
            },
            "timing": {"seconds": time.perf_counter() - started},
        }
        print(json.dumps(report, indent=2))
        print("\n".join(lines), file=sys.stderr)
    else:
        print("\n".join(lines))
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--pretty", action="store_true", help="also print human tables to stderr"
    )
    parser = argparse.ArgumentParser(
        prog="ilvseq",
        parents=[common],
        description="Interleaved signal sets: generate, correlate, build, check, search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a two-level base sequence")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    mseq = gen_sub.add_parser("mseq", parents=[common], help="maximal-period register sequence")
    mseq.add_argument("--degree", type=int, required=True)
    mseq.add_argument("--poly", required=True, help="coefficient bits, highest degree first")
    mseq.add_argument("--state", required=True, help="initial bits, oldest first")
    mseq.set_defaults(func=_cmd_gen)
    leg = gen_sub.add_parser("legendre", parents=[common], help="quadratic-residue indicator sequence")
    leg.add_argument("--v", type=int, required=True, help="odd prime period")
    leg.add_argument("--zero", type=int, default=0, choices=(0, 1))
    leg.set_defaults(func=_cmd_gen)

    corr = sub.add_parser("correlate", parents=[common], help="correlation profile of a pair")
    corr.add_argument("--a", required=True)
    corr.add_argument("--b")
    corr.add_argument("--auto", action="store_true", help="correlate --a against itself")
    corr.add_argument("--fast", action="store_true", help="transform-based path")
    corr.set_defaults(func=_cmd_correlate)

    build = sub.add_parser("build", parents=[common], help="construct the v+1 member signal set")
    build.add_argument("--a", required=True)
    build.add_argument("--b", required=True)
    build.add_argument("--e", required=True, help="comma-separated shifts, inf for zero column")
    build.add_argument("--delta", action="store_true", help="also sweep the set's delta")
    build.add_argument("--threads", type=int, default=1)
    build.set_defaults(func=_cmd_build)

    check = sub.add_parser("check", parents=[common], help="check a condition on a shift vector")
    check.add_argument("--e", required=True)
    check.add_argument("--cond", required=True, choices=("A", "B", "open"))
    check.set_defaults(func=_cmd_check)

    search = sub.add_parser("search", parents=[common], help="search shift-vector space for a predicate")
    search.add_argument("--v", type=int, required=True)
    search.add_argument("--pred", required=True, choices=("A", "B", "b-not-a", "open"))
    search.add_argument("--limit", type=int, default=0, help="stop after this many witnesses")
    search.add_argument("--strategy", choices=("full", "backtrack"), default="full")
    search.add_argument("--threads", type=int, default=1)
    search.add_argument("--force", action="store_true", help="override the budget guard")
    search.add_argument("--progress", action="store_true", help="emit examined counts to stderr")
    search.add_argument("--sample", type=int, default=0, help="random draws instead of a sweep")
    search.add_argument("--seed", type=int, default=0)
    search.set_defaults(func=_cmd_search)

    verify = sub.add_parser(
        "verify-nonexistence", parents=[common], help="census the completeness condition up to vmax"
    )
    verify.add_argument("--vmax", type=int, required=True)
    verify.add_argument("--force", action="store_true")
    verify.set_defaults(func=_cmd_verify_nonexistence)

    rep = sub.add_parser("reproduce", parents=[common], help="run the worked-example verification suite")
    rep.add_argument("--json", action="store_true", help="machine report to stdout")
    rep.add_argument("--seed", type=int, default=0)
    rep.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args._argv = list(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
