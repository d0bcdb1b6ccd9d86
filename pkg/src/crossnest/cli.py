"""Command-line interface.

Four subcommands: `count` (one exact count: a partition or matching
statistic query, or a single walk count), `sequence` (one route or the
full agreement harness), `recurrence` (verify / guess / factor-check /
c4-experiment), and `asymptotics` (scaled-ratio checkpoints and summand
shape reports).

Output contract: --format human (default; prose to stdout, timing to
stderr), json (single envelope object with command, params, results,
status, timing_ms, version; every counting value is a decimal string so
arbitrary precision survives any JSON reader), or csv (flat rows, no
timing).  Exit codes: 0 success, 2 bad usage or bad parameters (including
too little data to decide a guess), 3 capacity or budget exceeded,
4 exact cross-checks disagreed or data inconsistent.

--threads is accepted for interface stability and validated, but counting
is single-threaded; results never depend on it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import (__version__, asymptotics, matchings, partitions, recurrences,
               sequences, walks)
from .core import (CapacityError, DisagreementError, DomainError,
                   InconsistentDataError, SingularRecurrenceError,
                   UnderdeterminedError)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_DISAGREEMENT = 4


def _point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="crossnest",
        description="Exact counting of partitions, matchings and lattice "
                    "walks by crossing/nesting bounds.")
    top.add_argument("--format", choices=("human", "json", "csv"),
                     default="human")
    top.add_argument("--budget", type=int, default=walks.DEFAULT_BUDGET,
                     help="lattice-walk state budget (cells x layers)")
    top.add_argument("--threads", type=int, default=1,
                     help="accepted for compatibility; execution is "
                          "single-threaded and deterministic")
    sub = top.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("count", help="one exact count")
    pc.add_argument("--object", choices=("partition", "matching", "walk"),
                    required=True)
    pc.add_argument("--n", type=int, help="ground-set size (partition) or "
                                          "pair count (matching)")
    pc.add_argument("--k", type=int, help="forbidden pattern size")
    pc.add_argument("--mode", choices=(partitions.CROSSING, partitions.NESTING),
                    default=partitions.CROSSING)
    pc.add_argument("--enhanced", action="store_true")
    pc.add_argument("--rule", choices=walks.RULES)
    pc.add_argument("--domain", choices=walks.DOMAINS)
    pc.add_argument("--dim", type=int)
    pc.add_argument("--start", type=_point)
    pc.add_argument("--end", type=_point)
    pc.add_argument("--length", type=int)

    ps = sub.add_parser("sequence", help="sequence values by one route or "
                                         "the full agreement harness")
    ps.add_argument("--seq", required=True,
                    help="sequence id: c<k>, e<k> or m<k>")
    ps.add_argument("--upto", type=int, required=True)
    ps.add_argument("--route", default="all",
                    help='"all" (agreement harness) or one route name')

    pr = sub.add_parser("recurrence", help="recurrence operations")
    rsub = pr.add_subparsers(dest="action", required=True)

    pv = rsub.add_parser("verify", help="check a named recurrence on "
                                        "exactly unrolled data")
    pv.add_argument("--name", choices=sorted(recurrences.NAMED_RECURRENCES),
                    required=True)
    pv.add_argument("--upto", type=int, default=2000)

    pg = rsub.add_parser("guess", help="minimal recurrence search on "
                                       "exact data")
    pg.add_argument("--seq", required=True, help="c3, e3 or c4")
    pg.add_argument("--terms", type=int, required=True)
    pg.add_argument("--max-order", type=int, required=True)
    pg.add_argument("--max-degree", type=int, required=True)

    pf = rsub.add_parser("factor-check", help="first-order factor times "
                                              "short equals long, exactly")
    pf.add_argument("--which", choices=sorted(recurrences.FACTOR_CHECKS),
                    required=True)

    px = rsub.add_parser("c4-experiment", help="bounded recurrence search "
                                               "on walk-generated data")
    px.add_argument("--terms", type=int, default=100)
    px.add_argument("--max-order", type=int, default=8)
    px.add_argument("--max-degree", type=int, default=8)

    pa = sub.add_parser("asymptotics", help="growth diagnostics")
    pa.add_argument("--seq", choices=asymptotics.KINDS, required=True)
    pa.add_argument("--checkpoints", type=_point,
                    help="comma-separated n values for scaled ratios")
    pa.add_argument("--bn", type=_point, metavar="N,L,K",
                    help="summand shape report at n with offsets l,k")
    pa.add_argument("--dps", type=int, default=40)
    return top


def _require(args, names):
    missing = [f"--{n.replace('_', '-')}" for n in names
               if getattr(args, n) is None]
    if missing:
        raise DomainError(f"missing required options: {', '.join(missing)}")


def _run_count(args) -> dict:
    if args.object == "walk":
        _require(args, ("rule", "domain", "dim", "start", "end", "length"))
        query = walks.WalkQuery(args.rule, args.domain, args.dim,
                                tuple(args.start), tuple(args.end),
                                args.length)
        value = walks.count_walks(query, budget=args.budget)
        return {"count": str(value)}
    _require(args, ("n", "k"))
    if args.object == "partition":
        value = partitions.count_avoiding(args.n, args.k, args.mode,
                                          enhanced=args.enhanced)
        return {"count": str(value)}
    if args.enhanced:
        raise DomainError("matchings have no enhanced regime")
    value = sum(1 for p in partitions.enumerate_matchings(args.n)
                if partitions.max_crossing(partitions.standard_arcs(p),
                                           args.mode) < args.k)
    return {"count": str(value)}


def _run_sequence(args) -> dict:
    if args.route == "all":
        rep = sequences.compare(args.seq, args.upto, budget=args.budget)
        result = {
            "values": [str(v) for v in rep.values],
            "routes": {r: round(s, 6) for r, s in rep.route_seconds.items()},
            "agreed": True,
        }
        if rep.skipped:
            result["skipped"] = rep.skipped
        return result
    seq = sequences.compute(args.seq, args.route, args.upto,
                            budget=args.budget)
    return {"values": [str(v) for v in seq], "route": args.route}


def _guess_series(seq: str, terms: int, budget: int) -> list[int]:
    # closed forms seed c3/e3 so the guess target is independent of the
    # recurrences being rediscovered
    from . import closedforms
    if seq == "c3":
        return [closedforms.c3_closed(n) for n in range(terms)]
    if seq == "e3":
        return [closedforms.e3_closed(n) for n in range(terms)]
    if seq == "c4":
        return list(walks.chamber_loop_counts(walks.VACILLATING, 3,
                                              terms - 1, budget))
    raise DomainError(f"guess supports c3, e3 or c4, got {seq!r}")


def _rec_payload(rec: recurrences.PRecurrence) -> dict:
    return {
        "order": rec.order,
        "degree": rec.degree,
        "valid_from": rec.valid_from,
        "coefficients": [[str(c) for c in poly] for poly in rec.coeffs],
        "text": rec.describe(),
    }


def _run_recurrence(args) -> dict:
    if args.action == "verify":
        rec = recurrences.NAMED_RECURRENCES[args.name]()
        family = args.name[:2]
        base = (recurrences.c3_three_term() if family == "c3"
                else recurrences.e3_three_term())
        data = base.unroll([1, 1], args.upto)
        failure = rec.first_failure(data)
        if failure is not None:
            raise InconsistentDataError(
                f"{args.name} fails on unrolled data at n={failure}")
        return {"name": args.name, "upto": args.upto, "holds": True,
                "recurrence": _rec_payload(rec)}
    if args.action == "guess":
        data = _guess_series(args.seq, args.terms, args.budget)
        outcome = recurrences.guess(data, args.max_order, args.max_degree)
        result = {
            "seq": args.seq,
            "terms": outcome.terms_used,
            "bounds": [args.max_order, args.max_degree],
            "candidates_checked": outcome.candidates_checked,
            "found": outcome.found is not None,
            "certified_absent": outcome.certified_absent,
        }
        if outcome.found is not None:
            result["recurrence"] = _rec_payload(outcome.found)
        return result
    if args.action == "factor-check":
        holds = recurrences.factor_check(args.which)
        if not holds:
            raise InconsistentDataError(
                f"factor identity for {args.which} failed")
        return {"which": args.which, "holds": True}
    report = recurrences.c4_recurrence_search(args.terms, args.max_order,
                                              args.max_degree)
    return {
        "terms": report.terms,
        "bounds": [report.max_order, report.max_degree],
        "outcome": report.outcome,
        "candidates_checked": report.candidates_checked,
        "brute_checked_upto": report.brute_checked_upto,
        "generation_s": round(report.generation_s, 3),
        "search_s": round(report.search_s, 3),
    }


def _run_asymptotics(args) -> dict:
    if args.checkpoints is None and args.bn is None:
        raise DomainError("pass --checkpoints and/or --bn")
    result: dict = {"seq": args.seq}
    if args.checkpoints is not None:
        rows = []
        for n in args.checkpoints:
            rep = asymptotics.asymptotic_report(args.seq, n, dps=args.dps)
            rows.append({"n": n, "ratio": repr(rep.ratio),
                         "limit": repr(rep.limit),
                         "relative_gap": repr(rep.relative_gap)})
        result["checkpoints"] = rows
        result["base"] = asymptotics.growth_base(args.seq)
    if args.bn is not None:
        if len(args.bn) != 3:
            raise DomainError("--bn wants N,L,K")
        n, l, k = args.bn
        rep = asymptotics.summand_report(n, l, k, dps=args.dps)
        result["summands"] = {
            "n": n, "l": l, "k": k,
            "unimodal": rep.unimodal,
            "mode": rep.mode,
            "peak_window": [str(rep.peak_window[0]), str(rep.peak_window[1])],
            "mode_distance": str(rep.mode_distance),
            "total": str(rep.total),
            "total_ratio": repr(rep.total_ratio),
        }
    return result


def _emit_human(command: str, results: dict, elapsed_ms: int) -> None:
    def lines(obj, indent=""):
        if isinstance(obj, dict):
            for key, val in obj.items():
                if isinstance(val, (dict, list)):
                    print(f"{indent}{key}:")
                    lines(val, indent + "  ")
                else:
                    print(f"{indent}{key}: {val}")
        elif isinstance(obj, list):
            if obj and not any(isinstance(v, (dict, list)) for v in obj):
                print(f"{indent}{' '.join(str(v) for v in obj)}")
            else:
                for val in obj:
                    lines(val, indent + "  ")
        else:
            print(f"{indent}{obj}")

    lines(results)
    print(f"# {command} finished in {elapsed_ms} ms", file=sys.stderr)


def _emit_csv(results: dict) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "values" in results:
        writer.writerow(["n", "value"])
        for n, v in enumerate(results["values"]):
            writer.writerow([n, v])
    elif "checkpoints" in results:
        writer.writerow(["n", "ratio", "limit", "relative_gap"])
        for row in results["checkpoints"]:
            writer.writerow([row["n"], row["ratio"], row["limit"],
                             row["relative_gap"]])
    else:
        writer.writerow(["key", "value"])
        for key, val in results.items():
            writer.writerow([key, json.dumps(val) if isinstance(
                val, (dict, list)) else val])
    sys.stdout.write(buf.getvalue())


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    runners = {
        "count": _run_count,
        "sequence": _run_sequence,
        "recurrence": _run_recurrence,
        "asymptotics": _run_asymptotics,
    }
    t0 = time.perf_counter()
    try:
        results = runners[args.command](args)
    except (DomainError, UnderdeterminedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (DisagreementError, InconsistentDataError,
            SingularRecurrenceError) as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    elapsed_ms = int((time.perf_counter() - t0) * 1000)
    command = args.command if args.command != "recurrence" \
        else f"recurrence {args.action}"
    if args.format == "json":
        params = {k: v for k, v in vars(args).items()
                  if k not in ("format", "command", "action") and v is not None}
        envelope = {
            "command": command,
            "params": {k: list(v) if isinstance(v, tuple) else v
                       for k, v in params.items()},
            "results": results,
            "status": "ok",
            "timing_ms": elapsed_ms,
            "version": __version__,
        }
        json.dump(envelope, sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif args.format == "csv":
        _emit_csv(results)
    else:
        _emit_human(command, results, elapsed_ms)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
