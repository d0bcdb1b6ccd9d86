"""Named counting sequences and the multi-route agreement harness.

Sequence ids combine a regime letter and the forbidden pattern size:

* ``c<k>``: partitions with no k pairwise crossing arcs (classical);
* ``e<k>``: same but enhanced (singletons carry loops, endpoint sharing
  allowed in the pattern comparators);
* ``m<k>``: perfect matchings with no k pairwise crossing arcs.

Each id owns several independent computation routes (brute enumeration,
lattice-walk transfer, kernel series, binomial closed form, recurrence
unrolling, Bessel determinant, as applicable).  `compare` runs any subset
and insists on exact agreement, which is the package's main correctness
instrument.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass

from . import closedforms, kernel, matchings, partitions, recurrences, walks
from .core import BigSeq, CapacityError, DisagreementError

_ID_PATTERN = re.compile(r"^([cem])([2-9]|[1-9][0-9])$")


@dataclass(frozen=True)
class SequenceId:
    regime: str  # "c", "e", "m"
    k: int

    @property
    def name(self) -> str:
        return f"{self.regime}{self.k}"


def parse_id(seq: str) -> SequenceId:
    m = _ID_PATTERN.match(seq.strip().lower())
    if m is None:
        raise ValueError(
            f"bad sequence id {seq!r}; expected c<k>, e<k> or m<k> with k >= 2")
    return SequenceId(m.group(1), int(m.group(2)))


def _brute(sid: SequenceId, upto: int) -> BigSeq:
    if sid.regime == "m":
        if 2 * upto > partitions.MAX_MATCHING_POINTS:
            raise CapacityError(
                f"brute matchings capped at n = "
                f"{partitions.MAX_MATCHING_POINTS // 2}")
        values = []
        for n in range(upto + 1):
            values.append(sum(
                1 for p in partitions.enumerate_matchings(n)
                if partitions.max_crossing(partitions.standard_arcs(p),
                                           partitions.CROSSING) < sid.k))
        return BigSeq(tuple(values))
    enhanced = sid.regime == "e"
    return BigSeq(tuple(
        partitions.count_avoiding(n, sid.k, partitions.CROSSING,
                                  enhanced=enhanced)
        for n in range(upto + 1)))


_WALK_RULE = {"c": walks.VACILLATING, "e": walks.HESITATING,
              "m": walks.OSCILLATING}


def _walks(sid: SequenceId, upto: int, budget: int) -> BigSeq:
    return BigSeq(tuple(walks.chamber_loop_counts(
        _WALK_RULE[sid.regime], sid.k - 1, upto, budget)))


def _series(sid: SequenceId, upto: int) -> BigSeq:
    fn = kernel.c3_series if sid.regime == "c" else kernel.e3_series
    return fn(upto)


def _closed(sid: SequenceId, upto: int) -> BigSeq:
    fn = (closedforms.c3_closed_sequence if sid.regime == "c"
          else closedforms.e3_closed_sequence)
    return fn(upto)


def _recurrence(sid: SequenceId, upto: int) -> BigSeq:
    rec = (recurrences.c3_three_term() if sid.regime == "c"
           else recurrences.e3_three_term())
    return BigSeq(tuple(rec.unroll([1, 1], upto)))


def _determinant(sid: SequenceId, upto: int) -> BigSeq:
    return matchings.matchings_sequence(sid.k, upto)


def available_routes(seq: str | SequenceId) -> dict[str, int | None]:
    """Route name -> hard cap on n (None when only the budget limits it)."""
    sid = seq if isinstance(seq, SequenceId) else parse_id(seq)
    routes: dict[str, int | None] = {}
    if sid.regime == "m":
        routes["brute"] = partitions.MAX_MATCHING_POINTS // 2
        routes["determinant"] = None
    else:
        routes["brute"] = partitions.MAX_PARTITION_N
    routes["walks"] = None
    if sid.regime in ("c", "e") and sid.k == 3:
        routes["series"] = None
        routes["closed"] = None
        routes["recurrence"] = None
    return routes


def compute(seq: str | SequenceId, route: str, upto: int,
            budget: int = walks.DEFAULT_BUDGET) -> BigSeq:
    """One route's values for n = 0..upto."""
    sid = seq if isinstance(seq, SequenceId) else parse_id(seq)
    if upto < 0:
        raise ValueError("upto must be >= 0")
    routes = available_routes(sid)
    if route not in routes:
        raise ValueError(f"route {route!r} not available for {sid.name}; "
                         f"have {sorted(routes)}")
    cap = routes[route]
    if cap is not None and upto > cap:
        raise CapacityError(f"route {route!r} for {sid.name} capped at "
                            f"n = {cap}, got {upto}")
    if route == "brute":
        return _brute(sid, upto)
    if route == "walks":
        return _walks(sid, upto, budget)
    if route == "series":
        return _series(sid, upto)
    if route == "closed":
        return _closed(sid, upto)
    if route == "recurrence":
        return _recurrence(sid, upto)
    return _determinant(sid, upto)


@dataclass
class AgreementReport:
    sequence: str
    upto: int
    values: BigSeq
    route_seconds: dict[str, float]
    skipped: dict[str, str]

    def summary(self) -> str:
        ran = ", ".join(f"{r} {s:.2f}s" for r, s in self.route_seconds.items())
        skip = ("; skipped " + ", ".join(f"{r} ({why})"
                                         for r, why in self.skipped.items())
                if self.skipped else "")
        return (f"{self.sequence} n<={self.upto}: "
                f"{len(self.route_seconds)} routes agree ({ran}){skip}")


def compare(seq: str | SequenceId, upto: int,
            routes: list[str] | None = None,
            budget: int = walks.DEFAULT_BUDGET) -> AgreementReport:
    """Run routes and demand exact agreement on every term.

    With routes=None, every route whose hard cap allows `upto` runs (the
    rest are reported as skipped).  Explicitly requested routes are never
    skipped; their caps raise instead.
    """
    sid = seq if isinstance(seq, SequenceId) else parse_id(seq)
    table = available_routes(sid)
    skipped: dict[str, str] = {}
    if routes is None:
        chosen = []
        for name, cap in table.items():
            if cap is not None and upto > cap:
                skipped[name] = f"capped at {cap}"
            else:
                chosen.append(name)
    else:
        chosen = list(routes)
    if not chosen:
        raise ValueError(f"no routes can reach n = {upto} for {sid.name}")
    results: dict[str, BigSeq] = {}
    seconds: dict[str, float] = {}
    for name in chosen:
        t0 = time.perf_counter()
        results[name] = compute(sid, name, upto, budget)
        seconds[name] = time.perf_counter() - t0
    names = list(results)
    first = results[names[0]]
    for other in names[1:]:
        for n in range(upto + 1):
            if results[other][n] != first[n]:
                raise DisagreementError(
                    f"{sid.name}: routes {names[0]} and {other} disagree at "
                    f"n={n}: {first[n]} vs {results[other][n]}")
    return AgreementReport(sid.name, upto, first, seconds, skipped)
