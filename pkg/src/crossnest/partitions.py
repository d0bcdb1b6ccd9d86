"""Set partitions, arc diagrams, and exact crossing/nesting statistics.

A partition of [n] = {1..n} is drawn on a row of n vertices with the standard
arc representation: each block contributes arcs between consecutive elements
in sorted order.  A k-crossing is a set of k arcs (i1,j1)..(ik,jk) with
i1 < ... < ik < j1 < ... < jk; a k-nesting has i1 < ... < ik < jk < ... < j1.

The enhanced variants work on the loop-augmented diagram (each singleton
block gets a loop (i,i)) and relax one inequality: ik <= j1 for crossings,
ik <= jk for nestings.  So enhanced crossings admit two arcs sharing a
middle vertex, and enhanced nestings admit a loop as the innermost arc.

These statistics are computed by chain searches, not subset search:

* nestings are strict-containment chains, a transitive relation, so a
  longest-decreasing-subsequence pass over arcs sorted by left endpoint
  suffices;
* crossings are not transitive, but every k-crossing straddles a common
  cut (the gap right of ik classically, the vertex ik when enhanced), so
  the maximum is a longest-increasing-subsequence pass per cut.

Enumeration is capped at n = 14 for partitions and 2n = 20 for matchings
(Bell/(2n-1)!! growth); the caps raise CapacityError, they are not silent.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import CapacityError

MAX_PARTITION_N = 14
MAX_MATCHING_POINTS = 20

CROSSING = "crossing"
NESTING = "nesting"


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1..n}; blocks are sorted tuples, sorted by minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = sorted(x for b in self.blocks for x in b)
        if seen != list(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition 1..{self.n}: {self.blocks}")

    @classmethod
    def from_blocks(cls, n: int, blocks) -> "SetPartition":
        norm = tuple(sorted(tuple(sorted(b)) for b in blocks))
        return cls(n, norm)

    @classmethod
    def from_compact(cls, text: str, n: int | None = None) -> "SetPartition":
        """Parse dash-separated single-digit blocks, e.g. "135-24".

        Single-digit labels only, so this helper covers n <= 9, which is all
        the witness partitions need.
        """
        blocks = [tuple(int(c) for c in part) for part in text.split("-") if part]
        size = n if n is not None else max(x for b in blocks for x in b)
        return cls.from_blocks(size, blocks)

    def compact(self) -> str:
        return "-".join("".join(str(x) for x in b) for b in self.blocks)


@dataclass(frozen=True)
class ArcDiagram:
    """Arcs of a partition diagram; loops (i,i) appear only when enhanced."""

    n: int
    arcs: tuple[tuple[int, int], ...]
    enhanced: bool

    def __post_init__(self) -> None:
        for i, j in self.arcs:
            if not (1 <= i <= j <= self.n):
                raise ValueError(f"arc ({i},{j}) outside 1..{self.n}")
            if i == j and not self.enhanced:
                raise ValueError(f"loop ({i},{i}) in a classical diagram")


def standard_arcs(p: SetPartition, enhanced: bool = False) -> ArcDiagram:
    """Consecutive-element arcs per block; loops on singletons when enhanced."""
    arcs: list[tuple[int, int]] = []
    for block in p.blocks:
        if len(block) == 1:
            if enhanced:
                arcs.append((block[0], block[0]))
        else:
            arcs.extend(zip(block, block[1:]))
    return ArcDiagram(p.n, tuple(sorted(arcs)), enhanced)


def _lis_strict(values: list[int]) -> int:
    """Length of the longest strictly increasing subsequence."""
    tails: list[int] = []
    for v in values:
        pos = bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
        else:
            tails[pos] = v
    return len(tails)


def max_crossing(diagram: ArcDiagram, mode: str) -> int:
    """Largest k such that the diagram contains a k-crossing (or k-nesting).

    Comparators follow diagram.enhanced for crossings; for nestings the
    enhancement is entirely carried by the loops present in the diagram.
    """
    if mode not in (CROSSING, NESTING):
        raise ValueError(f"mode must be {CROSSING!r} or {NESTING!r}, got {mode!r}")
    arcs = sorted(diagram.arcs)
    if not arcs:
        return 0
    if mode == NESTING:
        # longest strict-containment chain: sort by left endpoint (all
        # distinct), then longest strictly decreasing right-endpoint run
        rights = [-j for _, j in arcs]
        return _lis_strict(rights)
    best = 0
    if diagram.enhanced:
        # every enhanced k-crossing straddles the vertex ik weakly
        cuts = [(p, p) for p in range(1, diagram.n + 1)]
    else:
        # every classical k-crossing straddles the gap between ik and ik+1
        cuts = [(g, g + 1) for g in range(1, diagram.n)]
    for left_max, right_min in cuts:
        rights = [j for i, j in arcs if i <= left_max and j >= right_min]
        best = max(best, _lis_strict(rights))
    return best


def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    """All partitions of [n] in restricted-growth-string order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > MAX_PARTITION_N:
        raise CapacityError(
            f"partition enumeration capped at n = {MAX_PARTITION_N} "
            f"(Bell growth); got n = {n}"
        )
    if n == 0:
        yield SetPartition(0, ())
        return
    # rgs[i] = block index of i+1; rgs[i] <= 1 + max(rgs[:i])
    rgs = [0] * n
    maxes = [0] * n
    while True:
        blocks: list[list[int]] = [[] for _ in range(max(rgs) + 1)]
        for idx, b in enumerate(rgs):
            blocks[b].append(idx + 1)
        yield SetPartition(n, tuple(tuple(b) for b in blocks))
        # successor in rgs order
        i = n - 1
        while i > 0 and rgs[i] == maxes[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        maxes[i] = max(maxes[i - 1], rgs[i])
        for k in range(i + 1, n):
            rgs[k] = 0
            maxes[k] = maxes[i]


def enumerate_matchings(pairs: int) -> Iterator[SetPartition]:
    """All perfect matchings of [2*pairs] as partitions into blocks of two."""
    if pairs < 0:
        raise ValueError("pairs must be >= 0")
    if 2 * pairs > MAX_MATCHING_POINTS:
        raise CapacityError(
            f"matching enumeration capped at 2n = {MAX_MATCHING_POINTS} "
            f"((2n-1)!! growth); got 2n = {2 * pairs}"
        )
    n = 2 * pairs

    def rec(free: list[int], acc: list[tuple[int, int]]) -> Iterator[SetPartition]:
        if not free:
            yield SetPartition.from_blocks(n, list(acc))
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            acc.append((a, b))
            yield from rec(free[1:idx] + free[idx + 1 :], acc)
            acc.pop()

    yield from rec(list(range(1, n + 1)), [])


@lru_cache(maxsize=64)
def _statistic_histogram(n: int) -> dict[tuple[int, int, int, int], int]:
    """Joint counts of (cr, cr_enhanced, ne, ne_enhanced) over partitions of [n]."""
    hist: dict[tuple[int, int, int, int], int] = {}
    for p in enumerate_partitions(n):
        plain = standard_arcs(p, enhanced=False)
        loopy = standard_arcs(p, enhanced=True)
        key = (
            max_crossing(plain, CROSSING),
            max_crossing(loopy, CROSSING),
            max_crossing(plain, NESTING),
            max_crossing(loopy, NESTING),
        )
        hist[key] = hist.get(key, 0) + 1
    return hist


def count_avoiding(n: int, k: int, mode: str = CROSSING, enhanced: bool = False) -> int:
    """Number of partitions of [n] with no k-crossing (or k-nesting).

    Exact brute-force count; the oracle the analytic routes are checked
    against.  Requires k >= 2 and n within the enumeration cap.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if mode not in (CROSSING, NESTING):
        raise ValueError(f"mode must be {CROSSING!r} or {NESTING!r}, got {mode!r}")
    if n > MAX_PARTITION_N:
        raise CapacityError(
            f"brute-force counting capped at n = {MAX_PARTITION_N}; got n = {n}"
        )
    slot = {(CROSSING, False): 0, (CROSSING, True): 1,
            (NESTING, False): 2, (NESTING, True): 3}[(mode, enhanced)]
    return sum(c for key, c in _statistic_histogram(n).items() if key[slot] < k)
