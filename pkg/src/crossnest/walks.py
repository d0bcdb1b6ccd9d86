"""Exact lattice-walk counting in the orthant and the strict Weyl chamber.

Three step disciplines over unit steps +-e_j in dimension k:

* vacillating: steps come in pairs; the first step of a pair is stay or
  -e_j, the second is stay or +e_j;
* hesitating: pairs are (stay, +e_i), (-e_i, stay) or (+e_i, -e_j);
* oscillating: every step is +-e_j, no parity discipline.

Domains: the orthant N^k (all coordinates >= 0) and the chamber
a_1 > a_2 > ... > a_k >= 0.  Every lattice point of a walk, including the
mid-pair point of a hesitating pair, must lie in the domain.

Chamber loop counts from delta = (k-1, ..., 1, 0) back to itself count
(k+1)-noncrossing objects: vacillating walks of length 2n give partitions
of [n] avoiding (k+1)-crossings, hesitating walks give the enhanced count,
oscillating walks give (k+1)-noncrossing perfect matchings of [2n].

The reflection principle converts chamber counts into a signed sum of
orthant counts over permuted endpoints, which is how long sequences are
produced: one orthant DP pass records all permuted endpoints at every
even layer.

The DP keeps one dict per layer mapping lattice point to an exact big-int
count; reachable points live in the simplex sum(p) <= sum(start) + (number
of possible up-steps), which is what the state budget estimates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb

from .core import CapacityError, DomainError

VACILLATING = "vacillating"
HESITATING = "hesitating"
OSCILLATING = "oscillating"
ORTHANT = "orthant"
CHAMBER = "chamber"

RULES = (VACILLATING, HESITATING, OSCILLATING)
DOMAINS = (ORTHANT, CHAMBER)

DEFAULT_BUDGET = 10**8

Point = tuple[int, ...]
Layer = dict[Point, int]


def in_orthant(point: Point) -> bool:
    return all(c >= 0 for c in point)


def in_chamber(point: Point) -> bool:
    return all(a > b for a, b in zip(point, point[1:])) and point[-1] >= 0


def delta(dim: int) -> Point:
    """The minimal chamber point (dim-1, dim-2, ..., 1, 0)."""
    return tuple(range(dim - 1, -1, -1))


@dataclass(frozen=True)
class WalkQuery:
    rule: str
    domain: str
    dim: int
    start: Point
    end: Point
    length: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", tuple(int(c) for c in self.start))
        object.__setattr__(self, "end", tuple(int(c) for c in self.end))
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")
        if self.domain not in DOMAINS:
            raise ValueError(f"unknown domain {self.domain!r}")
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if len(self.start) != self.dim or len(self.end) != self.dim:
            raise ValueError("start/end dimension mismatch")
        if self.length < 0:
            raise ValueError("length must be >= 0")
        if self.rule in (VACILLATING, HESITATING) and self.length % 2:
            raise ValueError(f"{self.rule} walks consume steps in pairs; "
                             f"length must be even, got {self.length}")
        inside = in_orthant if self.domain == ORTHANT else in_chamber
        for name, pt in (("start", self.start), ("end", self.end)):
            if not inside(pt):
                raise DomainError(f"{name} {pt} is not in the {self.domain}")


def _budget_cost(rule: str, dim: int, start: Point, length: int) -> int:
    """Estimated cells x layers for the sparse DP (simplex state estimate)."""
    ups = length if rule == OSCILLATING else (length + 1) // 2
    max_sum = sum(start) + ups
    cells = comb(max_sum + dim, dim)
    return cells * max(length, 1)


def _check_budget(rule: str, dim: int, start: Point, length: int,
                  budget: int) -> None:
    cost = _budget_cost(rule, dim, start, length)
    if cost > budget:
        raise CapacityError(
            f"walk DP state estimate {cost} exceeds budget {budget} "
            f"(rule={rule}, dim={dim}, length={length}); raise the budget "
            f"to run this query")


def _shift_layer(layer: Layer, dim: int, sign: int, chamber: bool) -> Layer:
    """All single +-e_j moves from layer, domain-checked locally.

    For a decrement at axis j the only constraints that can break are
    a_j > a_{j+1} (or a_k >= 0 at the last axis); for an increment, only
    a_{j-1} > a_j.  Orthant: decrements need a_j >= 1, increments are free.
    """
    out: Layer = {}
    get = out.get
    last = dim - 1
    for pt, c in layer.items():
        for j in range(dim):
            v = pt[j] + sign
            if sign < 0:
                if chamber:
                    if j == last:
                        if v < 0:
                            continue
                    elif v <= pt[j + 1]:
                        continue
                elif v < 0:
                    continue
            else:
                if chamber and j != 0 and pt[j - 1] <= v:
                    continue
            np = pt[:j] + (v,) + pt[j + 1:]
            out[np] = get(np, 0) + c
    return out


def _merge_into(dst: Layer, src: Layer) -> None:
    get = dst.get
    for pt, c in src.items():
        dst[pt] = get(pt, 0) + c


def _evolve(rule: str, domain: str, dim: int, start: Point, length: int):
    """Yield (unit_step_index, layer).  Hesitating yields even steps only."""
    chamber = domain == CHAMBER
    layer: Layer = {tuple(start): 1}
    yield 0, layer
    if rule == VACILLATING:
        for s in range(1, length + 1):
            sign = -1 if s % 2 else +1
            nxt = dict(layer)  # stay
            _merge_into(nxt, _shift_layer(layer, dim, sign, chamber))
            layer = nxt
            yield s, layer
    elif rule == OSCILLATING:
        for s in range(1, length + 1):
            nxt = _shift_layer(layer, dim, -1, chamber)
            _merge_into(nxt, _shift_layer(layer, dim, +1, chamber))
            layer = nxt
            yield s, layer
    elif rule == HESITATING:
        for s in range(2, length + 1, 2):
            # pair types, mid-pair point domain-checked by construction:
            # (stay, +e_i) -> up(L); (-e_i, stay) -> down(L);
            # (+e_i, -e_j) -> down(up(L))
            up = _shift_layer(layer, dim, +1, chamber)
            nxt = dict(up)
            _merge_into(nxt, _shift_layer(layer, dim, -1, chamber))
            _merge_into(nxt, _shift_layer(up, dim, -1, chamber))
            layer = nxt
            yield s, layer
    else:
        raise ValueError(f"unknown rule {rule!r}")


def count_walks(query: WalkQuery, budget: int = DEFAULT_BUDGET) -> int:
    """Exact number of walks matching the query."""
    _check_budget(query.rule, query.dim, query.start, query.length, budget)
    final: Layer = {}
    for _, layer in _evolve(query.rule, query.domain, query.dim,
                            query.start, query.length):
        final = layer
    return final.get(query.end, 0)


def layer_distributions(rule: str, domain: str, dim: int, start: Point,
                        length: int, budget: int = DEFAULT_BUDGET
                        ) -> list[Layer | None]:
    """Endpoint distribution after each unit step, index 0..length.

    Hesitating walks have no well-typed odd layer (the pair is half done),
    so odd indices hold None there.  Vacillating odd layers are exposed;
    they are the odd-length walk counts the series cross-checks need.
    """
    if rule not in RULES:
        raise ValueError(f"unknown rule {rule!r}")
    if domain not in DOMAINS:
        raise ValueError(f"unknown domain {domain!r}")
    inside = in_orthant if domain == ORTHANT else in_chamber
    start = tuple(int(c) for c in start)
    if not inside(start):
        raise DomainError(f"start {start} is not in the {domain}")
    if rule == HESITATING and length % 2:
        raise ValueError("hesitating length must be even")
    _check_budget(rule, dim, start, length, budget)
    out: list[Layer | None] = [None] * (length + 1)
    for s, layer in _evolve(rule, domain, dim, start, length):
        out[s] = dict(layer)
    return out


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        clen = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def _signed_endpoints(end: Point) -> list[tuple[Point, int]]:
    out = []
    for perm in permutations(range(len(end))):
        pt = tuple(end[p] for p in perm)
        out.append((pt, _perm_sign(perm)))
    return out


def reflect_count(rule: str, dim: int, start: Point, end: Point, length: int,
                  budget: int = DEFAULT_BUDGET) -> int:
    """Chamber count via the reflection principle: a signed sum of orthant
    counts over all permutations of the end coordinates, one DP pass."""
    query = WalkQuery(rule, CHAMBER, dim, start, end, length)  # validates
    _check_budget(rule, dim, query.start, length, budget)
    final: Layer = {}
    for _, layer in _evolve(rule, ORTHANT, dim, query.start, length):
        final = layer
    return sum(sign * final.get(pt, 0)
               for pt, sign in _signed_endpoints(query.end))


def chamber_loop_counts(rule: str, dim: int, upto: int,
                        budget: int = DEFAULT_BUDGET) -> list[int]:
    """[number of chamber loops at delta of length 2n for n = 0..upto],
    computed by reflection from a single orthant DP pass."""
    if upto < 0:
        raise ValueError("upto must be >= 0")
    start = delta(dim)
    length = 2 * upto
    _check_budget(rule, dim, start, length, budget)
    ends = _signed_endpoints(start)
    out: list[int] = []
    for s, layer in _evolve(rule, ORTHANT, dim, start, length):
        if s % 2 == 0:
            out.append(sum(sign * layer.get(pt, 0) for pt, sign in ends))
    return out


def chamber_loop_counts_direct(rule: str, dim: int, upto: int,
                               budget: int = DEFAULT_BUDGET) -> list[int]:
    """Same sequence as chamber_loop_counts but by direct chamber DP;
    an independent implementation kept for cross-checking."""
    if upto < 0:
        raise ValueError("upto must be >= 0")
    start = delta(dim)
    length = 2 * upto
    _check_budget(rule, dim, start, length, budget)
    out: list[int] = []
    for s, layer in _evolve(rule, CHAMBER, dim, start, length):
        if s % 2 == 0:
            out.append(layer.get(start, 0))
    return out
