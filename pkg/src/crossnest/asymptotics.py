"""Asymptotic diagnostics for the 3-noncrossing counting sequences.

The classical counts grow like kappa * 9^n / n^7 and the enhanced counts
like kappa' * 8^n / n^7, with explicit algebraic-over-pi constants.  This
module evaluates the constants to arbitrary precision, tracks the scaled
ratio n^7 f(n) / base^n along the short recurrences in floating point
with a controlled mantissa, and probes the binomial summands behind the
closed forms: their single-peak shape, the location of the peak, and the
exponential size of the six partial sums that cancel down to the count.

Forward recurrence unrolling follows the dominant solution, so relative
floating-point error stays near the working precision; the float path is
still cross-checked against exact integer unrolling in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from . import closedforms, recurrences
from .core import DomainError

KINDS = ("c3", "e3")

_RECURRENCE = {"c3": recurrences.c3_three_term, "e3": recurrences.e3_three_term}
_SEED = {"c3": (1, 1), "e3": (1, 1)}
POWER_OF_N = 7


def growth_base(kind: str) -> int:
    """Exponential growth base: 9 for classical, 8 for enhanced."""
    if kind not in KINDS:
        raise DomainError(f"kind must be one of {KINDS}, got {kind!r}")
    return 9 if kind == "c3" else 8


def kappa(kind: str, dps: int = 30) -> mp.mpf:
    """The constant in front of base^n / n^7, to dps digits."""
    if kind not in KINDS:
        raise DomainError(f"kind must be one of {KINDS}, got {kind!r}")
    with mp.workdps(dps):
        root3 = mp.sqrt(3)
        if kind == "c3":
            value = mp.mpf(3 ** 9 * 5) * root3 / (2 ** 5 * mp.pi)
        else:
            value = mp.mpf(2 ** 16 * 5) * root3 / (3 ** 3 * mp.pi)
        return +value


def _float_unroll(kind: str, upto: int, dps: int) -> mp.mpf:
    """f(upto) along the short recurrence in mpf arithmetic."""
    rec = _RECURRENCE[kind]()
    p0, p1, p2 = rec.coeffs
    with mp.workdps(dps):
        a, b = mp.mpf(_SEED[kind][0]), mp.mpf(_SEED[kind][1])
        if upto == 0:
            return +a
        for n in range(upto - 1):
            a, b = b, -(recurrences.poly_eval(p0, n) * a
                        + recurrences.poly_eval(p1, n) * b) \
                / recurrences.poly_eval(p2, n)
        return +b


def ratio_checkpoint(kind: str, n: int, dps: int = 40) -> mp.mpf:
    """n^7 f(n) / base^n, with f unrolled in dps-digit floating point."""
    if n < 1:
        raise DomainError("checkpoint needs n >= 1")
    base = growth_base(kind)
    value = _float_unroll(kind, n, dps)
    with mp.workdps(dps):
        return +(value * mp.mpf(n) ** POWER_OF_N / mp.power(base, n))


def exact_ratio(kind: str, n: int) -> Fraction:
    """Same ratio as an exact rational, from integer unrolling; for
    validating the float path at moderate n."""
    rec = _RECURRENCE[kind]()
    f = rec.unroll(list(_SEED[kind]), n)[n]
    return Fraction(f * n ** POWER_OF_N, growth_base(kind) ** n)


@dataclass
class AsymptoticReport:
    kind: str
    n: int
    ratio: float
    limit: float
    relative_gap: float

    def line(self) -> str:
        return (f"{self.kind}: n^7 f(n)/base^n at n={self.n} is "
                f"{self.ratio:.4f} vs limit {self.limit:.4f} "
                f"(gap {self.relative_gap:.2e})")


def asymptotic_report(kind: str, n: int, dps: int = 40) -> AsymptoticReport:
    ratio = ratio_checkpoint(kind, n, dps)
    limit = kappa(kind, dps)
    gap = abs(ratio / limit - 1)
    return AsymptoticReport(kind, n, float(ratio), float(limit), float(gap))


# binomial summand shape ---------------------------------------------------

@dataclass
class SummandReport:
    """Shape of j -> C(n,j) C(n,j+k) C(2j+k,j-l) at fixed n."""

    n: int
    l: int
    k: int
    unimodal: bool
    mode: int
    peak_window: tuple[Fraction, Fraction]
    mode_distance: Fraction
    total: int
    total_ratio: float  # total over (3^(3/2)/(4 pi)) 9^n / n


def summand_profile(n: int, l: int, k: int) -> list[int]:
    return [closedforms.binomial_summand(n, l, k, j) for j in range(n + 1)]


def summand_report(n: int, l: int, k: int, dps: int = 30) -> SummandReport:
    """Peak diagnostics: single-peak check, peak near 2n/3 - k/2 within
    distance 1 of a length-1/6 window, and the total against its
    predicted leading asymptotics."""
    profile = summand_profile(n, l, k)
    mode = max(range(len(profile)), key=profile.__getitem__)
    rising = all(profile[j] <= profile[j + 1] for j in range(mode))
    falling = all(profile[j] >= profile[j + 1]
                  for j in range(mode, len(profile) - 1))
    lo = Fraction(2 * n, 3) - Fraction(k, 2) - Fraction(1, 2)
    hi = Fraction(2 * n, 3) - Fraction(k, 2) - Fraction(1, 3)
    if lo <= mode <= hi:
        dist = Fraction(0)
    else:
        dist = min(abs(mode - lo), abs(mode - hi))
    total = sum(profile)
    with mp.workdps(dps):
        predicted = mp.mpf(3) ** Fraction(3, 2) / (4 * mp.pi) \
            * mp.power(9, n) / n
        ratio = float(mp.mpf(total) / predicted)
    return SummandReport(n, l, k, rising and falling, mode, (lo, hi),
                         dist, total, ratio)


@dataclass
class CancellationReport:
    """Sizes of the six alternating partial sums against their tiny total."""

    n: int
    partials: tuple[int, ...]
    signs: tuple[int, ...]
    total: int
    cancellation: float  # largest |partial| / |total|


def sixterm_cancellation(n: int) -> CancellationReport:
    partials = []
    signs = []
    for l, k, sign in closedforms.CLASSIC_TERMS:
        partials.append(closedforms.classic_root_sum(n, l, k))
        signs.append(sign)
    total = sum(s * p for s, p in zip(signs, partials))
    expect = closedforms.c3_closed(n)
    if total != expect:
        raise AssertionError(f"partial sums drifted from the count at n={n}")
    biggest = max(abs(p) for p in partials)
    return CancellationReport(n, tuple(partials), tuple(signs), total,
                              biggest / total if total else float("inf"))
