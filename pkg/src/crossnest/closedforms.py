"""Closed-form binomial sums for the 3-noncrossing counting sequences.

Lagrange inversion applied to the kernel roots turns each constant term
CT_x(x^l Y^k) into a finite sum over j of a rational multiple of a product
of three binomials:

* classic root (pair-step walks behind classical partitions):
    [t^n] CT(x^l Y^k) = sum_j (k/n) C(n,j) C(n,j+k) C(2j+k, j-l),  n >= 1

* enhanced root, divided by t(1+x):
    [t^n] CT(x^l Y^k / (t(1+x))) = sum_j (k/(n+1)) C(n+1,j) C(n+1,j+k) C(n, j-l)

The six-term constant-term formulas for the two counting series then become
six such sums.  The classical count collapses further to a single sum of a
factorial quotient times a degree-5 polynomial in j.

Summands are rational; every exposed sum asserts it lands on an integer.
Out-of-range binomials are zero, so widening the j range never changes a
sum; tests rely on that.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .core import BigSeq, InconsistentDataError, binom


def binomial_summand(n: int, l: int, k: int, j: int) -> int:
    """C(n,j) C(n,j+k) C(2j+k, j-l), the integer core of the classic-root
    term; also the summand whose unimodality the asymptotics module probes."""
    return binom(n, j) * binom(n, j + k) * binom(2 * j + k, j - l)


def classic_root_term(n: int, l: int, k: int, j: int) -> Fraction:
    """Single Lagrange term for [t^n] CT(x^l Y^k), classic root; n >= 1."""
    if n < 1:
        raise ValueError("classic-root terms need n >= 1")
    return Fraction(k, n) * binomial_summand(n, l, k, j)


def enhanced_root_term(n: int, l: int, k: int, j: int) -> Fraction:
    """Single Lagrange term for [t^n] CT(x^l Y^k / (t(1+x))), enhanced root."""
    return Fraction(k, n + 1) * binom(n + 1, j) * binom(n + 1, j + k) \
        * binom(n, j - l)


def classic_root_sum(n: int, l: int, k: int,
                     j_span: tuple[int, int] | None = None) -> int:
    """[t^n] CT(x^l Y^k) for the classic root, n >= 1."""
    lo, hi = j_span if j_span is not None else (0, n)
    total = sum(classic_root_term(n, l, k, j) for j in range(lo, hi + 1))
    if total.denominator != 1:
        raise InconsistentDataError(f"non-integer sum at n={n}, l={l}, k={k}")
    return int(total)


def enhanced_root_sum(n: int, l: int, k: int,
                      j_span: tuple[int, int] | None = None) -> int:
    """[t^n] CT(x^l Y^k / (t(1+x))) for the enhanced root."""
    lo, hi = j_span if j_span is not None else (0, n + 1)
    total = sum(enhanced_root_term(n, l, k, j) for j in range(lo, hi + 1))
    if total.denominator != 1:
        raise InconsistentDataError(f"non-integer sum at n={n}, l={l}, k={k}")
    return int(total)


# (l, k, sign) triples mirroring the six constant-term extractions
CLASSIC_TERMS = ((-1, 1, 1), (4, 1, -1), (-5, 2, 1),
                 (-1, 2, -1), (-4, 3, -1), (0, 3, 1))
ENHANCED_TERMS = ((0, 1, 1), (5, 1, -1), (2, 3, -1),
                  (1, 3, 1), (4, 2, 1), (0, 2, -1))


def c3_closed(n: int) -> int:
    """Classical 3-noncrossing partition count from the six binomial sums."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    total = Fraction(0)
    for l, k, sign in CLASSIC_TERMS:
        for j in range(0, n + 1):
            total += sign * classic_root_term(n, l, k, j)
    if total.denominator != 1:
        raise InconsistentDataError(f"non-integer count at n={n}")
    return int(total)


def e3_closed(n: int) -> int:
    """Enhanced 3-noncrossing partition count from the six binomial sums."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Fraction(0)
    for l, k, sign in ENHANCED_TERMS:
        for j in range(0, n + 2):
            total += sign * enhanced_root_term(n, l, k, j)
    if total.denominator != 1:
        raise InconsistentDataError(f"non-integer count at n={n}")
    return int(total)


def c3_single_sum(n: int) -> int:
    """Classical count again, from the single-sum collapse: a factorial
    quotient times a degree-5 polynomial in j, summed over 1 <= j <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    total = Fraction(0)
    for j in range(1, n + 1):
        poly = (24 + 18 * n + (5 - 13 * n) * j + (11 * n + 20) * j * j
                + (10 * n - 2) * j ** 3 + (4 * n - 11) * j ** 4 - 6 * j ** 5)
        quot = Fraction(4 * factorial(n - 1) * factorial(n) * factorial(2 * j),
                        factorial(j - 1) * factorial(j) * factorial(j + 1)
                        * factorial(j + 4) * factorial(n - j)
                        * factorial(n - j + 2))
        total += quot * poly
    if total.denominator != 1:
        raise InconsistentDataError(f"non-integer count at n={n}")
    return int(total)


def c3_closed_sequence(upto: int) -> BigSeq:
    return BigSeq(tuple(c3_closed(n) for n in range(upto + 1)))


def e3_closed_sequence(upto: int) -> BigSeq:
    return BigSeq(tuple(e3_closed(n) for n in range(upto + 1)))


def c3_single_sum_sequence(upto: int) -> BigSeq:
    return BigSeq(tuple(c3_single_sum(n) for n in range(upto + 1)))
