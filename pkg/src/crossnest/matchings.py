"""Matching counts by crossing bound, from a determinant of modified
Bessel-type exponential generating functions.

The exponential generating function for perfect matchings of 2n points
with no k mutually crossing arcs is the (k-1) x (k-1) determinant of
B(i-j) - B(i+j), where B(m) = sum_j t^(m+2j) / (j! (m+j)!) and
B(-m) = B(m).  The count is then (2n)! times the t^(2n) coefficient.

Parity makes every odd t-coefficient of the determinant vanish, and each
even one times (2n)! is a nonnegative integer; both facts are asserted
rather than assumed.  The same counts come independently from oscillating
chamber walks, which tests exploit.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .core import BigSeq, InconsistentDataError

FSeries = tuple[Fraction, ...]  # dense t-coefficients, index = exponent


def bessel_egf(m: int, order: int) -> FSeries:
    """t-coefficients of B(m) through t^order; B(-m) = B(m)."""
    m = abs(m)
    out = [Fraction(0)] * (order + 1)
    j = 0
    while m + 2 * j <= order:
        out[m + 2 * j] = Fraction(1, factorial(j) * factorial(m + j))
        j += 1
    return tuple(out)


def _fs_sub(a: FSeries, b: FSeries) -> FSeries:
    return tuple(x - y for x, y in zip(a, b))


def _fs_mul(a: FSeries, b: FSeries) -> FSeries:
    order = len(a) - 1
    out = [Fraction(0)] * (order + 1)
    for i, ca in enumerate(a):
        if ca:
            for j in range(order + 1 - i):
                if b[j]:
                    out[i + j] += ca * b[j]
    return tuple(out)


def _fs_det(rows: list[list[FSeries]], order: int) -> FSeries:
    size = len(rows)
    if size == 0:
        return tuple([Fraction(1)] + [Fraction(0)] * order)
    if size == 1:
        return rows[0][0]
    total = [Fraction(0)] * (order + 1)
    for col in range(size):
        minor = [[rows[r][c] for c in range(size) if c != col]
                 for r in range(1, size)]
        term = _fs_mul(rows[0][col], _fs_det(minor, order))
        sign = -1 if col % 2 else 1
        for e in range(order + 1):
            total[e] += sign * term[e]
    return tuple(total)


@lru_cache(maxsize=32)
def matchings_egf(k: int, order: int) -> FSeries:
    """Determinant series for the k-crossing bound, through t^order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    size = k - 1
    rows = [[_fs_sub(bessel_egf(i - j, order), bessel_egf(i + j, order))
             for j in range(1, size + 1)]
            for i in range(1, size + 1)]
    det = _fs_det(rows, order)
    for e in range(1, order + 1, 2):
        if det[e]:
            raise InconsistentDataError(f"odd coefficient t^{e} is nonzero")
    return det


def matchings_count(k: int, n: int) -> int:
    """Perfect matchings of 2n points with fewer than k pairwise crossing
    arcs, from the determinant."""
    if n < 0:
        raise ValueError("n must be >= 0")
    det = matchings_egf(k, 2 * n)
    value = det[2 * n] * factorial(2 * n)
    if value.denominator != 1 or value < 0:
        raise InconsistentDataError(f"bad coefficient at n={n}: {value}")
    return int(value)


def matchings_sequence(k: int, upto: int) -> BigSeq:
    det = matchings_egf(k, 2 * upto)
    values = []
    for n in range(upto + 1):
        v = det[2 * n] * factorial(2 * n)
        if v.denominator != 1 or v < 0:
            raise InconsistentDataError(f"bad coefficient at n={n}: {v}")
        values.append(int(v))
    return BigSeq(tuple(values))


def catalan(n: int) -> int:
    """Closed-form check value for the k=2 column."""
    from math import comb
    return comb(2 * n, n) // (n + 1)
