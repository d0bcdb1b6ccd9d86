"""Shared plumbing: error taxonomy, exact integer sequences, binomials.

Everything in this package is exact.  Counts are Python big ints, series
coefficients are ints or fractions.Fraction, and any floating point only
appears in the asymptotics module (mpmath, never the sequence values).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence


class CrossnestError(Exception):
    """Base class for errors raised by this package."""


class CapacityError(CrossnestError):
    """A query exceeds an enumeration cap or a configured state budget."""


class DomainError(CrossnestError, ValueError):
    """A lattice point or query parameter violates its domain contract."""


class DisagreementError(CrossnestError):
    """Two routes that must agree exactly produced different values."""


class UnderdeterminedError(CrossnestError):
    """Not enough sequence data to attempt a recurrence fit honestly."""


class SingularRecurrenceError(CrossnestError):
    """A leading recurrence coefficient vanishes where an unroll needs it."""


class InconsistentDataError(CrossnestError):
    """Supplied data contradicts an exactness constraint (e.g. a non-integer
    value where an integer recurrence step is required)."""


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the summation-friendly convention:
    zero unless 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class BigSeq:
    """An exact integer sequence f(offset), f(offset+1), ...

    Indexing is absolute: seq[n] is f(n), valid for offset <= n < end.
    """

    values: tuple[int, ...]
    offset: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.offset < 0:
            raise ValueError("offset must be >= 0")

    @property
    def end(self) -> int:
        return self.offset + len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not self.offset <= n < self.end:
            raise IndexError(f"index {n} outside [{self.offset}, {self.end})")
        return self.values[n - self.offset]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def prefix(self, upto: int) -> "BigSeq":
        """The subsequence for indices offset..upto inclusive."""
        if upto + 1 > self.end:
            raise IndexError(f"prefix through {upto} exceeds end {self.end}")
        return BigSeq(self.values[: upto + 1 - self.offset], self.offset)


def as_bigseq(seq: "BigSeq | Sequence[int]") -> BigSeq:
    """Coerce a plain list/tuple (offset 0) to a BigSeq, pass BigSeq through."""
    if isinstance(seq, BigSeq):
        return seq
    return BigSeq(tuple(seq))
