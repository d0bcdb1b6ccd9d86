"""Linear recurrences with polynomial coefficients, exactly.

A recurrence is an operator sum_i p_i(n) N^i with integer-polynomial
coefficients, annihilating a sequence f when sum_i p_i(n) f(n+i) = 0 for
every n at or past `valid_from`.  This module supplies:

* verification of a recurrence against exact data, term by term;
* exact unrolling (forward solving), with divisibility and leading-zero
  guards so silent rounding is impossible;
* operator composition under the shift rule N p(n) = p(n+1) N, used to
  check that a first-order factor times a short recurrence reproduces a
  longer one;
* recurrence guessing from exact data by homogeneous linear algebra over
  the rationals, with a held-out validation margin, a modular-rank
  certificate for absence, and a minimal (order, degree) scan;
* the named recurrences for the two 3-noncrossing counting sequences and
  the first-order factors linking their short and long forms.

Named long recurrences are stored re-based so that `valid_from` is 0:
the published polynomials are evaluated at n+3, which aligns the relation
with sequence indices n, n+1, n+2, n+3 for every n >= 0.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd, lcm

from .core import (BigSeq, InconsistentDataError, SingularRecurrenceError,
                   UnderdeterminedError, binom)

Poly = tuple[int, ...]  # integer coefficients, ascending degree


def poly_trim(p) -> Poly:
    p = tuple(p)
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_eval(p: Poly, n: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * n + c
    return acc


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return poly_trim(tuple(c + (b[i] if i < len(b) else 0)
                           for i, c in enumerate(a)))


def poly_scale(p: Poly, s: int) -> Poly:
    if not s:
        return ()
    return tuple(c * s for c in p)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return poly_trim(out)


def poly_shift(p: Poly, s: int) -> Poly:
    """Coefficients of p(n+s)."""
    out = [0] * len(p)
    for m, c in enumerate(p):
        if c:
            for e in range(m + 1):
                out[e] += c * binom(m, e) * s ** (m - e)
    return poly_trim(out)


def _poly_str(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for e, c in enumerate(p):
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            mono = "n" if e == 1 else f"n^{e}"
            parts.append(f"{c}*{mono}" if abs(c) != 1 else
                         (mono if c == 1 else f"-{mono}"))
    return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class PRecurrence:
    """sum_i coeffs[i](n) f(n+i) = 0 for n >= valid_from."""

    coeffs: tuple[Poly, ...]
    valid_from: int = 0

    def __post_init__(self):
        trimmed = [poly_trim(p) for p in self.coeffs]
        while trimmed and not trimmed[-1]:
            trimmed.pop()
        if not trimmed:
            raise ValueError("recurrence has no nonzero coefficient")
        object.__setattr__(self, "coeffs", tuple(trimmed))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max(len(p) - 1 for p in self.coeffs if p)

    def residual(self, values, n: int) -> int:
        return sum(poly_eval(p, n) * values[n + i]
                   for i, p in enumerate(self.coeffs))

    def first_failure(self, values) -> int | None:
        """Smallest valid n with a nonzero residual, or None."""
        values = list(values)
        for n in range(self.valid_from, len(values) - self.order):
            if self.residual(values, n) != 0:
                return n
        return None

    def holds_on(self, values) -> bool:
        return self.first_failure(values) is None

    def unroll(self, initial, upto: int) -> list[int]:
        """f(0..upto) from seeds f(0..) by exact forward solving.

        Seeds must cover indices < valid_from + order; any further seeds
        are cross-checked against the recurrence instead of recomputed.
        """
        values = [int(v) for v in initial]
        need = self.valid_from + self.order
        if len(values) < need:
            raise ValueError(f"need at least {need} seed values, "
                             f"got {len(values)}")
        r = self.order
        top = self.coeffs[r]
        for n in range(self.valid_from, upto - r + 1):
            acc = sum(poly_eval(p, n) * values[n + i]
                      for i, p in enumerate(self.coeffs[:r]))
            if n + r < len(values):
                if acc + poly_eval(top, n) * values[n + r] != 0:
                    raise InconsistentDataError(
                        f"seed value at index {n + r} violates the recurrence")
                continue
            lead = poly_eval(top, n)
            if lead == 0:
                raise SingularRecurrenceError(
                    f"leading coefficient vanishes at n={n}")
            q, rem = divmod(-acc, lead)
            if rem:
                raise InconsistentDataError(
                    f"non-integer step at n={n}; wrong seeds or recurrence")
            values.append(q)
        return values[: upto + 1]

    def compose(self, inner: "PRecurrence") -> "PRecurrence":
        """Operator product self * inner under N p(n) = p(n+1) N.

        The product annihilates everything the inner operator annihilates,
        so the composite inherits the inner `valid_from`.
        """
        out: list[Poly] = [()] * (self.order + inner.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(inner.coeffs):
                if not b:
                    continue
                out[i + j] = poly_add(out[i + j],
                                      poly_mul(a, poly_shift(b, i)))
        return PRecurrence(tuple(out), inner.valid_from)

    def normalized(self) -> "PRecurrence":
        """Primitive integer form, leading coefficient of the top
        polynomial positive."""
        g = 0
        for p in self.coeffs:
            for c in p:
                g = gcd(g, c)
        if g == 0:
            raise ValueError("zero recurrence")
        sign = 1 if self.coeffs[-1][-1] > 0 else -1
        s = sign * g
        return PRecurrence(tuple(tuple(c // s for c in p)
                                 for p in self.coeffs), self.valid_from)

    def describe(self) -> str:
        terms = [f"({_poly_str(p)}) f(n+{i})" if i else f"({_poly_str(p)}) f(n)"
                 for i, p in enumerate(self.coeffs)]
        return " + ".join(terms) + f" = 0   for n >= {self.valid_from}"


# named recurrences --------------------------------------------------------

def c3_three_term() -> PRecurrence:
    """Short recurrence for classical 3-noncrossing partition counts."""
    return PRecurrence((
        poly_mul((0, 9), (3, 1)),            # 9n(n+3)
        poly_scale((42, 32, 5), -2),         # -2(5n^2+32n+42)
        poly_mul((6, 1), (7, 1)),            # (n+6)(n+7)
    ))


def e3_three_term() -> PRecurrence:
    """Short recurrence for enhanced 3-noncrossing partition counts."""
    return PRecurrence((
        poly_scale(poly_mul((3, 1), (1, 1)), 8),   # 8(n+3)(n+1)
        (88, 53, 7),
        poly_scale(poly_mul((8, 1), (7, 1)), -1),  # -(n+8)(n+7)
    ))


def _shift3(polys: tuple[Poly, ...]) -> tuple[Poly, ...]:
    return tuple(poly_shift(p, 3) for p in polys)


def c3_four_term() -> PRecurrence:
    """Long recurrence for the classical counts, re-based to valid_from 0."""
    q0 = poly_mul(poly_mul((0, 9), (-2, 1)),
                  poly_mul((-3, 1), (17, 15, 4)))
    q1 = poly_scale(poly_mul((-2, 1), (-144, 203, 572, 373, 76)), -1)
    q2 = poly_mul((3, 1), (-160, 30, 227, 189, 44))
    q3 = poly_scale(poly_mul(poly_mul((5, 1), (4, 1)),
                             poly_mul((3, 1), (6, 7, 4))), -1)
    return PRecurrence(_shift3((q0, q1, q2, q3)))


def e3_four_term() -> PRecurrence:
    """Long recurrence for the enhanced counts, re-based to valid_from 0."""
    t0 = poly_mul(poly_mul((0, 8), (-1, 1)), (-2, 1))
    t1 = poly_scale(poly_mul((-1, 1), (8, 17, 5)), 3)
    t2 = poly_scale(poly_mul(poly_mul((1, 1), (5, 2)), (4, 1)), 3)
    t3 = poly_scale(poly_mul(poly_mul((6, 1), (5, 1)), (4, 1)), -1)
    return PRecurrence(_shift3((t0, t1, t2, t3)))


def c3_factor_operator() -> PRecurrence:
    """First-order factor whose product with the short classical recurrence
    is the long one."""
    return PRecurrence((
        poly_mul((1, 1), (98, 39, 4)),
        poly_scale(poly_mul((6, 1), (63, 31, 4)), -1),
    ))


def e3_factor_operator() -> PRecurrence:
    """First-order factor whose product with the short enhanced recurrence
    is the long one."""
    return PRecurrence(((2, 1), (7, 1)))


NAMED_RECURRENCES = {
    "c3-3term": c3_three_term,
    "c3-4term": c3_four_term,
    "e3-3term": e3_three_term,
    "e3-4term": e3_four_term,
}

FACTOR_CHECKS = {
    "c3": (c3_factor_operator, c3_three_term, c3_four_term),
    "e3": (e3_factor_operator, e3_three_term, e3_four_term),
}


def factor_check(which: str) -> bool:
    """Exact operator identity: factor * short == long."""
    factor, short, long_ = FACTOR_CHECKS[which]
    return factor().compose(short()) == long_()


# guessing -----------------------------------------------------------------

GUESS_MARGIN = 5
_CERT_PRIME = (1 << 61) - 1  # Mersenne prime, comfortably past any pivot


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Row-reduction rank of an integer matrix mod p (entries reduced here)."""
    mat = [[v % p for v in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [v * inv % p for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(v - f * w) % p for v, w in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _kernel_basis(rows: list[list[int]], ncols: int) -> list[list]:
    """Rational kernel basis of an exact integer matrix, via fraction-free
    style reduction with Fraction pivoting."""
    from fractions import Fraction
    mat = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [v / pv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(vec)
    return basis


def _coeff_vector_to_polys(vec, order: int, degree: int) -> tuple[Poly, ...]:
    den = 1
    for v in vec:
        den = lcm(den, v.denominator)
    ints = [int(v * den) for v in vec]
    polys = []
    for i in range(order + 1):
        polys.append(poly_trim(ints[i * (degree + 1): (i + 1) * (degree + 1)]))
    return tuple(polys)


@dataclass
class GuessOutcome:
    """Result of a bounded minimal-recurrence search."""

    found: PRecurrence | None
    order_degree: tuple[int, int] | None
    terms_used: int
    candidates_checked: int
    certified_absent: bool
    underdetermined: list[tuple[int, int]] = field(default_factory=list)
    elapsed_s: float = 0.0


def guess(values, max_order: int, max_degree: int) -> GuessOutcome:
    """Search (order, degree) lexicographically for the minimal recurrence
    fitting the data, or certify none exists within the bounds.

    For each candidate the rows are split: the last GUESS_MARGIN relations
    are held out, a rational kernel is computed from the rest, and the
    margin rows must also annihilate the kernel vector.  Absence at a
    candidate is certified by full column rank of the complete relation
    matrix modulo a 61-bit prime, which bounds the rational rank below.
    Candidates whose full system has fewer relations than unknowns prove
    nothing; if the scan ends with only those, the data was too short and
    UnderdeterminedError is raised.
    """
    values = [int(v) for v in values]
    t0 = time.perf_counter()
    underdetermined: list[tuple[int, int]] = []
    checked = 0
    for r in range(0, max_order + 1):
        nrows = len(values) - r
        for d in range(0, max_degree + 1):
            ncols = (r + 1) * (d + 1)
            checked += 1
            if nrows < ncols:
                underdetermined.append((r, d))
                continue
            rows = []
            for n in range(nrows):
                row = []
                for i in range(r + 1):
                    fv = values[n + i]
                    row.extend(fv * n ** e for e in range(d + 1))
                rows.append(row)
            if _rank_mod_p(rows, _CERT_PRIME) == ncols:
                continue  # full column rank: no rational fit exists
            fit_rows = rows[: max(nrows - GUESS_MARGIN, 0)]
            basis = _kernel_basis(fit_rows, ncols)
            if basis:
                constrained = [[sum(row[c] * vec[c] for c in range(ncols))
                                for vec in basis]
                               for row in rows[len(fit_rows):]]
                surviving = _kernel_basis(constrained, len(basis))
            else:
                surviving = []
            if not surviving:
                continue
            combo = surviving[0]
            vec = [sum(combo[b] * basis[b][c] for b in range(len(basis)))
                   for c in range(ncols)]
            polys = _coeff_vector_to_polys(vec, r, d)
            rec = PRecurrence(polys).normalized()
            if rec.first_failure(values) is not None:
                raise InconsistentDataError(
                    "kernel vector fails full data; guessing logic is wrong")
            return GuessOutcome(rec, (rec.order, rec.degree), len(values),
                                checked, False, underdetermined,
                                time.perf_counter() - t0)
    if underdetermined:
        raise UnderdeterminedError(
            f"no recurrence found and {len(underdetermined)} candidate "
            f"shapes had too few relations; supply more terms "
            f"(first short shape: {underdetermined[0]})")
    return GuessOutcome(None, None, len(values), checked, True, [],
                        time.perf_counter() - t0)


# bounded search experiment for the 4-noncrossing sequence -----------------

@dataclass
class SearchReport:
    """Outcome of the bounded recurrence search on walk-generated data."""

    terms: int
    max_order: int
    max_degree: int
    outcome: str
    candidates_checked: int
    brute_checked_upto: int
    generation_s: float
    search_s: float

    def summary(self) -> str:
        return (f"{self.terms} terms, bounds ({self.max_order},"
                f"{self.max_degree}): {self.outcome}; "
                f"{self.candidates_checked} candidate shapes, "
                f"data {self.generation_s:.1f}s, search {self.search_s:.1f}s")


def c4_recurrence_search(terms: int = 100, max_order: int = 8,
                         max_degree: int = 8,
                         brute_upto: int = 9) -> SearchReport:
    """Generate classical 4-noncrossing counts by lattice-walk transfer,
    cross-check a brute-force prefix, then run the bounded guess.

    A found recurrence is reported, not treated as an error; the expected
    outcome at the default bounds is that none exists.
    """
    from . import partitions, walks
    t0 = time.perf_counter()
    seq = walks.chamber_loop_counts(walks.VACILLATING, 3, terms - 1)
    gen_s = time.perf_counter() - t0
    for n in range(min(brute_upto, partitions.MAX_PARTITION_N) + 1):
        expect = partitions.count_avoiding(n, 4, partitions.CROSSING,
                                           enhanced=False)
        if seq[n] != expect:
            raise InconsistentDataError(
                f"walk data disagrees with brute force at n={n}: "
                f"{seq[n]} vs {expect}")
    t1 = time.perf_counter()
    outcome = guess(list(seq), max_order, max_degree)
    search_s = time.perf_counter() - t1
    if outcome.found is None:
        desc = "no recurrence within bounds (certified)"
    else:
        desc = f"found order {outcome.found.order} degree {outcome.found.degree}"
    return SearchReport(terms, max_order, max_degree, desc,
                        outcome.candidates_checked,
                        min(brute_upto, partitions.MAX_PARTITION_N),
                        gen_s, search_s)
