"""Recurrence rediscovery and the bounded negative search.

Guessing finds the short recurrences from 15 exact terms.  The same
machinery, pointed at the 4-noncrossing sequence, certifies that no
recurrence exists within the searched bounds.
"""

from crossnest import recurrences
from crossnest.closedforms import c3_closed, e3_closed


def main() -> None:
    for name, fn in (("classical", c3_closed), ("enhanced", e3_closed)):
        data = [fn(n) for n in range(15)]
        out = recurrences.guess(data, 2, 2)
        print(f"{name}, 15 terms, bounds (2,2): "
              f"found in {out.elapsed_s * 1000:.1f} ms")
        print(f"  {out.found.describe()}")

    print("\noperator factorizations (exact):")
    for which in sorted(recurrences.FACTOR_CHECKS):
        print(f"  {which}: factor * short == long: "
              f"{recurrences.factor_check(which)}")

    print("\nbounded search on 4-noncrossing data:")
    report = recurrences.c4_recurrence_search(terms=60, max_order=5,
                                              max_degree=5)
    print(f"  {report.summary()}")


if __name__ == "__main__":
    main()
