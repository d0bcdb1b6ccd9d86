"""Arc statistics on small partitions, by direct enumeration.

Shows the standard representation, the two statistics in both regimes,
the three witness partitions, and the crossing/nesting symmetry table.
"""

from crossnest import partitions


def show(compact: str) -> None:
    p = partitions.SetPartition.from_compact(compact)
    plain = partitions.standard_arcs(p)
    loops = partitions.standard_arcs(p, enhanced=True)
    print(f"  {compact:<10}  arcs {plain.arcs}")
    print(f"{'':12}  crossing {partitions.max_crossing(plain, 'crossing')}"
          f"  nesting {partitions.max_crossing(plain, 'nesting')}"
          f"  enhanced crossing {partitions.max_crossing(loops, 'crossing')}"
          f"  enhanced nesting {partitions.max_crossing(loops, 'nesting')}")


def main() -> None:
    print("witness partitions")
    show("135-24")    # enhanced 3-crossing, no plain 3-crossing
    show("15-24-3")   # enhanced 3-nesting, no plain 3-nesting
    show("14-25-36")  # the only partition of [6] with a 3-crossing

    heavy = [p for p in partitions.enumerate_partitions(6)
             if partitions.max_crossing(partitions.standard_arcs(p),
                                        "crossing") >= 3]
    print(f"partitions of [6] with a 3-crossing: "
          f"{[p.compact() for p in heavy]}")

    print("\ncrossing count == nesting count, n = 0..8, k = 2..4:")
    for enhanced in (False, True):
        label = "enhanced " if enhanced else "classical"
        for k in (2, 3, 4):
            row = []
            for n in range(9):
                c = partitions.count_avoiding(n, k, "crossing",
                                              enhanced=enhanced)
                d = partitions.count_avoiding(n, k, "nesting",
                                              enhanced=enhanced)
                assert c == d
                row.append(c)
            print(f"  {label} k={k}: {row}")


if __name__ == "__main__":
    main()
