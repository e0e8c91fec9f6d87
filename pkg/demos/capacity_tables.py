"""Capacity spectra of the classical families, side by side.

The ellipsoid spectrum merges the integer multiples of its axes, the
polydisk grows linearly in its smallest factor, and the cylinder union
starts offset by the dimension.  Everything is exact.
"""

from fractions import Fraction

from toricap import (
    CylinderUnion,
    Ellipsoid,
    Polydisk,
    capacity_sequence,
    format_rational,
)

KMAX = 12

domains = [
    Ellipsoid((1, 2)),
    Ellipsoid((1, Fraction(5, 2))),
    Ellipsoid((1, "inf")),          # a symplectic cylinder
    Polydisk((1, 2)),
    Polydisk((Fraction(3, 2), Fraction(3, 2))),
    CylinderUnion(2, 1),
    CylinderUnion(3, Fraction(1, 2)),
]

header = ["k"] + [str(d) for d in domains]
columns = [[format_rational(v) for v in capacity_sequence(d, KMAX).raw_values()] for d in domains]

widths = [max(len(h), *(len(col[i]) for i in range(KMAX))) if i > 0 else 3
          for i, (h, col) in enumerate(zip(header, [None] + columns))]
widths[0] = max(len("k"), len(str(KMAX)))

print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
for k in range(1, KMAX + 1):
    row = [str(k)] + [col[k - 1] for col in columns]
    print("  ".join(c.ljust(w) for c, w in zip(row, widths)))

print()
print("Note how E(1, 2) repeats values where multiples of the two axes tie,")
print("while P(1, 2) is simply k times the smaller factor.")
