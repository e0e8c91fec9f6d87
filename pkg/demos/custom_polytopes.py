"""Capacities of hand-drawn convex and concave regions, with witnesses.

A convex region is entered as generator points (the region is everything
below their convex hull in the orthant); a concave region as the vertices
of its staircase boundary.  The search reports which lattice vector
realizes each capacity.
"""

from fractions import Fraction

from toricap import (
    ConcaveToricDomain,
    ConvexToricDomain,
    brute_capacity,
    capacity_sequence,
    format_rational,
)

half = Fraction(1, 2)

# a convex "rounded triangle": the hull of a simplex plus a bulge point
convex = ConvexToricDomain(((2, 0), (Fraction(3, 2), 1), (0, 2)))

# a concave staircase cut from the square of side 2
concave = ConcaveToricDomain(((2, half), (1, 1), (half, 2)))

for domain in (convex, concave):
    print(domain)
    print(f"  {'k':>2}  {'c_k':>6}  {'witness':>10}  oracle")
    for result in capacity_sequence(domain, 8).values:
        check = brute_capacity(domain, result.k)
        assert check == result.value
        witness = ",".join(str(e) for e in result.witness)
        print(
            f"  {result.k:>2}  {format_rational(result.value):>6}  "
            f"({witness:>8})  {format_rational(check)}"
        )
    print()

print("The oracle column re-derives every value by exhaustive enumeration;")
print("the pruned search must agree with it exactly.")
