"""The slope c_k/k converges to the cube capacity.

Every compact convex or concave toric domain is squeezed between a cube
and a cylinder union of the same diagonal size delta, which forces
delta <= c_k/k <= delta*(k+n-1)/k.  Watching the estimate approach the
exact limit is a good end-to-end confidence check, since the two sides are
computed by completely different code paths (a lattice search vs a small
exact linear program).
"""

from fractions import Fraction

from toricap import (
    ConcaveToricDomain,
    Ellipsoid,
    asymptotic_slope,
    format_rational,
)

domains = [
    Ellipsoid((1, 2)),
    ConcaveToricDomain(((2, Fraction(1, 2)), (1, 1), (Fraction(1, 2), 2))),
]

for domain in domains:
    print(domain)
    for kmax in (1, 2, 5, 10, 25, 60):
        report = asymptotic_slope(domain, kmax)
        gap = report.estimate - report.exact
        print(
            f"  K={kmax:>3}  c_K/K = {format_rational(report.estimate):>8}"
            f"  (limit {format_rational(report.exact)},"
            f" gap {format_rational(gap)},"
            f" bracket width {format_rational(report.upper - report.lower)})"
        )
    print()
