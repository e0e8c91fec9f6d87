"""Using capacities to rule out symplectic embeddings.

Capacities are monotone under symplectic embeddings, so any index k with
c_k(source) > c_k(target) proves the source cannot embed.  The classical
example below: the unit cube embeds into the union of two unit cylinders
(it is literally a subset), but shrink the cylinders by any factor and
some capacity eventually objects -- at 9/10 the objection appears at k=10.
"""

from fractions import Fraction

from toricap import Cube, CylinderUnion, cube_capacity, format_rational, obstruct

box = Cube(2, 1)

for shrink in (Fraction(1), Fraction(9, 10), Fraction(2, 3)):
    target = CylinderUnion(2, shrink)
    report = obstruct(box, target, 20)
    verdict = (
        f"violation at k={report.first_violation}"
        if report.first_violation
        else f"no violation up to k={report.kmax}"
    )
    print(f"{box} -> {target}:  {verdict}")

print()
print("Rows near the first violation for the 9/10 target:")
report = obstruct(box, CylinderUnion(2, Fraction(9, 10)), 12)
for k, src, tgt in report.rows[7:]:
    mark = "  <-- source capacity exceeds target" if src > tgt else ""
    print(f"  k={k:>2}  {format_rational(src):>3} vs {format_rational(tgt):>6}{mark}")

print()
print("The cube capacity packages the same idea as a single number:")
for domain in (box, CylinderUnion(2, Fraction(9, 10))):
    print(f"  largest cube inside {domain}: {format_rational(cube_capacity(domain))}")
