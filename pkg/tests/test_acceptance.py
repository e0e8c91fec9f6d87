"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
All assertions are exact; every randomized batch is seeded for
reproducibility.
"""

import random
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian

from toricap import (
    ConcaveToricDomain,
    Cube,
    CylinderUnion,
    Ellipsoid,
    Polydisk,
    antinorm_value,
    brute_concave_capacity,
    brute_convex_capacity,
    brute_ellipsoid_capacity,
    capacity_at,
    capacity_sequence,
    concave_capacity,
    convex_capacity,
    cube_capacity,
    cylinder_union_capacity,
    ellipsoid_capacity,
    gromov_width,
    obstruct,
    polydisk_capacity,
    product_capacities,
    scale_domain,
    support_value,
)
from toricap.oracle import compositions
from helpers import (
    grow_concave,
    grow_convex,
    random_axes,
    random_concave,
    random_convex,
    random_positive_fraction,
)

F = Fraction


@contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {label}: FAIL")
        raise
    print(f"ACCEPTANCE {label}: PASS")


@lru_cache(maxsize=1)
def ellipsoid_tuples():
    """The 200 random axis tuples shared by criteria 1-3."""
    rng = random.Random(20260811)
    return tuple(random_axes(rng, rng.randint(1, 4)) for _ in range(200))


def test_c01_ellipsoid_spectrum_matches_brute_merge():
    with criterion("C01 ellipsoid spectrum equals brute multiple-merge"):
        for axes in ellipsoid_tuples():
            for k in range(1, 51):
                assert ellipsoid_capacity(axes, k) == brute_ellipsoid_capacity(axes, k)


def test_c02_convex_search_recovers_the_spectrum():
    with criterion("C02 convex search on the simplex form equals the spectrum"):
        for axes in ellipsoid_tuples():
            if len(axes) > 3:
                continue
            d = Ellipsoid(axes).to_convex()
            for k in range(1, 31):
                assert convex_capacity(d, k).value == ellipsoid_capacity(axes, k)


def test_c03_concave_search_recovers_the_spectrum():
    with criterion("C03 concave search on the simplex form equals the spectrum"):
        for axes in ellipsoid_tuples():
            if len(axes) > 3:
                continue
            d = Ellipsoid(axes).to_concave()
            for k in range(1, 31):
                assert concave_capacity(d, k).value == ellipsoid_capacity(axes, k)


def test_c04_polydisk_closed_form():
    with criterion("C04 polydisk sequence is k * min(areas)"):
        rng = random.Random(404)
        for _ in range(100):
            areas = random_axes(rng, rng.randint(1, 4))
            seq = capacity_sequence(Polydisk(areas), 40)
            for k in range(1, 41):
                assert seq.value(k) == k * min(areas)


def _truncated_staircase(n, delta, radius):
    """Staircase vertices of the cylinder union clipped at ``radius``."""
    verts = [
        v for v in cartesian((delta, radius), repeat=n) if any(c == delta for c in v)
    ]
    return ConcaveToricDomain(tuple(verts))


def test_c05_cylinder_union_formula_and_staircase():
    with criterion("C05 cylinder-union closed form and its truncated staircase"):
        rng = random.Random(505)
        for _ in range(50):
            n, k = rng.randint(1, 4), rng.randint(1, 20)
            delta = random_positive_fraction(rng)
            assert cylinder_union_capacity(n, delta, k) == delta * (k + n - 1)
        kmax = 20
        for n in (2, 3):
            for _ in range(5):
                delta = random_positive_fraction(rng)
                stair = _truncated_staircase(n, delta, kmax * delta)
                for k in range(1, kmax + 1):
                    assert concave_capacity(stair, k).value == delta * (k + n - 1)


def test_c06_cube_capacity_sandwich():
    with criterion("C06 cube-capacity sandwich and cube embedding check"):
        rng = random.Random(606)
        domains = [random_convex(rng, max_points=5) for _ in range(100)]
        domains += [random_concave(rng, max_points=5) for _ in range(100)]
        for d in domains:
            delta = cube_capacity(d)
            assert delta > 0
            report = obstruct(Cube(d.n, delta), d, 25)
            assert report.first_violation is None  # k*delta <= c_k(d)
            for k, _, ck in report.rows:
                assert ck <= (k + d.n - 1) * delta


def test_c07_obstruction_reproduction():
    with criterion("C07 cube vs cylinder-union obstruction reports"):
        assert obstruct(Cube(2, 1), CylinderUnion(2, F(9, 10)), 12).first_violation == 10
        rng = random.Random(707)
        for _ in range(20):
            n = rng.randint(1, 4)
            delta = random_positive_fraction(rng)
            shrink = F(rng.randint(1, 10), 10)
            report = obstruct(Cube(n, shrink * delta), CylinderUnion(n, delta), 100)
            assert report.first_violation is None


def test_c08_gromov_width():
    with criterion("C08 Gromov width: first capacity, min axis for ellipsoids"):
        rng = random.Random(808)
        for _ in range(100):
            d = random_concave(rng)
            width = gromov_width(d)
            assert width == capacity_sequence(d, 1).value(1)
            assert width == antinorm_value(d, (1,) * d.n)
        for _ in range(25):
            axes = random_axes(rng, rng.randint(1, 4))
            assert gromov_width(Ellipsoid(axes).to_concave()) == min(axes)


def _random_mixed_domain(rng):
    kind = rng.randrange(6)
    if kind == 0:
        return Ellipsoid(random_axes(rng, rng.randint(1, 3)))
    if kind == 1:
        return Polydisk(random_axes(rng, rng.randint(1, 3)))
    if kind == 2:
        return Cube(rng.randint(1, 3), random_positive_fraction(rng))
    if kind == 3:
        return CylinderUnion(rng.randint(1, 3), random_positive_fraction(rng))
    if kind == 4:
        return random_convex(rng, max_n=3, max_points=4)
    return random_concave(rng, max_n=3, max_points=4)


def test_c09_axiom_property_suite():
    with criterion("C09 increasing / scaling / monotonicity axioms"):
        rng = random.Random(909)
        for _ in range(500):  # Increasing
            values = capacity_sequence(_random_mixed_domain(rng), 6).raw_values()
            assert all(a <= b for a, b in zip(values, values[1:]))
        for _ in range(500):  # Scaling
            d = _random_mixed_domain(rng)
            s = random_positive_fraction(rng)
            base = capacity_sequence(d, 5).raw_values()
            scaled = capacity_sequence(scale_domain(d, s), 5).raw_values()
            assert scaled == [s * v for v in base]
        for _ in range(500):  # Monotonicity under containment
            if rng.random() < 0.5:
                small = random_convex(rng, max_n=3, max_points=4)
                large = grow_convex(rng, small)
            else:
                small = random_concave(rng, max_n=3, max_points=4)
                large = grow_concave(rng, small)
            a = capacity_sequence(small, 5).raw_values()
            b = capacity_sequence(large, 5).raw_values()
            assert all(x <= y for x, y in zip(a, b))


def _lex_first_convex_optimum(d, k, value):
    return next(
        v for v in compositions(k, d.n) if support_value(d, v) == value
    )


def _lex_first_concave_optimum(d, k, value):
    return next(
        v
        for v in (tuple(e + 1 for e in u) for u in compositions(k - 1, d.n))
        if antinorm_value(d, v) == value
    )


def test_c10_oracle_equivalence_and_witnesses():
    with criterion("C10 pruned searches equal brute force; witnesses validate"):
        rng = random.Random(1010)
        for _ in range(150):
            d = random_convex(rng, max_points=6)
            k = rng.randint(1, 12)
            result = convex_capacity(d, k)
            assert result.value == brute_convex_capacity(d, k)
            assert sum(result.witness) == k and all(e >= 0 for e in result.witness)
            assert support_value(d, result.witness) == result.value
            assert result.witness == _lex_first_convex_optimum(d, k, result.value)
        for _ in range(150):
            d = random_concave(rng, max_points=6)
            k = rng.randint(1, 12)
            result = concave_capacity(d, k)
            assert result.value == brute_concave_capacity(d, k)
            assert sum(result.witness) == k + d.n - 1
            assert all(e >= 1 for e in result.witness)
            assert antinorm_value(d, result.witness) == result.value
            assert result.witness == _lex_first_concave_optimum(d, k, result.value)


def test_c11_product_of_disks_is_the_polydisk():
    with criterion("C11 n-fold disk product equals the polydisk closed form"):
        rng = random.Random(1111)
        kmax = 30
        for n in (1, 2, 3, 4):
            for _ in range(5):
                areas = random_axes(rng, n)
                combined = capacity_sequence(Ellipsoid((areas[0],)), kmax)
                for a in areas[1:]:
                    disk = capacity_sequence(Ellipsoid((a,)), kmax)
                    combined = product_capacities(combined, disk, kmax)
                for k in range(1, kmax + 1):
                    assert combined.value(k) == polydisk_capacity(areas, k)


def test_c12_asymptotic_slope_bracketing():
    with criterion("C12 c_K/K within the cube-capacity bracket"):
        rng = random.Random(1212)
        cases = []
        for _ in range(25):  # closed-form families, deep K
            kind = rng.randrange(3)
            if kind == 0:
                cases.append((Ellipsoid(random_axes(rng, rng.randint(1, 4))), 200))
            elif kind == 1:
                cases.append((Polydisk(random_axes(rng, rng.randint(1, 4))), 200))
            else:
                cases.append((Cube(rng.randint(1, 4), random_positive_fraction(rng)), 200))
        for _ in range(25):  # search-based, shallower K
            if rng.random() < 0.5:
                cases.append((random_convex(rng, max_points=5), 40))
            else:
                cases.append((random_concave(rng, max_points=5), 40))
        for domain, kmax in cases:
            delta = cube_capacity(domain)
            estimate = capacity_at(domain, kmax).value / kmax
            assert abs(estimate - delta) <= delta * (domain.n - 1) / kmax
