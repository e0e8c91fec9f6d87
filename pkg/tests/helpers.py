"""Random instance generators shared by the test modules.

Everything takes an explicit ``random.Random`` so each test controls its
own seed; coordinates stay small to keep exact arithmetic fast.
"""

from __future__ import annotations

import random
from fractions import Fraction

from toricap import ConcaveToricDomain, ConvexToricDomain


def random_fraction(
    rng: random.Random, lo: int = 0, hi: int = 8, max_den: int = 6
) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_positive_fraction(rng: random.Random, hi: int = 8, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(1, hi), rng.randint(1, max_den))


def random_axes(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(random_positive_fraction(rng) for _ in range(n))


def random_point(rng: random.Random, n: int, positive: bool = False) -> tuple[Fraction, ...]:
    lo = 1 if positive else 0
    return tuple(random_fraction(rng, lo=lo) for _ in range(n))


def random_convex(
    rng: random.Random, n: int | None = None, max_n: int = 4, max_points: int = 6
) -> ConvexToricDomain:
    """Random generator set; one strictly positive generator keeps the
    diagonal intersection (hence the cube capacity) positive."""
    if n is None:
        n = rng.randint(1, max_n)
    count = rng.randint(1, max_points)
    points = [random_point(rng, n, positive=True)]
    points += [random_point(rng, n) for _ in range(count - 1)]
    return ConvexToricDomain(tuple(points))


def random_concave(
    rng: random.Random, n: int | None = None, max_n: int = 4, max_points: int = 6
) -> ConcaveToricDomain:
    """Random staircase vertices, none at the origin (origin vertices
    collapse the whole region to capacity zero)."""
    if n is None:
        n = rng.randint(1, max_n)
    count = rng.randint(1, max_points)
    points = []
    for _ in range(count):
        p = random_point(rng, n)
        while all(c == 0 for c in p):
            p = random_point(rng, n)
        points.append(p)
    return ConcaveToricDomain(tuple(points))


def grow_convex(rng: random.Random, domain: ConvexToricDomain) -> ConvexToricDomain:
    """A convex domain whose region contains the given one (extra generators)."""
    extra = [random_point(rng, domain.n) for _ in range(rng.randint(1, 3))]
    return ConvexToricDomain(domain.generators + tuple(extra))


def grow_concave(rng: random.Random, domain: ConcaveToricDomain) -> ConcaveToricDomain:
    """A concave domain containing the given one (every vertex shifted up)."""
    shifted = tuple(
        tuple(c + random_fraction(rng, lo=0, hi=3) for c in row)
        for row in domain.vertices
    )
    return ConcaveToricDomain(shifted)
