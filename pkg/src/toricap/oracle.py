"""Deliberately naive reference computations.

These re-evaluate the same formulas as the engine by exhaustive
enumeration, with no pruning and no shortcuts, so the test suite (and the
CLI's ``--oracle`` flag) can cross-check the fast paths against them.  A
configurable cap keeps an accidental huge enumeration from running for
hours.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .domains import (
    ConcaveToricDomain,
    ConvexToricDomain,
    Cube,
    CylinderUnion,
    Ellipsoid,
    Polydisk,
    ToricDomain,
    antinorm_value,
    support_value,
)
from .errors import EnumerationCapExceeded, UnboundedDomainError
from .rationals import ExtendedRational, is_infinite, to_rational

DEFAULT_ENUMERATION_CAP = 10**7


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative ints summing to `total`, in lex order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def _check_cap(count: int, cap: int) -> None:
    if count > cap:
        raise EnumerationCapExceeded(
            f"{count} compositions exceed the enumeration cap of {cap}"
        )


def brute_convex_capacity(
    domain: ConvexToricDomain, k: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Fraction:
    """Min support value over every composition of k, no pruning."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    n = domain.n
    _check_cap(comb(k + n - 1, n - 1), cap)
    return min(support_value(domain, v) for v in compositions(k, n))


def brute_concave_capacity(
    domain: ConcaveToricDomain, k: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Fraction:
    """Max anti-norm over every strictly positive composition of k+n-1."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    n = domain.n
    _check_cap(comb(k + n - 2, n - 1), cap)
    shifted = (
        tuple(e + 1 for e in v) for v in compositions(k - 1, n)
    )  # strictly positive, sum k+n-1
    return max(antinorm_value(domain, v) for v in shifted)


def brute_ellipsoid_capacity(axes: Sequence[ExtendedRational], k: int) -> Fraction:
    """k-th element of the sorted merge of the first k multiples of each axis."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    finite = [
        to_rational(a, allow_infinite=True)
        for a in axes
        if not is_infinite(to_rational(a, allow_infinite=True))
    ]
    if not finite:
        raise UnboundedDomainError("every axis is infinite: the spectrum is empty")
    merged = sorted(m * a for a in finite for m in range(1, k + 1))
    return merged[k - 1]


def brute_capacity(
    domain: ToricDomain, k: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Fraction:
    """Oracle value of c_k for any domain kind.

    The closed-form families are rerouted through the enumerative paths:
    polydisks and cubes through their single-generator hull form, the
    cylinder union through the one-vertex staircase whose anti-norm is
    delta * sum(v).
    """
    if isinstance(domain, Ellipsoid):
        return brute_ellipsoid_capacity(domain.axes, k)
    if isinstance(domain, Polydisk):
        return brute_convex_capacity(domain.to_convex(), k, cap)
    if isinstance(domain, Cube):
        return brute_convex_capacity(domain.to_polydisk().to_convex(), k, cap)
    if isinstance(domain, CylinderUnion):
        point = ConcaveToricDomain(((domain.delta,) * domain.n,))
        return brute_concave_capacity(point, k, cap)
    if isinstance(domain, ConvexToricDomain):
        return brute_convex_capacity(domain, k, cap)
    if isinstance(domain, ConcaveToricDomain):
        return brute_concave_capacity(domain, k, cap)
    raise TypeError(f"not a toric domain: {type(domain).__name__}")
