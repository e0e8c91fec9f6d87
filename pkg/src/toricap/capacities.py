"""The capacity sequence c_k of a toric domain.

Closed forms for the special families:

* ellipsoid: c_k is the k-th smallest positive-integer multiple among the
  finite axes, computed here as the least candidate L with
  sum_i floor(L / a_i) >= k;
* polydisk: c_k = k * min(areas);
* cylinder union: c_k = delta * (k + n - 1).

General regions use an exact branch-and-bound search over lattice vectors:

* convex region: minimize the support value over nonnegative integer
  vectors whose entries sum to k;
* concave region: maximize the anti-norm over strictly positive integer
  vectors whose entries sum to k + n - 1.

Ties are broken toward the lexicographically smallest optimizer so output
is reproducible.  ``capacity_sequence`` dispatches on the domain kind and
checks the result is nondecreasing in k.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

from .domains import (
    ConcaveToricDomain,
    ConvexToricDomain,
    Cube,
    CylinderUnion,
    Ellipsoid,
    Polydisk,
    ToricDomain,
)
from .errors import ToricapError, UnboundedDomainError
from .rationals import ExtendedRational, is_infinite, to_rational


class Branch(str, Enum):
    """Which formula produced a capacity value."""

    ELLIPSOID_SPECTRUM = "EllipsoidSpectrum"
    POLYDISK_CLOSED_FORM = "PolydiskClosedForm"
    CYLINDER_UNION_CLOSED_FORM = "CylinderUnionClosedForm"
    CONVEX_SEARCH = "ConvexSearch"
    CONCAVE_SEARCH = "ConcaveSearch"
    PRODUCT_COMBINATOR = "ProductCombinator"


@dataclass(frozen=True)
class CapacityResult:
    """One capacity value, with the optimizing vector when a search ran."""

    k: int
    value: Fraction
    witness: Optional[tuple[int, ...]]
    branch: Branch


@dataclass(frozen=True)
class CapacitySequence:
    """Capacities c_1 .. c_K of one domain (or of a product of domains)."""

    domain: Union[ToricDomain, str]
    values: tuple[CapacityResult, ...]

    @property
    def kmax(self) -> int:
        return len(self.values)

    def value(self, k: int) -> Fraction:
        if not 1 <= k <= self.kmax:
            raise ValueError(f"k={k} outside computed range 1..{self.kmax}")
        return self.values[k - 1].value

    def raw_values(self) -> list[Fraction]:
        return [r.value for r in self.values]


def _require_positive_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"capacity index k must be a positive integer, got {k}")


def ellipsoid_capacity(axes: Sequence[ExtendedRational], k: int) -> Fraction:
    """k-th smallest integer multiple among the finite axes.

    Uses the equivalent description min { L : sum_i floor(L/a_i) >= k },
    found by a per-axis binary search on the multiplier; infinite axes
    contribute no multiples at all.
    """
    _require_positive_k(k)
    normalized = [to_rational(a, allow_infinite=True) for a in axes]
    finite = [a for a in normalized if not is_infinite(a)]
    if not finite:
        raise UnboundedDomainError("every axis is infinite: the spectrum is empty")
    if any(a <= 0 for a in finite):
        raise ValueError("ellipsoid axes must be positive")

    def multiples_up_to(bound: Fraction) -> int:
        return sum(int(bound / a) for a in finite)

    a_min = min(finite)
    best: Optional[Fraction] = None
    for a in finite:
        # least m with multiples_up_to(m*a) >= k; since multiples_up_to(k*a_min)
        # is already >= k, the multiplier never needs to push m*a past k*a_min
        hi = int(math.ceil(k * a_min / a))
        lo = 1
        while lo < hi:
            mid = (lo + hi) // 2
            if multiples_up_to(mid * a) >= k:
                hi = mid
            else:
                lo = mid + 1
        candidate = lo * a
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best


def polydisk_capacity(areas: Sequence[object], k: int) -> Fraction:
    """c_k = k * min(areas)."""
    _require_positive_k(k)
    values = [to_rational(a) for a in areas]
    if not values or any(a <= 0 for a in values):
        raise ValueError("polydisk areas must be positive")
    return k * min(values)


def cylinder_union_capacity(n: int, delta: object, k: int) -> Fraction:
    """c_k = delta * (k + n - 1)."""
    _require_positive_k(k)
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n}")
    d = to_rational(delta)
    if d <= 0:
        raise ValueError("cylinder-union size must be positive")
    return d * (k + n - 1)


def convex_capacity(domain: ConvexToricDomain, k: int) -> CapacityResult:
    """Minimize the support value over v in N^n with sum(v) = k.

    Depth-first over compositions in lexicographic order, keeping running
    inner products with every generator.  A partial vector whose running
    max already reaches the incumbent is cut: the generators are
    coordinatewise nonnegative, so extending v can only increase every
    inner product.  Strict-improvement updates plus lexicographic
    enumeration make the reported witness the lexicographically smallest
    minimizer.
    """
    _require_positive_k(k)
    denom, rows = domain._scaled
    n, m = domain.n, len(rows)
    cols = list(zip(*rows))

    best: Optional[int] = None
    best_witness: Optional[tuple[int, ...]] = None
    prefix = [0] * n

    def descend(coord: int, remaining: int, dots: list[int]) -> None:
        nonlocal best, best_witness
        column = cols[coord]
        if coord == n - 1:
            prefix[coord] = remaining
            value = max(d + remaining * c for d, c in zip(dots, column))
            if best is None or value < best:
                best = value
                best_witness = tuple(prefix)
            return
        current = dots
        for entry in range(remaining + 1):
            if best is not None and max(current) >= best:
                return  # larger entries only grow every inner product
            prefix[coord] = entry
            descend(coord + 1, remaining - entry, current)
            if entry < remaining:
                current = [d + c for d, c in zip(current, column)]

    descend(0, k, [0] * m)
    assert best is not None and best_witness is not None
    return CapacityResult(
        k=k, value=Fraction(best, denom), witness=best_witness, branch=Branch.CONVEX_SEARCH
    )


def concave_capacity(domain: ConcaveToricDomain, k: int) -> CapacityResult:
    """Maximize the anti-norm over v > 0 with sum(v) = k + n - 1.

    Same depth-first scheme as the convex search.  The cut uses, per
    vertex w, the bound <v_partial, w> + r * max_i(w_i) on the final inner
    product, where r is the budget still to distribute; the min of these
    bounds caps the achievable anti-norm, so a partial vector whose cap
    does not exceed the incumbent is dropped.
    """
    _require_positive_k(k)
    denom, rows = domain._scaled
    n, m = domain.n, len(rows)
    cols = list(zip(*rows))
    row_max = [max(row) for row in rows]
    total = k + n - 1

    best: Optional[int] = None
    best_witness: Optional[tuple[int, ...]] = None
    prefix = [0] * n

    def descend(coord: int, remaining: int, dots: list[int]) -> None:
        nonlocal best, best_witness
        column = cols[coord]
        if coord == n - 1:
            prefix[coord] = remaining
            value = min(d + remaining * c for d, c in zip(dots, column))
            if best is None or value > best:
                best = value
                best_witness = tuple(prefix)
            return
        highest = remaining - (n - 1 - coord)  # leave at least 1 per later coord
        current = [d + c for d, c in zip(dots, column)]
        for entry in range(1, highest + 1):
            budget = remaining - entry
            if best is None or min(
                d + budget * w for d, w in zip(current, row_max)
            ) > best:
                prefix[coord] = entry
                descend(coord + 1, budget, current)
            if entry < highest:
                current = [d + c for d, c in zip(current, column)]

    descend(0, total, [0] * m)
    assert best is not None and best_witness is not None
    return CapacityResult(
        k=k,
        value=Fraction(best, denom),
        witness=best_witness,
        branch=Branch.CONCAVE_SEARCH,
    )


def capacity_at(domain: ToricDomain, k: int) -> CapacityResult:
    """c_k of a single domain, dispatching to the right formula."""
    if isinstance(domain, Ellipsoid):
        return CapacityResult(
            k, ellipsoid_capacity(domain.axes, k), None, Branch.ELLIPSOID_SPECTRUM
        )
    if isinstance(domain, Polydisk):
        return CapacityResult(
            k, polydisk_capacity(domain.areas, k), None, Branch.POLYDISK_CLOSED_FORM
        )
    if isinstance(domain, Cube):
        return CapacityResult(
            k,
            polydisk_capacity((domain.delta,) * domain.n, k),
            None,
            Branch.POLYDISK_CLOSED_FORM,
        )
    if isinstance(domain, CylinderUnion):
        return CapacityResult(
            k,
            cylinder_union_capacity(domain.n, domain.delta, k),
            None,
            Branch.CYLINDER_UNION_CLOSED_FORM,
        )
    if isinstance(domain, ConvexToricDomain):
        return convex_capacity(domain, k)
    if isinstance(domain, ConcaveToricDomain):
        return concave_capacity(domain, k)
    raise TypeError(f"not a toric domain: {type(domain).__name__}")


def _check_nondecreasing(results: Sequence[CapacityResult]) -> None:
    for earlier, later in zip(results, results[1:]):
        if earlier.value > later.value:
            raise ToricapError(
                f"internal error: capacity sequence decreased at k={later.k}"
            )


def capacity_sequence(
    domain: ToricDomain, kmax: int, threads: Optional[int] = None
) -> CapacitySequence:
    """c_1 .. c_kmax of the domain.

    ``threads`` > 1 evaluates the independent k values of a search-based
    domain concurrently; order and results are identical either way.
    """
    if not isinstance(kmax, int) or kmax < 1:
        raise ValueError(f"kmax must be a positive integer, got {kmax}")
    indices = range(1, kmax + 1)
    searched = isinstance(domain, (ConvexToricDomain, ConcaveToricDomain))
    if threads is not None and threads > 1 and searched:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda k: capacity_at(domain, k), indices))
    else:
        results = [capacity_at(domain, k) for k in indices]
    _check_nondecreasing(results)
    return CapacitySequence(domain=domain, values=tuple(results))


def product_capacities(
    left: CapacitySequence, right: CapacitySequence, kmax: int
) -> CapacitySequence:
    """Capacities of the symplectic product: c_k = min over i+j=k of c_i + c'_j.

    The index 0 terms are taken to be 0, so each factor's own c_k is always
    among the candidates.
    """
    if not isinstance(kmax, int) or kmax < 1:
        raise ValueError(f"kmax must be a positive integer, got {kmax}")
    if left.kmax < kmax or right.kmax < kmax:
        raise ValueError(
            f"need both factors computed to index {kmax}, "
            f"got {left.kmax} and {right.kmax}"
        )
    lv = [Fraction(0)] + left.raw_values()
    rv = [Fraction(0)] + right.raw_values()
    results = tuple(
        CapacityResult(
            k,
            min(lv[i] + rv[k - i] for i in range(k + 1)),
            None,
            Branch.PRODUCT_COMBINATOR,
        )
        for k in range(1, kmax + 1)
    )
    _check_nondecreasing(results)
    label = f"({left.domain}) x ({right.domain})"
    return CapacitySequence(domain=label, values=results)
