"""The domain-spec file format: JSON syntax, exact rational content.

Rationals travel as ``"p/q"`` strings or plain JSON integers; anything
with a decimal point or exponent is rejected so nothing ever rounds.
``"inf"`` is accepted only for ellipsoid axes.  Examples::

    {"type": "ellipsoid", "a": ["1", "2"]}
    {"type": "ellipsoid", "a": ["1", "inf"]}
    {"type": "polydisk", "a": ["2", "3"]}
    {"type": "cube", "n": 2, "delta": "1"}
    {"type": "cylinder_union", "n": 2, "delta": "9/10"}
    {"type": "convex", "generators": [["1", "0"], ["0", "2"]]}
    {"type": "concave", "sigma": [["1", "0"], ["0", "2"]]}

Syntax errors report line and column; semantic errors report the offending
field path.  ``parse_domain(render_domain(d))`` returns a domain equal to
``d``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .domains import (
    ConcaveToricDomain,
    ConvexToricDomain,
    Cube,
    CylinderUnion,
    Ellipsoid,
    Polydisk,
    ToricDomain,
)
from .errors import DimensionMismatch, DomainFormatError
from .rationals import ExtendedRational, format_rational, to_rational


def _rational_field(raw: object, path: str, allow_infinite: bool = False) -> ExtendedRational:
    try:
        return to_rational(raw, allow_infinite=allow_infinite)
    except (TypeError, ValueError) as exc:
        raise DomainFormatError(f"{path}: {exc}") from None


def _rational_list(raw: object, path: str, allow_infinite: bool = False) -> list:
    if not isinstance(raw, list) or not raw:
        raise DomainFormatError(f"{path}: expected a nonempty list")
    return [
        _rational_field(item, f"{path}[{i}]", allow_infinite=allow_infinite)
        for i, item in enumerate(raw)
    ]


def _point_list(raw: object, path: str) -> list[tuple[Fraction, ...]]:
    if not isinstance(raw, list) or not raw:
        raise DomainFormatError(f"{path}: expected a nonempty list of points")
    points = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or not row:
            raise DomainFormatError(f"{path}[{i}]: expected a nonempty coordinate list")
        points.append(tuple(_rational_field(c, f"{path}[{i}][{j}]") for j, c in enumerate(row)))
    return points


def _dimension_field(raw: object, path: str) -> int:
    if not isinstance(raw, int) or isinstance(raw, bool) or raw < 1:
        raise DomainFormatError(f"{path}: expected a positive integer dimension")
    return raw


def parse_domain(text: str) -> ToricDomain:
    """Parse a domain-spec document into a domain value."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainFormatError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(data, dict):
        raise DomainFormatError("top level: expected a JSON object")
    kind = data.get("type")
    if not isinstance(kind, str):
        raise DomainFormatError("type: missing or not a string")
    try:
        if kind == "ellipsoid":
            return Ellipsoid(tuple(_rational_list(data.get("a"), "a", allow_infinite=True)))
        if kind == "polydisk":
            return Polydisk(tuple(_rational_list(data.get("a"), "a")))
        if kind == "cube":
            return Cube(
                _dimension_field(data.get("n"), "n"),
                _rational_field(data.get("delta"), "delta"),
            )
        if kind == "cylinder_union":
            return CylinderUnion(
                _dimension_field(data.get("n"), "n"),
                _rational_field(data.get("delta"), "delta"),
            )
        if kind == "convex":
            return ConvexToricDomain(tuple(_point_list(data.get("generators"), "generators")))
        if kind == "concave":
            return ConcaveToricDomain(tuple(_point_list(data.get("sigma"), "sigma")))
    except DomainFormatError:
        raise
    except (ValueError, TypeError, DimensionMismatch) as exc:
        raise DomainFormatError(f"{kind}: {exc}") from None
    raise DomainFormatError(
        f"type: unknown domain type {kind!r} (expected ellipsoid, polydisk, cube, "
        "cylinder_union, convex, or concave)"
    )


def domain_to_jsonable(domain: ToricDomain) -> dict:
    """The JSON-ready dict form of a domain."""
    if isinstance(domain, Ellipsoid):
        return {"type": "ellipsoid", "a": [format_rational(a) for a in domain.axes]}
    if isinstance(domain, Polydisk):
        return {"type": "polydisk", "a": [format_rational(a) for a in domain.areas]}
    if isinstance(domain, Cube):
        return {"type": "cube", "n": domain.n, "delta": format_rational(domain.delta)}
    if isinstance(domain, CylinderUnion):
        return {
            "type": "cylinder_union",
            "n": domain.n,
            "delta": format_rational(domain.delta),
        }
    if isinstance(domain, ConvexToricDomain):
        return {
            "type": "convex",
            "generators": [[format_rational(c) for c in row] for row in domain.generators],
        }
    if isinstance(domain, ConcaveToricDomain):
        return {
            "type": "concave",
            "sigma": [[format_rational(c) for c in row] for row in domain.vertices],
        }
    raise TypeError(f"not a toric domain: {type(domain).__name__}")


def render_domain(domain: ToricDomain) -> str:
    """Serialize a domain back to spec-file text (inverse of parse_domain)."""
    return json.dumps(domain_to_jsonable(domain), indent=2) + "\n"


def load_domain(path: str) -> ToricDomain:
    """Read and parse a domain-spec file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise DomainFormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_domain(text)
