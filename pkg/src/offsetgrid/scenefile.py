"""Scene documents and radius arguments.

Scenes travel as JSON text.  Rational values may be written as integers,
as "p/q" strings, or as decimal literals; decimals are reinterpreted
exactly as p/10^k while parsing (never through binary floating point), so a
file round-trips to the identical scene.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Union

from .errors import RadiusError, SceneError
from .exactness import Rat, _num_den
from .geometry import (
    Ball,
    Point,
    PointPrim,
    Polyline,
    Primitive,
    Scene,
    Segment,
    as_rat,
)


def rat_str(value: Rat) -> Union[int, str]:
    """Canonical document form: a bare int when integral, else "p/q"."""
    n, d = _num_den(value)
    return n if d == 1 else f"{n}/{d}"


def _coerce_rat(value: Any, what: str) -> Rat:
    try:
        return as_rat(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SceneError(f"bad rational for {what}: {value!r}") from exc


def _coerce_point(value: Any, what: str) -> Point:
    if not isinstance(value, (list, tuple)) or not value:
        raise SceneError(f"{what} must be a nonempty coordinate list")
    return Point(tuple(_coerce_rat(c, what) for c in value))


def _primitive_from_doc(doc: Any, index: int) -> Primitive:
    if not isinstance(doc, dict) or "type" not in doc:
        raise SceneError(f"primitive {index} must be an object with a 'type'")
    kind = doc["type"]
    where = f"primitive {index} ({kind})"
    if kind == "point":
        return PointPrim(_coerce_point(doc.get("coords"), where))
    if kind == "segment":
        return Segment(
            _coerce_point(doc.get("a"), where), _coerce_point(doc.get("b"), where)
        )
    if kind == "polyline":
        pts = doc.get("points")
        if not isinstance(pts, list):
            raise SceneError(f"{where} needs a 'points' list")
        return Polyline(tuple(_coerce_point(p, where) for p in pts))
    if kind == "ball":
        return Ball(
            _coerce_point(doc.get("center"), where),
            _coerce_rat(doc.get("radius"), f"{where} radius"),
        )
    raise SceneError(f"unknown primitive type {kind!r} at index {index}")


def scene_from_document(doc: Any) -> Scene:
    if not isinstance(doc, dict):
        raise SceneError("scene document must be an object")
    if "dim" not in doc or not isinstance(doc["dim"], int):
        raise SceneError("scene document needs an integer 'dim'")
    prims = doc.get("primitives")
    if not isinstance(prims, list) or not prims:
        raise SceneError("scene document needs a nonempty 'primitives' list")
    primitives = tuple(_primitive_from_doc(p, i) for i, p in enumerate(prims))
    punctures = tuple(
        _coerce_point(p, f"puncture {i}") for i, p in enumerate(doc.get("punctures", []))
    )
    components = None
    if doc.get("components") is not None:
        raw = doc["components"]
        if not isinstance(raw, list) or not all(
            isinstance(g, list) and all(isinstance(i, int) for i in g) for g in raw
        ):
            raise SceneError("'components' must be a list of index lists")
        components = tuple(tuple(g) for g in raw)
    return Scene(doc["dim"], primitives, punctures, components)


def parse_scene(text: str) -> Scene:
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise SceneError(f"scene file is not valid JSON: {exc}") from exc
    return scene_from_document(doc)


def _point_doc(p: Point) -> list:
    return [rat_str(c) for c in p.coords]


def _primitive_doc(prim: Primitive) -> dict:
    if isinstance(prim, PointPrim):
        return {"type": "point", "coords": _point_doc(prim.p)}
    if isinstance(prim, Segment):
        return {"type": "segment", "a": _point_doc(prim.a), "b": _point_doc(prim.b)}
    if isinstance(prim, Polyline):
        return {"type": "polyline", "points": [_point_doc(p) for p in prim.pts]}
    if isinstance(prim, Ball):
        return {
            "type": "ball",
            "center": _point_doc(prim.center),
            "radius": rat_str(prim.radius),
        }
    raise TypeError(f"unknown primitive {type(prim).__name__}")


def scene_to_document(scene: Scene) -> dict:
    doc: dict = {
        "dim": scene.dim,
        "primitives": [_primitive_doc(p) for p in scene.primitives],
        "punctures": [_point_doc(p) for p in scene.punctures],
    }
    if scene.components is not None:
        doc["components"] = [list(g) for g in scene.components]
    return doc


def scene_to_text(scene: Scene, indent: int | None = None) -> str:
    separators = (",", ":") if indent is None else (",", ": ")
    return json.dumps(scene_to_document(scene), indent=indent, separators=separators)


_SQRT_FORM = re.compile(r"^\s*sqrt\(\s*(\d+)\s*\)\s*/\s*2\s*$")
_SQUARED_FORM = re.compile(r"^\s*r2\s*=\s*(.+?)\s*$")


def parse_radius(text: str) -> Rat:
    """Normalize a radius argument to its exact square.

    Accepted forms: a rational literal ("3/4", "0.5"), "sqrt(K)/2" with
    integer K, or the explicit squared form "r2=p/q".
    """
    if not isinstance(text, str):
        raise RadiusError("radius must be a string")
    m = _SQRT_FORM.match(text)
    if m:
        return Fraction(int(m.group(1)), 4)
    m = _SQUARED_FORM.match(text)
    if m:
        try:
            r2 = as_rat(m.group(1))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise RadiusError(f"bad squared radius {m.group(1)!r}") from exc
        if r2 < 0:
            raise RadiusError("squared radius must be nonnegative")
        return r2
    try:
        r = as_rat(text.strip())
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise RadiusError(
            f"bad radius {text!r}: expected a rational, sqrt(K)/2, or r2=p/q"
        ) from exc
    if r < 0:
        raise RadiusError("radius must be nonnegative")
    return r * r
