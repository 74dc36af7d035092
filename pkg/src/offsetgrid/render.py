"""SVG rendering of two-dimensional scenes with their offset regions.

The offset region is drawn with true arc geometry: a disk per point, an
inflated disk per ball, and a capsule (two straight tangents plus two
semicircular caps, emitted as pairs of quarter arcs) per segment or polyline
edge.  Lattice dots are classified exactly: filled for members of the offset
discretization, hollow for points whose entry radius equals the drawn radius
but whose distance minimizers are all punctured (they sit on the offset
boundary yet stay outside).  Coordinates in the file are display-only
decimals; every classification behind them is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from .errors import SceneError
from .exactness import Rat
from .geometry import (
    Ball,
    CompiledScene,
    PointPrim,
    Polyline,
    Scene,
    Segment,
    as_rat,
)
from .lattice import _box_points, enumeration_box

_SCALE = 60.0
_MARGIN = 30.0


class _View:
    def __init__(self, scene: Scene, r: float):
        lo, hi = scene.bounds()
        self.x0 = float(lo[0]) - r - 1.0
        self.x1 = float(hi[0]) + r + 1.0
        self.y0 = float(lo[1]) - r - 1.0
        self.y1 = float(hi[1]) + r + 1.0
        self.width = (self.x1 - self.x0) * _SCALE + 2 * _MARGIN
        self.height = (self.y1 - self.y0) * _SCALE + 2 * _MARGIN

    def x(self, wx: float) -> float:
        return (wx - self.x0) * _SCALE + _MARGIN

    def y(self, wy: float) -> float:
        return (self.y1 - wy) * _SCALE + _MARGIN

    def px(self, length: float) -> float:
        return length * _SCALE


def _f(v: float) -> str:
    return f"{v:.4f}"


def _circle(view: _View, cx: float, cy: float, r: float, cls: str, style: str) -> str:
    return (
        f'<circle class="{cls}" cx="{_f(view.x(cx))}" cy="{_f(view.y(cy))}" '
        f'r="{_f(view.px(r))}" {style}/>'
    )


def _capsule_path(view: _View, ax: float, ay: float, bx: float, by: float, r: float) -> str:
    dx, dy = bx - ax, by - ay
    norm = math.hypot(dx, dy)
    dx, dy = dx / norm, dy / norm
    nx, ny = -dy, dx
    rp = view.px(r)

    def pt(wx, wy):
        return f"{_f(view.x(wx))} {_f(view.y(wy))}"

    # Clockwise around the capsule (as displayed); each cap is two quarter
    # arcs through the far pole so the arc choice is unambiguous.
    arc = f"A {_f(rp)} {_f(rp)} 0 0 1"
    return (
        f"M {pt(ax + r * nx, ay + r * ny)} "
        f"L {pt(bx + r * nx, by + r * ny)} "
        f"{arc} {pt(bx + r * dx, by + r * dy)} "
        f"{arc} {pt(bx - r * nx, by - r * ny)} "
        f"L {pt(ax - r * nx, ay - r * ny)} "
        f"{arc} {pt(ax - r * dx, ay - r * dy)} "
        f"{arc} {pt(ax + r * nx, ay + r * ny)} Z"
    )


_OFFSET_STYLE = 'fill="#d8d8d8" stroke="none"'
_DOT_R = 0.09
_HOLLOW_R = 0.09
_PUNCTURE_R = 0.06


def render_svg(scene: Scene, r2: Rat) -> str:
    """Render a 2D scene at squared radius r2 as an SVG 1.1 document."""
    if scene.dim != 2:
        raise SceneError("rendering requires a scene of dimension 2")
    r2 = as_rat(r2)
    if r2 < 0:
        raise ValueError("squared radius must be nonnegative")
    r = math.sqrt(float(Fraction(r2)))
    view = _View(scene, r)
    parts: list[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_f(view.width)}" height="{_f(view.height)}" '
        f'viewBox="0 0 {_f(view.width)} {_f(view.height)}">',
    ]

    # offset region, one exact shape per primitive
    for prim in scene.primitives:
        if isinstance(prim, PointPrim):
            if r > 0:
                parts.append(
                    _circle(view, float(prim.p[0]), float(prim.p[1]), r, "offset", _OFFSET_STYLE)
                )
        elif isinstance(prim, Ball):
            parts.append(
                _circle(
                    view,
                    float(prim.center[0]),
                    float(prim.center[1]),
                    float(prim.radius) + r,
                    "offset",
                    _OFFSET_STYLE,
                )
            )
        else:
            edges = [(prim.a, prim.b)] if isinstance(prim, Segment) else list(
                zip(prim.pts, prim.pts[1:])
            )
            for a, b in edges:
                if r > 0:
                    parts.append(
                        f'<path class="offset" d="'
                        + _capsule_path(
                            view, float(a[0]), float(a[1]), float(b[0]), float(b[1]), r
                        )
                        + f'" {_OFFSET_STYLE}/>'
                    )

    # unit grid
    for gx in range(math.ceil(view.x0), math.floor(view.x1) + 1):
        parts.append(
            f'<line class="grid" x1="{_f(view.x(gx))}" y1="{_f(view.y(view.y0))}" '
            f'x2="{_f(view.x(gx))}" y2="{_f(view.y(view.y1))}" '
            f'stroke="#b0b0b0" stroke-width="0.5"/>'
        )
    for gy in range(math.ceil(view.y0), math.floor(view.y1) + 1):
        parts.append(
            f'<line class="grid" x1="{_f(view.x(view.x0))}" y1="{_f(view.y(gy))}" '
            f'x2="{_f(view.x(view.x1))}" y2="{_f(view.y(gy))}" '
            f'stroke="#b0b0b0" stroke-width="0.5"/>'
        )

    # the set X itself
    for prim in scene.primitives:
        if isinstance(prim, PointPrim):
            parts.append(
                _circle(view, float(prim.p[0]), float(prim.p[1]), 0.05, "primitive",
                        'fill="#000000" stroke="none"')
            )
        elif isinstance(prim, Ball):
            parts.append(
                _circle(view, float(prim.center[0]), float(prim.center[1]),
                        float(prim.radius), "primitive",
                        'fill="#9a9a9a" stroke="#000000" stroke-width="2"')
            )
        else:
            pts = (prim.a, prim.b) if isinstance(prim, Segment) else prim.pts
            coords = " ".join(f"{_f(view.x(float(p[0])))},{_f(view.y(float(p[1])))}" for p in pts)
            parts.append(
                f'<polyline class="primitive" points="{coords}" fill="none" '
                f'stroke="#000000" stroke-width="4"/>'
            )

    # exact lattice classification at this radius
    compiled = CompiledScene(scene)
    lo, hi = enumeration_box(scene, r2)
    members: list[tuple[int, ...]] = []
    boundary_out: list[tuple[int, ...]] = []
    for z in sorted(_box_points(lo, hi)):
        d = compiled.min_distance(z)
        c = d.cmp_square(r2)
        if c > 0:
            continue
        if c < 0 or compiled.entry_closed(z, d):
            members.append(z)
        else:
            boundary_out.append(z)

    for z in members:
        parts.append(
            _circle(view, float(z[0]), float(z[1]), _DOT_R, "point-member",
                    'fill="#000000" stroke="none"')
        )
    for z in boundary_out:
        parts.append(
            _circle(view, float(z[0]), float(z[1]), _HOLLOW_R, "point-boundary",
                    'fill="#ffffff" stroke="#000000" stroke-width="2"')
        )
    for q in scene.punctures:
        parts.append(
            _circle(view, float(q[0]), float(q[1]), _PUNCTURE_R, "puncture",
                    'fill="#ffffff" stroke="#000000" stroke-width="2"')
        )

    parts.append("</svg>")
    return "\n".join(parts)
