"""Continuous scenes: punctured unions of exact-coordinate primitives.

A scene is a finite union of primitives (points, segments, polylines, solid
balls) with rational coordinates, minus a finite set of punctured points.
All distance, gap and membership computations are exact: rational arithmetic
throughout, with ball distances carried symbolically by
:class:`~offsetgrid.exactness.ExactDistance`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import DimensionMismatch, SceneError
from .exactness import (
    ExactDistance,
    Rat,
    ZERO_DISTANCE,
    _norm_rat,
    _num_den,
    _sgn,
    perfect_square_root,
)


def as_rat(value) -> Rat:
    """Coerce an exact rational: int, Fraction, or a string like "3/4" or
    "0.25" (decimals reinterpret exactly as p/10^k).  Floats are rejected:
    they are not exact carriers."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _norm_rat(value)
    if isinstance(value, str):
        return _norm_rat(Fraction(value))
    raise TypeError(
        f"expected an exact rational (int, Fraction or string), got {type(value).__name__}"
    )


@dataclass(frozen=True)
class Point:
    """A point of R^n with exact rational coordinates."""

    coords: tuple[Rat, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_rat(c) for c in self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def translate(self, offset: Sequence[int]) -> "Point":
        return Point(tuple(c + t for c, t in zip(self.coords, offset)))

    def __repr__(self):
        return "Point(" + ", ".join(str(c) for c in self.coords) + ")"


def point(*coords) -> Point:
    return Point(tuple(coords))


def _sub(p: Sequence[Rat], q: Sequence[Rat]) -> tuple[Rat, ...]:
    return tuple(a - b for a, b in zip(p, q))


def _dot(u: Sequence[Rat], v: Sequence[Rat]) -> Rat:
    return sum(a * b for a, b in zip(u, v))


def _norm2(u: Sequence[Rat]) -> Rat:
    return sum(a * a for a in u)


@dataclass(frozen=True)
class PointPrim:
    p: Point

    @property
    def dim(self) -> int:
        return self.p.dim


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a.dim != self.b.dim:
            raise DimensionMismatch("segment endpoints disagree on dimension")
        if self.a == self.b:
            raise SceneError("degenerate segment: endpoints coincide")

    @property
    def dim(self) -> int:
        return self.a.dim


@dataclass(frozen=True)
class Polyline:
    pts: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "pts", tuple(self.pts))
        if len(self.pts) < 2:
            raise SceneError("polyline needs at least two points")
        dims = {p.dim for p in self.pts}
        if len(dims) != 1:
            raise DimensionMismatch("polyline points disagree on dimension")
        for a, b in zip(self.pts, self.pts[1:]):
            if a == b:
                raise SceneError("polyline has coincident consecutive points")

    @property
    def dim(self) -> int:
        return self.pts[0].dim

    def edges(self) -> list[Segment]:
        return [Segment(a, b) for a, b in zip(self.pts, self.pts[1:])]


@dataclass(frozen=True)
class Ball:
    """A solid closed ball."""

    center: Point
    radius: Rat

    def __post_init__(self):
        object.__setattr__(self, "radius", as_rat(self.radius))
        if self.radius <= 0:
            raise SceneError("ball radius must be positive")

    @property
    def dim(self) -> int:
        return self.center.dim


Primitive = Union[PointPrim, Segment, Polyline, Ball]


@dataclass(frozen=True)
class Scene:
    """A punctured union of primitives: X = (union of primitives) minus the
    puncture points.

    Every puncture must lie on at least one primitive, and may not swallow a
    point primitive whole (that would leave an empty primitive with
    ill-defined gap semantics).  An explicit `components` partition of
    primitive indices, when present, overrides the automatic zero-gap
    grouping used by the radius functionals.
    """

    dim: int
    primitives: tuple[Primitive, ...]
    punctures: tuple[Point, ...] = ()
    components: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "primitives", tuple(self.primitives))
        object.__setattr__(self, "punctures", tuple(self.punctures))
        if self.components is not None:
            object.__setattr__(
                self, "components", tuple(tuple(g) for g in self.components)
            )
        if self.dim < 1:
            raise SceneError("dimension must be at least 1")
        if not self.primitives:
            raise SceneError("scene needs at least one primitive")
        for prim in self.primitives:
            if prim.dim != self.dim:
                raise DimensionMismatch("primitive dimension differs from scene")
        for q in self.punctures:
            if q.dim != self.dim:
                raise DimensionMismatch("puncture dimension differs from scene")
            if not any(exact_dist2(q, prim).is_zero() for prim in self.primitives):
                raise SceneError(f"puncture {q} lies on no primitive")
            for prim in self.primitives:
                if isinstance(prim, PointPrim) and prim.p == q:
                    raise SceneError(
                        f"puncture {q} would remove an entire point primitive"
                    )
        if self.components is not None:
            flat = sorted(i for g in self.components for i in g)
            if flat != list(range(len(self.primitives))):
                raise SceneError("components must partition the primitive indices")

    @property
    def puncture_set(self) -> frozenset[Point]:
        return frozenset(self.punctures)

    def bounds(self) -> tuple[tuple[Rat, ...], tuple[Rat, ...]]:
        """Componentwise rational bounding box over all primitives."""
        mins = list(_prim_bounds(self.primitives[0])[0])
        maxs = list(_prim_bounds(self.primitives[0])[1])
        for prim in self.primitives[1:]:
            lo, hi = _prim_bounds(prim)
            for i in range(self.dim):
                if lo[i] < mins[i]:
                    mins[i] = lo[i]
                if hi[i] > maxs[i]:
                    maxs[i] = hi[i]
        return tuple(mins), tuple(maxs)

    def translate(self, offset: Sequence[int]) -> "Scene":
        return Scene(
            self.dim,
            tuple(translate_primitive(p, offset) for p in self.primitives),
            tuple(q.translate(offset) for q in self.punctures),
            self.components,
        )


def translate_primitive(prim: Primitive, offset: Sequence[int]) -> Primitive:
    if isinstance(prim, PointPrim):
        return PointPrim(prim.p.translate(offset))
    if isinstance(prim, Segment):
        return Segment(prim.a.translate(offset), prim.b.translate(offset))
    if isinstance(prim, Polyline):
        return Polyline(tuple(p.translate(offset) for p in prim.pts))
    if isinstance(prim, Ball):
        return Ball(prim.center.translate(offset), prim.radius)
    raise TypeError(f"unknown primitive {type(prim).__name__}")


def _prim_bounds(prim: Primitive) -> tuple[tuple[Rat, ...], tuple[Rat, ...]]:
    if isinstance(prim, PointPrim):
        return prim.p.coords, prim.p.coords
    if isinstance(prim, Segment):
        lo = tuple(min(a, b) for a, b in zip(prim.a, prim.b))
        hi = tuple(max(a, b) for a, b in zip(prim.a, prim.b))
        return lo, hi
    if isinstance(prim, Polyline):
        lo = tuple(min(p[i] for p in prim.pts) for i in range(prim.dim))
        hi = tuple(max(p[i] for p in prim.pts) for i in range(prim.dim))
        return lo, hi
    if isinstance(prim, Ball):
        lo = tuple(c - prim.radius for c in prim.center)
        hi = tuple(c + prim.radius for c in prim.center)
        return lo, hi
    raise TypeError(f"unknown primitive {type(prim).__name__}")


# ---------------------------------------------------------------------------
# Exact distances and minimizers
# ---------------------------------------------------------------------------


def _segment_param(z: Sequence[Rat], a: Sequence[Rat], b: Sequence[Rat]) -> Fraction:
    """Parameter in [0, 1] of the point of segment ab closest to z."""
    u = _sub(b, a)
    uu = _norm2(u)
    t = Fraction(_dot(_sub(z, a), u)) / uu
    if t < 0:
        return Fraction(0)
    if t > 1:
        return Fraction(1)
    return t


def _segment_foot(z: Point, seg: Segment) -> tuple[Fraction, Point]:
    t = _segment_param(z.coords, seg.a.coords, seg.b.coords)
    foot = Point(tuple(a + t * (b - a) for a, b in zip(seg.a, seg.b)))
    return t, foot


def exact_dist2(z: Point, prim: Primitive) -> ExactDistance:
    """Exact distance from z to the closed primitive, as an ExactDistance
    (its square is the exact squared distance when rational)."""
    if z.dim != prim.dim:
        raise DimensionMismatch("point and primitive dimensions differ")
    if isinstance(prim, PointPrim):
        return ExactDistance.from_square(_norm2(_sub(z.coords, prim.p.coords)))
    if isinstance(prim, Segment):
        _, foot = _segment_foot(z, prim)
        return ExactDistance.from_square(_norm2(_sub(z.coords, foot.coords)))
    if isinstance(prim, Polyline):
        best = None
        for seg in prim.edges():
            d = exact_dist2(z, seg)
            if best is None or d.cmp(best) < 0:
                best = d
        return best
    if isinstance(prim, Ball):
        return ExactDistance.from_ball(
            _norm2(_sub(z.coords, prim.center.coords)), prim.radius
        )
    raise TypeError(f"unknown primitive {type(prim).__name__}")


@dataclass(frozen=True)
class MinimizerSet:
    """The points of a closed primitive attaining the minimum distance to a
    query point.

    `points` holds the attaining points when they have rational coordinates.
    `irrational` marks the ball case where the unique attaining point exists
    but its coordinates are irrational (it can then never coincide with a
    rational puncture).  `entire_sphere` marks the symbolic answer for a
    query at a ball's center: every point of the bounding sphere is
    equidistant.
    """

    points: tuple[Point, ...] = ()
    irrational: bool = False
    entire_sphere: bool = False

    def all_in(self, punctures: frozenset[Point]) -> bool:
        """Whether every attaining point is punctured (symbolic markers
        denote at least one non-punctured attainer)."""
        if self.irrational or self.entire_sphere:
            return False
        return all(p in punctures for p in self.points)


def _ball_attainers(z: Point, ball: Ball) -> MinimizerSet:
    d2c = _norm2(_sub(z.coords, ball.center.coords))
    if d2c <= ball.radius * ball.radius:
        return MinimizerSet(points=(z,))
    root = perfect_square_root(d2c)
    if root is None:
        return MinimizerSet(irrational=True)
    scale = Fraction(ball.radius) / root
    foot = Point(
        tuple(c + scale * (a - c) for a, c in zip(z.coords, ball.center.coords))
    )
    return MinimizerSet(points=(foot,))


def _distance_attainers(z: Point, prim: Primitive) -> MinimizerSet:
    """Minimizers under the solid-primitive semantics used by membership:
    a query inside a closed ball attains distance zero at itself."""
    if isinstance(prim, PointPrim):
        return MinimizerSet(points=(prim.p,))
    if isinstance(prim, Segment):
        _, foot = _segment_foot(z, prim)
        return MinimizerSet(points=(foot,))
    if isinstance(prim, Polyline):
        best = None
        feet: list[Point] = []
        for seg in prim.edges():
            d = exact_dist2(z, seg)
            _, foot = _segment_foot(z, seg)
            if best is None or d.cmp(best) < 0:
                best = d
                feet = [foot]
            elif d.cmp(best) == 0 and foot not in feet:
                feet.append(foot)
        return MinimizerSet(points=tuple(feet))
    if isinstance(prim, Ball):
        return _ball_attainers(z, prim)
    raise TypeError(f"unknown primitive {type(prim).__name__}")


def minimizer_set(z: Point, prim: Primitive) -> MinimizerSet:
    """All points of the closed primitive at minimum distance from z.

    For a ball queried exactly at its center the answer is the whole
    bounding sphere, reported symbolically via `entire_sphere`.
    """
    if z.dim != prim.dim:
        raise DimensionMismatch("point and primitive dimensions differ")
    if isinstance(prim, Ball) and z == prim.center:
        return MinimizerSet(entire_sphere=True)
    return _distance_attainers(z, prim)


# ---------------------------------------------------------------------------
# Gaps
# ---------------------------------------------------------------------------


def _point_seg_d2(p: Sequence[Rat], a: Sequence[Rat], b: Sequence[Rat]) -> Rat:
    t = _segment_param(p, a, b)
    foot = tuple(x + t * (y - x) for x, y in zip(a, b))
    return _norm2(_sub(p, foot))


def _seg_seg_d2(a, b, c, d) -> Rat:
    """Exact squared distance between closed segments ab and cd (any n)."""
    u = _sub(b, a)
    v = _sub(d, c)
    w = _sub(a, c)
    A = _norm2(u)
    B = _dot(u, v)
    C = _norm2(v)
    D = _dot(u, w)
    E = _dot(v, w)
    den = A * C - B * B
    best: Optional[Rat] = None
    if den != 0:
        s = Fraction(B * E - C * D, den)
        t = Fraction(A * E - B * D, den)
        if 0 <= s <= 1 and 0 <= t <= 1:
            diff = tuple(wi + s * ui - t * vi for wi, ui, vi in zip(w, u, v))
            best = _norm2(diff)
    for cand in (
        _point_seg_d2(a, c, d),
        _point_seg_d2(b, c, d),
        _point_seg_d2(c, a, b),
        _point_seg_d2(d, a, b),
    ):
        if best is None or cand < best:
            best = cand
    return best


def _prim_segments(prim) -> list[tuple[tuple[Rat, ...], tuple[Rat, ...]]]:
    if isinstance(prim, Segment):
        return [(prim.a.coords, prim.b.coords)]
    return [(s.a.coords, s.b.coords) for s in prim.edges()]


def gap2(A: Primitive, B: Primitive) -> ExactDistance:
    """Exact gap (infimum of pointwise distances) between two closed
    primitives, as an ExactDistance; zero exactly when the closures meet."""
    if A.dim != B.dim:
        raise DimensionMismatch("primitive dimensions differ")
    # Normalize order: point < segment/polyline < ball.
    rank = {PointPrim: 0, Segment: 1, Polyline: 1, Ball: 2}
    if rank[type(A)] > rank[type(B)]:
        A, B = B, A
    if isinstance(A, PointPrim):
        return exact_dist2(A.p, B)
    if isinstance(A, (Segment, Polyline)):
        if isinstance(B, (Segment, Polyline)):
            best = None
            for sa, sb in _prim_segments(A):
                for ta, tb in _prim_segments(B):
                    cand = _seg_seg_d2(sa, sb, ta, tb)
                    if best is None or cand < best:
                        best = cand
            return ExactDistance.from_square(best)
        # ball: distance from the ball center to the segments, minus radius
        best = None
        for sa, sb in _prim_segments(A):
            cand = _point_seg_d2(B.center.coords, sa, sb)
            if best is None or cand < best:
                best = cand
        return ExactDistance.from_ball(best, B.radius)
    # ball vs ball
    d2c = _norm2(_sub(A.center.coords, B.center.coords))
    return ExactDistance.from_ball(d2c, A.radius + B.radius)


# ---------------------------------------------------------------------------
# Offset membership
# ---------------------------------------------------------------------------


def offset_member(scene: Scene, z: Point, r2: Rat) -> bool:
    """Whether z lies in the closed r-offset of the punctured set X, with
    r2 the exact squared radius.

    Decision rule: strictly inside the offset of some closed primitive means
    membership regardless of punctures; strictly outside all means no.  On
    the exact boundary, z is a member iff some distance minimizer across the
    attaining primitives is not a puncture (a removed point contributes no
    ball to the offset).
    """
    if z.dim != scene.dim:
        raise DimensionMismatch("query point dimension differs from scene")
    r2 = as_rat(r2)
    if r2 < 0:
        raise ValueError("squared radius must be nonnegative")
    dists = [exact_dist2(z, prim) for prim in scene.primitives]
    best = dists[0]
    for d in dists[1:]:
        if d.cmp(best) < 0:
            best = d
    c = best.cmp_square(r2)
    if c < 0:
        return True
    if c > 0:
        return False
    punctures = scene.puncture_set
    for prim, d in zip(scene.primitives, dists):
        if d.cmp(best) == 0:
            if not _distance_attainers(z, prim).all_in(punctures):
                return True
    return False


# ---------------------------------------------------------------------------
# Closure connectivity
# ---------------------------------------------------------------------------


class UnionFind:
    """Array-based union-find over indices 0..n-1."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, i: int) -> int:
        parent = self.parent
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        self.parent[rj] = ri
        self.count -= 1
        return True


def zero_gap_classes(scene: Scene) -> list[list[int]]:
    """Group primitive indices into classes whose closures form connected
    blocks (edges where the exact gap is zero)."""
    n = len(scene.primitives)
    uf = UnionFind(n)
    for i in range(n):
        for j in range(i + 1, n):
            if gap2(scene.primitives[i], scene.primitives[j]).is_zero():
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(uf.find(i), []).append(i)
    return [sorted(g) for _, g in sorted(groups.items(), key=lambda kv: min(kv[1]))]


def closure_connected(scene: Scene) -> bool:
    """Whether the closure of X is connected: punctures are ignored (the
    closure restores them), so this is connectivity of the zero-gap graph on
    closed primitives."""
    return len(zero_gap_classes(scene)) <= 1


# ---------------------------------------------------------------------------
# Compiled evaluators for lattice points (integer-scaled fast path)
# ---------------------------------------------------------------------------


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _scale_coords(coords: Sequence[Rat], D: int) -> tuple[int, ...]:
    out = []
    for c in coords:
        n, d = _num_den(c)
        out.append(n * (D // d))
    return tuple(out)


def _prim_denominator(prim: Primitive) -> int:
    D = 1
    if isinstance(prim, PointPrim):
        pts = [prim.p]
    elif isinstance(prim, Segment):
        pts = [prim.a, prim.b]
    elif isinstance(prim, Polyline):
        pts = list(prim.pts)
    else:
        pts = [prim.center]
    for p in pts:
        for c in p.coords:
            D = _lcm(D, _num_den(c)[1])
    return D


class _CPoint:
    __slots__ = ("P", "D", "D2")

    def __init__(self, prim: PointPrim):
        self.D = _prim_denominator(prim)
        self.D2 = self.D * self.D
        self.P = _scale_coords(prim.p.coords, self.D)

    def _s(self, z: tuple[int, ...]) -> int:
        D, P = self.D, self.P
        return sum((zi * D - pi) ** 2 for zi, pi in zip(z, P))

    def dist(self, z) -> ExactDistance:
        return ExactDistance.from_square(Fraction(self._s(z), self.D2))

    def classifier(self, rn: int, rd: int):
        rhs = rn * self.D2
        s = self._s

        def classify(z) -> int:
            return _sgn(s(z) * rd - rhs)

        return classify


class _CSeg:
    __slots__ = ("A", "B", "U", "uu", "D", "D2")

    def __init__(self, a: Point, b: Point, D: int):
        self.D = D
        self.D2 = D * D
        self.A = _scale_coords(a.coords, D)
        self.B = _scale_coords(b.coords, D)
        self.U = tuple(bi - ai for ai, bi in zip(self.A, self.B))
        self.uu = sum(ui * ui for ui in self.U)

    def _parts(self, z: tuple[int, ...]) -> tuple[int, int]:
        """Numerator and denominator-scale flag of the squared distance:
        returns (S, extra) with dist2 == S / (D2 * extra)."""
        D, A, U = self.D, self.A, self.U
        ap = tuple(zi * D - ai for zi, ai in zip(z, A))
        dot = sum(p * u for p, u in zip(ap, U))
        if dot <= 0:
            return sum(p * p for p in ap), 1
        if dot >= self.uu:
            bp = tuple(zi * D - bi for zi, bi in zip(z, self.B))
            return sum(p * p for p in bp), 1
        return sum(p * p for p in ap) * self.uu - dot * dot, self.uu

    def dist(self, z) -> ExactDistance:
        s, extra = self._parts(z)
        return ExactDistance.from_square(Fraction(s, self.D2 * extra))

    def classifier(self, rn: int, rd: int):
        rhs1 = rn * self.D2
        rhs2 = rn * self.D2 * self.uu
        parts = self._parts

        def classify(z) -> int:
            s, extra = parts(z)
            return _sgn(s * rd - (rhs1 if extra == 1 else rhs2))

        return classify


class _CPoly:
    __slots__ = ("segs",)

    def __init__(self, prim: Polyline):
        D = _prim_denominator(prim)
        self.segs = [_CSeg(a, b, D) for a, b in zip(prim.pts, prim.pts[1:])]

    def dist(self, z) -> ExactDistance:
        best = self.segs[0].dist(z)
        for seg in self.segs[1:]:
            d = seg.dist(z)
            if d.cmp(best) < 0:
                best = d
        return best

    def classifier(self, rn: int, rd: int):
        classifiers = [s.classifier(rn, rd) for s in self.segs]

        def classify(z) -> int:
            best = 1
            for cl in classifiers:
                c = cl(z)
                if c < 0:
                    return -1
                if c == 0:
                    best = 0
            return best

        return classify


class _CBall:
    __slots__ = ("C", "D", "D2", "radius", "z_lhs", "z_rhs")

    def __init__(self, prim: Ball):
        self.D = _prim_denominator(prim)
        self.D2 = self.D * self.D
        self.C = _scale_coords(prim.center.coords, self.D)
        self.radius = prim.radius
        rbn, rbd = _num_den(prim.radius)
        self.z_lhs = rbd * rbd
        self.z_rhs = rbn * rbn * self.D2

    def _s(self, z: tuple[int, ...]) -> int:
        D, C = self.D, self.C
        return sum((zi * D - ci) ** 2 for zi, ci in zip(z, C))

    def dist(self, z) -> ExactDistance:
        s = self._s(z)
        if s * self.z_lhs <= self.z_rhs:
            return ZERO_DISTANCE
        return ExactDistance.from_ball(Fraction(s, self.D2), self.radius)

    def classifier(self, rn: int, rd: int):
        rbn, rbd = _num_den(self.radius)
        rbd2 = rbd * rbd
        c1 = rd * rbd2
        c2 = rn * self.D2 * rbd2 + rbn * rbn * self.D2 * rd
        rhs_sq = 4 * rbn * rbn * rn * rd * self.D2 * self.D2 * rbd2
        z_lhs, z_rhs = self.z_lhs, self.z_rhs
        s_of = self._s

        def classify(z) -> int:
            s = s_of(z)
            if s * z_lhs <= z_rhs:
                return 0 if rn == 0 else -1
            t = s * c1 - c2
            if t < 0:
                return -1
            return _sgn(t * t - rhs_sq)

        return classify


def _compile_prim(prim: Primitive):
    if isinstance(prim, PointPrim):
        return _CPoint(prim)
    if isinstance(prim, Segment):
        return _CSeg(prim.a, prim.b, _prim_denominator(prim))
    if isinstance(prim, Polyline):
        return _CPoly(prim)
    if isinstance(prim, Ball):
        return _CBall(prim)
    raise TypeError(f"unknown primitive {type(prim).__name__}")


class CompiledScene:
    """Integer-scaled evaluators for querying a scene at many lattice points.

    Produces exactly the same decisions as the generic rational path (the
    test suite cross-checks this); it just avoids per-query Fraction
    arithmetic in the enumeration loops.
    """

    def __init__(self, scene: Scene):
        self.scene = scene
        self.compiled = [_compile_prim(p) for p in scene.primitives]
        self.punctures = scene.puncture_set

    def min_distance(self, z: tuple[int, ...]) -> ExactDistance:
        best = self.compiled[0].dist(z)
        for cp in self.compiled[1:]:
            if best.is_zero():
                return best
            d = cp.dist(z)
            if d.cmp(best) < 0:
                best = d
        return best

    def entry_closed(self, z: tuple[int, ...], dist: ExactDistance) -> bool:
        """Whether the lattice point belongs to the offset discretization at
        exactly its own entry radius (some minimizer is not a puncture)."""
        zp = Point(z)
        for prim, cp in zip(self.scene.primitives, self.compiled):
            if cp.dist(z).cmp(dist) == 0:
                if not _distance_attainers(zp, prim).all_in(self.punctures):
                    return True
        return False

    def membership(self, r2: Rat):
        """A member(z) predicate for the fixed squared radius r2."""
        rn, rd = _num_den(as_rat(r2))
        classifiers = [cp.classifier(rn, rd) for cp in self.compiled]
        scene = self.scene
        punctures = self.punctures

        def member(z: tuple[int, ...]) -> bool:
            boundary = []
            for prim, cl in zip(scene.primitives, classifiers):
                c = cl(z)
                if c < 0:
                    return True
                if c == 0:
                    boundary.append(prim)
            if not boundary:
                return False
            zp = Point(z)
            return any(
                not _distance_attainers(zp, prim).all_in(punctures)
                for prim in boundary
            )

        return member
