"""Radius functionals of a scene.

* the component gap matrix and the bottleneck connection radius (half the
  largest edge of a minimum spanning tree over the squared gaps),
* an independent union-find sweep oracle for the same radius on point scenes,
* the min-max component gap,
* the enclosing-ball radius,
* the least radius beyond which the offset discretization stays j-connected,
  computed exactly by sweeping the finitely many lattice entry thresholds.

All values are exact; decimal output is display-only.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .enclosing import EnclosingBall, min_enclosing_ball
from .errors import InternalCheckError, SweepRangeError
from .exactness import (
    ExactDistance,
    Rat,
    ZERO_DISTANCE,
    sqrt_sum_sign,
    sqrt_upper,
)
from .geometry import (
    Ball,
    CompiledScene,
    Point,
    PointPrim,
    Polyline,
    Scene,
    Segment,
    UnionFind,
    as_rat,
    gap2,
    zero_gap_classes,
)
from .lattice import (
    DiscreteSet,
    LatticePoint,
    enumeration_box,
    _box_points,
    is_k_connected,
)


@dataclass(frozen=True)
class GapMatrix:
    """Symmetric matrix of exact squared gaps between scene components."""

    m: int
    rows: tuple[tuple[ExactDistance, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.m or any(len(r) != self.m for r in self.rows):
            raise ValueError("gap matrix shape mismatch")
        for i in range(self.m):
            if not self.rows[i][i].is_zero():
                raise ValueError("gap matrix diagonal must be zero")
        if self.m <= 100:
            for i in range(self.m):
                for j in range(i):
                    if self.rows[i][j] != self.rows[j][i]:
                        raise ValueError("gap matrix must be symmetric")

    def entry(self, i: int, j: int) -> ExactDistance:
        return self.rows[i][j]


def scene_components(scene: Scene) -> list[list[int]]:
    """The component partition of primitive indices: the explicit one when
    present, otherwise the zero-gap closure grouping."""
    if scene.components is not None:
        return [sorted(g) for g in scene.components]
    return zero_gap_classes(scene)


def gap_matrix(scene: Scene) -> GapMatrix:
    """Exact squared gaps between all pairs of scene components."""
    groups = scene_components(scene)
    m = len(groups)
    rows = [[ZERO_DISTANCE] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            best: Optional[ExactDistance] = None
            for a in groups[i]:
                for b in groups[j]:
                    d = gap2(scene.primitives[a], scene.primitives[b])
                    if best is None or d.cmp(best) < 0:
                        best = d
            rows[i][j] = best
            rows[j][i] = best
    return GapMatrix(m, tuple(tuple(r) for r in rows))


def _prim_bottleneck_fast(values: list[list]) -> object:
    """Prim over raw rational squared gaps; returns the largest tree edge."""
    m = len(values)
    best = list(values[0])
    in_tree = bytearray(m)
    in_tree[0] = 1
    bottleneck = None
    for _ in range(m - 1):
        bi = -1
        bv = None
        for j in range(m):
            if not in_tree[j]:
                v = best[j]
                if bv is None or v < bv:
                    bv = v
                    bi = j
        in_tree[bi] = 1
        if bottleneck is None or bv > bottleneck:
            bottleneck = bv
        row = values[bi]
        for j in range(m):
            if not in_tree[j] and row[j] < best[j]:
                best[j] = row[j]
    return bottleneck


def _prim_bottleneck_general(g: GapMatrix) -> ExactDistance:
    m = g.m
    best = list(g.rows[0])
    in_tree = bytearray(m)
    in_tree[0] = 1
    bottleneck = ZERO_DISTANCE
    for _ in range(m - 1):
        bi = -1
        bv = None
        for j in range(m):
            if not in_tree[j]:
                v = best[j]
                if bv is None or v.cmp(bv) < 0:
                    bv = v
                    bi = j
        in_tree[bi] = 1
        if bv.cmp(bottleneck) > 0:
            bottleneck = bv
        row = g.rows[bi]
        for j in range(m):
            if not in_tree[j] and row[j].cmp(best[j]) < 0:
                best[j] = row[j]
    return bottleneck


def bottleneck_gap(g: GapMatrix) -> ExactDistance:
    """Largest edge of a minimum spanning tree of the complete gap graph
    (the tree's weight multiset is unique, so this is well defined)."""
    if g.m <= 1:
        return ZERO_DISTANCE
    if all(e.q2 == 0 for row in g.rows for e in row):
        sq = _prim_bottleneck_fast([[e.q1 for e in row] for row in g.rows])
        return ExactDistance.from_square(sq)
    return _prim_bottleneck_general(g)


def rho_from_gaps(g: GapMatrix, halved: bool = True) -> ExactDistance:
    """Least offset radius making the offset of the scene connected: half
    the bottleneck tree gap.  Two offsets of radius r first meet when 2r
    reaches their gap, hence the halving; `halved=False` reports the raw
    bottleneck edge instead (a convention exposed for comparison, never used
    by the bound checks)."""
    edge = bottleneck_gap(g)
    return edge.half() if halved else edge


def rho_oracle(points: Sequence[Point], halved: bool = True) -> ExactDistance:
    """Independent check of rho_from_gaps on point scenes: sort pairwise
    half-distances and sweep a union-find until one class remains."""
    if not points:
        raise ValueError("need at least one point")
    m = len(points)
    if m == 1:
        return ZERO_DISTANCE
    pairs = []
    for i in range(m):
        for j in range(i + 1, m):
            d2 = sum((a - b) * (a - b) for a, b in zip(points[i], points[j]))
            pairs.append((Fraction(d2, 4), i, j))
    pairs.sort(key=lambda t: t[0])
    uf = UnionFind(m)
    for half_d2, i, j in pairs:
        uf.union(i, j)
        if uf.count == 1:
            value = half_d2
            if not halved:
                value = 4 * half_d2
            return ExactDistance.from_square(value)
    raise InternalCheckError("pair sweep failed to connect")


def delta_from_gaps(g: GapMatrix) -> ExactDistance:
    """Min over components of the largest gap to any other component;
    zero for a single component."""
    if g.m <= 1:
        return ZERO_DISTANCE
    best: Optional[ExactDistance] = None
    for i in range(g.m):
        worst: Optional[ExactDistance] = None
        for j in range(g.m):
            if j == i:
                continue
            e = g.rows[i][j]
            if worst is None or e.cmp(worst) > 0:
                worst = e
        if best is None or worst.cmp(best) < 0:
            best = worst
    return best


# ---------------------------------------------------------------------------
# Critical-radius sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepEntry:
    """A lattice point with its exact entry radius.  `closed` means the
    point belongs to the discretization at exactly that radius; an open
    entry (all distance minimizers punctured) joins only strictly above."""

    distance: ExactDistance
    closed: bool
    point: LatticePoint

    @property
    def r2(self) -> Optional[Rat]:
        return self.distance.square()


@dataclass(frozen=True)
class CriticalSweep:
    dim: int
    r2_max: Rat
    entries: tuple[SweepEntry, ...]


def critical_radii(scene: Scene, r2_max) -> CriticalSweep:
    """Every lattice point of the enumeration box whose entry radius is at
    most sqrt(r2_max), sorted by exact entry radius (ties by point)."""
    r2_max = as_rat(r2_max)
    if r2_max < 0:
        raise ValueError("squared radius bound must be nonnegative")
    compiled = CompiledScene(scene)
    lo, hi = enumeration_box(scene, r2_max)
    entries = []
    for z in _box_points(lo, hi):
        d = compiled.min_distance(z)
        if d.cmp_square(r2_max) > 0:
            continue
        entries.append(SweepEntry(d, compiled.entry_closed(z, d), z))

    def cmp(a: SweepEntry, b: SweepEntry) -> int:
        c = a.distance.cmp(b.distance)
        if c:
            return c
        return -1 if a.point < b.point else (1 if a.point > b.point else 0)

    entries.sort(key=functools.cmp_to_key(cmp))
    return CriticalSweep(scene.dim, r2_max, tuple(entries))


@dataclass(frozen=True)
class AlphaResult:
    """Least radius beyond which the discretization stays j-connected, with
    whether connectivity already holds at exactly that radius."""

    value: ExactDistance
    attained: bool

    @property
    def r2(self) -> Optional[Rat]:
        return self.value.square()


def _alpha_bound_from_rho(rho: ExactDistance, dim: int) -> Fraction:
    """A rational squared-radius bound safely above the guaranteed-connected
    threshold (connection radius + sqrt(n)/2, plus margin 1)."""
    rho_ub = sqrt_upper(rho.q1, 3) - rho.q2
    if rho_ub < 0:
        rho_ub = Fraction(0)
    r_ub = rho_ub + sqrt_upper(Fraction(dim, 4), 3) + 1
    return r_ub * r_ub


def default_alpha_bound(scene: Scene) -> Fraction:
    return _alpha_bound_from_rho(rho_from_gaps(gap_matrix(scene)), scene.dim)


def alpha(scene: Scene, j: int, r2_max=None) -> AlphaResult:
    """Exact tail threshold: the infimum radius r such that the offset
    discretization is j-connected for every radius >= r.

    The discretization changes only at the finitely many entry thresholds,
    so the sweep walks them from the top, testing connectivity at each
    threshold and on each open interval between consecutive ones (where the
    set equals everything at or below the lower threshold, open entries
    included).  Works for any bounded scene, connected closure or not: above
    the default bound (connection radius + sqrt(n)/2, plus margin) the
    discretization is always connected, so the downward scan is well
    founded.  Fails when the top of the supplied range is not yet
    j-connected; a custom cap below every entry threshold yields a vacuous
    scan, so leave r2_max unset unless you know the sweep range.
    """
    if not 0 <= j <= scene.dim - 1:
        raise ValueError(f"connectivity level must be in [0, {scene.dim - 1}]")
    if r2_max is None:
        r2_max = default_alpha_bound(scene)
    else:
        r2_max = as_rat(r2_max)
    sweep = critical_radii(scene, r2_max)

    groups: list[tuple[ExactDistance, list[LatticePoint], list[LatticePoint]]] = []
    for e in sweep.entries:
        if groups and groups[-1][0] == e.distance:
            groups[-1][1 if e.closed else 2].append(e.point)
        else:
            groups.append((e.distance, [e.point] if e.closed else [], [] if e.closed else [e.point]))

    def connected(pts: set) -> bool:
        return is_k_connected(DiscreteSet(scene.dim, frozenset(pts)), j)

    current = {e.point for e in sweep.entries}
    if not connected(current):
        raise SweepRangeError(
            "discretization at the top of the sweep is not j-connected; "
            "increase the squared-radius bound"
        )
    for dist, closed_pts, open_pts in reversed(groups):
        at_threshold = current.difference(open_pts)
        if not connected(at_threshold):
            return AlphaResult(dist, attained=False)
        below = at_threshold.difference(closed_pts)
        if not connected(below):
            return AlphaResult(dist, attained=True)
        current = below
    return AlphaResult(ZERO_DISTANCE, attained=True)


# ---------------------------------------------------------------------------
# Assembled report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadiiReport:
    dim: int
    m: int
    rho: ExactDistance
    bottleneck: ExactDistance
    delta: ExactDistance
    omega: Optional[EnclosingBall]
    omega_note: Optional[str]
    alpha0: AlphaResult
    alpha_top: AlphaResult


def _cmp_dist_vs_dist_plus_sqrt(d: ExactDistance, e: ExactDistance, radicand) -> int:
    """Exact sign of d - (e + sqrt(radicand))."""
    return sqrt_sum_sign(
        [(1, d.q1), (-d.q2, 1), (-1, e.q1), (e.q2, 1), (-1, radicand)]
    )


def _vertex_points(scene: Scene) -> Optional[list[Point]]:
    pts: list[Point] = []
    for prim in scene.primitives:
        if isinstance(prim, PointPrim):
            pts.append(prim.p)
        elif isinstance(prim, Segment):
            pts.extend((prim.a, prim.b))
        elif isinstance(prim, Polyline):
            pts.extend(prim.pts)
        else:
            return None
    return pts


def radii_report(scene: Scene, seed: int = 0) -> RadiiReport:
    """All radius functionals of a scene, with exact internal cross-checks.

    The enclosing ball is exact for point/segment/polyline scenes (their
    hull is spanned by the vertex set) and for a single-ball scene; scenes
    mixing several balls are reported without it, since the minimal
    enclosing ball of distinct balls generally has irrational center."""
    g = gap_matrix(scene)
    rho = rho_from_gaps(g)
    edge = bottleneck_gap(g)
    delta = delta_from_gaps(g)

    omega: Optional[EnclosingBall] = None
    omega_note: Optional[str] = None
    vertices = _vertex_points(scene)
    if vertices is not None:
        omega = min_enclosing_ball(vertices, seed=seed)
    elif len(scene.primitives) == 1 and isinstance(scene.primitives[0], Ball):
        ball = scene.primitives[0]
        omega = EnclosingBall(ball.center.coords, ball.radius * ball.radius, ())
    else:
        omega_note = "enclosing ball unsupported for scenes mixing balls"

    bound = _alpha_bound_from_rho(rho, scene.dim)
    a0 = alpha(scene, 0, bound)
    atop = alpha(scene, scene.dim - 1, bound) if scene.dim > 1 else a0

    if _cmp_dist_vs_dist_plus_sqrt(atop.value, rho, Fraction(scene.dim, 4)) > 0:
        raise InternalCheckError("top-level connectivity radius exceeds its bound")
    if _cmp_dist_vs_dist_plus_sqrt(a0.value, rho, Fraction(scene.dim - 1, 4)) > 0:
        raise InternalCheckError("0-connectivity radius exceeds its bound")
    if omega is not None and all(isinstance(p, PointPrim) for p in scene.primitives):
        if rho.cmp_square(omega.r2) > 0 or delta.cmp_square(omega.r2) < 0:
            raise InternalCheckError("radius chain rho <= omega <= delta violated")

    return RadiiReport(
        dim=scene.dim,
        m=g.m,
        rho=rho,
        bottleneck=edge,
        delta=delta,
        omega=omega,
        omega_note=omega_note,
        alpha0=a0,
        alpha_top=atop,
    )
