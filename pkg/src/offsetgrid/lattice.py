"""Integer-lattice side: discretizations, k-adjacency, components, voxels.

The lattice discretization of a scene at squared radius r2 is the set of
integer points inside the closed offset of radius sqrt(r2).  Adjacency
follows the usual digital-topology ladder: integer points are k-adjacent
when each coordinate differs by at most one and at most n-k coordinates
differ, so higher k is stricter.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import SceneError, VoxelOrderError
from .exactness import Rat, int_sqrt_ceil
from .geometry import (
    Ball,
    CompiledScene,
    Point,
    PointPrim,
    Polyline,
    Primitive,
    Scene,
    Segment,
    as_rat,
    closure_connected,
)

LatticePoint = tuple[int, ...]


@dataclass(frozen=True)
class DiscreteSet:
    """A finite set of integer lattice points with a dimension tag."""

    dim: int
    points: frozenset[LatticePoint]

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(tuple(p) for p in self.points))
        for p in self.points:
            if len(p) != self.dim:
                raise SceneError("lattice point dimension differs from set")

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return tuple(p) in self.points

    def __iter__(self):
        return iter(self.points)

    def sorted_points(self) -> list[LatticePoint]:
        return sorted(self.points)

    def translate(self, offset: Sequence[int]) -> "DiscreteSet":
        return DiscreteSet(
            self.dim,
            frozenset(tuple(c + t for c, t in zip(p, offset)) for p in self.points),
        )


def k_adjacent(p: LatticePoint, q: LatticePoint, k: int) -> bool:
    """Adjacency at level k: p != q, every coordinate differs by at most 1,
    and at most n-k coordinates differ."""
    n = len(p)
    if len(q) != n:
        raise SceneError("lattice points disagree on dimension")
    if not 0 <= k <= n - 1:
        raise ValueError(f"adjacency level must be in [0, {n - 1}]")
    differing = 0
    for a, b in zip(p, q):
        d = a - b
        if d < -1 or d > 1:
            return False
        if d:
            differing += 1
    return 0 < differing <= n - k


def _stencil(n: int, k: int) -> list[tuple[int, ...]]:
    out = []
    for off in itertools.product((-1, 0, 1), repeat=n):
        nz = sum(1 for d in off if d)
        if 0 < nz <= n - k:
            out.append(off)
    return out


@dataclass
class ComponentLabeling:
    """Partition of a discrete set into k-connected components.

    Labels are deterministic: components are numbered by the lexicographic
    order of their smallest member."""

    k: int
    labels: dict[LatticePoint, int]
    count: int

    def groups(self) -> list[list[LatticePoint]]:
        out: list[list[LatticePoint]] = [[] for _ in range(self.count)]
        for p, c in self.labels.items():
            out[c].append(p)
        for g in out:
            g.sort()
        return out


def components(ds: DiscreteSet, k: int) -> ComponentLabeling:
    """Exact k-components via traversal over the 3^n - 1 neighbor stencil."""
    if ds.points and not 0 <= k <= ds.dim - 1:
        raise ValueError(f"adjacency level must be in [0, {ds.dim - 1}]")
    offsets = _stencil(ds.dim, k) if ds.points else []
    labels: dict[LatticePoint, int] = {}
    count = 0
    members = ds.points
    for start in sorted(members):
        if start in labels:
            continue
        labels[start] = count
        stack = [start]
        while stack:
            cur = stack.pop()
            for off in offsets:
                nb = tuple(c + d for c, d in zip(cur, off))
                if nb in members and nb not in labels:
                    labels[nb] = count
                    stack.append(nb)
        count += 1
    return ComponentLabeling(k=k, labels=labels, count=count)


def is_k_connected(ds: DiscreteSet, k: int) -> bool:
    """Empty and singleton sets count as connected."""
    return components(ds, k).count <= 1


# ---------------------------------------------------------------------------
# Discretizations
# ---------------------------------------------------------------------------


def enumeration_box(scene: Scene, r2: Rat) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Integer hull of the scene bounds, inflated by ceil(sqrt(r2)) + 1 on
    every side; every offset member at radius sqrt(r2) lies inside."""
    lo, hi = scene.bounds()
    inflate = int_sqrt_ceil(as_rat(r2)) + 1
    lo_i = tuple(math.floor(v) - inflate for v in lo)
    hi_i = tuple(math.ceil(v) + inflate for v in hi)
    return lo_i, hi_i


def _box_points(lo: Sequence[int], hi: Sequence[int]) -> Iterable[LatticePoint]:
    return itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))


def offset_discretize(scene: Scene, r2: Rat) -> DiscreteSet:
    """All integer points of the closed offset of squared radius r2."""
    r2 = as_rat(r2)
    if r2 < 0:
        raise ValueError("squared radius must be nonnegative")
    member = CompiledScene(scene).membership(r2)
    lo, hi = enumeration_box(scene, r2)
    pts = frozenset(z for z in _box_points(lo, hi) if member(z))
    return DiscreteSet(scene.dim, pts)


def gauss_discretize(scene: Scene) -> DiscreteSet:
    """Integer points lying on the punctured set itself (radius zero)."""
    return offset_discretize(scene, 0)


# ---------------------------------------------------------------------------
# Voxels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Voxel:
    """Closed unit cube [a1, a1+1] x ... x [an, an+1] anchored at an integer
    point.  Boundary points belong to every incident voxel."""

    anchor: LatticePoint

    @property
    def dim(self) -> int:
        return len(self.anchor)

    def bounds(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.anchor, tuple(a + 1 for a in self.anchor)


def _segment_box_window(
    a: Sequence[Rat], b: Sequence[Rat], lo: Sequence[Rat], hi: Sequence[Rat]
) -> Optional[tuple[Fraction, Fraction]]:
    """Exact parameter window of segment ab inside a closed box, or None."""
    t0, t1 = Fraction(0), Fraction(1)
    for ai, bi, l, h in zip(a, b, lo, hi):
        d = bi - ai
        if d == 0:
            if not l <= ai <= h:
                return None
            continue
        ta = Fraction(l - ai) / d
        tb = Fraction(h - ai) / d
        if ta > tb:
            ta, tb = tb, ta
        if ta > t0:
            t0 = ta
        if tb < t1:
            t1 = tb
        if t0 > t1:
            return None
    return t0, t1


def _box_clamp_d2(center: Sequence[Rat], lo: Sequence[Rat], hi: Sequence[Rat]):
    """Squared distance from a point to a closed box and the nearest box
    point (unique by convexity)."""
    d2: Rat = 0
    nearest = []
    for c, l, h in zip(center, lo, hi):
        if c < l:
            d2 += (l - c) * (l - c)
            nearest.append(l)
        elif c > h:
            d2 += (c - h) * (c - h)
            nearest.append(h)
        else:
            nearest.append(c)
    return d2, tuple(nearest)


def _prim_box_contact(prim: Primitive, lo, hi, punctures: frozenset[Point]):
    """How a closed primitive meets a closed box, honoring punctures.

    Returns "full" when the intersection has infinitely many points of the
    punctured set, a tuple of contact Points when it is finite, or None when
    empty.  `punctures` only matters for finite contacts; pass an empty set
    to query the closure."""
    if isinstance(prim, PointPrim):
        if all(l <= c <= h for c, l, h in zip(prim.p.coords, lo, hi)):
            return (prim.p,)
        return None
    if isinstance(prim, Segment):
        win = _segment_box_window(prim.a.coords, prim.b.coords, lo, hi)
        if win is None:
            return None
        t0, t1 = win
        if t0 < t1:
            return "full"
        pt = Point(tuple(a + t0 * (b - a) for a, b in zip(prim.a, prim.b)))
        return (pt,)
    if isinstance(prim, Polyline):
        contacts: list[Point] = []
        for seg in prim.edges():
            c = _prim_box_contact(seg, lo, hi, punctures)
            if c == "full":
                return "full"
            if c:
                contacts.extend(p for p in c if p not in contacts)
        return tuple(contacts) if contacts else None
    if isinstance(prim, Ball):
        d2, nearest = _box_clamp_d2(prim.center.coords, lo, hi)
        r2 = prim.radius * prim.radius
        if d2 > r2:
            return None
        if d2 < r2:
            return "full"
        return (Point(nearest),)
    raise TypeError(f"unknown primitive {type(prim).__name__}")


def _box_meets_set(scene: Scene, lo, hi) -> bool:
    """Whether the punctured set X meets the closed box."""
    punctures = scene.puncture_set
    for prim in scene.primitives:
        contact = _prim_box_contact(prim, lo, hi, punctures)
        if contact == "full":
            return True
        if contact and any(p not in punctures for p in contact):
            return True
    return False


def _box_meets_closure(scene: Scene, lo, hi) -> bool:
    for prim in scene.primitives:
        if _prim_box_contact(prim, lo, hi, frozenset()) is not None:
            return True
    return False


def voxel_cover(scene: Scene) -> list[Voxel]:
    """All closed unit cells meeting the punctured set X, sorted by anchor.

    A cell that touches a primitive only at punctured points is excluded;
    a point on a shared cell boundary belongs to all incident cells."""
    lo, hi = scene.bounds()
    lo_i = tuple(math.floor(v) - 1 for v in lo)
    hi_i = tuple(math.ceil(v) for v in hi)
    out = []
    for anchor in _box_points(lo_i, hi_i):
        top = tuple(a + 1 for a in anchor)
        if _box_meets_set(scene, anchor, top):
            out.append(Voxel(anchor))
    return out


def _shared_face(a: LatticePoint, b: LatticePoint) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The (possibly degenerate) box common to two distinct unit cells, or
    None when they do not touch."""
    lo, hi = [], []
    for ai, bi in zip(a, b):
        if abs(ai - bi) > 1:
            return None
        l = max(ai, bi)
        h = min(ai, bi) + 1
        if l > h:
            return None
        lo.append(l)
        hi.append(h)
    return tuple(lo), tuple(hi)


def order_voxels(scene: Scene) -> list[Voxel]:
    """Order the voxel cover so that each cell after the first meets the
    closure of X inside its intersection with the already-placed cells.

    Greedy: start from the lexicographically smallest anchor and repeatedly
    append the smallest-anchored cell whose shared boundary with some placed
    cell touches the closure.  Raises VoxelOrderError with the stuck prefix
    as certificate when no cell qualifies (a disconnected closure)."""
    cover = voxel_cover(scene)
    if not cover:
        return []
    remaining = {v.anchor for v in cover}
    first = min(remaining)
    remaining.remove(first)
    ordered = [first]
    while remaining:
        chosen = None
        for cand in sorted(remaining):
            ok = False
            for placed in ordered:
                face = _shared_face(cand, placed)
                if face is not None and _box_meets_closure(scene, face[0], face[1]):
                    ok = True
                    break
            if ok:
                chosen = cand
                break
        if chosen is None:
            raise VoxelOrderError(
                "no voxel can extend the ordering; the closure is disconnected",
                ordered=[Voxel(a) for a in ordered],
                remaining=[Voxel(a) for a in sorted(remaining)],
            )
        remaining.remove(chosen)
        ordered.append(chosen)
    return [Voxel(a) for a in ordered]


def voxel_order_property_holds(scene: Scene, order: Sequence[Voxel]) -> bool:
    """Independent checker for the chained-intersection property: the k-th
    cell must meet the closure of X inside its overlap with the union of the
    earlier cells, for every k >= 2.  Also requires `order` to enumerate the
    voxel cover exactly."""
    if sorted(v.anchor for v in order) != [v.anchor for v in voxel_cover(scene)]:
        return False
    for idx in range(1, len(order)):
        cand = order[idx].anchor
        ok = False
        for prev in order[:idx]:
            face = _shared_face(cand, prev.anchor)
            if face is not None and _box_meets_closure(scene, face[0], face[1]):
                ok = True
                break
        if not ok:
            return False
    return True
