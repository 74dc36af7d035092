"""Exact smallest enclosing ball of finitely many rational points.

Randomized incremental construction: walk the points in a seeded shuffled
order, and whenever one falls outside the current ball, rebuild over the
prefix with that point pinned to the boundary.  Boundary sets stay affinely
independent, so the circumcenter solve is an exact rational linear system
and the result needs no epsilons.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionMismatch, InternalCheckError
from .exactness import Rat, _norm_rat
from .geometry import Point, _dot, _norm2, _sub


@dataclass(frozen=True)
class EnclosingBall:
    """Closed ball given by an exact rational center and squared radius.

    `support` lists boundary points that pin the ball (at most dim+1)."""

    center: tuple[Rat, ...]
    r2: Rat
    support: tuple[Point, ...]

    def contains(self, p: Point) -> bool:
        return _norm2(_sub(p.coords, self.center)) <= self.r2

    def on_boundary(self, p: Point) -> bool:
        return _norm2(_sub(p.coords, self.center)) == self.r2


def _solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """Gaussian elimination over the rationals; None when singular."""
    k = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [aug[r][k] for r in range(k)]


def _ball_from_boundary(boundary: list[Point]) -> Optional[EnclosingBall]:
    if not boundary:
        return None
    p0 = boundary[0]
    if len(boundary) == 1:
        return EnclosingBall(p0.coords, 0, (p0,))
    vs = [_sub(p.coords, p0.coords) for p in boundary[1:]]
    gram = [[Fraction(_dot(vi, vj)) for vj in vs] for vi in vs]
    rhs = [Fraction(_norm2(vi), 2) for vi in vs]
    lam = _solve_linear(gram, rhs)
    if lam is None:
        raise InternalCheckError("degenerate boundary set in enclosing-ball solve")
    center = tuple(
        _norm_rat(c0 + sum(l * v[i] for l, v in zip(lam, vs)))
        for i, c0 in enumerate(p0.coords)
    )
    r2 = _norm_rat(_norm2(_sub(p0.coords, center)))
    ball = EnclosingBall(center, r2, tuple(boundary))
    for p in boundary:
        if not ball.on_boundary(p):
            raise InternalCheckError("boundary point off the solved sphere")
    return ball


def _welzl(points: list[Point], boundary: list[Point], dim: int) -> Optional[EnclosingBall]:
    ball = _ball_from_boundary(boundary)
    if len(boundary) == dim + 1:
        return ball
    for i, p in enumerate(points):
        if ball is None or not ball.contains(p):
            ball = _welzl(points[:i], boundary + [p], dim)
    return ball


def min_enclosing_ball(points: Sequence[Point], seed: int = 0) -> EnclosingBall:
    """The unique smallest closed ball containing all the points.

    Deterministic for a fixed seed (which only controls the insertion
    order); the center and squared radius are order-independent.
    """
    if not points:
        raise ValueError("need at least one point")
    dim = points[0].dim
    for p in points:
        if p.dim != dim:
            raise DimensionMismatch("points disagree on dimension")
    distinct = list(dict.fromkeys(points))
    rng = random.Random(seed)
    rng.shuffle(distinct)
    ball = _welzl(distinct, [], dim)
    assert ball is not None
    return ball
