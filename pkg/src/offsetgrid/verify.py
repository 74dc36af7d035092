"""Randomized property suites at desk scale.

Each suite generates seeded scenes or discrete sets and checks one of the
guarantees the package is built around: lattice capture at radius sqrt(n)/2,
ball-discretization connectivity, the two sharp connectivity thresholds with
their corollaries, the union lemmas, the radius chain, and the bottleneck
oracle equivalence.  Every property here is a theorem, so a single failure
is an implementation bug; the failure record carries the seed and scene for
bit-identical replay.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import InternalCheckError, UnknownSuiteError
from .exactness import sqrt_sum_sign, sqrt_upper
from .geometry import Point, PointPrim, Polyline, Scene
from .lattice import DiscreteSet, is_k_connected, offset_discretize
from .radii import delta_from_gaps, gap_matrix, rho_from_gaps, rho_oracle
from .scenefile import scene_to_text


@dataclass(frozen=True)
class SceneGenSpec:
    """Parameters for the punctured-chain scene generator."""

    seed: int
    dim: int
    edges: tuple[int, int] = (1, 4)
    puncture_count: tuple[int, int] = (1, 3)
    denominator_bound: int = 6


@dataclass(frozen=True)
class SuiteFailure:
    trial: int
    seed: int
    scene: Optional[str]
    witness: str


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    trials: int
    seed: int
    failures: tuple[SuiteFailure, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures


def _rat(rng: random.Random, span: int, den_bound: int) -> Fraction:
    d = rng.randint(1, den_bound)
    return Fraction(rng.randint(-span * d, span * d), d)


def gen_scene(spec: SceneGenSpec) -> Scene:
    """A random chain of segments with punctured edge interiors.

    The chain is strictly monotone in the first coordinate, so it never
    self-intersects: the closure is connected while every interior puncture
    genuinely disconnects the set.  Deterministic for a given spec.
    """
    rng = random.Random(spec.seed)
    n_edges = rng.randint(*spec.edges)
    bound = spec.denominator_bound
    vertex = [_rat(rng, 2, bound) for _ in range(spec.dim)]
    vertices = [Point(tuple(vertex))]
    for _ in range(n_edges):
        d = rng.randint(1, bound)
        vertex[0] = vertex[0] + Fraction(rng.randint(1, d + bound), d + bound)
        for i in range(1, spec.dim):
            e = rng.randint(1, bound)
            vertex[i] = vertex[i] + Fraction(rng.randint(-e, e), e)
        vertices.append(Point(tuple(vertex)))
    punctures: list[Point] = []
    count = rng.randint(*spec.puncture_count)
    for _ in range(count):
        edge = rng.randint(0, n_edges - 1)
        q = rng.randint(2, bound)
        t = Fraction(rng.randint(1, q - 1), q)
        a, b = vertices[edge], vertices[edge + 1]
        pt = Point(tuple(x + t * (y - x) for x, y in zip(a, b)))
        if pt not in punctures:
            punctures.append(pt)
    return Scene(spec.dim, (Polyline(tuple(vertices)),), tuple(punctures))


def _trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def _random_point(rng: random.Random, dim: int, span: int = 4, den_bound: int = 4) -> Point:
    return Point(tuple(_rat(rng, span, den_bound) for _ in range(dim)))


def _distinct_points(rng: random.Random, dim: int, m: int, span: int = 6) -> list[Point]:
    pts: list[Point] = []
    while len(pts) < m:
        p = _random_point(rng, dim, span=span)
        if p not in pts:
            pts.append(p)
    return pts


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def _suite_fact1(trials: int, seed: int) -> list[SuiteFailure]:
    failures = []
    for t in range(trials):
        s = _trial_seed(seed, t)
        rng = random.Random(s)
        n = (2, 3, 4)[t % 3]
        scene = Scene(n, (PointPrim(_random_point(rng, n, den_bound=9)),))
        if not offset_discretize(scene, Fraction(n, 4)).points:
            failures.append(
                SuiteFailure(t, s, scene_to_text(scene), "empty discretization at r2=n/4")
            )
    return failures


def _suite_fact4(trials: int, seed: int) -> list[SuiteFailure]:
    failures = []
    for t in range(trials):
        s = _trial_seed(seed, t)
        rng = random.Random(s)
        n = (2, 3, 4)[t % 3]
        center = _random_point(rng, n, den_bound=9)
        if t % 2:
            radius = Fraction(rng.randint(1, 16), 8)
        else:
            radius = sqrt_upper(Fraction(n, 4), 2) + Fraction(rng.randint(0, 8), 8)
        scene = Scene(n, (PointPrim(center),))
        ball_points = offset_discretize(scene, radius * radius)
        if not ball_points.points:
            continue
        if not is_k_connected(ball_points, n - 1):
            failures.append(
                SuiteFailure(
                    t, s, scene_to_text(scene),
                    f"ball lattice set (radius {radius}) not ({n - 1})-connected",
                )
            )
    return failures


def _grow_connected(rng: random.Random, dim: int, k: int, size: int) -> set:
    pts = [tuple([0] * dim)]
    seen = {pts[0]}
    while len(pts) < size:
        base = pts[rng.randrange(len(pts))]
        count = rng.randint(1, dim - k)
        axes = rng.sample(range(dim), count)
        off = [0] * dim
        for a in axes:
            off[a] = rng.choice((-1, 1))
        nb = tuple(b + o for b, o in zip(base, off))
        if nb not in seen:
            seen.add(nb)
            pts.append(nb)
    return seen


def _adjacency_offset(rng: random.Random, dim: int, k: int) -> tuple:
    count = rng.randint(1, dim - k)
    axes = rng.sample(range(dim), count)
    off = [0] * dim
    for a in axes:
        off[a] = rng.choice((-1, 1))
    return tuple(off)


def _suite_facts23(trials: int, seed: int) -> list[SuiteFailure]:
    failures = []
    for t in range(trials):
        s = _trial_seed(seed, t)
        rng = random.Random(s)
        n = (2, 3, 4)[t % 3]
        k = rng.randint(0, n - 1)
        a_set = _grow_connected(rng, n, k, rng.randint(1, 10))
        b_set = _grow_connected(rng, n, k, rng.randint(1, 10))
        anchor = rng.choice(sorted(a_set))
        bridge = _adjacency_offset(rng, n, k)
        shifted = {
            tuple(p + q + o for p, q, o in zip(b, anchor, bridge)) for b in b_set
        }
        if not is_k_connected(DiscreteSet(n, frozenset(a_set | shifted)), k):
            failures.append(SuiteFailure(t, s, None, f"bridged union not {k}-connected"))
            continue
        overlapped = {tuple(p + q for p, q in zip(b, anchor)) for b in b_set}
        if not is_k_connected(DiscreteSet(n, frozenset(a_set | overlapped)), k):
            failures.append(SuiteFailure(t, s, None, f"overlapping union not {k}-connected"))
    return failures


def _theorem_radii(n: int, part_two: bool) -> list[Fraction]:
    base = Fraction(n - 1, 4) if part_two else Fraction(n, 4)
    return [base + Fraction(1, k * k) for k in (1, 2, 4)]


def _suite_theorem(trials: int, seed: int, part_two: bool) -> list[SuiteFailure]:
    failures = []
    for t in range(trials):
        s = _trial_seed(seed, t)
        n = (2, 3)[t % 2]
        scene = gen_scene(SceneGenSpec(seed=s, dim=n))
        j = 0 if part_two else n - 1
        for r2 in _theorem_radii(n, part_two):
            if not is_k_connected(offset_discretize(scene, r2), j):
                failures.append(
                    SuiteFailure(
                        t, s, scene_to_text(scene),
                        f"discretization at r2={r2} not {j}-connected",
                    )
                )
                break
    return failures


def _suite_theorem1a(trials: int, seed: int) -> list[SuiteFailure]:
    return _suite_theorem(trials, seed, part_two=False)


def _suite_theorem1b(trials: int, seed: int) -> list[SuiteFailure]:
    return _suite_theorem(trials, seed, part_two=True)


def _suite_corollary1(trials: int, seed: int) -> list[SuiteFailure]:
    # connected scenes reach the thresholds inclusively
    failures = []
    for t in range(trials):
        s = _trial_seed(seed, t)
        n = (2, 3)[t % 2]
        scene = gen_scene(SceneGenSpec(seed=s, dim=n, puncture_count=(0, 0)))
        checks = ((Fraction(n, 4), n - 1), (Fraction(n - 1, 4), 0))
        for r2, j in checks:
            if not is_k_connected(offset_discretize(scene, r2), j):
                failures.append(
                    SuiteFailure(
                        t, s, scene_to_text(scene),
                        f"connected scene at r2={r2} not {j}-connected",
                    )
                )
                break
    return failures


def _suite_corollary2(trials: int, seed: int) -> list[SuiteFailure]:
    failures = []
    for t in range(trials):
        s = _trial_seed(seed, t)
        rng = random.Random(s)
        n = (2, 3)[t % 2]
        pts = _distinct_points(rng, n, rng.randint(2, 5), span=4)
        scene = Scene(n, tuple(PointPrim(p) for p in pts))
        rho = rho_from_gaps(gap_matrix(scene))
        rho2 = rho.square()
        if rho2 is None:
            raise InternalCheckError("point-scene connection radius must square rationally")
        for shift, j in ((n, n - 1), (n - 1, 0)):
            # exact rational radius strictly above rho + sqrt(shift)/2
            r2 = rho2 + Fraction(shift, 4) + sqrt_upper(rho2 * shift, 2) + Fraction(1, 50)
            if sqrt_sum_sign([(r2 - rho2 - Fraction(shift, 4), 1), (-1, rho2 * shift)]) <= 0:
                raise InternalCheckError("sample radius not strictly above the bound")
            if not is_k_connected(offset_discretize(scene, r2), j):
                failures.append(
                    SuiteFailure(
                        t, s, scene_to_text(scene),
                        f"point scene at r2={r2} not {j}-connected",
                    )
                )
                break
    return failures


def _suite_prop31(trials: int, seed: int) -> list[SuiteFailure]:
    failures = []
    for t in range(trials):
        s = _trial_seed(seed, t)
        rng = random.Random(s)
        n = (2, 3, 4)[t % 3]
        pts = _distinct_points(rng, n, rng.randint(2, 64))
        scene = Scene(n, tuple(PointPrim(p) for p in pts))
        g = gap_matrix(scene)
        rho = rho_from_gaps(g)
        delta = delta_from_gaps(g)
        from .enclosing import min_enclosing_ball

        omega = min_enclosing_ball(pts, seed=s)
        if rho.cmp_square(omega.r2) > 0:
            failures.append(SuiteFailure(t, s, scene_to_text(scene), "rho exceeds omega"))
        elif delta.cmp_square(omega.r2) < 0:
            failures.append(SuiteFailure(t, s, scene_to_text(scene), "omega exceeds delta"))
    return failures


def _suite_rho_equiv(trials: int, seed: int) -> list[SuiteFailure]:
    failures = []
    for t in range(trials):
        s = _trial_seed(seed, t)
        rng = random.Random(s)
        n = (2, 3, 4)[t % 3]
        pts = _distinct_points(rng, n, rng.randint(1, 64))
        scene = Scene(n, tuple(PointPrim(p) for p in pts))
        via_tree = rho_from_gaps(gap_matrix(scene))
        via_sweep = rho_oracle(pts)
        if via_tree != via_sweep:
            failures.append(
                SuiteFailure(
                    t, s, scene_to_text(scene),
                    f"tree {via_tree!r} != sweep {via_sweep!r}",
                )
            )
    return failures


SUITES: dict[str, Callable[[int, int], list[SuiteFailure]]] = {
    "fact1": _suite_fact1,
    "fact4": _suite_fact4,
    "facts23": _suite_facts23,
    "theorem1a": _suite_theorem1a,
    "theorem1b": _suite_theorem1b,
    "corollary1": _suite_corollary1,
    "corollary2": _suite_corollary2,
    "prop31": _suite_prop31,
    "rho_equiv": _suite_rho_equiv,
}


def run_suite(name: str, trials: int, seed: int) -> SuiteReport:
    """Run a named property suite; deterministic for (name, trials, seed)."""
    if name not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}"
        )
    start = time.perf_counter()
    failures = SUITES[name](trials, seed)
    elapsed = time.perf_counter() - start
    return SuiteReport(
        suite=name, trials=trials, seed=seed, failures=tuple(failures), elapsed=elapsed
    )
