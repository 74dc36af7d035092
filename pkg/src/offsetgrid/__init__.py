"""Exact offset discretization of punctured scenes on the integer lattice.

Core layers:

* :mod:`offsetgrid.exactness`: rational square-root comparisons and the
  exact distance value type;
* :mod:`offsetgrid.geometry`: scenes, primitives, gaps, offset membership;
* :mod:`offsetgrid.enclosing`: exact smallest enclosing balls;
* :mod:`offsetgrid.lattice`: discretizations, k-connectivity, voxel covers;
* :mod:`offsetgrid.radii`: radius functionals and the critical-radius sweep;
* :mod:`offsetgrid.verify`: seeded property suites;
* :mod:`offsetgrid.render`: SVG output;
* :mod:`offsetgrid.service` / :mod:`offsetgrid.cli`: HTTP surface and its
  thin command-line client.
"""

__version__ = "0.1.0"

from .exactness import ExactDistance, sqrt_sum_sign
from .geometry import (
    Ball,
    Point,
    PointPrim,
    Polyline,
    Scene,
    Segment,
    closure_connected,
    exact_dist2,
    gap2,
    minimizer_set,
    offset_member,
    point,
)
from .enclosing import EnclosingBall, min_enclosing_ball
from .lattice import (
    ComponentLabeling,
    DiscreteSet,
    Voxel,
    components,
    gauss_discretize,
    is_k_connected,
    k_adjacent,
    offset_discretize,
    order_voxels,
    voxel_cover,
)
from .radii import (
    AlphaResult,
    CriticalSweep,
    GapMatrix,
    RadiiReport,
    alpha,
    critical_radii,
    delta_from_gaps,
    gap_matrix,
    radii_report,
    rho_from_gaps,
    rho_oracle,
)
from .verify import SceneGenSpec, SuiteReport, gen_scene, run_suite

__all__ = [
    "__version__",
    "ExactDistance",
    "sqrt_sum_sign",
    "Ball",
    "Point",
    "PointPrim",
    "Polyline",
    "Scene",
    "Segment",
    "closure_connected",
    "exact_dist2",
    "gap2",
    "minimizer_set",
    "offset_member",
    "point",
    "EnclosingBall",
    "min_enclosing_ball",
    "ComponentLabeling",
    "DiscreteSet",
    "Voxel",
    "components",
    "gauss_discretize",
    "is_k_connected",
    "k_adjacent",
    "offset_discretize",
    "order_voxels",
    "voxel_cover",
    "AlphaResult",
    "CriticalSweep",
    "GapMatrix",
    "RadiiReport",
    "alpha",
    "critical_radii",
    "delta_from_gaps",
    "gap_matrix",
    "radii_report",
    "rho_from_gaps",
    "rho_oracle",
    "SceneGenSpec",
    "SuiteReport",
    "gen_scene",
    "run_suite",
]
