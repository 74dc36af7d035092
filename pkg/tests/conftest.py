import pytest

from offsetgrid.geometry import PointPrim, Scene, Segment, point


@pytest.fixture
def fig_left() -> Scene:
    """Diagonal segment with its midpoint removed (tightness scene for the
    top adjacency level at radius sqrt(2)/2)."""
    return Scene(
        2,
        (Segment(point("-1/2", "-1/2"), point("3/2", "3/2")),),
        (point("1/2", "1/2"),),
    )


@pytest.fixture
def fig_left_unpunctured() -> Scene:
    return Scene(2, (Segment(point("-1/2", "-1/2"), point("3/2", "3/2")),))


@pytest.fixture
def fig_right() -> Scene:
    """Horizontal segment with its midpoint removed (tightness scene for
    0-adjacency at radius 1/2)."""
    return Scene(
        2,
        (Segment(point("-1/2", "1/2"), point("5/2", "1/2")),),
        (point(1, "1/2"),),
    )


@pytest.fixture
def fig_right_unpunctured() -> Scene:
    return Scene(2, (Segment(point("-1/2", "1/2"), point("5/2", "1/2")),))


@pytest.fixture
def triangle_points() -> Scene:
    """Three points with pairwise distances 4, 5, 3."""
    return Scene(2, (PointPrim(point(0, 0)), PointPrim(point(4, 0)), PointPrim(point(4, 3))))


FIG_LEFT_DELTA = {
    (-1, -1), (-1, 0), (0, -1), (0, 0), (1, 1), (1, 2), (2, 1), (2, 2),
}
FIG_RIGHT_DELTA = {(0, 0), (0, 1), (2, 0), (2, 1)}
