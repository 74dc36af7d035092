"""Scene document parsing, canonical serialization, radius arguments."""

from fractions import Fraction

import pytest

from offsetgrid.errors import RadiusError, SceneError
from offsetgrid.geometry import Ball, Polyline, Segment, point
from offsetgrid.scenefile import (
    parse_radius,
    parse_scene,
    rat_str,
    scene_from_document,
    scene_to_text,
)


FIG_LEFT_TEXT = """
{
  "dim": 2,
  "primitives": [
    {"type": "segment", "a": ["-1/2", "-1/2"], "b": ["3/2", "3/2"]}
  ],
  "punctures": [["1/2", "1/2"]]
}
"""


class TestParsing:
    def test_fig_left_document(self):
        scene = parse_scene(FIG_LEFT_TEXT)
        assert scene.dim == 2
        assert scene.primitives == (Segment(point("-1/2", "-1/2"), point("3/2", "3/2")),)
        assert scene.punctures == (point("1/2", "1/2"),)

    def test_decimals_parse_exactly(self):
        scene = parse_scene(
            '{"dim": 2, "primitives": [{"type": "point", "coords": [0.1, -2.25]}]}'
        )
        prim = scene.primitives[0]
        assert prim.p.coords == (Fraction(1, 10), Fraction(-9, 4))

    def test_integers_and_strings_mix(self):
        scene = parse_scene(
            '{"dim": 2, "primitives": ['
            '{"type": "ball", "center": [1, "1/3"], "radius": "0.5"},'
            '{"type": "polyline", "points": [[0, 0], [1, 0], [1, "3/2"]]}]}'
        )
        ball, poly = scene.primitives
        assert isinstance(ball, Ball) and ball.radius == Fraction(1, 2)
        assert isinstance(poly, Polyline) and poly.pts[2] == point(1, "3/2")

    def test_components_parse(self):
        scene = parse_scene(
            '{"dim": 2, "primitives": ['
            '{"type": "point", "coords": [0, 0]},'
            '{"type": "point", "coords": [3, 0]}],'
            '"components": [[0], [1]]}'
        )
        assert scene.components == ((0,), (1,))

    @pytest.mark.parametrize(
        "text",
        [
            "not json at all",
            "[1, 2, 3]",
            '{"primitives": [{"type": "point", "coords": [0, 0]}]}',  # no dim
            '{"dim": 2, "primitives": []}',
            '{"dim": 2, "primitives": [{"type": "blob", "coords": [0, 0]}]}',
            '{"dim": 2, "primitives": [{"type": "point", "coords": ["1/0"]}]}',
            '{"dim": 2, "primitives": [{"type": "segment", "a": [0, 0], "b": [0, 0]}]}',
            '{"dim": 2, "primitives": [{"type": "point", "coords": [0, 0]}], '
            '"punctures": [[9, 9]]}',
            '{"dim": 2, "primitives": [{"type": "point", "coords": [0, 0]}], '
            '"components": [[0], [0]]}',
        ],
    )
    def test_bad_documents_rejected(self, text):
        with pytest.raises(SceneError):
            parse_scene(text)


class TestRoundTrip:
    def test_parse_serialize_parse(self, fig_left, triangle_points):
        for scene in (fig_left, triangle_points):
            text = scene_to_text(scene)
            again = parse_scene(text)
            assert again == scene
            assert scene_to_text(again) == text  # canonical form is stable

    def test_serializes_decimals_canonically(self):
        scene = parse_scene(
            '{"dim": 2, "primitives": [{"type": "point", "coords": [0.5, 2.0]}]}'
        )
        text = scene_to_text(scene)
        assert '"1/2"' in text and "2" in text
        assert parse_scene(text) == scene

    def test_rat_str(self):
        assert rat_str(Fraction(3, 4)) == "3/4"
        assert rat_str(Fraction(8, 4)) == 2
        assert rat_str(-5) == -5


class TestRadiusArgument:
    def test_forms(self):
        assert parse_radius("sqrt(2)/2") == Fraction(1, 2)
        assert parse_radius("sqrt(3)/2") == Fraction(3, 4)
        assert parse_radius("1/2") == Fraction(1, 4)
        assert parse_radius("0.5") == Fraction(1, 4)
        assert parse_radius("2") == 4
        assert parse_radius("r2=1/2") == Fraction(1, 2)
        assert parse_radius("r2=0.49") == Fraction(49, 100)
        assert parse_radius(" sqrt( 5 ) / 2 ") == Fraction(5, 4)

    @pytest.mark.parametrize("bad", ["", "abc", "-1", "r2=-1/2", "sqrt(x)/2", "sqrt(2)/3", "1/0"])
    def test_bad_forms(self, bad):
        with pytest.raises(RadiusError):
            parse_radius(bad)

    def test_document_round_trip_via_dict(self, fig_right):
        from offsetgrid.scenefile import scene_to_document

        assert scene_from_document(scene_to_document(fig_right)) == fig_right
