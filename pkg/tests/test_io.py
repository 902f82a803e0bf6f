import pytest

from avkit.errors import ParseError
from avkit.field import GF, QQ
from avkit.geometry import X1_POINTS, build_fixture
from avkit.groebner import same_ideal
from avkit.io import load_ideal, load_points, parse_ideal, parse_points, sniff, write_ideal, write_points

QUARTICS = "ring: n=3 field=fp:2147483647\n# thirteen points\ny^3*z - y*z^3\nx^3*z - x*z^3\nx^3*y - x*y^3\n"


def test_points_file_gives_the_quartics(tmp_path):
    p = tmp_path / "x1.txt"
    write_points(X1_POINTS, p)
    q = tmp_path / "x1.ideal"
    q.write_text(QUARTICS)
    assert sniff(p) == "points" and sniff(q) == "ideal"
    X = load_points(p)
    Y, notice = load_ideal(q)
    assert notice is None
    assert same_ideal(X, Y)
    assert len(X.meta["points"]) == 13


def test_saturation_notice(tmp_path):
    q = tmp_path / "emb.ideal"
    q.write_text("ring: n=3 field=rationals\nx^2\nx*y\nx*z\ny^3\ny^2*z\n")
    S, notice = load_ideal(q)
    assert notice and S.field == QQ
    assert same_ideal(S, parse_ideal("ring: n=3 field=rationals\nx\ny^2"))


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("", 1, 1),
        ("# only a comment\n", 1, 1),
        ("1 0 0\n1 2\n", 2, 1),
        ("1 0 0\n0 0 0\n", 2, 1),
        ("1 0 0\n  2 0 0\n", 2, 3),
        ("1 0 0\n0 1 a\n", 2, 5),
    ],
)
def test_points_errors_carry_location(text, line, col):
    with pytest.raises(ParseError) as err:
        parse_points(text)
    assert (err.value.line, err.value.column) == (line, col)


@pytest.mark.parametrize(
    "text,line",
    [("", 1), ("x^2\n", 1), ("ring: n=3\nx^2 + y\n", 2), ("ring: n=3\nx^2 +\n", 2), ("ring: n=3 field=reals\n", 1),
     ("ring: n=3\n", 1)],
)
def test_ideal_errors_carry_location(text, line):
    with pytest.raises(ParseError) as err:
        parse_ideal(text)
    assert err.value.line == line


def test_field_line_and_round_trip(tmp_path):
    pts, F = parse_points("field: rationals\n1/2 1 0\n0 1 3\n")
    assert F == QQ and pts[0][0] == QQ(1) / 2
    I = build_fixture("twisted_cubic", GF)
    path = tmp_path / "tc.ideal"
    write_ideal(I, path)
    J, _ = load_ideal(path, saturate=False)
    assert same_ideal(I, J)


def test_empty_file_sniff(tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("")
    with pytest.raises(ParseError):
        sniff(p)
