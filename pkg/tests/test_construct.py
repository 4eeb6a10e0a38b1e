import pytest

from quadwiener.bounds import conjectured_max
from quadwiener.construct import build_qn, fixture, from_faces
from quadwiener.embed import (
    canonical_code,
    read_planar_code,
    validate_quadrangulation,
    write_planar_code,
)
from quadwiener.errors import TooSmallError, UnknownFixtureError
from quadwiener.metrics import wiener_index


def test_smallest_ladder_is_c4(c4):
    q = build_qn(4)
    assert q.n == 4
    assert canonical_code(q) == canonical_code(c4)


def test_ladder_six_matches_expected_edges():
    q = build_qn(6)
    # top path 0-1-2, bottom path 3-4-5, rungs, chord 0-5
    assert sorted(q.edges()) == [
        (0, 1), (0, 3), (0, 5), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5),
    ]
    assert wiener_index(q) == 23 == conjectured_max(6)


def test_ladder_eight_attains_bound():
    q = build_qn(8)
    assert wiener_index(q) == conjectured_max(8) == 50


def test_ladder_attains_bound_up_to_200():
    for n in range(4, 201):
        assert wiener_index(build_qn(n)) == conjectured_max(n)


def test_even_ladders_have_two_degree_two_ends():
    for n in range(6, 40, 2):
        q = build_qn(n)
        assert sorted(q.degrees).count(2) == 2


def test_ladder_survives_planar_code_round_trip():
    for n in (4, 9, 24, 51):
        q = build_qn(n)
        (back,) = read_planar_code(write_planar_code([q]))
        assert canonical_code(validate_quadrangulation(back)) == canonical_code(q)


def test_ladder_rejects_tiny():
    with pytest.raises(TooSmallError):
        build_qn(3)


def test_fixture_values(c4, pyramid5, cube):
    assert wiener_index(c4) == 8
    assert wiener_index(cube) == 48
    assert min(pyramid5.degrees) == 2
    assert min(cube.degrees) == 3


def test_unknown_fixture():
    with pytest.raises(UnknownFixtureError):
        fixture("dodecahedron")


def test_from_faces_rejects_open_edge():
    with pytest.raises(ValueError):
        from_faces([(0, 1, 2, 3)])


def test_from_faces_rejects_inconsistent_corners():
    # edge {0,1} would lie on three faces
    with pytest.raises(ValueError):
        from_faces([(0, 1, 2, 3), (0, 1, 2, 3), (0, 1, 4, 5), (0, 1, 4, 5)])


def test_from_faces_builds_cube(cube):
    walks = [tuple(w) for w in cube.faces]
    rebuilt = from_faces(walks)
    assert canonical_code(rebuilt) == canonical_code(cube)
