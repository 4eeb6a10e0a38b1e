from fractions import Fraction

import pytest

from quadwiener.analyze import degree3_profile, min_degree
from quadwiener.bounds import conjectured_max, dec_bound
from quadwiener.construct import build_qn, from_faces
from quadwiener.embed import canonical_code, validate_quadrangulation
from quadwiener.errors import (
    EdgePresentError,
    NotGoodError,
    SizeMismatchError,
    TooSmallError,
    WrongConfigurationError,
    WrongDegreeError,
)
from quadwiener.metrics import all_pairs_distances, status, wiener_index
from quadwiener.surgery import (
    SurgeryCertificate,
    contract_to_x,
    contraction_context,
    dec,
    delete_degree2,
    good_vertex_surgery,
    min_dec,
    survivor_map,
)

from conftest import enumerated


@pytest.fixture(scope="module")
def gadget():
    """The 7-vertex contraction environment: v=0, x1=1, x2=2, x3=3, x4=4, z1=5, z2=6."""
    return validate_quadrangulation(
        from_faces([(0, 1, 3, 2), (0, 1, 4, 2), (3, 5, 4, 1), (3, 6, 4, 2), (5, 3, 6, 4)])
    )


# -- degree-2 deletion -----------------------------------------------------------


def test_delete_apex_recovers_c4(pyramid5, c4):
    out = delete_degree2(pyramid5, 4)
    assert canonical_code(out) == canonical_code(c4)


def test_delete_ladder_end():
    q = build_qn(6)
    end = next(v for v in range(6) if q.degrees[v] == 2)
    out = delete_degree2(q, end)
    assert out.n == 5
    assert wiener_index(out) <= conjectured_max(5) == 14


def test_delete_rejects_c4(c4):
    with pytest.raises(TooSmallError):
        delete_degree2(c4, 0)


def test_delete_rejects_wrong_degree(cube):
    with pytest.raises(WrongDegreeError):
        delete_degree2(cube, 0)


def test_deletion_bound_on_enumerated():
    for n in range(5, 9):
        for q in enumerated(n):
            for v in range(q.n):
                if q.degrees[v] == 2:
                    out = delete_degree2(q, v)
                    assert out.n == n - 1
                    assert wiener_index(q) <= wiener_index(out) + status(q, (v,))


# -- contraction -----------------------------------------------------------------


def test_contraction_of_gadget(gadget, pyramid5):
    ctx = contraction_context(gadget, 0)
    assert (ctx.x1, ctx.x2, ctx.x3, ctx.x4) == (1, 2, 3, 4)
    assert {ctx.z1, ctx.z2} == {5, 6}
    out = contract_to_x(gadget, 0)
    assert out.n == 5
    assert canonical_code(out) == canonical_code(pyramid5)


def test_contraction_distance_identities(gadget):
    out = contract_to_x(gadget, 0)
    relabel = survivor_map(gadget.n, (0, 1, 2))
    x_new = out.n - 1
    d_old = all_pairs_distances(gadget)
    d_new = all_pairs_distances(out)
    survivors = [3, 4, 5, 6]
    for u in survivors:
        assert d_old[u][0] == d_new[relabel[u]][x_new] + 1
        for w in survivors:
            assert d_old[u][w] == d_new[relabel[u]][relabel[w]]


def test_contraction_structural_distances(gadget):
    d = all_pairs_distances(gadget)
    special = (3, 4, 5, 6, 0)  # x3, x4, z1, z2, v
    total = sum(d[x][w] for x in (1, 2) for w in special)
    assert total == 14  # 12 over the cherry set plus the two edges to v
    assert sum(d[x][w] for x in (1, 2) for w in special[:4]) == 12


def test_contraction_rejects_wrong_second_level():
    # an enumerated degree-2 vertex whose second level has 3+ vertices
    hits = 0
    for q in enumerated(8):
        for v in range(q.n):
            if q.degrees[v] != 2:
                continue
            from quadwiener.metrics import level_structure

            if len(level_structure(q, (v,)).levels[2]) != 2:
                with pytest.raises(WrongConfigurationError):
                    contraction_context(q, v)
                hits += 1
    assert hits > 0


def test_contraction_rejects_small(pyramid5):
    with pytest.raises(TooSmallError):
        contract_to_x(pyramid5, 4)


def test_contraction_decomposition_on_enumerated():
    for n in (7, 9):
        for q in enumerated(n):
            for v in range(q.n):
                if q.degrees[v] != 2:
                    continue
                try:
                    ctx = contraction_context(q, v)
                except (WrongConfigurationError, TooSmallError):
                    continue
                out = contract_to_x(q, v)
                assert out.n == n - 2
                d = all_pairs_distances(q)
                sx1 = sum(d[u][ctx.x1] for u in range(n) if u not in (ctx.x1, ctx.x2))
                sx2 = sum(d[u][ctx.x2] for u in range(n) if u not in (ctx.x1, ctx.x2))
                assert wiener_index(q) == wiener_index(out) + (n - 3) + sx1 + sx2 + 2


# -- good-vertex surgery -----------------------------------------------------------


def test_cube_surgery_produces_seven_vertex_quadrangulation(cube):
    profile = degree3_profile(cube, 0)
    out = good_vertex_surgery(cube, profile, 1)
    assert out.n == 7
    assert wiener_index(out) == 34


def test_cube_case_chain(cube):
    profile = degree3_profile(cube, 0)
    out = good_vertex_surgery(cube, profile, 1)
    d = dec(cube, out, 0)
    assert d == 2
    assert wiener_index(cube) == wiener_index(out) + status(cube, (0,)) + d
    assert wiener_index(cube) <= wiener_index(out) + 12 + 2


def test_surgery_rejects_present_edge():
    from test_analyze import non_good_instance

    q = non_good_instance()
    profile = degree3_profile(q, 0)
    present = profile.present.index(True) + 1
    with pytest.raises(EdgePresentError):
        good_vertex_surgery(q, profile, present)
    # the two absent edges still admit the surgery
    for i in (1, 2, 3):
        if i != present:
            out = good_vertex_surgery(q, profile, i)
            assert out.n == q.n - 1


def test_dec_examples_and_min_dec_bound_on_cube(cube):
    profile = degree3_profile(cube, 0)
    for i in (1, 2, 3):
        assert dec(cube, good_vertex_surgery(cube, profile, i), 0) == 2
    index, value = min_dec(cube, profile)
    assert (index, value) == (1, 2)
    assert Fraction(value) <= dec_bound(8) == Fraction(49, 18)


def test_dec_size_mismatch(cube, pyramid5):
    with pytest.raises(SizeMismatchError):
        dec(cube, pyramid5, 0)


def test_min_dec_rejects_non_good():
    from test_analyze import non_good_instance

    q = non_good_instance()
    profile = degree3_profile(q, 0)
    with pytest.raises(NotGoodError):
        min_dec(q, profile)


def test_min_dec_bound_and_dec_nonnegative_on_enumerated():
    for n in range(8, 10):
        for q in enumerated(n):
            if min_degree(q) != 3:
                continue
            for v in range(q.n):
                if q.degrees[v] != 3:
                    continue
                profile = degree3_profile(q, v)
                if not profile.is_good:
                    continue
                values = []
                for i in (1, 2, 3):
                    out = good_vertex_surgery(q, profile, i)
                    assert out.n == n - 1
                    value = dec(q, out, v)
                    assert value >= 0
                    values.append(value)
                assert min(values) <= dec_bound(n)


def test_certificate_pass_flag_semantics():
    good = SurgeryCertificate.check("demo", 8, None, 1, Fraction(3, 2))
    assert good.passed
    bad = SurgeryCertificate.check("demo", 8, None, Fraction(5, 2), 2)
    assert not bad.passed
    assert bad.to_dict()["lhs"] == "5/2"
