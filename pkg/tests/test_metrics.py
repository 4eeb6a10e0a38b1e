import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadwiener.errors import EmptySourceError
from quadwiener.metrics import (
    all_pairs_distances,
    level_structure,
    status,
    wiener_index,
)

from conftest import enumerated


def test_c4_levels_from_one_vertex(c4):
    ls = level_structure(c4, (0,))
    assert ls.level_sizes() == (1, 2, 1)
    assert ls.levels[0] == frozenset((0,))
    assert ls.terminal_index == 2


def test_cube_level_sizes(cube):
    assert level_structure(cube, (0,)).level_sizes() == (1, 3, 3, 1)


def test_whole_vertex_set_is_level_zero(c4):
    ls = level_structure(c4, range(4))
    assert ls.terminal_index == 0
    assert ls.levels == (frozenset(range(4)),)


def test_levels_partition_and_chain():
    for q in enumerated(8):
        for v in range(q.n):
            ls = level_structure(q, (v,))
            union = frozenset().union(*ls.levels)
            assert union == frozenset(range(q.n))
            assert sum(ls.level_sizes()) == q.n
            for i in range(1, ls.terminal_index + 1):
                assert all(
                    any(u in ls.levels[i - 1] for u in q.rotation[w])
                    for w in ls.levels[i]
                )


def test_empty_source_rejected(c4):
    with pytest.raises(EmptySourceError):
        level_structure(c4, ())
    with pytest.raises(EmptySourceError):
        status(c4, ())


def test_status_examples(c4, cube):
    assert status(c4, (0,)) == 4
    assert status(cube, (0,)) == 12
    assert status(cube, range(8)) == 0


def test_wiener_examples(c4, cube, pyramid5):
    assert wiener_index(c4) == 8
    assert wiener_index(cube) == 48
    assert wiener_index(pyramid5) == 14


def test_wiener_is_half_the_status_sum():
    for n in range(4, 9):
        for q in enumerated(n):
            assert 2 * wiener_index(q) == sum(status(q, (v,)) for v in range(q.n))


def test_status_equals_weighted_level_sum():
    for q in enumerated(7):
        for v in range(q.n):
            ls = level_structure(q, (v,))
            assert status(q, (v,)) == sum(
                i * size for i, size in enumerate(ls.level_sizes())
            )


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_status_monotone_under_source_growth(data):
    pool = enumerated(8)
    q = data.draw(st.sampled_from(pool))
    small = data.draw(st.sets(st.integers(0, q.n - 1), min_size=1, max_size=3))
    extra = data.draw(st.sets(st.integers(0, q.n - 1), max_size=3))
    assert status(q, small | extra) <= status(q, small)


def test_bipartite_edge_distance_parity():
    for q in enumerated(8):
        dist = all_pairs_distances(q)
        for u, w in q.edges():
            for x in range(q.n):
                assert abs(dist[x][u] - dist[x][w]) == 1


def _floyd_warshall(q):
    big = 10 * q.n
    d = [[0 if i == j else big for j in range(q.n)] for i in range(q.n)]
    for u, w in q.edges():
        d[u][w] = d[w][u] = 1
    for k in range(q.n):
        dk = d[k]
        for i in range(q.n):
            dik = d[i][k]
            row = d[i]
            for j in range(q.n):
                if dik + dk[j] < row[j]:
                    row[j] = dik + dk[j]
    return d


def test_bfs_agrees_with_floyd_warshall_up_to_n8():
    for n in range(4, 9):
        for q in enumerated(n):
            assert all_pairs_distances(q) == _floyd_warshall(q)
