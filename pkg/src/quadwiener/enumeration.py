"""Exhaustive generation of simple sphere quadrangulations up to isomorphism.

The generator grows graphs from C4 by the two inverse surgeries this package
implements: (a) inserting a degree-2 vertex across a face diagonal and (b)
removing an edge between two faces and planting a degree-3 vertex on one
alternating triple of the merged hexagon.  Candidates that fail validation
are discarded; duplicates are rejected through canonical codes.  Whether the
two moves reach everything is deliberately treated as unproven, so an
independent brute-force oracle (direct rotation-system search over all
candidate labelled graphs) must agree for n <= 8; larger levels are
"generator-complete".
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .embed import (
    Quadrangulation,
    build_embedded,
    canonical_code,
    graph_from_record,
    validate_quadrangulation,
)
from .errors import (
    EulerViolationError,
    FaceLengthViolationError,
    LimitExceededError,
    LoopOrMultiEdgeError,
    TooSmallError,
)

DEFAULT_LIMIT = 12
ORACLE_LIMIT = 8

_LEVELS: dict[int, tuple[bytes, ...]] = {}


@dataclass(frozen=True)
class EnumerationRun:
    """One exhausted size level: canonical planar_code record bodies, sorted."""

    n: int
    count: int
    records: tuple[bytes, ...]
    elapsed_seconds: float

    def graphs(self) -> Iterator[Quadrangulation]:
        for record in self.records:
            yield validate_quadrangulation(graph_from_record(record))


def _c4_record() -> bytes:
    return canonical_code(build_embedded(4, [(1, 3), (2, 0), (3, 1), (0, 2)]))


def expand(parent: Quadrangulation) -> set[bytes]:
    """Canonical codes of all children of one parent (moves (a) and (b))."""
    out: set[bytes] = set()
    n = parent.n
    w = n  # label of the inserted vertex

    # move (a): new degree-2 vertex across either diagonal of every face
    for walk in parent.faces:
        a, b, c, d = walk
        for p, rpre, q, qpre in ((a, d, c, b), (b, a, d, c)):
            rotation = [list(r) for r in parent.rotation]
            rp = rotation[p]
            rp.insert(rp.index(rpre) + 1, w)
            rq = rotation[q]
            rq.insert(rq.index(qpre) + 1, w)
            rotation.append([p, q])
            out.add(canonical_code(Quadrangulation(rotation)))

    # move (b): drop an edge, plant a degree-3 vertex on an alternating triple
    for a, b in parent.edges():
        f1 = parent.dart_face[(a, b)]
        f2 = parent.dart_face[(b, a)]
        i1 = f1.index(a)
        p, q = f1[(i1 + 2) % 4], f1[(i1 + 3) % 4]  # f1 = (a, b, p, q)
        i2 = f2.index(b)
        r, s = f2[(i2 + 2) % 4], f2[(i2 + 3) % 4]  # f2 = (b, a, r, s)
        # merged hexagon walk: a -> r -> s -> b -> p -> q -> a
        for triple, anchors, w_rotation in (
            ((a, s, p), ((a, q), (s, r), (p, b)), (s, a, p)),
            ((r, b, q), ((r, a), (b, s), (q, p)), (b, r, q)),
        ):
            if len(set(triple)) != 3:
                continue
            rotation = [list(rr) for rr in parent.rotation]
            rotation[a].remove(b)
            rotation[b].remove(a)
            for tip, after in anchors:
                row = rotation[tip]
                row.insert(row.index(after) + 1, w)
            rotation.append(list(w_rotation))
            try:
                child = Quadrangulation(rotation)
            except (FaceLengthViolationError, EulerViolationError, LoopOrMultiEdgeError, TooSmallError):
                continue
            out.add(canonical_code(child))
    return out


def _expand_record(record: bytes) -> set[bytes]:
    return expand(validate_quadrangulation(graph_from_record(record)))


def _level(n: int, workers: int = 1) -> tuple[bytes, ...]:
    if n in _LEVELS:
        return _LEVELS[n]
    if n == 4:
        level = (_c4_record(),)
    else:
        parents = _level(n - 1, workers)
        codes: set[bytes] = set()
        if workers > 1 and len(parents) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for child_set in pool.map(_expand_record, parents, chunksize=16):
                    codes |= child_set
        else:
            for record in parents:
                codes |= _expand_record(record)
        level = tuple(sorted(codes))
    _LEVELS[n] = level
    return level


def enumerate_quadrangulations(
    n: int, *, limit: int = DEFAULT_LIMIT, workers: int = 1
) -> EnumerationRun:
    """All simple sphere quadrangulations on n vertices up to isomorphism.

    Isomorphism includes orientation reversal.  ``limit`` bounds the
    feasible size (runtime, not correctness, is the binding constraint).
    """
    if n < 4:
        raise TooSmallError(f"no quadrangulation below 4 vertices, got {n}")
    if n > limit:
        raise LimitExceededError(f"n = {n} exceeds the configured limit {limit}")
    started = time.perf_counter()
    records = _level(n, workers)
    return EnumerationRun(
        n=n,
        count=len(records),
        records=records,
        elapsed_seconds=time.perf_counter() - started,
    )


def clear_cache() -> None:
    _LEVELS.clear()


# -- independent brute-force oracle ---------------------------------------------


def _rotation_has_all_quad_faces(rotation: list[tuple[int, ...]], edge_count: int) -> bool:
    """Fast check that every face walk of the rotation system has length 4."""
    pos = [{u: i for i, u in enumerate(nbrs)} for nbrs in rotation]
    seen: set[tuple[int, int]] = set()
    walks = 0
    for v0, nbrs in enumerate(rotation):
        for u0 in nbrs:
            if (v0, u0) in seen:
                continue
            a, b = v0, u0
            length = 0
            while True:
                seen.add((a, b))
                length += 1
                if length > 4:
                    return False
                r = rotation[b]
                a, b = b, r[(pos[b][a] + 1) % len(r)]
                if (a, b) == (v0, u0):
                    break
                if (a, b) in seen:
                    return False
            if length != 4:
                return False
            walks += 1
    return walks == edge_count // 2  # 2e darts in faces of length 4


def _candidate_graphs(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All connected labelled bipartite graphs with e = 2n - 4 and min degree 2.

    Graphs are yielded as adjacency tuples (sorted neighbour lists); every
    edge must lie on at least two 4-cycles, a necessary condition for the two
    bounding quadrilateral faces.
    """
    e_target = 2 * n - 4
    seen_edge_sets: set[frozenset[tuple[int, int]]] = set()
    for k in range(2, n // 2 + 1):
        for rest in combinations(range(1, n), k - 1):
            side_a = (0,) + rest
            side_b = tuple(v for v in range(n) if v not in side_a)
            if len(side_a) * len(side_b) < e_target:
                continue
            cells = [(a, b) for a in side_a for b in side_b]
            for chosen in combinations(cells, e_target):
                edge_set = frozenset(chosen)
                if edge_set in seen_edge_sets:
                    continue
                seen_edge_sets.add(edge_set)
                adj_mask = [0] * n
                degree = [0] * n
                for a, b in chosen:
                    adj_mask[a] |= 1 << b
                    adj_mask[b] |= 1 << a
                    degree[a] += 1
                    degree[b] += 1
                if min(degree) < 2:
                    continue
                # connectivity over bitmasks
                component = 1
                frontier = 1
                while frontier:
                    nxt = 0
                    m = frontier
                    while m:
                        v = m.bit_length() - 1
                        m ^= 1 << v
                        nxt |= adj_mask[v]
                    frontier = nxt & ~component
                    component |= nxt
                if component != (1 << n) - 1:
                    continue
                # every edge needs two quadrilateral faces, hence >= 2 distinct
                # 4-cycles through it (C4 itself is the one double-faced cycle)
                need = 2 if n > 4 else 1
                ok = True
                for a, b in chosen:
                    na = adj_mask[a] & ~(1 << b)
                    count = 0
                    m = adj_mask[b] & ~(1 << a)
                    while m and count < need:
                        v = m.bit_length() - 1
                        m ^= 1 << v
                        count += (adj_mask[v] & na).bit_count()
                    if count < need:
                        ok = False
                        break
                if not ok:
                    continue
                yield tuple(
                    tuple(u for u in range(n) if adj_mask[v] >> u & 1)
                    for v in range(n)
                )


def _all_embeddings(adjacency: tuple[tuple[int, ...], ...]) -> Iterator[list[tuple[int, ...]]]:
    """Every sphere rotation system of one labelled graph with all faces quadrilateral.

    Backtracks over per-vertex cyclic orders in breadth-first vertex order.
    The rotation at vertex 0 is pinned to ascending: every map admits a
    labelling in which vertex 0 reads ascending (give its neighbours the
    labels 1..d in rotation order), so no map is lost across the labelled
    family.  Partially assigned corners are checked as soon as both rotations
    of a dart pair exist, which prunes most branches near the root.
    """
    n = len(adjacency)
    adj_sets = [frozenset(nbrs) for nbrs in adjacency]
    order: list[int] = [0]
    seen = {0}
    for v in order:
        for u in adjacency[v]:
            if u not in seen:
                seen.add(u)
                order.append(u)

    pools: list[list[tuple[int, ...]]] = []
    pool_pos: list[list[dict[int, int]]] = []
    for v, nbrs in enumerate(adjacency):
        if v == 0:
            variants = [nbrs]
        else:
            head, tail = nbrs[0], nbrs[1:]
            variants = [(head,) + p for p in permutations(tail)]
        pools.append(variants)
        pool_pos.append([{u: i for i, u in enumerate(var)} for var in variants])

    rot: list[tuple[int, ...] | None] = [None] * n
    pos: list[dict[int, int] | None] = [None] * n

    def corners_ok(v: int) -> bool:
        rv = rot[v]
        pv = pos[v]
        d = len(rv)
        for i in range(d):
            a, b = rv[i - 1], rv[i]  # corner (a, v, b): the face a -> v -> b -> c
            rb = rot[b]
            if rb is not None:
                c = rb[(pos[b][v] + 1) % len(rb)]
                if c == a or c not in adj_sets[a]:
                    return False
                rc = rot[c]
                if rc is not None and rc[(pos[c][b] + 1) % len(rc)] != a:
                    return False
        for u in rv:
            ru = rot[u]
            if ru is None:
                continue
            a = ru[pos[u][v] - 1]  # corner (a, u, v): the face a -> u -> v -> c
            c = rv[(pv[u] + 1) % d]
            if c == a or c not in adj_sets[a]:
                return False
            rc = rot[c]
            if rc is not None and rc[(pos[c][v] + 1) % len(rc)] != a:
                return False
        return True

    def assign(k: int):
        if k == n:
            yield [rv for rv in rot]  # type: ignore[misc]
            return
        v = order[k]
        for idx, variant in enumerate(pools[v]):
            rot[v] = variant
            pos[v] = pool_pos[v][idx]
            if corners_ok(v):
                yield from assign(k + 1)
        rot[v] = None
        pos[v] = None

    e_count = sum(len(nbrs) for nbrs in adjacency) // 2
    for rotation in assign(0):
        if _rotation_has_all_quad_faces(rotation, e_count):
            yield rotation


def brute_force_codes(n: int, *, max_n: int = ORACLE_LIMIT) -> frozenset[bytes]:
    """Canonical codes of every quadrangulation map on n vertices, by brute force.

    Enumerates all candidate labelled graphs and all their sphere rotation
    systems with quadrilateral faces.  Entirely independent of the expansion
    moves; exponential, so capped at ``max_n``.
    """
    if n < 4:
        raise TooSmallError(f"no quadrangulation below 4 vertices, got {n}")
    if n > max_n:
        raise LimitExceededError(f"oracle capped at n = {max_n}")
    codes: set[bytes] = set()
    for adjacency in _candidate_graphs(n):
        for rotation in _all_embeddings(adjacency):
            q = validate_quadrangulation(build_embedded(n, rotation))
            codes.add(canonical_code(q))
    return frozenset(codes)
