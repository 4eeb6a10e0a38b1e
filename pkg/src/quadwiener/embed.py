"""Rotation-system core: embedded sphere graphs, quadrangulations, planar_code I/O.

An embedding is stored as a rotation system: for every vertex the cyclic
order of its neighbours.  Faces are recovered with the fixed traversal rule

    after the dart u -> v comes v -> w, where w follows u in the rotation at v

and the Euler count n - e + f = 2 certifies a sphere embedding.  Graphs are
immutable after construction; every surgery builds a new value.  Vertex
indices are 0-based internally and 1-based in planar_code.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from .errors import (
    BadHeaderError,
    DisconnectedError,
    EulerViolationError,
    FaceLengthViolationError,
    IndexOutOfRangeError,
    LoopOrMultiEdgeError,
    NonSymmetricError,
    TooSmallError,
    TruncatedRecordError,
)

PLANAR_CODE_HEADER = b">>planar_code<<"


def _normalize_walk(walk: list[int]) -> tuple[int, ...]:
    """Rotate a closed oriented walk so the lexicographically least form leads."""
    k = len(walk)
    best = None
    for s in range(k):
        cand = tuple(walk[(s + j) % k] for j in range(k))
        if best is None or cand < best:
            best = cand
    return best


class EmbeddedGraph:
    """A connected simple graph together with a sphere rotation system.

    ``rotation[v]`` is the cyclic sequence of neighbours of ``v`` in embedding
    order.  Construction validates symmetry, simplicity, connectivity and the
    Euler count, so every instance is a sphere map.
    """

    def __init__(self, rotation: Sequence[Sequence[int]]):
        rot = tuple(tuple(nbrs) for nbrs in rotation)
        n = len(rot)
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        for v, nbrs in enumerate(rot):
            for u in nbrs:
                if not isinstance(u, int) or not 0 <= u < n:
                    raise ValueError(f"vertex {v} lists out-of-range neighbour {u!r}")
            if v in nbrs:
                raise LoopOrMultiEdgeError(f"vertex {v} lists itself")
            if len(set(nbrs)) != len(nbrs):
                raise LoopOrMultiEdgeError(f"vertex {v} repeats a neighbour")
        adjacency = tuple(frozenset(nbrs) for nbrs in rot)
        for v, nbrs in enumerate(rot):
            for u in nbrs:
                if v not in adjacency[u]:
                    raise NonSymmetricError(f"{v} lists {u} but {u} does not list {v}")

        self.rotation = rot
        self.n = n
        self.adjacency = adjacency
        self.degrees = tuple(len(nbrs) for nbrs in rot)
        self.edge_count = sum(self.degrees) // 2

        seen = bytearray(n)
        seen[0] = 1
        queue = deque((0,))
        reached = 1
        while queue:
            v = queue.popleft()
            for u in rot[v]:
                if not seen[u]:
                    seen[u] = 1
                    reached += 1
                    queue.append(u)
        if reached != n:
            raise DisconnectedError(f"only {reached} of {n} vertices reachable")

        if self.edge_count and self.n - self.edge_count + len(self.faces) != 2:
            raise EulerViolationError(
                f"n - e + f = {self.n - self.edge_count + len(self.faces)}, not 2"
            )

    # -- basic accessors ----------------------------------------------------

    @cached_property
    def _pos(self) -> tuple[dict[int, int], ...]:
        return tuple({u: i for i, u in enumerate(nbrs)} for nbrs in self.rotation)

    def successor(self, u: int, v: int) -> int:
        """Neighbour following u in the rotation at v (next dart of the face walk)."""
        r = self.rotation[v]
        return r[(self._pos[v][u] + 1) % len(r)]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v in range(self.n) for u in self.rotation[v] if v < u]

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """All face walks, each an oriented cyclic vertex sequence.

        Every dart lies on exactly one walk; walks are normalised to start at
        their least rotation and sorted, so the output is stable.
        """
        rot = self.rotation
        pos = self._pos
        seen: set[tuple[int, int]] = set()
        walks = []
        for v0 in range(self.n):
            for u0 in rot[v0]:
                if (v0, u0) in seen:
                    continue
                walk: list[int] = []
                a, b = v0, u0
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    r = rot[b]
                    a, b = b, r[(pos[b][a] + 1) % len(r)]
                walks.append(_normalize_walk(walk))
        return tuple(sorted(walks))

    @cached_property
    def dart_face(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map each dart (u, v) to the oriented face walk containing it."""
        out: dict[tuple[int, int], tuple[int, ...]] = {}
        for walk in self.faces:
            k = len(walk)
            for i in range(k):
                out[(walk[i], walk[(i + 1) % k])] = walk
        return out

    # -- transforms ----------------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "EmbeddedGraph":
        """Apply the vertex bijection v -> perm[v]."""
        new_rot: list[tuple[int, ...]] = [()] * self.n
        for v, nbrs in enumerate(self.rotation):
            new_rot[perm[v]] = tuple(perm[u] for u in nbrs)
        return type(self)(new_rot)

    def mirror(self) -> "EmbeddedGraph":
        """The orientation-reversed embedding (every rotation reversed)."""
        return type(self)(tuple(tuple(reversed(nbrs)) for nbrs in self.rotation))

    # -- bookkeeping ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, EmbeddedGraph) and self.rotation == other.rotation

    def __hash__(self) -> int:
        return hash(self.rotation)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, e={self.edge_count})"


class Quadrangulation(EmbeddedGraph):
    """An embedded graph in which every face, the outer one included, is a 4-cycle."""

    def __init__(self, rotation: Sequence[Sequence[int]]):
        super().__init__(rotation)
        if self.n < 4:
            raise TooSmallError(f"quadrangulations need n >= 4, got {self.n}")
        for walk in self.faces:
            if len(walk) != 4:
                raise FaceLengthViolationError(
                    f"face walk {walk} has length {len(walk)}", walk=walk
                )
        # Corollaries of all-quadrilateral sphere faces; cannot fail once the
        # face check passed, kept as executable documentation.
        assert self.edge_count == 2 * self.n - 4
        assert len(self.faces) == self.n - 2
        assert self.bipartition is not None
        assert min(self.degrees) in (2, 3)

    @cached_property
    def bipartition(self) -> tuple[frozenset[int], frozenset[int]]:
        colour = [-1] * self.n
        colour[0] = 0
        queue = deque((0,))
        while queue:
            v = queue.popleft()
            for u in self.rotation[v]:
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    raise FaceLengthViolationError("odd cycle in a quadrangulation")
        side = frozenset(v for v in range(self.n) if colour[v] == 0)
        return (side, frozenset(range(self.n)) - side)


def build_embedded(n: int, rotation: Sequence[Sequence[int]]) -> EmbeddedGraph:
    """Build and fully validate an embedded graph from per-vertex neighbour cycles."""
    if len(rotation) != n:
        raise ValueError(f"expected {n} rotation lists, got {len(rotation)}")
    return EmbeddedGraph(rotation)


def faces(g: EmbeddedGraph) -> list[tuple[int, ...]]:
    """All face walks of g (each a cyclic vertex sequence)."""
    return list(g.faces)


def validate_quadrangulation(g: EmbeddedGraph) -> Quadrangulation:
    """Certify that every face of g is a 4-cycle and wrap it.

    Raises TooSmallError below 4 vertices and FaceLengthViolationError (with
    the offending walk attached) otherwise.
    """
    if isinstance(g, Quadrangulation):
        return g
    if g.n < 4:
        raise TooSmallError(f"quadrangulations need n >= 4, got {g.n}")
    for walk in g.faces:
        if len(walk) != 4:
            raise FaceLengthViolationError(
                f"face walk {walk} has length {len(walk)}", walk=walk
            )
    return Quadrangulation(g.rotation)


# -- canonical codes ----------------------------------------------------------


def _trace_code(g: EmbeddedGraph, u0: int, v0: int, reflect: bool) -> bytes:
    """Breadth-first code of the map from starting dart u0 -> v0.

    Vertices are relabelled in discovery order; each vertex emits its
    neighbour list in rotation order starting at the neighbour it was entered
    from (the root starts at v0).  ``reflect`` walks every rotation backwards,
    which realises orientation reversal.
    """
    rot = g.rotation
    pos = g._pos
    n = g.n
    label = [-1] * n
    label[u0] = 0
    order = [u0]
    entry = [0] * n
    entry[u0] = v0
    out = bytearray((n,))
    step = -1 if reflect else 1
    qi = 0
    while qi < n:
        v = order[qi]
        qi += 1
        r = rot[v]
        d = len(r)
        i0 = pos[v][entry[v]]
        for k in range(d):
            w = r[(i0 + step * k) % d]
            if label[w] < 0:
                label[w] = len(order)
                order.append(w)
                entry[w] = v
            out.append(label[w] + 1)
        out.append(0)
    return bytes(out)


def canonical_code(g: EmbeddedGraph) -> bytes:
    """Canonical byte string: equal iff two maps are isomorphic up to reflection.

    The code is the lexicographic minimum of the breadth-first traversal code
    over all starting darts (restricted to darts of minimal degree pair, an
    isomorphism-invariant set) and both orientations.  The bytes double as a
    planar_code record body for the canonically relabelled map.
    """
    if g.edge_count == 0:
        return bytes((g.n, 0))
    deg = g.degrees
    best_key = min((deg[v], deg[u]) for v in range(g.n) for u in g.rotation[v])
    best = None
    for v in range(g.n):
        dv = deg[v]
        for u in g.rotation[v]:
            if (dv, deg[u]) != best_key:
                continue
            for reflect in (False, True):
                code = _trace_code(g, v, u, reflect)
                if best is None or code < best:
                    best = code
    return best


def canonical_form(g: EmbeddedGraph) -> EmbeddedGraph:
    """The canonically relabelled copy of g (same map, canonical labels)."""
    rotation, _ = _parse_record(canonical_code(g), 0)
    return type(g)(rotation)


def maps_isomorphic(g1: EmbeddedGraph, g2: EmbeddedGraph) -> bool:
    """Brute-force map isomorphism (vertex bijections), reflection included.

    Exponential; intended as an independent cross-check for small graphs.
    """
    if g1.n != g2.n or sorted(g1.degrees) != sorted(g2.degrees):
        return False
    if g1.n > 10:
        raise ValueError("brute-force isomorphism is limited to n <= 10")

    def cyclic_variants(t: tuple[int, ...]) -> set[tuple[int, ...]]:
        k = len(t)
        return {tuple(t[(s + j) % k] for j in range(k)) for s in range(k)}

    deg1, deg2 = g1.degrees, g2.degrees
    for perm in permutations(range(g1.n)):
        if any(deg1[v] != deg2[perm[v]] for v in range(g1.n)):
            continue
        if any(
            frozenset(perm[u] for u in g1.adjacency[v]) != g2.adjacency[perm[v]]
            for v in range(g1.n)
        ):
            continue
        for reflect in (False, True):
            ok = True
            for v in range(g1.n):
                mapped = tuple(perm[u] for u in g1.rotation[v])
                target = g2.rotation[perm[v]]
                if reflect:
                    target = tuple(reversed(target))
                if mapped not in cyclic_variants(target):
                    ok = False
                    break
            if ok:
                return True
    return False


# -- planar_code I/O -----------------------------------------------------------


def record_bytes(g: EmbeddedGraph) -> bytes:
    """One planar_code record (no header) for g, 1-based neighbour lists."""
    if g.n > 255:
        raise IndexOutOfRangeError(f"planar_code needs n < 256, got {g.n}")
    out = bytearray((g.n,))
    for nbrs in g.rotation:
        out.extend(u + 1 for u in nbrs)
        out.append(0)
    return bytes(out)


def _parse_record(buf: bytes, pos: int) -> tuple[list[list[int]], int]:
    if pos >= len(buf):
        raise TruncatedRecordError("record starts past end of stream")
    n = buf[pos]
    if n == 0:
        raise IndexOutOfRangeError("record declares 0 vertices")
    pos += 1
    rotation: list[list[int]] = []
    for v in range(n):
        nbrs: list[int] = []
        while True:
            if pos >= len(buf):
                raise TruncatedRecordError(
                    f"record for {n} vertices ends inside vertex {v + 1}"
                )
            b = buf[pos]
            pos += 1
            if b == 0:
                break
            if b > n:
                raise IndexOutOfRangeError(f"neighbour {b} exceeds n = {n}")
            nbrs.append(b - 1)
        rotation.append(nbrs)
    return rotation, pos


def graph_from_record(body: bytes) -> EmbeddedGraph:
    """Decode a single record body (as produced by canonical_code/record_bytes)."""
    rotation, pos = _parse_record(body, 0)
    if pos != len(body):
        raise TruncatedRecordError("trailing bytes after record")
    return build_embedded(len(rotation), rotation)


def read_planar_code(data: bytes) -> list[EmbeddedGraph]:
    """Parse a planar_code stream into validated embedded graphs."""
    if not data.startswith(PLANAR_CODE_HEADER):
        raise BadHeaderError("missing '>>planar_code<<' header")
    pos = len(PLANAR_CODE_HEADER)
    graphs = []
    while pos < len(data):
        rotation, pos = _parse_record(data, pos)
        graphs.append(build_embedded(len(rotation), rotation))
    return graphs


def write_planar_code(graphs: Iterable[EmbeddedGraph]) -> bytes:
    """Serialise graphs to a planar_code stream (header + one record each)."""
    out = bytearray(PLANAR_CODE_HEADER)
    for g in graphs:
        out.extend(record_bytes(g))
    return bytes(out)
