"""Builders: the extremal ladder family and small named fixtures.

The ladder on n vertices has a top path of floor(n/2) vertices, a bottom
path of ceil(n/2) vertices, vertical rungs t_i b_i and skew chords t_i
b_{i+2}.  Straight-line drawings of it self-intersect, so the builder works
from an explicit face list: the rung squares, the bands between consecutive
chords (each chord is routed around the bottom path, the last one closing the
end face at the top), and the two end faces.  Any rotation system with all
faces quadrilateral on this abstract graph has the same Wiener index.
"""

from __future__ import annotations

from collections import defaultdict, deque
from typing import Sequence

from .embed import EmbeddedGraph, Quadrangulation, build_embedded, validate_quadrangulation
from .errors import TooSmallError, UnknownFixtureError

FIXTURE_NAMES = ("c4", "pyramid5", "cube")


def from_faces(face_walks: Sequence[Sequence[int]]) -> EmbeddedGraph:
    """Assemble an embedded graph from its face walks.

    The walks may come in arbitrary orientations; they are oriented
    consistently (each edge traversed once in each direction) and the rotation
    system is read off the oriented corners.  Raises ValueError when the input
    is not a valid sphere face list.
    """
    faces = [tuple(walk) for walk in face_walks]
    if not faces:
        raise ValueError("need at least one face")
    n = max(max(walk) for walk in faces) + 1

    edge_slots: dict[frozenset[int], list[int]] = defaultdict(list)
    for idx, walk in enumerate(faces):
        k = len(walk)
        for i in range(k):
            e = frozenset((walk[i], walk[(i + 1) % k]))
            if len(e) != 2:
                raise ValueError(f"face {walk} repeats consecutive vertices")
            edge_slots[e].append(idx)
    for e, slots in edge_slots.items():
        if len(slots) != 2:
            raise ValueError(f"edge {sorted(e)} lies on {len(slots)} faces, not 2")

    def darts_of(idx: int, flipped: bool) -> list[tuple[int, int]]:
        walk = faces[idx] if not flipped else tuple(reversed(faces[idx]))
        k = len(walk)
        return [(walk[i], walk[(i + 1) % k]) for i in range(k)]

    flipped: list[bool | None] = [None] * len(faces)
    flipped[0] = False
    queue = deque((0,))
    while queue:
        idx = queue.popleft()
        for u, v in darts_of(idx, flipped[idx]):
            slots = edge_slots[frozenset((u, v))]
            if slots[0] == idx and slots[1] == idx:
                # the face itself must traverse the edge in both directions
                if (v, u) not in darts_of(idx, flipped[idx]):
                    raise ValueError(f"edge {(u, v)} traversed twice the same way")
                continue
            other = slots[1] if slots[0] == idx else slots[0]
            # the neighbouring face must traverse the edge as (v, u)
            want_flip = (v, u) not in darts_of(other, False)
            if flipped[other] is None:
                flipped[other] = want_flip
                queue.append(other)
            elif flipped[other] != want_flip:
                raise ValueError("face orientations cannot be made consistent")

    succ: list[dict[int, int]] = [{} for _ in range(n)]
    seen_darts: set[tuple[int, int]] = set()
    for idx in range(len(faces)):
        if flipped[idx] is None:
            raise ValueError("face list is not edge-connected")
        walk = faces[idx] if not flipped[idx] else tuple(reversed(faces[idx]))
        k = len(walk)
        for i in range(k):
            u, v, w = walk[i - 1], walk[i], walk[(i + 1) % k]
            if (u, v) in seen_darts:
                raise ValueError(f"dart {(u, v)} appears on two oriented faces")
            seen_darts.add((u, v))
            succ[v][u] = w

    rotation: list[tuple[int, ...]] = []
    for v in range(n):
        if not succ[v]:
            raise ValueError(f"vertex {v} appears on no face")
        start = min(succ[v])
        cycle = [start]
        while True:
            nxt = succ[v][cycle[-1]]
            if nxt == start:
                break
            cycle.append(nxt)
            if len(cycle) > len(succ[v]):
                raise ValueError(f"corners at vertex {v} do not close a single cycle")
        if len(cycle) != len(succ[v]):
            raise ValueError(f"corners at vertex {v} split into several cycles")
        rotation.append(tuple(cycle))
    return build_embedded(n, rotation)


def _ladder_faces(n: int) -> list[tuple[int, int, int, int]]:
    top = n // 2
    bottom = n - top

    def t(i: int) -> int:
        return i

    def b(j: int) -> int:
        return top + j

    if n == 4:
        square = (t(0), t(1), b(1), b(0))
        return [square, square]

    faces = [(t(i), t(i + 1), b(i + 1), b(i)) for i in range(top - 1)]
    if n % 2 == 0:
        faces += [(t(i), t(i + 1), b(i + 3), b(i + 2)) for i in range(top - 3)]
        faces.append((b(0), b(1), b(2), t(0)))
        faces.append((t(top - 3), t(top - 2), t(top - 1), b(bottom - 1)))
    else:
        faces += [(t(i), t(i + 1), b(i + 3), b(i + 2)) for i in range(top - 2)]
        faces.append((b(0), b(1), b(2), t(0)))
        faces.append((t(top - 2), t(top - 1), b(bottom - 2), b(bottom - 1)))
    return faces


def build_qn(n: int) -> Quadrangulation:
    """The n-vertex ladder-with-chords quadrangulation attaining the Wiener bound.

    Vertices 0..floor(n/2)-1 are the top path, the rest the bottom path.
    """
    if n < 4:
        raise TooSmallError(f"ladder needs n >= 4, got {n}")
    return validate_quadrangulation(from_faces(_ladder_faces(n)))


def fixture(name: str) -> Quadrangulation:
    """Small named instances: "c4", "pyramid5" (C4 plus a degree-2 apex), "cube"."""
    if name == "c4":
        walks = [(0, 1, 2, 3), (0, 1, 2, 3)]
    elif name == "pyramid5":
        walks = [(0, 1, 2, 4), (2, 3, 0, 4), (0, 1, 2, 3)]
    elif name == "cube":
        walks = [
            (0, 1, 2, 3),
            (0, 1, 5, 4),
            (1, 2, 6, 5),
            (2, 3, 7, 6),
            (3, 0, 4, 7),
            (4, 5, 6, 7),
        ]
    else:
        raise UnknownFixtureError(f"no fixture named {name!r}; try {FIXTURE_NAMES}")
    return validate_quadrangulation(from_faces(walks))
