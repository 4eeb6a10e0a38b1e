"""The proof surgeries: degree-2 deletion, double-edge contraction, good-vertex
deletion with an added edge, and the distance-decrease functional.

Vertex correspondence is deterministic: survivors are compacted in increasing
original order (``survivor_map``); the contraction appends its merged vertex
as the last label of the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .analyze import Degree3Profile, degree3_profile
from .embed import Quadrangulation, build_embedded, validate_quadrangulation
from .errors import (
    EdgePresentError,
    NotGoodError,
    SizeMismatchError,
    StructureViolationError,
    TooSmallError,
    WrongConfigurationError,
    WrongDegreeError,
)
from .metrics import all_pairs_distances, level_structure


@dataclass(frozen=True)
class SurgeryCertificate:
    """One audited inequality instance, with exact rational sides.

    ``relation`` is "<=" or "=="; ``passed`` records whether the relation
    holds exactly.
    """

    operation: str
    input_size: int
    output_size: int | None
    lhs: Fraction
    rhs: Fraction
    relation: str = "<="
    passed: bool = False
    detail: str = ""

    @classmethod
    def check(cls, operation, input_size, output_size, lhs, rhs, relation="<=", detail=""):
        lhs = Fraction(lhs)
        rhs = Fraction(rhs)
        passed = lhs <= rhs if relation == "<=" else lhs == rhs
        return cls(operation, input_size, output_size, lhs, rhs, relation, passed, detail)

    def to_dict(self) -> dict:
        return {
            "operation": self.operation,
            "input_size": self.input_size,
            "output_size": self.output_size,
            "lhs": f"{self.lhs.numerator}/{self.lhs.denominator}",
            "rhs": f"{self.rhs.numerator}/{self.rhs.denominator}",
            "relation": self.relation,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class ContractionContext:
    """The seven special vertices of the double-edge contraction environment."""

    v: int
    x1: int
    x2: int
    x3: int
    x4: int
    z1: int
    z2: int

    @property
    def cherry_set(self) -> frozenset[int]:
        return frozenset((self.x3, self.x4, self.z1, self.z2))


def survivor_map(n: int, removed: Iterable[int]) -> dict[int, int]:
    """Old-to-new labels after deleting ``removed``, survivors in old order."""
    gone = set(removed)
    return {old: new for new, old in enumerate(v for v in range(n) if v not in gone)}


def delete_degree2(q: Quadrangulation, v: int) -> Quadrangulation:
    """Remove a degree-2 vertex; its two faces merge into one 4-face."""
    if q.degrees[v] != 2:
        raise WrongDegreeError(f"vertex {v} has degree {q.degrees[v]}, not 2")
    if q.n < 5:
        raise TooSmallError("deleting from C4 leaves no quadrangulation")
    relabel = survivor_map(q.n, (v,))
    rotation = [
        tuple(relabel[u] for u in q.rotation[w] if u != v)
        for w in range(q.n)
        if w != v
    ]
    return validate_quadrangulation(build_embedded(q.n - 1, rotation))


def contraction_context(q: Quadrangulation, v: int) -> ContractionContext:
    """Validate the contraction environment around a degree-2 vertex.

    Requires n >= 7 and a second level of exactly two vertices {x3, x4}; the
    cherries z1 (on the x1 side) and z2 (on the x2 side) must be distinct and
    disjoint from the five inner vertices.
    """
    if q.degrees[v] != 2:
        raise WrongDegreeError(f"vertex {v} has degree {q.degrees[v]}, not 2")
    if q.n < 7:
        raise TooSmallError("contraction environment needs n >= 7")
    levels = level_structure(q, (v,))
    if levels.terminal_index < 2 or len(levels.levels[2]) != 2:
        found = 0 if levels.terminal_index < 2 else len(levels.levels[2])
        raise WrongConfigurationError(f"second level has {found} vertices, not 2")
    x1, x2 = sorted(q.rotation[v])
    x3, x4 = sorted(levels.levels[2])
    for x in (x1, x2):
        if q.adjacency[x] != frozenset((v, x3, x4)):
            raise WrongConfigurationError(
                f"neighbour {x} of {v} is not attached to exactly {{v, x3, x4}}"
            )

    def far_corner(x: int) -> int:
        # the face at x not containing v sits on the corner between x3 and x4;
        # its far vertex follows x in the rotation at the corner's second leg
        if q.successor(x3, x) == x4:
            return q.successor(x, x4)
        if q.successor(x4, x) == x3:
            return q.successor(x, x3)
        raise WrongConfigurationError(f"no x3-x4 corner at {x}")

    z1 = far_corner(x1)
    z2 = far_corner(x2)
    special = {v, x1, x2, x3, x4}
    if z1 == z2 or z1 in special or z2 in special:
        raise WrongConfigurationError("cherry tips are not distinct fresh vertices")
    for z in (z1, z2):
        if not (q.has_edge(z, x3) and q.has_edge(z, x4)):
            raise WrongConfigurationError(f"cherry tip {z} misses x3 or x4")
    return ContractionContext(v=v, x1=x1, x2=x2, x3=x3, x4=x4, z1=z1, z2=z2)


def contract_to_x(q: Quadrangulation, v: int) -> Quadrangulation:
    """Contract both edges at a degree-2 vertex into a single vertex x.

    The result has n - 2 vertices: v, x1, x2 disappear and x (the new last
    label) is adjacent to x3 and x4.  Distances between survivors are
    unchanged, and every survivor t satisfies d(t, v) = d'(t, x) + 1.
    """
    ctx = contraction_context(q, v)
    gone = {ctx.v, ctx.x1, ctx.x2}
    relabel = survivor_map(q.n, gone)
    x_label = q.n - 3
    rotation: list[tuple[int, ...]] = []
    for w in range(q.n):
        if w in gone:
            continue
        if w in (ctx.x3, ctx.x4):
            nbrs: list[int] = []
            placed = False
            for u in q.rotation[w]:
                if u in (ctx.x1, ctx.x2):
                    if not placed:
                        nbrs.append(x_label)
                        placed = True
                else:
                    nbrs.append(relabel[u])
            rotation.append(tuple(nbrs))
        else:
            rotation.append(tuple(relabel[u] for u in q.rotation[w]))
    rotation.append((relabel[ctx.x3], relabel[ctx.x4]))
    return validate_quadrangulation(build_embedded(q.n - 2, rotation))


def good_vertex_surgery(q: Quadrangulation, profile: Degree3Profile, i: int) -> Quadrangulation:
    """Delete the profiled degree-3 vertex and add the absent edge e_i.

    The three faces at the vertex are replaced by two 4-faces split by e_i.
    """
    if i not in (1, 2, 3):
        raise ValueError(f"edge index must be 1, 2 or 3, got {i}")
    fresh = degree3_profile(q, profile.vertex)
    if fresh != profile:
        raise StructureViolationError("profile does not match this graph")
    if profile.present[i - 1]:
        raise EdgePresentError(f"edge e{i} is already present")
    v = profile.vertex
    v1, v2, v3 = profile.neighbors
    v4, v5, v6 = profile.opposites
    if i == 1:
        a, b, vj, vk = v1, v5, v2, v3
    elif i == 2:
        a, b, vj, vk = v2, v4, v3, v1
    else:
        a, b, vj, vk = v3, v6, v1, v2

    relabel = survivor_map(q.n, (v,))
    rotation: list[tuple[int, ...]] = []
    for w in range(q.n):
        if w == v:
            continue
        r = list(q.rotation[w])
        if w == a:
            r[r.index(v)] = b
        elif w == b:
            # split the corner (vk -> vj) at b with the new edge to a
            pos = r.index(vk)
            if r[(pos + 1) % len(r)] != vj:
                raise StructureViolationError("corner at the far vertex is not intact")
            r.insert(pos + 1, a)
        elif w in (vj, vk):
            r.remove(v)
        rotation.append(tuple(relabel[u] for u in r))
    return validate_quadrangulation(build_embedded(q.n - 1, rotation))


def dec(q: Quadrangulation, q_i: Quadrangulation, removed: int) -> int:
    """Total distance decrease over surviving pairs caused by a surgery.

    ``q_i`` must have arisen from ``q`` by removing ``removed`` (survivors
    compacted in order, as the surgeries do).
    """
    if q_i.n != q.n - 1:
        raise SizeMismatchError(f"expected {q.n - 1} vertices, got {q_i.n}")
    relabel = survivor_map(q.n, (removed,))
    d_old = all_pairs_distances(q)
    d_new = all_pairs_distances(q_i)
    total = 0
    survivors = [v for v in range(q.n) if v != removed]
    for idx, u in enumerate(survivors):
        mu = relabel[u]
        row_old = d_old[u]
        row_new = d_new[mu]
        for w in survivors[idx + 1 :]:
            total += row_old[w] - row_new[relabel[w]]
    return total


def min_dec(q: Quadrangulation, profile: Degree3Profile) -> tuple[int, int]:
    """The index i and value minimising dec over the three surgeries at a good vertex."""
    if not profile.is_good:
        raise NotGoodError(f"vertex {profile.vertex} has a candidate edge present")
    best: tuple[int, int] | None = None
    for i in (1, 2, 3):
        value = dec(q, good_vertex_surgery(q, profile, i), profile.vertex)
        if best is None or value < best[1]:
            best = (i, value)
    return best
