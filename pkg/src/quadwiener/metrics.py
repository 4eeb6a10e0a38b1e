"""Exact distance computations: BFS level structures, status, Wiener index."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .embed import EmbeddedGraph
from .errors import EmptySourceError


@dataclass(frozen=True)
class LevelStructure:
    """Partition of the vertices by distance from a source set.

    ``levels[i]`` holds the vertices at distance exactly i; ``levels[0]`` is
    the source itself and ``terminal_index`` points at the farthest nonempty
    level (no empty levels are stored).
    """

    source: frozenset[int]
    levels: tuple[frozenset[int], ...]
    terminal_index: int

    def level_sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)


def distances_from(g: EmbeddedGraph, sources: Iterable[int]) -> list[int]:
    """BFS distances from a set of sources (0 on the sources themselves)."""
    dist = [-1] * g.n
    queue = deque()
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    if not queue:
        raise EmptySourceError("source set is empty")
    rot = g.rotation
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for u in rot[v]:
            if dist[u] < 0:
                dist[u] = dv
                queue.append(u)
    return dist


def level_structure(g: EmbeddedGraph, source: Iterable[int]) -> LevelStructure:
    """Group vertices into distance levels with respect to a nonempty source set."""
    src = frozenset(source)
    dist = distances_from(g, src)
    terminal = max(dist)
    buckets: list[set[int]] = [set() for _ in range(terminal + 1)]
    for v, d in enumerate(dist):
        buckets[d].add(v)
    return LevelStructure(
        source=src,
        levels=tuple(frozenset(b) for b in buckets),
        terminal_index=terminal,
    )


def status(g: EmbeddedGraph, source: Iterable[int]) -> int:
    """Sum over all vertices of their distance to the nearest source vertex."""
    return sum(distances_from(g, frozenset(source)))


def wiener_index(g: EmbeddedGraph) -> int:
    """Sum of the shortest-path distances over all unordered vertex pairs."""
    total = sum(sum(distances_from(g, (v,))) for v in range(g.n))
    assert total % 2 == 0
    return total // 2


def all_pairs_distances(g: EmbeddedGraph) -> list[list[int]]:
    """Full distance matrix by BFS from every vertex."""
    return [distances_from(g, (v,)) for v in range(g.n)]
