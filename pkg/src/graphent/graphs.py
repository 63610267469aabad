"""Simple undirected graphs, orientations, deterministic generators, distances.

Vertices are always 0-based integers.  Graphs are immutable after
construction; derived data (degrees, adjacency, components) is cached on
first access.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import DisconnectedGraphError, LoopEdgeError

Edge = tuple[int, int]

FAMILY_NAMES = ("complete", "path", "star", "cycle", "matching")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on the vertex set {0, ..., n - 1}.

    ``edges`` is a lexicographically sorted tuple of ``(u, v)`` pairs with
    ``u < v``.  Construction rejects loops, duplicates, unsorted input and
    endpoints outside the vertex range; :meth:`from_edges` normalizes raw
    pair lists first.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be at least 1, got {self.n}")
        prev: Edge | None = None
        for pair in self.edges:
            u, v = pair
            if u == v:
                raise LoopEdgeError(f"loop edge ({u}, {v}) is not allowed")
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for order {self.n}")
            if prev is not None and pair <= prev:
                raise ValueError("edges must be strictly sorted (u, v) pairs with u < v")
            prev = pair

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from arbitrary pairs, deduplicating and sorting."""
        seen: set[Edge] = set()
        for pair in pairs:
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise LoopEdgeError(f"loop edge ({u}, {v}) is not allowed")
            if u > v:
                u, v = v, u
            seen.add((u, v))
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @cached_property
    def non_isolated_count(self) -> int:
        """Number of vertices of degree at least one."""
        return sum(1 for d in self.degrees if d > 0)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neigh: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neigh[u].append(v)
            neigh[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neigh)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an (m, 2) int array; the empty graph gives shape (0, 2)."""
        if not self.edges:
            return np.empty((0, 2), dtype=np.int64)
        return np.array(self.edges, dtype=np.int64)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Vertex sets of the connected components, each sorted."""
        seen = [False] * self.n
        comps: list[tuple[int, ...]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack = [start]
            comp = []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @cached_property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    def edge_count_within(self, vertices: Sequence[int]) -> int:
        vs = set(vertices)
        return sum(1 for u, v in self.edges if u in vs and v in vs)


@dataclass(frozen=True)
class OrientedGraph:
    """An orientation of a simple graph: exactly one directed arc per edge.

    ``arcs[i]`` orients ``underlying.edges[i]``, i.e. it is either that pair
    or its reversal.
    """

    underlying: Graph
    arcs: tuple[Edge, ...]

    def __post_init__(self) -> None:
        edges = self.underlying.edges
        if len(self.arcs) != len(edges):
            raise ValueError("arc count must match the underlying edge count")
        for arc, edge in zip(self.arcs, edges):
            if arc != edge and (arc[1], arc[0]) != edge:
                raise ValueError(f"arc {arc} does not orient edge {edge}")

    @property
    def n(self) -> int:
        return self.underlying.n

    @property
    def m(self) -> int:
        return self.underlying.m


def canonical_orientation(g: Graph) -> OrientedGraph:
    """Orient every edge from its smaller to its larger endpoint."""
    return OrientedGraph(g, g.edges)


def random_orientation(g: Graph, seed: int) -> OrientedGraph:
    """Orient each edge by an independent fair coin from ``seed``."""
    rng = random.Random(seed)
    arcs = tuple((u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges)
    return OrientedGraph(g, arcs)


def complete_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, tuple(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    """Path 0 - 1 - ... - (n-1)."""
    _check_order(n)
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """Star with center 0 and leaves 1..n-1."""
    _check_order(n)
    return Graph(n, tuple((0, i) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a simple cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, tuple(sorted(edges)))


def matching_graph(n: int) -> Graph:
    """Perfect matching (0,1), (2,3), ...; n must be even."""
    _check_order(n)
    if n % 2:
        raise ValueError(f"a perfect matching needs even n, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(0, n, 2)))


_FAMILY_BUILDERS = {
    "complete": complete_graph,
    "path": path_graph,
    "star": star_graph,
    "cycle": cycle_graph,
    "matching": matching_graph,
}


def make_family(kind: str, n: int) -> Graph:
    """Build one of the named deterministic families."""
    try:
        builder = _FAMILY_BUILDERS[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; expected one of {FAMILY_NAMES}") from None
    return builder(n)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a fixed seed.

    Pairs are examined in lexicographic order so the result depends only on
    (n, p, seed).
    """
    _check_order(n)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = tuple(pair for pair in combinations(range(n), 2) if rng.random() < p)
    return Graph(n, edges)


def distances(g: Graph) -> np.ndarray:
    """All-pairs shortest-path matrix by BFS from every vertex.

    Returns an (n, n) integer array; raises DisconnectedGraphError if any
    pair is unreachable.
    """
    n = g.n
    adj = g.adjacency
    out = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue.append(w)
        if min(dist) < 0:
            raise DisconnectedGraphError("distance matrix requires a connected graph")
        out[s] = dist
    return out


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
