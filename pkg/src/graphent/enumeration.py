"""Exhaustive labeled-graph and labeled-tree enumerators.

Both enumerators are deterministic: graphs stream in increasing order of the
upper-triangle edge bitmask, trees in lexicographic order of their decoded
vertex sequences.  The supported ranges (n <= 7 for all graphs, n <= 9 for
trees) keep full sweeps at desk scale.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator, Sequence

from .graphs import Edge, Graph


def labeled_graph_count(n: int) -> int:
    """2^C(n,2) labeled graphs on n vertices."""
    if not 1 <= n <= 7:
        raise ValueError(f"labeled-graph enumeration supports 1 <= n <= 7, got {n}")
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, one per edge-subset bitmask.

    Bit k of the mask toggles the k-th vertex pair in lexicographic order;
    masks run from 0 (edgeless) to 2^C(n,2) - 1 (complete).
    """
    if not 1 <= n <= 7:
        raise ValueError(f"labeled-graph enumeration supports 1 <= n <= 7, got {n}")
    pairs = tuple(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = tuple(pair for k, pair in enumerate(pairs) if (mask >> k) & 1)
        yield Graph(n, edges)


def labeled_graph_from_mask(n: int, mask: int) -> Graph:
    """The graph at one bitmask position of the enumeration order."""
    if not 1 <= n <= 7:
        raise ValueError(f"labeled-graph enumeration supports 1 <= n <= 7, got {n}")
    pairs = tuple(combinations(range(n), 2))
    if not 0 <= mask < (1 << len(pairs)):
        raise ValueError(f"mask {mask} out of range for order {n}")
    edges = tuple(pair for k, pair in enumerate(pairs) if (mask >> k) & 1)
    return Graph(n, edges)


def labeled_tree_count(n: int) -> int:
    """n^(n-2) labeled trees on n vertices."""
    if not 2 <= n <= 9:
        raise ValueError(f"labeled-tree enumeration supports 2 <= n <= 9, got {n}")
    return n ** (n - 2)


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on n vertices, one per vertex sequence of length n-2."""
    if not 2 <= n <= 9:
        raise ValueError(f"labeled-tree enumeration supports 2 <= n <= 9, got {n}")
    if n == 2:
        yield Graph(2, ((0, 1),))
        return
    for seq in product(range(n), repeat=n - 2):
        yield Graph(n, tree_edges_from_sequence(seq, n))


def labeled_tree_from_index(n: int, index: int) -> Graph:
    """The tree at one position of the enumeration order.

    The index is the decoded vertex sequence read as a base-n numeral,
    leftmost digit most significant, matching the lexicographic stream.
    """
    total = labeled_tree_count(n)
    if not 0 <= index < total:
        raise ValueError(f"tree index {index} out of range for order {n}")
    if n == 2:
        return Graph(2, ((0, 1),))
    digits = []
    for _ in range(n - 2):
        index, d = divmod(index, n)
        digits.append(d)
    digits.reverse()
    return Graph(n, tree_edges_from_sequence(digits, n))


def tree_edges_from_sequence(seq: Sequence[int], n: int) -> tuple[Edge, ...]:
    """Decode a length n-2 sequence over {0..n-1} into sorted tree edges.

    Streaming decoder: repeatedly join the smallest remaining leaf to the
    next sequence entry, tracking degrees so the scan pointer never moves
    backwards.
    """
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be n - 2 = {n - 2}, got {len(seq)}")
    degree = [1] * n
    for v in seq:
        if not 0 <= v < n:
            raise ValueError(f"sequence entry {v} out of range for order {n}")
        degree[v] += 1
    edges: list[Edge] = []
    ptr = 0
    leaf = -1
    for v in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
            ptr += 1
        edges.append((leaf, v) if leaf < v else (v, leaf))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    last = [i for i in range(n) if degree[i] == 1]
    edges.append((last[0], last[1]))
    edges.sort()
    return tuple(edges)
