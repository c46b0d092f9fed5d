"""Closed-form graph families: paths, cycles, stars, complete bipartite
graphs, balanced binary trees, the three-trees-plus-hub family used for the
energy-ratio table, and the four known low-energy trees."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import MAX_ORDER, Graph

FAMILY_TAGS = (
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "balanced_binary",
    "b_tree",
    "exceptional",
)


@dataclass(frozen=True)
class FamilySpec:
    """Tagged constructor arguments for one member of a named family."""

    family: str
    params: tuple[int, ...]

    def build(self) -> Graph:
        if self.family not in FAMILY_TAGS:
            raise ValueError(f"unknown family {self.family!r}")
        builder = {
            "path": path,
            "cycle": cycle,
            "star": star,
            "complete_bipartite": complete_bipartite,
            "balanced_binary": balanced_binary_tree,
            "b_tree": b_tree,
        }
        if self.family == "exceptional":
            return exceptional_trees()[self.params[0]]
        return builder[self.family](*self.params)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(s: int) -> Graph:
    """K_{1,s}: hub vertex 0 joined to s leaves."""
    if s < 0:
        raise ValueError("star needs s >= 0")
    return Graph.from_edge_list(s + 1, [(0, i) for i in range(1, s + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides nonempty")
    return Graph.from_edge_list(
        a + b, [(i, a + j) for i in range(a) for j in range(b)]
    )


def balanced_binary_tree(k: int) -> Graph:
    """Complete rooted binary tree of depth k: 2^(k+1) - 1 vertices in
    breadth-first numbering (root 0, children of i at 2i+1 and 2i+2)."""
    if k < 0:
        raise ValueError("depth must be >= 0")
    n = 2 ** (k + 1) - 1
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the cap {MAX_ORDER}")
    edges = []
    for i in range(n):
        for c in (2 * i + 1, 2 * i + 2):
            if c < n:
                edges.append((i, c))
    return Graph.from_edge_list(n, edges)


def b_tree(k: int) -> Graph:
    """Three disjoint balanced binary trees of depth k plus a hub vertex
    adjacent to their roots; order 3 * 2^(k+1) - 2, every degree in {1, 3}.

    Vertex 0 is the hub; copy i occupies a contiguous block in
    breadth-first order, its root first.
    """
    if k < 0:
        raise ValueError("depth must be >= 0")
    block = 2 ** (k + 1) - 1
    n = 3 * block + 1
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the cap {MAX_ORDER}")
    edges = []
    for copy in range(3):
        base = 1 + copy * block
        edges.append((0, base))
        for i in range(block):
            for c in (2 * i + 1, 2 * i + 2):
                if c < block:
                    edges.append((base + i, base + c))
    return Graph.from_edge_list(n, edges)


def exceptional_trees() -> tuple[Graph, Graph, Graph, Graph]:
    """The four trees with max degree <= 3 whose energy falls below their
    order: K_1, K_{1,2}, K_{1,3}, and the balanced binary tree on 7
    vertices."""
    return (star(0), star(2), star(3), balanced_binary_tree(2))
