"""Isomorph-free generation of bounded-degree trees and of small connected
C4-free graphs.

Trees come from a successor iteration on canonical level sequences (free
trees rooted at a center, Beyer-Hedetniemi successor, Wright-Richmond-
Odlyzko-McKay validity jumps), with the degree bound enforced by an extra
jump: the first preorder position where a vertex would collect too many
children determines a prefix that no later sequence may share, so the
iteration skips straight past it.  Both jump kinds land on the
lexicographically largest smaller canonical sequence whose skipped range is
entirely invalid, so the stream stays duplicate-free and complete.

Graphs come from a breadth-first walk over isomorphism classes ordered by
edge count: each level's representatives are extended by one edge in every
admissible way and deduplicated by canonical code.  Connected enumeration
seeds the walk at the tree level (removing any cycle edge from a connected
graph keeps it connected, so every class is reachable); unconstrained
enumeration seeds at the empty graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, canonical_code

GRAPH_ENUM_CAP = 10


# -- rooted level-sequence machinery ---------------------------------------


def _next_rooted(layout: list[int], p: int | None = None) -> list[int] | None:
    """Largest canonical rooted sequence below ``layout`` that differs at
    or before position ``p`` (the plain successor when ``p`` is None)."""
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    result = list(layout)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _jump_below(layout: list[int], j: int) -> list[int] | None:
    """Next sequence whose prefix through position ``j`` changes.

    Positions after the last depth > 1 up to ``j`` all sit at the floor
    depth 1 and cannot decrease, so the change point moves back to that
    last deep position.
    """
    p = j
    while p > 0 and layout[p] == 1:
        p -= 1
    if p == 0:
        return None
    return _next_rooted(layout, p)


def _scan(layout: list[int], dmax: int) -> tuple[int, bool, int]:
    """Single pass over a candidate: (first degree-violation position or
    -1, free-tree validity, size of the first principal subtree).

    Validity per the center-rooted canonical form: the first principal
    subtree must not beat the remainder in height, then size, then lex
    order.  Skipped when a degree violation was found first.
    """
    n = len(layout)
    children = [0] * n
    stack = [0] * n
    m = n  # index of the second depth-1 vertex
    left_high = 1  # max raw depth inside the first subtree
    rest_high = 0  # max raw depth outside it
    for i in range(1, n):
        lev = layout[i]
        parent = stack[lev - 1]
        c = children[parent] + 1
        children[parent] = c
        if c > (dmax if parent == 0 else dmax - 1):
            return i, False, m - 1
        stack[lev] = i
        if i < m:
            if lev == 1 and i > 1:
                m = i
                rest_high = 1
            elif lev > left_high:
                left_high = lev
        elif lev > rest_high:
            rest_high = lev
    lh = left_high - 1  # first subtree re-rooted at depth 0
    if rest_high != lh:
        return -1, rest_high > lh, m - 1
    left_size = m - 1
    rest_size = n - m + 1
    if left_size != rest_size:
        return -1, left_size < rest_size, left_size
    # identical height and size: compare sequences element by element
    # (left shifted down one level against [0] + tail)
    for i in range(1, left_size):
        a = layout[i + 1] - 1
        b = layout[m + i - 1]
        if a != b:
            return -1, a < b, left_size
    return -1, True, left_size


def _free_tree_jump(layout: list[int], left_size: int) -> list[int] | None:
    """Advance past a candidate that fails the center-rooted conditions.

    Shrinks the first principal subtree at its last vertex; if that vertex
    sat deeper than level 2, the tail is rewritten as a hanging path one
    level taller than the shrunk subtree, the highest completion that can
    satisfy the height condition again.  Everything skipped in between
    shares the over-tall first subtree and stays invalid.
    """
    p = left_size
    nxt = _next_rooted(layout, p)
    if nxt is not None and layout[p] > 2:
        second_one = len(nxt)
        found = False
        for i, lev in enumerate(nxt):
            if lev == 1:
                if found:
                    second_one = i
                    break
                found = True
        new_left_high = max(nxt[1:second_one]) if second_one > 1 else 1
        suffix = range(1, new_left_high + 1)
        nxt[-len(suffix):] = suffix
    return nxt


def free_tree_sequences(n: int, dmax: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences of all free trees on ``n`` vertices with
    max degree <= ``dmax``, in decreasing lexicographic order, one per
    isomorphism class."""
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")
    if dmax < 1 and n >= 2:
        return
    if n == 1:
        yield (0,)
        return
    if n == 2:
        yield (0, 1)
        return
    if dmax < 2:
        return
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        while True:
            j, ok, left_size = _scan(layout, dmax)
            if j >= 0:
                layout = _jump_below(layout, j)
            elif not ok:
                layout = _free_tree_jump(layout, left_size)
            else:
                break
            if layout is None:
                return
        yield tuple(layout)
        layout = _next_rooted(layout)


def level_sequence_to_graph(levels: tuple[int, ...]) -> Graph:
    """Tree with edge (i, parent(i)); the parent of preorder vertex i is
    the latest earlier vertex one level up."""
    n = len(levels)
    rows = [0] * n
    stack: list[int] = []
    for i, lev in enumerate(levels):
        del stack[lev:]
        if stack:
            p = stack[-1]
            rows[p] |= 1 << i
            rows[i] |= 1 << p
        stack.append(i)
    return Graph(n, rows)


@dataclass(frozen=True)
class TreeCode:
    """Canonical level sequence of one generated tree."""

    levels: tuple[int, ...]
    dmax: int

    @property
    def n(self) -> int:
        return len(self.levels)

    def to_graph(self) -> Graph:
        return level_sequence_to_graph(self.levels)


def trees_bounded_degree(n: int, dmax: int) -> Iterator[Graph]:
    """One representative per isomorphism class of free trees on ``n``
    vertices with max degree <= ``dmax``."""
    for levels in free_tree_sequences(n, dmax):
        yield level_sequence_to_graph(levels)


def count_trees(n: int, dmax: int) -> int:
    return sum(1 for _ in free_tree_sequences(n, dmax))


# -- small connected C4-free graphs -----------------------------------------


@dataclass(frozen=True)
class EnumConfig:
    """Search space for the graph enumerator: order, degree bound, minimum
    edge count, and the C4-free / connected constraints."""

    n: int
    dmax: int
    min_edges: int = 0
    c4_free: bool = True
    connected: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be >= 1, got {self.n}")
        if self.dmax < 1:
            raise ValueError(f"degree bound must be >= 1, got {self.dmax}")
        if self.n > GRAPH_ENUM_CAP:
            raise ValueError(
                f"graph enumeration capped at order {GRAPH_ENUM_CAP}, got {self.n}"
            )


def _creates_c4(rows: tuple[int, ...], u: int, v: int) -> bool:
    """Would adding edge (u, v) to a C4-free graph close a 4-cycle?  Any
    new 4-cycle must use the new edge: u - x - y - v with x ~ y."""
    ru = rows[u] & ~(1 << v)
    rv = rows[v] & ~(1 << u)
    t = ru
    while t:
        x = (t & -t).bit_length() - 1
        if rows[x] & rv:
            return True
        t &= t - 1
    return False


def _grow_level(
    level: dict[bytes, tuple[int, ...]], cfg: EnumConfig
) -> dict[bytes, tuple[int, ...]]:
    """All classes reachable from ``level`` by one admissible edge."""
    nxt: dict[bytes, tuple[int, ...]] = {}
    n = cfg.n
    for rows in level.values():
        for u in range(n - 1):
            ru = rows[u]
            if ru.bit_count() >= cfg.dmax:
                continue
            for v in range(u + 1, n):
                if ru >> v & 1:
                    continue
                if rows[v].bit_count() >= cfg.dmax:
                    continue
                if cfg.c4_free and _creates_c4(rows, u, v):
                    continue
                child = list(rows)
                child[u] |= 1 << v
                child[v] |= 1 << u
                g = Graph(n, child)
                code = canonical_code(g)
                if code not in nxt:
                    nxt[code] = g.rows
    return nxt


def connected_c4free_graphs(cfg: EnumConfig) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on ``cfg.n``
    vertices matching the config, streamed in increasing edge count."""
    n = cfg.n
    max_edges = n * cfg.dmax // 2
    if cfg.connected:
        level: dict[bytes, tuple[int, ...]] = {}
        for g in trees_bounded_degree(n, cfg.dmax):
            level[canonical_code(g)] = g.rows
        start_m = n - 1
    else:
        empty = Graph(n, [0] * n)
        level = {canonical_code(empty): empty.rows}
        start_m = 0
    m = start_m
    while level and m <= max_edges:
        if m >= cfg.min_edges:
            for rows in level.values():
                yield Graph(n, rows)
        level = _grow_level(level, cfg)
        m += 1
