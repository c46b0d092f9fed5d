"""Simple undirected graphs as packed bit rows, plus the structural helpers
the rest of the toolkit leans on: C4 counting, connectivity, bipartiteness,
canonical codes for small graphs, and graph6 serialization.

Adjacency rows are Python integers used as bit sets, so common-neighbor
counts are a single AND + popcount.  Graphs are immutable after
construction and safe to share across worker processes.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_ORDER = 4096
CANONICAL_CAP = 16
GRAPH6_MAX_ORDER = 62


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "rows", "degrees", "m")

    def __init__(self, n: int, rows: Sequence[int]):
        # rows must already be symmetric with zero diagonal; use the
        # constructors below instead of calling this directly.
        self.n = n
        self.rows = tuple(rows)
        self.degrees = tuple(r.bit_count() for r in self.rows)
        self.m = sum(self.degrees) // 2

    # -- constructors --------------------------------------------------

    @staticmethod
    def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from (u, v) pairs; duplicate edges collapse.

        Raises ValueError for loops, out-of-range endpoints, or an order
        outside [1, MAX_ORDER].
        """
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"graph order must be in [1, {MAX_ORDER}], got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop edge at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, rows)

    # -- basic queries --------------------------------------------------

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    yield (u, v)
                r >>= 1
                v += 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> Iterator[int]:
        r = self.rows[u]
        v = 0
        while r:
            if r & 1:
                yield v
            r >>= 1
            v += 1

    def max_degree(self) -> int:
        return max(self.degrees)

    def codegree(self, u: int, v: int) -> int:
        """Number of common neighbors of u and v."""
        return (self.rows[u] & self.rows[v]).bit_count()

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex i renamed perm[i]."""
        rows = [0] * self.n
        for u, v in self.edges():
            pu, pv = perm[u], perm[v]
            rows[pu] |= 1 << pv
            rows[pv] |= 1 << pu
        return Graph(self.n, rows)

    def adjacency_matrix(self):
        """Dense float64 numpy adjacency matrix."""
        import numpy as np

        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- structural predicates and counts -----------------------------------


def count_c4(g: Graph) -> int:
    """Number of 4-cycles (as vertex subsets inducing a cycle subgraph).

    Each 4-cycle is seen once from each of its two diagonals, so half of
    sum-over-pairs of C(codegree, 2) is the cycle count.
    """
    total = 0
    rows = g.rows
    for u in range(g.n - 1):
        ru = rows[u]
        for v in range(u + 1, g.n):
            c = (ru & rows[v]).bit_count()
            if c >= 2:
                total += c * (c - 1) // 2
    return total // 2


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    full = (1 << g.n) - 1
    visited = 1
    frontier = 1
    rows = g.rows
    while frontier:
        nb = 0
        f = frontier
        while f:
            tz = (f & -f).bit_length() - 1
            nb |= rows[tz]
            f &= f - 1
        frontier = nb & ~visited
        visited |= frontier
        if visited == full:
            return True
    return visited == full


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_bipartite(g: Graph) -> bool:
    """BFS 2-coloring over every component."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            cu = color[u]
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = cu ^ 1
                    queue.append(v)
                elif color[v] == cu:
                    return False
    return True


def has_isolated_vertex(g: Graph) -> bool:
    return 0 in g.degrees


# -- canonical codes ------------------------------------------------------


def _refine(rows: Sequence[int], colors: list[int]) -> list[int]:
    """Iterated neighborhood color refinement to a stable partition.

    Color values are ranks, ordered by an isomorphism-invariant key, so two
    isomorphic graphs refine to corresponding partitions.
    """
    n = len(colors)
    while True:
        keys = []
        for u in range(n):
            nb = []
            r = rows[u]
            while r:
                tz = (r & -r).bit_length() - 1
                nb.append(colors[tz])
                r &= r - 1
            nb.sort()
            keys.append((colors[u], tuple(nb)))
        order = sorted(set(keys))
        rank = {k: i for i, k in enumerate(order)}
        new_colors = [rank[k] for k in keys]
        if new_colors == colors:
            return colors
        colors = new_colors


def _pack_code(n: int, rows: Sequence[int], perm: Sequence[int]) -> bytes:
    """Upper-triangle bit string of the graph relabeled so that vertex u
    lands at position perm[u]."""
    pos_of = [0] * n
    for u in range(n):
        pos_of[perm[u]] = u
    bits = 0
    nbits = 0
    for j in range(1, n):
        rj = rows[pos_of[j]]
        for i in range(j):
            bits = (bits << 1) | (rj >> pos_of[i] & 1)
            nbits += 1
    return bits.to_bytes((nbits + 7) // 8 or 1, "big")


def canonical_code(g: Graph, cap: int = CANONICAL_CAP) -> bytes:
    """Isomorphism-invariant byte code; equal codes iff isomorphic.

    Color refinement first, then individualization of the first
    non-singleton class with full backtracking; the code is the minimum
    packed adjacency over all refinement-consistent labelings, so it is a
    complete invariant for graphs up to the cap.
    """
    n = g.n
    if n > cap:
        raise ValueError(f"canonical_code supports order <= {cap}, got {n}")
    rows = g.rows
    best: list[bytes | None] = [None]

    def search(colors: list[int]) -> None:
        colors = _refine(rows, colors)
        cells: dict[int, list[int]] = {}
        for u, c in enumerate(colors):
            cells.setdefault(c, []).append(u)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            # discrete: color rank is the position
            code = _pack_code(n, rows, colors)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        # swapping twins (equal neighborhoods away from each other) is an
        # automorphism, so one branch per twin class suffices; without this
        # the edgeless and complete graphs branch factorially
        reps: list[int] = []
        for v in target:
            rv = rows[v]
            if any(rows[u] & ~(1 << v) == rv & ~(1 << u) for u in reps):
                continue
            reps.append(v)
        for v in reps:
            child = list(colors)
            # individualize v just below its class; shift everything else up
            for u in range(n):
                if child[u] >= child[v] and u != v:
                    child[u] += 1
            search(child)

    search([0] * n)
    assert best[0] is not None
    return bytes([n]) + best[0]


def code_to_graph(code: bytes) -> Graph:
    """Rebuild the canonically labeled graph from its code bytes."""
    n = code[0]
    payload = int.from_bytes(code[1:], "big")
    nbits = n * (n - 1) // 2
    rows = [0] * max(n, 1)
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if payload >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, rows)


# -- graph6 ----------------------------------------------------------------


def write_graph6(g: Graph) -> str:
    """Standard graph6 encoding (short form, order <= 62)."""
    n = g.n
    if n > GRAPH6_MAX_ORDER:
        raise ValueError(f"graph6 writer supports order <= {GRAPH6_MAX_ORDER}, got {n}")
    out = [chr(63 + n)]
    bits = 0
    nbits = 0
    for v in range(1, n):
        rv = g.rows[v]
        for u in range(v):
            bits = (bits << 1) | (rv >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + bits))
                bits = nbits = 0
    if nbits:
        bits <<= 6 - nbits
        out.append(chr(63 + bits))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (short form)."""
    s = text.strip()
    if not s:
        raise ValueError("empty graph6 string")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(ch) for ch in s]
    for ch in data:
        if not 63 <= ch <= 126:
            raise ValueError(f"graph6 character out of range: {chr(ch)!r}")
    if data[0] == 126:
        raise ValueError("graph6 long form (order >= 63) not supported")
    n = data[0] - 63
    if n < 1:
        raise ValueError("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) != need:
        raise ValueError(
            f"graph6 payload length {len(payload)} does not match order {n} (expected {need})"
        )
    rows = [0] * n
    k = 0
    for ch in payload:
        val = ch - 63
        for b in range(5, -1, -1):
            if k >= nbits:
                if val >> b & 1:
                    raise ValueError("graph6 padding bits must be zero")
                continue
            if val >> b & 1:
                # bit k corresponds to pair (u, v), column-major upper triangle
                v = _g6_col(k)
                u = k - v * (v - 1) // 2
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, rows)


def _g6_col(k: int) -> int:
    # smallest v with v(v-1)/2 > k, minus ... i.e. the column of bit k
    v = int(((8 * k + 1) ** 0.5 + 1) / 2)
    while v * (v - 1) // 2 > k:
        v -= 1
    while (v + 1) * v // 2 <= k:
        v += 1
    return v
