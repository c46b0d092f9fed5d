"""Shared independent oracles: subset-based 4-cycle counting, labeled-tree
enumeration through Prufer sequences, center-rooted AHU tree certificates,
and generating-function tree counts.  These deliberately avoid the code
paths they are used to check."""

from __future__ import annotations

import heapq
import random
from itertools import combinations
from math import comb

import pytest

from c4energy.graphs import Graph


def brute_force_c4(g: Graph) -> int:
    """Count 4-cycles by checking, for every 4-subset, each of the three
    vertex pairings that could close a cycle."""
    total = 0
    for a, b, c, d in combinations(range(g.n), 4):
        for w, x, y, z in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if (
                g.has_edge(w, x)
                and g.has_edge(x, y)
                and g.has_edge(y, z)
                and g.has_edge(z, w)
            ):
                total += 1
    return total


def prufer_to_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [i for i in range(n) if deg[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def bounded_prufer_sequences(n: int, dmax: int):
    """All Prufer sequences whose trees have max degree <= dmax (vertex
    degree = multiplicity + 1, so each label appears at most dmax-1
    times)."""
    length = n - 2
    if length <= 0:
        yield ()
        return
    counts = [0] * n
    seq = [0] * length
    cap = dmax - 1

    def rec(pos):
        if pos == length:
            yield tuple(seq)
            return
        for label in range(n):
            if counts[label] == cap:
                continue
            counts[label] += 1
            seq[pos] = label
            yield from rec(pos + 1)
            counts[label] -= 1

    yield from rec(0)


def ahu_certificate(g: Graph):
    """Exact tree-isomorphism certificate: strip leaves to the center(s),
    then nest the sorted child encodings."""
    n = g.n
    adj = [list(g.neighbors(u)) for u in range(n)]
    if n == 1:
        return ("c1", ())
    deg = [len(a) for a in adj]
    removed = [False] * n
    layer = [u for u in range(n) if deg[u] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for u in layer:
            removed[u] = True
            for v in adj[u]:
                if not removed[v]:
                    deg[v] -= 1
                    if deg[v] == 1:
                        nxt.append(v)
        remaining -= len(layer)
        layer = nxt
    centers = [u for u in range(n) if not removed[u]]

    def enc(v, parent):
        return tuple(sorted(enc(c, v) for c in adj[v] if c != parent))

    if len(centers) == 1:
        return ("c1", enc(centers[0], -1))
    u, v = centers
    return ("c2", tuple(sorted((enc(u, v), enc(v, u)))))


def unlabeled_trees_by_prufer(n: int, dmax: int) -> dict:
    """AHU certificate -> one representative labeled tree."""
    out = {}
    for seq in bounded_prufer_sequences(n, dmax):
        g = Graph.from_edge_list(n, prufer_to_edges(seq, n))
        if g.max_degree() > dmax and n > 1:
            continue
        cert = ahu_certificate(g)
        if cert not in out:
            out[cert] = g
    return out


def gf_rooted_counts(nmax: int, child_cap: int) -> list[int]:
    """Rooted trees by size where every vertex has at most ``child_cap``
    children, via multiset convolution over subtree sizes."""
    f = [0] * (nmax + 1)
    f[1] = 1
    for size in range(2, nmax + 1):
        g = [[0] * (child_cap + 1) for _ in range(size)]
        g[0][0] = 1
        for s in range(1, size):
            if f[s] == 0:
                continue
            for t in range(size - 1, s - 1, -1):
                for j in range(child_cap, 0, -1):
                    acc = 0
                    k = 1
                    while k <= j and k * s <= t:
                        if g[t - k * s][j - k]:
                            acc += comb(f[s] + k - 1, k) * g[t - k * s][j - k]
                        k += 1
                    g[t][j] += acc
        f[size] = sum(g[size - 1][j] for j in range(child_cap + 1))
    return f


def gf_free_tree_counts(nmax: int, dmax: int) -> list[int]:
    """Free trees with max degree <= dmax: vertex-rooted counts minus the
    dissimilar edge-rooted pairs (Otter's dissimilarity identity)."""
    r = gf_rooted_counts(nmax, max(dmax - 1, 0))
    big = [0] * (nmax + 1)
    for n in range(1, nmax + 1):
        g = [[0] * (dmax + 1) for _ in range(n)]
        g[0][0] = 1
        for s in range(1, n):
            if r[s] == 0:
                continue
            for t in range(n - 1, s - 1, -1):
                for j in range(dmax, 0, -1):
                    acc = 0
                    k = 1
                    while k <= j and k * s <= t:
                        if g[t - k * s][j - k]:
                            acc += comb(r[s] + k - 1, k) * g[t - k * s][j - k]
                        k += 1
                    g[t][j] += acc
        big[n] = sum(g[n - 1][j] for j in range(dmax + 1))
    t = [0] * (nmax + 1)
    t[1] = 1
    for n in range(2, nmax + 1):
        conv = sum(r[i] * r[n - i] for i in range(1, n))
        rx2 = r[n // 2] if n % 2 == 0 else 0
        t[n] = big[n] - (conv - rx2) // 2
    return t


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edge_list(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)
