"""Shared brute-force oracles and strategies for the test suite.

Everything here is deliberately independent of the package's search
machinery: plain permutation scans, closure counting, and networkx
cross-checks, used to validate the clever implementations.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from rdrlab.graphs import Graph, build_graph


def brute_force_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or len(g1.edge_list) != len(g2.edge_list):
        return False
    for p in itertools.permutations(range(g1.n)):
        if all(g2.has_edge(p[u], p[v]) for u, v in g1.edge_list):
            return True
    return False


def brute_force_automorphism_count(g: Graph) -> int:
    """Backtracking matcher in BFS order; exact and independent."""
    from collections import deque

    n = g.n
    if n == 0:
        return 1
    order = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    img = [-1] * n
    used = [False] * n
    count = 0

    def ok(v, t):
        if g.degree(v) != g.degree(t):
            return False
        for u in g.adj[v]:
            if img[u] != -1 and not g.has_edge(img[u], t):
                return False
        return True

    def rec(i):
        nonlocal count
        if i == n:
            count += 1
            return
        v = order[i]
        for t in range(n):
            if not used[t] and ok(v, t):
                img[v] = t
                used[t] = True
                rec(i + 1)
                img[v] = -1
                used[t] = False

    rec(0)
    return count


def permutation_closure_size(n: int, gens) -> int:
    if not gens:
        return 1
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = tuple(g[a[i]] for i in range(n))
                if b not in seen:
                    seen.add(b)
                    new.append(b)
        frontier = new
    return len(seen)


def lcf_graph(n: int, pattern) -> Graph:
    """Cubic graph from LCF notation: a Hamiltonian cycle plus chords."""
    edges = {(i, (i + 1) % n) for i in range(n)}
    for i in range(n):
        j = (i + pattern[i % len(pattern)]) % n
        edges.add((min(i, j), max(i, j)))
    return build_graph(n, sorted(edges))


def tutte_coxeter() -> Graph:
    return lcf_graph(30, [-13, -9, 7, -7, 9, 13])


@st.composite
def graphs(draw, min_n=1, max_n=8, p=None):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    density = p if p is not None else draw(st.sampled_from([0.2, 0.4, 0.6, 0.8]))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(
        st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs))
    )
    edges = [e for e, x in zip(pairs, mask) if x < density]
    return build_graph(n, edges)


@st.composite
def permutations_of(draw, n):
    perm = draw(st.permutations(range(n)))
    return tuple(perm)
