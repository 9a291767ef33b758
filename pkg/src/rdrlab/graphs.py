"""Core graph type and structural analysis.

Simple undirected graphs on vertices 0..n-1, with bipartition testing,
girth and girth-cycle signatures, and canonical forms / isomorphism via
individualization-refinement with automorphism pruning.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

INFINITY = math.inf


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted per-vertex neighbor tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in self.adj[u] if u < v
        )

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edge_list)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        masks = []
        for nbrs in self.adj:
            m = 0
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        if self.n == 0:
            return None
        d = len(self.adj[0])
        return d if all(len(nbrs) == d for nbrs in self.adj) else None

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def relabel(self, perm) -> "Graph":
        """Image of the graph under the vertex map v -> perm[v]."""
        new_adj: list[list[int]] = [[] for _ in range(self.n)]
        for v in range(self.n):
            new_adj[perm[v]] = sorted(perm[u] for u in self.adj[v])
        return Graph(self.n, tuple(tuple(a) for a in new_adj))

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        queue.append(u)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1

    @cached_property
    def _canon(self) -> tuple[tuple, tuple[int, ...], list[tuple[int, ...]]]:
        return _canon_search(self.n, self.adj)


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of the vertex set; every edge crosses sides."""

    side0: tuple[int, ...]
    side1: tuple[int, ...]

    def side_of(self, v: int) -> int:
        return 0 if v in self._side0_set else 1

    @cached_property
    def _side0_set(self) -> frozenset[int]:
        return frozenset(self.side0)


@dataclass(frozen=True)
class GirthReport:
    """Exact girth-cycle statistics.

    edge_counts maps each edge (u, v) with u < v to the number of girth
    cycles through it; vertex_signatures[v] is the sorted tuple of those
    counts over the edges at v.  graph_signature is set exactly when all
    vertex signatures agree (girth-regular graph).
    """

    girth: int
    cycle_count: int
    edge_counts: dict[tuple[int, int], int]
    vertex_signatures: tuple[tuple[int, ...], ...]
    girth_regular: bool
    graph_signature: tuple[int, ...] | None


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant fingerprint plus the relabeling achieving it."""

    key: tuple
    relabeling: tuple[int, ...]

    @property
    def canonical_edges(self) -> tuple[tuple[int, int], ...]:
        n, rows = self.key[0], self.key[1:]
        edges = []
        for p in range(n):
            row = rows[p]
            for q in range(p + 1, n):
                if row >> q & 1:
                    edges.append((p, q))
        return tuple(edges)


def build_graph(n: int, edges) -> Graph:
    """Normalize an edge list into a Graph, rejecting malformed input."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: {(u, v)}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union with g2's vertices shifted by g1.n."""
    off = g1.n
    adj = list(g1.adj) + [tuple(u + off for u in nbrs) for nbrs in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def bipartition(g: Graph) -> Bipartition | None:
    """Proper 2-coloring, or None if some component has an odd cycle.

    Each component is colored independently; its minimum vertex lands in
    side0, so vertex 0 is always in side0.
    """
    color = [-1] * g.n
    for comp in g.components:
        root = comp[0]
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return Bipartition(side0, side1)


def odd_closed_walk(g: Graph) -> tuple[int, ...] | None:
    """An odd closed walk witnessing non-bipartiteness, or None."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for comp in g.components:
        root = comp[0]
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    queue.append(u)
                elif color[u] == color[v]:
                    # closed walk root -> u -> v -> root; same colors make
                    # its length dist(u) + dist(v) + 1 odd
                    def path_to_root(x):
                        p = [x]
                        while parent[p[-1]] != -1:
                            p.append(parent[p[-1]])
                        return p

                    up = path_to_root(u)
                    vp = path_to_root(v)
                    walk = tuple(up[::-1] + vp)
                    assert (len(walk) - 1) % 2 == 1
                    return walk
    return None


def girth(g: Graph):
    """Length of a shortest cycle; math.inf for forests."""
    best = INFINITY
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if 2 * dv + 1 >= best:
                break
            for u in adj[v]:
                if u not in dist:
                    dist[u] = dv + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v]:
                    cand = dv + dist[u] + 1
                    if cand < best:
                        best = cand
    return best if best is INFINITY else int(best)


def cycles_of_length(g: Graph, length: int) -> list[tuple[int, ...]]:
    """All simple cycles of exactly the given length, each listed once.

    A cycle is reported as the vertex tuple starting at its minimum vertex
    with the lexicographically smaller of the two directions.
    """
    if length < 3:
        return []
    result: list[tuple[int, ...]] = []
    adj = g.adj
    masks = g.adj_masks
    for s in range(g.n):
        # distances to s inside the subgraph on vertices >= s
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u >= s and dist[u] == -1:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        in_path = [False] * g.n
        in_path[s] = True
        path = [s]

        def dfs(v):
            p = len(path)
            if p == length:
                if masks[v] >> s & 1 and path[1] < path[-1]:
                    result.append(tuple(path))
                return
            for u in adj[v]:
                if u <= s or in_path[u]:
                    continue
                du = dist[u]
                if du == -1 or du + p > length:
                    continue
                in_path[u] = True
                path.append(u)
                dfs(u)
                path.pop()
                in_path[u] = False

        dfs(s)
    return result


def girth_signature(g: Graph) -> GirthReport:
    """Count girth cycles per edge and derive vertex/graph signatures."""
    glen = girth(g)
    if glen is INFINITY:
        raise ValueError("graph is acyclic: girth cycles undefined")
    cycles = cycles_of_length(g, glen)
    counts = {e: 0 for e in g.edge_list}
    for cyc in cycles:
        for i, u in enumerate(cyc):
            v = cyc[(i + 1) % glen]
            counts[(min(u, v), max(u, v))] += 1
    sigs = tuple(
        tuple(sorted(counts[(min(v, u), max(v, u))] for u in g.adj[v]))
        for v in range(g.n)
    )
    regular = g.n > 0 and len(set(sigs)) == 1
    return GirthReport(
        girth=glen,
        cycle_count=len(cycles),
        edge_counts=counts,
        vertex_signatures=sigs,
        girth_regular=regular,
        graph_signature=sigs[0] if regular else None,
    )


# ---------------------------------------------------------------------------
# Canonical labeling and automorphisms (individualization-refinement)
# ---------------------------------------------------------------------------


def _refine(adj, cells: list[list[int]], work: deque) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Repeatedly splits cells by neighbor counts into the splitter sets on
    the work queue; fragments are ordered by ascending count, which keeps
    the procedure equivariant under relabeling.
    """
    while work:
        splitter = work.popleft()
        counts: dict[int, int] = {}
        for w in splitter:
            for u in adj[w]:
                counts[u] = counts.get(u, 0) + 1
        if not counts:
            continue
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault(counts.get(v, 0), []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for c in sorted(buckets):
                frag = buckets[c]
                new_cells.append(frag)
                work.append(frag)
        if changed:
            cells = new_cells
    return cells


def _node_invariant(adj, cells) -> tuple:
    """Relabeling-invariant summary of a refined ordered partition."""
    cell_of = {}
    for idx, cell in enumerate(cells):
        for v in cell:
            cell_of[v] = idx
    items = []
    for cell in cells:
        rep = cell[0]
        row: dict[int, int] = {}
        for u in adj[rep]:
            j = cell_of[u]
            row[j] = row.get(j, 0) + 1
        items.append((len(cell), tuple(sorted(row.items()))))
    return tuple(items)


def _leaf_certificate(adj, cells):
    """Labeling (vertex -> position) and adjacency rows of a discrete leaf."""
    n = len(cells)
    lab = [0] * n
    for pos, cell in enumerate(cells):
        lab[cell[0]] = pos
    rows = []
    for cell in cells:
        row = 0
        for u in adj[cell[0]]:
            row |= 1 << lab[u]
        rows.append(row)
    return tuple(lab), tuple(rows)


class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[rb] = ra


def _canon_search(n, adj):
    """Backtracking search over the refinement tree.

    Returns (canonical key, canonical labeling, automorphism generators).
    Leaves are ordered by (invariant path, certificate); the minimum leaf
    defines the canonical form, and pairs of equal leaves yield
    automorphisms.  Subtrees are pruned when their invariant prefix can
    neither match the first path (automorphism discovery) nor beat the
    best path, and siblings equivalent under already-found automorphisms
    fixing the individualized prefix are skipped.
    """
    if n == 0:
        return ((0,), (), [])

    first: list | None = None  # [inv_path, cert, lab]
    best: list | None = None
    autos: list[tuple[int, ...]] = []
    auto_set: set[tuple[int, ...]] = set()
    identity = tuple(range(n))

    def record_auto(lab_a, lab_b):
        # lab_a, lab_b label the same canonical graph; their quotient is
        # an automorphism.
        inv_b = [0] * n
        for v, pos in enumerate(lab_b):
            inv_b[pos] = v
        pi = tuple(inv_b[lab_a[v]] for v in range(n))
        if pi != identity and pi not in auto_set:
            auto_set.add(pi)
            autos.append(pi)

    def prefix_cmp(path, ref):
        # lexicographic comparison of path against ref's prefix
        for a, b in zip(path, ref):
            if a < b:
                return -1
            if a > b:
                return 1
        return 0 if len(path) <= len(ref) else -1

    def rec(cells, inv_path, prefix, cf_eq, inherited_fixers):
        nonlocal first, best
        if best is not None:
            cb = prefix_cmp(inv_path, best[0])
            if cb > 0 and not cf_eq:
                return
        if all(len(c) == 1 for c in cells):
            lab, cert = _leaf_certificate(adj, cells)
            if first is None:
                first = [inv_path, cert, lab]
                best = [inv_path, cert, lab]
                return
            if cf_eq and len(inv_path) == len(first[0]) and cert == first[1]:
                record_auto(lab, first[2])
            key = (inv_path, cert)
            best_key = (best[0], best[1])
            if key < best_key:
                best = [inv_path, cert, lab]
            elif key == best_key and lab != tuple(best[2]):
                record_auto(lab, best[2])
            return

        target_idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: len(cells[i]),
        )
        target = cells[target_idx]
        # automorphisms fixing the prefix pointwise prune sibling branches;
        # the list is refreshed lazily as deeper calls discover generators
        last = prefix[-1] if prefix else None
        node_fixers = [
            g for g in inherited_fixers if last is None or g[last] == last
        ]
        known_autos = len(autos)
        uf: _UnionFind | None = None
        explored: list[int] = []
        for v in sorted(target):
            if len(autos) > known_autos:
                for g in autos[known_autos:]:
                    if all(g[p] == p for p in prefix):
                        node_fixers.append(g)
                        uf = None
                known_autos = len(autos)
            if explored and node_fixers:
                if uf is None:
                    uf = _UnionFind(n)
                    for gperm in node_fixers:
                        for x in target:
                            uf.union(x, gperm[x])
                root = uf.find(v)
                if any(uf.find(u) == root for u in explored):
                    continue
            child = [c[:] for c in cells]
            rest = [x for x in target if x != v]
            child[target_idx:target_idx + 1] = [[v], rest]
            work = deque([[v], rest])
            child = _refine(adj, child, work)
            inv = _node_invariant(adj, child)
            child_cf = cf_eq and (
                first is None
                or (
                    len(inv_path) < len(first[0])
                    and inv == first[0][len(inv_path)]
                )
            )
            rec(child, inv_path + (inv,), prefix + (v,), child_cf, node_fixers)
            explored.append(v)

    cells0 = _refine(adj, [list(range(n))], deque([list(range(n))]))
    inv0 = _node_invariant(adj, cells0)
    rec(cells0, (inv0,), (), True, [])

    assert best is not None
    key = (n,) + best[1]
    return (key, tuple(best[2]), autos)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form: equal keys exactly for isomorphic graphs."""
    key, lab, _ = g._canon
    return CanonicalForm(key=key, relabeling=lab)


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Generators of the automorphism group, as vertex image tuples."""
    return list(g._canon[2])


def is_isomorphic(g1: Graph, g2: Graph):
    """Isomorphism test; returns (flag, witness vertex map g1 -> g2)."""
    if g1.n != g2.n or sorted(g1.degrees) != sorted(g2.degrees):
        return False, None
    k1, lab1, _ = g1._canon
    k2, lab2, _ = g2._canon
    if k1 != k2:
        return False, None
    inv2 = [0] * g2.n
    for v, pos in enumerate(lab2):
        inv2[pos] = v
    pi = tuple(inv2[lab1[v]] for v in range(g1.n))
    for u, v in g1.edge_list:
        if not g2.has_edge(pi[u], pi[v]):  # pragma: no cover - sanity guard
            raise AssertionError("canonical forms collided on non-isomorphic graphs")
    return True, pi
