"""Permutation-group machinery and the structural RDR criteria.

Groups are given by generators acting on 0..n-1.  A Schreier-Sims base
and strong generating set provides orders and membership; element lists
are materialized only below a configurable cap.  On top of this sit the
two checkers for rainbow-domination regularity of vertex-transitive
graphs: one through semiregular quotients, one through block systems.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .graphs import (
    Graph,
    Bipartition,
    automorphism_generators,
    bipartition,
    build_graph,
    is_isomorphic,
)

ELEMENT_CAP = 50_000


class MaterializationError(RuntimeError):
    """Raised when a full element list would exceed the cap."""


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(p, q) -> tuple[int, ...]:
    """Permutation applying p first, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_permutation(p, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


class _BSGS:
    """Deterministic Schreier-Sims chain.

    Keeps a flat strong generating set; level i acts with the strong
    generators fixing base[:i] pointwise.  Whenever a sifted Schreier
    generator survives, it is inserted and every level between its stuck
    point and the initiating level is re-completed (deepest first), so a
    clean final pass certifies the whole chain.
    """

    def __init__(self, degree: int, gens, base_hint=()):
        self.degree = degree
        self.base: list[int] = []
        self.trans: list[dict[int, tuple[int, ...]]] = []
        self.sgs: list[tuple[int, ...]] = []
        ident = identity(degree)
        for b in base_hint:
            self._append_base_point(b)
        for g in gens:
            t = tuple(g)
            if t != ident and t not in self.sgs:
                self.sgs.append(t)
                self._ensure_base_moves(t)
        if self.sgs:
            self._complete(0)

    def _append_base_point(self, b: int):
        self.base.append(b)
        self.trans.append({b: identity(self.degree)})

    def _ensure_base_moves(self, g):
        if all(g[b] == b for b in self.base):
            for i in range(self.degree):
                if g[i] != i:
                    self._append_base_point(i)
                    return

    def _acting_gens(self, lev: int):
        prefix = self.base[:lev]
        return [g for g in self.sgs if all(g[b] == b for b in prefix)]

    def _rebuild_transversal(self, lev: int, gens):
        b = self.base[lev]
        tr = {b: identity(self.degree)}
        queue = deque([b])
        while queue:
            x = queue.popleft()
            px = tr[x]
            for g in gens:
                y = g[x]
                if y not in tr:
                    tr[y] = compose(px, g)
                    queue.append(y)
        self.trans[lev] = tr

    def sift(self, p, start: int = 0):
        """Reduce p through the chain; returns (residue, stuck level)."""
        for lev in range(start, len(self.base)):
            x = p[self.base[lev]]
            if x == self.base[lev]:
                continue
            rep = self.trans[lev].get(x)
            if rep is None:
                return p, lev
            p = compose(p, inverse(rep))
        return p, len(self.base)

    def _complete(self, lev: int):
        ident = identity(self.degree)
        while True:
            gens = self._acting_gens(lev)
            self._rebuild_transversal(lev, gens)
            tr = self.trans[lev]
            restart = False
            for x in sorted(tr):
                tx = tr[x]
                for g in gens:
                    y = g[x]
                    schreier = compose(compose(tx, g), inverse(tr[y]))
                    if schreier == ident:
                        continue
                    res, stuck = self.sift(schreier, lev + 1)
                    if res == ident:
                        continue
                    if stuck == len(self.base):
                        self._ensure_base_moves(res)
                        stuck = len(self.base) - 1
                    if res not in self.sgs:
                        self.sgs.append(res)
                    for j in range(stuck, lev, -1):
                        self._complete(j)
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                return

    @property
    def order(self) -> int:
        ord_ = 1
        for tr in self.trans:
            ord_ *= len(tr)
        return ord_

    def contains(self, p) -> bool:
        res, _ = self.sift(tuple(p))
        return res == identity(self.degree)

    def stabilizer_generators(self, upto: int = 1):
        """Strong generators fixing base[:upto] pointwise."""
        if upto > len(self.base):
            return []
        return self._acting_gens(upto)


class PermutationGroup:
    """Finite permutation group on 0..degree-1 given by generators."""

    def __init__(self, degree: int, generators, element_cap: int = ELEMENT_CAP):
        self.degree = degree
        seen = set()
        gens = []
        ident = identity(degree)
        for g in generators:
            t = tuple(g)
            if not is_permutation(t, degree):
                raise ValueError(f"not a permutation of degree {degree}: {t}")
            if t != ident and t not in seen:
                seen.add(t)
                gens.append(t)
        self.generators: tuple[tuple[int, ...], ...] = tuple(gens)
        self.element_cap = element_cap

    def __repr__(self):
        return f"PermutationGroup(degree={self.degree}, ngens={len(self.generators)})"

    @cached_property
    def _bsgs(self) -> _BSGS:
        return _BSGS(self.degree, self.generators)

    @cached_property
    def order(self) -> int:
        return self._bsgs.order

    def contains(self, p) -> bool:
        if not self.generators:
            return tuple(p) == identity(self.degree)
        return self._bsgs.contains(p)

    def orbit(self, v: int) -> tuple[int, ...]:
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def orbits(self) -> tuple[tuple[int, ...], ...]:
        done: set[int] = set()
        out = []
        for v in range(self.degree):
            if v not in done:
                orb = self.orbit(v)
                done.update(orb)
                out.append(orb)
        return tuple(out)

    @property
    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def stabilizer(self, v: int) -> "PermutationGroup":
        if not self.generators:
            return PermutationGroup(self.degree, [], self.element_cap)
        chain = _BSGS(self.degree, self.generators, base_hint=(v,))
        return PermutationGroup(
            self.degree, chain.stabilizer_generators(1), self.element_cap
        )

    @cached_property
    def _elements(self) -> tuple[tuple[int, ...], ...]:
        if self.order > self.element_cap:
            raise MaterializationError(
                f"group of order {self.order} exceeds element cap {self.element_cap}"
            )
        ident = identity(self.degree)
        seen = {ident}
        queue = deque([ident])
        while queue:
            a = queue.popleft()
            for g in self.generators:
                b = compose(a, g)
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return tuple(sorted(seen))

    def elements(self) -> tuple[tuple[int, ...], ...]:
        """Full element list, sorted; MaterializationError above the cap."""
        return self._elements


def orbits(group: PermutationGroup) -> tuple[tuple[int, ...], ...]:
    return group.orbits()


def stabilizer(group: PermutationGroup, v: int) -> PermutationGroup:
    return group.stabilizer(v)


def automorphism_group(g: Graph) -> PermutationGroup:
    """Automorphism group of a graph, from the refinement-search generators."""
    return PermutationGroup(g.n, automorphism_generators(g))


def is_vertex_transitive(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(automorphism_group(g).orbit(0)) == g.n


@dataclass(frozen=True)
class BlockSystem:
    """G-invariant partition of the domain into equal-size blocks."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    @property
    def index(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        out = {}
        for i, blk in enumerate(self.blocks):
            for v in blk:
                out[v] = i
        return out

    def is_invariant_under(self, gens) -> bool:
        block_sets = {frozenset(b) for b in self.blocks}
        for g in gens:
            for b in self.blocks:
                if frozenset(g[v] for v in b) not in block_sets:
                    return False
        return True


def quotient_graph(g: Graph, partition) -> tuple[Graph, bool]:
    """Quotient by a vertex partition; flag is False when a cell spans an edge.

    Cells are sorted by minimum element to fix the quotient's labeling.
    """
    cells = sorted((tuple(sorted(c)) for c in partition), key=lambda c: c[0])
    seen = [0] * g.n
    for cell in cells:
        for v in cell:
            if not 0 <= v < g.n or seen[v]:
                raise ValueError("cells must be disjoint subsets of the vertex set")
            seen[v] = 1
    if not all(seen):
        raise ValueError("partition does not cover the vertex set")
    cell_of = {}
    for i, cell in enumerate(cells):
        for v in cell:
            cell_of[v] = i
    simple = True
    qedges = set()
    for u, v in g.edge_list:
        cu, cv = cell_of[u], cell_of[v]
        if cu == cv:
            simple = False
        else:
            qedges.add((min(cu, cv), max(cu, cv)))
    return build_graph(len(cells), sorted(qedges)), simple


def _closure_capped(degree, gens, limit):
    """Element closure, or None as soon as it exceeds limit."""
    ident = identity(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = compose(a, g)
            if b not in seen:
                if len(seen) >= limit:
                    return None
                seen.add(b)
                queue.append(b)
    return seen


def _element_order(p) -> int:
    from math import lcm

    n = len(p)
    seen = [False] * n
    out = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        out = lcm(out, length)
    return out


def semiregular_subgroups(group: PermutationGroup, m: int):
    """All order-m subgroups whose non-identity elements are fixed-point-free.

    Searches closures of up to three fixed-point-free generators, taken in
    ascending order (every subset of a semiregular group is semiregular,
    so each target is reached through its sorted generating sequences).
    Candidate generators are pre-filtered to element orders dividing m.
    Groups of the orders needed here are covered by three generators
    except for elementary abelian 2-groups of rank four and higher, which
    would be reported incompletely.
    """
    n = group.degree
    ident = identity(n)
    if m == 1:
        return [PermutationGroup(n, [], group.element_cap)]
    if m <= 0 or group.order % m != 0:
        return []
    elements = group.elements()
    fpf = sorted(
        g
        for g in elements
        if g != ident
        and all(g[i] != i for i in range(n))
        and m % _element_order(g) == 0
    )
    found: dict[frozenset, tuple] = {}

    def consider(gens):
        cl = _closure_capped(n, gens, m)
        if cl is None or m % len(cl) != 0:
            return None
        if any(g != ident and any(g[i] == i for i in range(n)) for g in cl):
            return None
        key = frozenset(cl)
        if key not in found:
            found[key] = tuple(gens)
        return key

    level: list[tuple[frozenset, tuple]] = []
    lseen: set[frozenset] = set()
    for x in fpf:
        key = consider((x,))
        if key is not None and key not in lseen:
            lseen.add(key)
            level.append((key, (x,)))
    for _ in range(2):  # extend to at most 3 generators, ascending
        nxt = []
        nseen: set[frozenset] = set()
        for key, gens in level:
            if len(key) == m:
                continue
            last = gens[-1]
            for y in fpf:
                if y <= last or y in key:
                    continue
                k2 = consider(gens + (y,))
                if k2 is not None and k2 != key and k2 not in nseen:
                    nseen.add(k2)
                    nxt.append((k2, gens + (y,)))
        level = nxt

    out = []
    for key in sorted(found, key=lambda k: sorted(k)):
        if len(key) != m:
            continue
        sub = PermutationGroup(n, found[key], group.element_cap)
        if all(len(o) == m for o in sub.orbits()):
            out.append(sub)
    return out


def regular_subgroups(group: PermutationGroup):
    """Subgroups acting regularly: semiregular with a single full orbit."""
    return semiregular_subgroups(group, group.degree)


def block_systems(group: PermutationGroup, size: int):
    """All block systems with the given block size, for a transitive group.

    Blocks containing a fixed point correspond to subgroups between the
    point stabilizer and the whole group; these are enumerated by closing
    the stabilizer with one transversal element per coset at a time and
    taking the orbit of the anchor point.
    """
    n = group.degree
    if not group.is_transitive:
        raise ValueError("block systems require a transitive group")
    if size <= 0 or n % size != 0:
        return []
    if size == 1:
        return [BlockSystem(tuple((v,) for v in range(n)))]
    if size == n:
        return [BlockSystem((tuple(range(n)),))]

    elements = group.elements()
    stab_elems = tuple(g for g in elements if g[0] == 0)
    trans = {}
    for g in elements:
        if g[0] not in trans:
            trans[g[0]] = g

    def orbit_of_zero(gens):
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    start = frozenset([0])
    block_gens: dict[frozenset, tuple] = {start: stab_elems}
    frontier = [start]
    visited = {start}
    blocks_of_size = set()
    while frontier:
        nxt = []
        for blk in frontier:
            gens = block_gens[blk]
            for u in range(1, n):
                if u in blk:
                    continue
                new_gens = gens + (trans[u],)
                nb = orbit_of_zero(new_gens)
                if len(nb) > size or size % len(nb) != 0 or nb in visited:
                    continue
                visited.add(nb)
                block_gens[nb] = new_gens
                if len(nb) == size:
                    blocks_of_size.add(nb)
                else:
                    nxt.append(nb)
        frontier = nxt

    systems = []
    seen_systems = set()
    for blk in sorted(blocks_of_size, key=sorted):
        cells = {blk}
        for g in elements:
            cells.add(frozenset(g[v] for v in blk))
        partition = tuple(
            sorted((tuple(sorted(c)) for c in cells), key=lambda c: c[0])
        )
        if partition in seen_systems:
            continue
        seen_systems.add(partition)
        if sum(len(b) for b in partition) != n:
            continue
        system = BlockSystem(partition)
        if not system.is_invariant_under(group.generators):
            continue
        systems.append(system)
    return systems


# ---------------------------------------------------------------------------
# Criteria checkers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Krit1Witness:
    subgroup: PermutationGroup
    orbit_partition: tuple[tuple[int, ...], ...]
    witness: object  # rainbow.RdrWitness

    def to_json_dict(self):
        return {
            "subgroup_generators": [list(g) for g in self.subgroup.generators],
            "orbits": [list(o) for o in self.orbit_partition],
            "coloring": self.witness.to_json_dict(),
        }


@dataclass(frozen=True)
class Krit2Witness:
    system: BlockSystem
    block: tuple[int, ...]
    vertex: int
    witness: object

    def to_json_dict(self):
        return {
            "blocks": [list(b) for b in self.system.blocks],
            "block": list(self.block),
            "vertex": self.vertex,
            "coloring": self.witness.to_json_dict(),
        }


def _criteria_preconditions(g: Graph) -> tuple[int, Bipartition]:
    if g.n == 0:
        raise ValueError("criteria need a nonempty graph")
    if not g.connected:
        raise ValueError("criteria require a connected graph")
    d = g.regular_degree
    if d is None or d == 0:
        raise ValueError("criteria require a d-regular graph with d >= 1")
    bip = bipartition(g)
    if bip is None:
        raise ValueError("criteria require a bipartite graph")
    if g.n % (2 * d) != 0:
        raise ValueError("criteria require 2d to divide the order")
    if not is_vertex_transitive(g):
        raise ValueError("criteria require a vertex-transitive graph")
    return d, bip


def _witness_from_colored_cells(g: Graph, colored_cells):
    """Build and validate the rainbow witness induced by d colored cells."""
    from .rainbow import RainbowAssignment, RdrWitness, validate_rdf

    d = g.regular_degree
    masks = [0] * g.n
    for i, cell in enumerate(colored_cells):
        for v in cell:
            masks[v] = 1 << i
    coloring = RainbowAssignment(k=d, masks=tuple(masks))
    if not validate_rdf(g, coloring):  # pragma: no cover - theorem guard
        raise AssertionError("criterion produced an invalid rainbow coloring")
    colored = frozenset(v for v in range(g.n) if masks[v])
    bip = bipartition(g)
    if colored == frozenset(bip.side0):
        side = 0
    elif colored == frozenset(bip.side1):
        side = 1
    else:  # pragma: no cover - theorem guard
        raise AssertionError("colored set is not a bipartition side")
    return RdrWitness(
        coloring=coloring,
        colored_side=side,
        color_classes=tuple(tuple(sorted(c)) for c in colored_cells),
    )


def check_krit1(g: Graph) -> Krit1Witness | None:
    """Semiregular-quotient criterion.

    Searches semiregular subgroups H of order n/2d whose orbit quotient is
    a simple complete bipartite graph on 2d cells; the d cells adjacent to
    the cell of vertex 0 induce the witness coloring.
    """
    from .families import complete_bipartite

    d, _ = _criteria_preconditions(g)
    m = g.n // (2 * d)
    aut = automorphism_group(g)
    kdd = complete_bipartite(d)
    for sub in semiregular_subgroups(aut, m):
        cells = sub.orbits()
        quot, simple = quotient_graph(g, cells)
        if not simple:
            continue
        iso, _ = is_isomorphic(quot, kdd)
        if not iso:
            continue
        qbip = bipartition(quot)
        cell_of_zero = next(i for i, c in enumerate(cells) if 0 in c)
        colored_idx = qbip.side1 if cell_of_zero in qbip.side0 else qbip.side0
        colored_cells = [cells[i] for i in sorted(colored_idx)]
        witness = _witness_from_colored_cells(g, colored_cells)
        return Krit1Witness(subgroup=sub, orbit_partition=cells, witness=witness)
    return None


def check_krit2(g: Graph) -> Krit2Witness | None:
    """Block-system criterion.

    Searches block systems with blocks of size n/2d for a block B inside
    one bipartition side containing a vertex whose neighborhood meets
    exactly d distinct blocks; those d blocks induce the witness coloring.

    The underlying statement quantifies over vertex-transitive subgroups,
    whose blocks need not be blocks of the full automorphism group, so
    after the full group the search also covers the block systems of
    every (up to 3-generated) regular subgroup.
    """
    d, bip = _criteria_preconditions(g)
    m = g.n // (2 * d)
    aut = automorphism_group(g)
    side0, side1 = frozenset(bip.side0), frozenset(bip.side1)

    def try_system(system):
        block_of = system.block_of()
        for block in system.blocks:
            bset = frozenset(block)
            if not (bset <= side0 or bset <= side1):
                continue
            for v in block:
                hit = {block_of[u] for u in g.adj[v]}
                if len(hit) != d:
                    continue
                colored_cells = [system.blocks[i] for i in sorted(hit)]
                witness = _witness_from_colored_cells(g, colored_cells)
                return Krit2Witness(
                    system=system, block=block, vertex=v, witness=witness
                )
        return None

    tried: set[tuple] = set()
    for system in block_systems(aut, m):
        tried.add(system.blocks)
        found = try_system(system)
        if found is not None:
            return found
    if m > 1:
        for reg in regular_subgroups(aut):
            for system in block_systems(reg, m):
                if system.blocks in tried:
                    continue
                tried.add(system.blocks)
                found = try_system(system)
                if found is not None:
                    return found
    return None
