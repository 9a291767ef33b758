"""Rainbow domination: validation, exact solvers, RDR decision, enumeration.

Two independent exact routes are kept deliberately separate: a plain
enumeration oracle (gamma_rk_oracle) with nothing but the trivial weight
bound, and the branch-and-bound solver (gamma_rk) used everywhere else.
The RDR decision procedure exploits the forced structure on regular
bipartite graphs: the colored side carries singleton colors, one color
class of size n/2d each, and every non-colored vertex sees all colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph, bipartition, cycles_of_length

ORACLE_ENVELOPE = {1: 14, 2: 12, 3: 10}
ORACLE_ENVELOPE_HIGH_K = 8  # bound on n for k >= 4


class BudgetExhausted(Exception):
    pass


class _Budget:
    """Search-node counter; None means unlimited."""

    def __init__(self, limit):
        self.limit = limit
        self.nodes = 0

    def spend(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExhausted


@dataclass(frozen=True)
class RainbowAssignment:
    """Per-vertex color subsets over palette {1..k}, stored as bitmasks."""

    k: int
    masks: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.k) - 1
        if self.k < 0 or any(m < 0 or m > full for m in self.masks):
            raise ValueError("color subset outside palette")

    @cached_property
    def weight(self) -> int:
        return sum(m.bit_count() for m in self.masks)

    def colors_of(self, v: int) -> tuple[int, ...]:
        m = self.masks[v]
        return tuple(i + 1 for i in range(self.k) if m >> i & 1)

    @classmethod
    def from_color_sets(cls, k: int, sets) -> "RainbowAssignment":
        masks = []
        for s in sets:
            m = 0
            for c in s:
                if not 1 <= c <= k:
                    raise ValueError(f"color {c} outside palette 1..{k}")
                m |= 1 << (c - 1)
            masks.append(m)
        return cls(k, tuple(masks))

    def to_json_dict(self):
        return {
            "k": self.k,
            "vertex_colors": {str(v): list(self.colors_of(v)) for v in range(len(self.masks))},
            "weight": self.weight,
        }


@dataclass(frozen=True)
class RdrWitness:
    """Minimum-weight coloring certifying the n/2 bound is attained.

    colored_side indexes the bipartition side carrying the colors; -1 is
    used for disconnected graphs whose components color opposite sides.
    """

    coloring: RainbowAssignment
    colored_side: int
    color_classes: tuple[tuple[int, ...], ...]

    @property
    def colored_vertices(self) -> tuple[int, ...]:
        return tuple(
            v for v in range(len(self.coloring.masks)) if self.coloring.masks[v]
        )

    def to_json_dict(self):
        out = self.coloring.to_json_dict()
        out["colored_side"] = self.colored_side
        out["color_classes"] = [list(c) for c in self.color_classes]
        return out


@dataclass(frozen=True)
class RdrDecision:
    status: str  # "rdr" | "not_rdr" | "undecided"
    witness: RdrWitness | None = None
    reason: str | None = None


@dataclass(frozen=True)
class GammaResult:
    value: int
    witness: RainbowAssignment | None
    status: str  # "optimal" | "undecided"
    nodes: int


def validate_rdf(g: Graph, f: RainbowAssignment) -> bool:
    """True iff every empty vertex sees the whole palette in its neighborhood."""
    if len(f.masks) != g.n:
        raise ValueError("assignment does not cover the vertex set")
    full = (1 << f.k) - 1
    masks = f.masks
    for v in range(g.n):
        if masks[v] == 0:
            acc = 0
            for u in g.adj[v]:
                acc |= masks[u]
            if acc != full:
                return False
    return True


# ---------------------------------------------------------------------------
# Exhaustive oracle
# ---------------------------------------------------------------------------


def oracle_envelope(k: int) -> int:
    return ORACLE_ENVELOPE.get(k, ORACLE_ENVELOPE_HIGH_K)


def gamma_rk_oracle(g: Graph, k: int):
    """Exact k-rainbow domination number by complete enumeration.

    Depth-first over all per-vertex subsets with only the trivial cut
    (partial weight >= incumbent); the incumbent is seeded with the
    all-{1} assignment, which is always a valid k-RDF.  Kept free of any
    solver heuristics so it can serve as an independent oracle.  Refuses
    instances outside its guaranteed envelope.
    """
    if k < 0:
        raise ValueError("palette size must be nonnegative")
    if k == 0:
        return 0, RainbowAssignment(0, (0,) * g.n)
    if g.n > oracle_envelope(k):
        raise ValueError(
            f"oracle envelope exceeded: n={g.n} > {oracle_envelope(k)} for k={k}"
        )
    n = g.n
    adj = g.adj
    full = (1 << k) - 1
    subsets = sorted(range(1 << k), key=lambda s: (s.bit_count(), s))
    best_w = n
    best = [1] * n  # f = {1} everywhere
    masks = [0] * n

    def rec(i: int, w: int):
        nonlocal best_w, best
        if w >= best_w:
            return
        if i == n:
            for v in range(n):
                if masks[v] == 0:
                    acc = 0
                    for u in adj[v]:
                        acc |= masks[u]
                    if acc != full:
                        return
            best_w = w
            best = masks.copy()
            return
        for s in subsets:
            masks[i] = s
            rec(i + 1, w + s.bit_count())
        masks[i] = 0

    rec(0, 0)
    return best_w, RainbowAssignment(k, tuple(best))


# ---------------------------------------------------------------------------
# Branch-and-bound solver
# ---------------------------------------------------------------------------


def _greedy_krdf(g: Graph, k: int) -> tuple[int, ...]:
    """Greedy full-palette cover; always a valid k-RDF."""
    n = g.n
    masks = [0] * n
    full = (1 << k) - 1

    def unsatisfied():
        out = []
        for v in range(n):
            if masks[v] == 0:
                acc = 0
                for u in g.adj[v]:
                    acc |= masks[u]
                if acc != full:
                    out.append(v)
        return out

    pending = unsatisfied()
    while pending:
        pend = set(pending)
        best_v, best_cover = None, -1
        for v in range(n):
            if masks[v] == full:
                continue
            cover = sum(1 for u in g.adj[v] if u in pend) + (1 if v in pend else 0)
            if cover > best_cover:
                best_v, best_cover = v, cover
        masks[best_v] = full
        pending = unsatisfied()
    return tuple(masks)


def gamma_rk(g: Graph, k: int, budget: int | None = None) -> GammaResult:
    """Exact gamma_rk by branch-and-bound.

    Static branching order by descending degree; subsets tried by
    ascending size.  Prunes with the incumbent, a counting bound on the
    color slots still owed to assigned empty vertices, and the kn/2d
    bound on regular graphs.  A node budget turns the result into
    "undecided" instead of silently approximating.
    """
    n = g.n
    if k < 0:
        raise ValueError("palette size must be nonnegative")
    if k == 0:
        return GammaResult(0, RainbowAssignment(0, (0,) * n), "optimal", 0)
    if n == 0:
        return GammaResult(0, RainbowAssignment(k, ()), "optimal", 0)

    adj = g.adj
    full = (1 << k) - 1
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    pos_of = {v: i for i, v in enumerate(order)}

    greedy = _greedy_krdf(g, k)
    greedy_w = sum(m.bit_count() for m in greedy)
    if greedy_w < n:
        best_w, best = greedy_w, list(greedy)
    else:
        best_w, best = n, [1] * n

    d = g.regular_degree
    global_lb = -(-k * n // (2 * d)) if d else 0
    subsets = sorted(range(1 << k), key=lambda s: (s.bit_count(), s))
    bud = _Budget(budget)

    masks = [0] * n
    covered = [0] * n  # palette union over assigned neighbors
    unassigned_nbrs = [len(adj[v]) for v in range(n)]
    assigned = [False] * n
    status = ["optimal"]

    def counting_bound(i: int) -> int:
        # color slots still owed to assigned empty vertices, divided by the
        # most slots one future weight unit can serve (admissible)
        owed = 0
        demand = [0] * n
        for v in range(n):
            if assigned[v] and masks[v] == 0:
                miss = (full & ~covered[v]).bit_count()
                if miss:
                    if unassigned_nbrs[v] == 0:
                        return 1 << 30
                    owed += miss
                    for u in adj[v]:
                        if not assigned[u]:
                            demand[u] += 1
        if owed == 0:
            return 0
        cmax = max((demand[u] for u in range(n) if not assigned[u]), default=0)
        if cmax == 0:
            return 1 << 30
        return -(-owed // cmax)

    def rec(i: int, w: int):
        nonlocal best_w, best
        if best_w <= global_lb:
            return
        if i == n:
            if w < best_w:
                best_w = w
                best = masks.copy()
            return
        if w + counting_bound(i) >= best_w:
            return
        v = order[i]
        for s in subsets:
            pc = s.bit_count()
            if w + pc >= best_w:
                break  # subsets sorted by size
            bud.spend()
            if s == 0 and unassigned_nbrs[v] == 0 and covered[v] != full:
                continue
            ok = True
            for u in adj[v]:
                if assigned[u] and masks[u] == 0:
                    if unassigned_nbrs[u] == 1 and (covered[u] | s) != full:
                        ok = False
                        break
            if not ok:
                continue
            masks[v] = s
            assigned[v] = True
            restore = [(u, covered[u]) for u in adj[v]]
            for u in adj[v]:
                covered[u] |= s
                unassigned_nbrs[u] -= 1
            rec(i + 1, w + pc)
            masks[v] = 0
            assigned[v] = False
            for u, old in restore:
                covered[u] = old
                unassigned_nbrs[u] += 1

    try:
        rec(0, 0)
    except BudgetExhausted:
        status[0] = "undecided"

    witness = RainbowAssignment(k, tuple(best))
    return GammaResult(best_w, witness, status[0], bud.nodes)


# ---------------------------------------------------------------------------
# RDR decision and enumeration
# ---------------------------------------------------------------------------


def _component_subgraph(g: Graph, comp):
    local = {v: i for i, v in enumerate(comp)}
    adj = tuple(tuple(sorted(local[u] for u in g.adj[v])) for v in comp)
    return Graph(len(comp), adj), local


def _colored_side_search(g, side, other, d, quota, bud, collect_all):
    """Balanced proper colorings of `side` so every vertex of `other`
    sees d distinct colors; vertices in index order, colors ascending."""
    side = sorted(side)
    cand = {s: (1 << d) - 1 for s in side}
    used = {t: 0 for t in other}
    counts = [0] * d
    assign: dict[int, int] = {}
    solutions: list[dict[int, int]] = []

    def feasible_quota() -> bool:
        for c in range(d):
            need = quota - counts[c]
            if need < 0:
                return False
            avail = sum(
                1 for s in side if s not in assign and cand[s] >> c & 1
            )
            if avail < need:
                return False
        return True

    def rec(idx: int) -> bool:
        if idx == len(side):
            solutions.append(dict(assign))
            return not collect_all
        s = side[idx]
        for c in range(d):
            if not cand[s] >> c & 1 or counts[c] >= quota:
                continue
            bud.spend()
            touched = []
            ok = True
            for t in g.adj[s]:
                if used[t] >> c & 1:
                    ok = False
                    break
                used[t] |= 1 << c
                touched.append(t)
                for s2 in g.adj[t]:
                    if s2 not in assign and s2 != s:
                        if cand[s2] >> c & 1:
                            cand[s2] &= ~(1 << c)
                            touched.append(-s2 - 1)
                            if cand[s2] == 0:
                                ok = False
                                break
                if not ok:
                    break
            if ok:
                assign[s] = c
                counts[c] += 1
                if feasible_quota() and rec(idx + 1):
                    return True
                counts[c] -= 1
                del assign[s]
            for t in touched:
                if t >= 0:
                    used[t] &= ~(1 << c)
                else:
                    cand[-t - 1] |= 1 << c
        return False

    rec(0)
    return solutions


def solve_rdr(g: Graph, budget: int | None = None) -> RdrDecision:
    """Decide whether gamma_rd attains n/2 for the d-regular graph g.

    Absent immediately when g is not regular, 2d does not divide n, or g
    is not bipartite; otherwise searches a balanced singleton coloring of
    one bipartition side per component.  Budget exhaustion is reported as
    a distinct "undecided" outcome.
    """
    n = g.n
    d = g.regular_degree
    if n == 0 or d is None or d == 0:
        return RdrDecision("not_rdr", reason="not d-regular with d >= 1")
    if n % (2 * d) != 0:
        return RdrDecision("not_rdr", reason="2d does not divide n")
    bip = bipartition(g)
    if bip is None:
        return RdrDecision("not_rdr", reason="not bipartite")

    bud = _Budget(budget)
    masks = [0] * n
    try:
        for comp in g.components:
            if len(comp) % (2 * d) != 0:
                return RdrDecision(
                    "not_rdr", reason="2d does not divide a component order"
                )
            sub, local = _component_subgraph(g, comp)
            sbip = bipartition(sub)
            quota = len(comp) // (2 * d)
            sol = None
            for local_side, local_other in (
                (sbip.side0, sbip.side1),
                (sbip.side1, sbip.side0),
            ):
                if len(local_side) != len(comp) // 2:
                    continue
                found = _colored_side_search(
                    sub, local_side, local_other, d, quota, bud, False
                )
                if found:
                    sol = found[0]
                    break
            if sol is None:
                return RdrDecision("not_rdr", reason="no balanced rainbow coloring")
            back = {i: v for v, i in local.items()}
            for i, c in sol.items():
                masks[back[i]] = 1 << c
    except BudgetExhausted:
        return RdrDecision("undecided", reason=f"node budget exhausted ({budget})")

    witness = _witness_from_masks(g, d, masks)
    return RdrDecision("rdr", witness=witness)


def _witness_from_masks(g: Graph, d: int, masks) -> RdrWitness:
    coloring = RainbowAssignment(d, tuple(masks))
    colored = frozenset(v for v in range(g.n) if masks[v])
    bip = bipartition(g)
    if colored == frozenset(bip.side0):
        side = 0
    elif colored == frozenset(bip.side1):
        side = 1
    else:
        side = -1
    classes = tuple(
        tuple(v for v in range(g.n) if masks[v] == 1 << c) for c in range(d)
    )
    return RdrWitness(coloring=coloring, colored_side=side, color_classes=classes)


def is_d_rdr(g: Graph) -> RdrWitness | None:
    """RDR decision without budget; the witness, or None."""
    return solve_rdr(g).witness


def enumerate_rdr_colorings(g: Graph, modulo: str = "colors") -> list[RdrWitness]:
    """All RDR colorings reduced by the chosen quotient.

    modulo = "colors" quotients by color permutations only;
    "colors-aut" additionally by graph automorphisms.  Representatives
    are the lexicographically least transformed mask vectors.
    """
    from itertools import permutations, product

    if modulo not in ("colors", "colors-aut"):
        raise ValueError("modulo must be 'colors' or 'colors-aut'")
    n = g.n
    d = g.regular_degree
    if d is None or d == 0 or n == 0 or n % (2 * d) != 0 or bipartition(g) is None:
        return []
    bud = _Budget(None)

    per_component: list[list[dict[int, int]]] = []
    comp_maps = []
    for comp in g.components:
        if len(comp) % (2 * d) != 0:
            return []
        sub, local = _component_subgraph(g, comp)
        sbip = bipartition(sub)
        sols: list[dict[int, int]] = []
        for local_side, local_other in (
            (sbip.side0, sbip.side1),
            (sbip.side1, sbip.side0),
        ):
            sols.extend(
                _colored_side_search(
                    sub, local_side, local_other, d,
                    len(comp) // (2 * d), bud, True,
                )
            )
        if not sols:
            return []
        per_component.append(sols)
        comp_maps.append({i: v for v, i in local.items()})

    raw: list[tuple[int, ...]] = []
    for combo in product(*per_component):
        masks = [0] * n
        for sol, back in zip(combo, comp_maps):
            for i, c in sol.items():
                masks[back[i]] = 1 << c
        raw.append(tuple(masks))

    color_perms = list(permutations(range(d)))
    if modulo == "colors-aut":
        from .symmetry import automorphism_group

        vertex_perms = list(automorphism_group(g).elements())
    else:
        vertex_perms = [tuple(range(n))]

    def remap_mask(m: int, perm) -> int:
        out = 0
        for c in range(d):
            if m >> c & 1:
                out |= 1 << perm[c]
        return out

    reps: dict[tuple[int, ...], tuple[int, ...]] = {}
    for masks in raw:
        cands = []
        for vp in vertex_perms:
            moved = [0] * n
            for v in range(n):
                moved[vp[v]] = masks[v]
            for cp in color_perms:
                cands.append(tuple(remap_mask(m, cp) for m in moved))
        rep = min(cands)
        if rep not in reps:
            reps[rep] = rep
    return [
        _witness_from_masks(g, d, rep) for rep in sorted(reps)
    ]


def check_six_cycle_pattern(g: Graph, w: RdrWitness) -> bool:
    """Every 6-cycle must read empty-{a}-empty-{b}-empty-{c} with a,b,c
    distinct, up to rotation, reflection and color naming."""
    if w.coloring.k != 3:
        raise ValueError("six-cycle pattern applies to 3-RDR witnesses")
    masks = w.coloring.masks
    for cyc in cycles_of_length(g, 6):
        ms = [masks[v] for v in cyc]
        ok = False
        for off in (0, 1):
            if any(ms[(off + 2 * i) % 6] != 0 for i in range(3)):
                continue
            cols = [ms[(off + 2 * i + 1) % 6] for i in range(3)]
            if all(c and c & (c - 1) == 0 for c in cols) and len(set(cols)) == 3:
                ok = True
                break
        if not ok:
            return False
    return True
