"""Parameterized constructors for the graph families under study.

Vertex labeling conventions, used everywhere reports mention vertices:

* prism / mobius / wreath / gp on 2n vertices: u_i = i and v_i = n + i;
* htg(m, n, l): v_{i,j} = i * n + j;
* xn(n) / cayley: one vertex per group element, in element-list order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graphs import Graph, build_graph

TABLE_CAP = 4096


@dataclass(frozen=True)
class FiniteGroup:
    """Finite group on opaque element labels with a multiplication table.

    The full table is stored for groups up to TABLE_CAP elements; larger
    groups keep the raw operation and multiply on the fly.
    """

    elements: tuple
    identity_index: int
    table: tuple[tuple[int, ...], ...] | None
    op: object | None = None

    @classmethod
    def from_op(cls, elements, op) -> "FiniteGroup":
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError("duplicate group elements")
        table = None
        if len(elements) <= TABLE_CAP:
            table = tuple(
                tuple(index[op(a, b)] for b in elements) for a in elements
            )
        ident = None
        for i in range(len(elements)):
            if cls._is_identity(elements, op, table, i):
                ident = i
                break
        if ident is None:
            raise ValueError("no identity element")
        return cls(elements, ident, table, op if table is None else op)

    @staticmethod
    def _is_identity(elements, op, table, i) -> bool:
        if table is not None:
            return all(table[i][j] == j and table[j][i] == j for j in range(len(elements)))
        return all(
            op(elements[i], e) == e and op(e, elements[i]) == e for e in elements
        )

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        if self.table is not None:
            return self.table[i][j]
        index = {e: k for k, e in enumerate(self.elements)}
        return index[self.op(self.elements[i], self.elements[j])]

    def inverse(self, i: int) -> int:
        for j in range(self.order):
            if self.mul(i, j) == self.identity_index:
                return j
        raise ValueError(f"element {i} has no inverse")

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity_index:
            x = self.mul(x, i)
            k += 1
        return k


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(d: int) -> Graph:
    """K_{d,d} with sides 0..d-1 and d..2d-1."""
    if d < 1:
        raise ValueError("complete_bipartite needs d >= 1")
    return build_graph(2 * d, [(i, d + j) for i in range(d) for j in range(d)])


def prism(n: int) -> Graph:
    if n < 3:
        raise ValueError("prism needs n >= 3")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(i, j), (n + i, n + j), (i, n + i)]
    return build_graph(2 * n, edges)


def mobius(n: int) -> Graph:
    """Mobius ladder: the prism with its closing rung pair crossed."""
    if n < 3:
        raise ValueError("mobius needs n >= 3")
    edges = []
    for i in range(n - 1):
        edges += [(i, i + 1), (n + i, n + i + 1)]
    edges += [(n - 1, n), (2 * n - 1, 0)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges)


def wreath(n: int) -> Graph:
    """Quartic wreath graph, the lexicographic product of C_n with 2K_1."""
    if n < 3:
        raise ValueError("wreath needs n >= 3")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(i, j), (i, n + j), (n + i, n + j), (n + i, j)]
    return build_graph(2 * n, edges)


def gp(n: int, k: int) -> Graph:
    """Generalized Petersen graph: outer cycle, spokes, inner k-step edges.

    k = n/2 is rejected: it would double the inner edges and the graph
    would stop being simple and cubic.
    """
    if n < 3:
        raise ValueError("gp needs n >= 3")
    if not 1 <= k < n / 2:
        raise ValueError("gp needs 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]
    return build_graph(2 * n, edges)


def htg(m: int, n: int, ell: int) -> Graph:
    """Honeycomb toroidal graph on m columns of n vertices with jump ell.

    Edge classes: vertical (i,j)-(i,j+1); horizontal (i,j)-(i+1,j) for
    i < m-1 with i+1 = j (mod 2); jumps (m-1,j)-(0,j+ell) for j = m (mod 2).
    """
    if m < 1:
        raise ValueError("htg needs m >= 1")
    if n < 4 or n % 2 != 0:
        raise ValueError("htg needs even n >= 4")
    if not 0 <= ell <= n // 2:
        raise ValueError("htg needs 0 <= ell <= n/2")
    if ell % 2 != m % 2:
        raise ValueError("htg needs ell = m (mod 2)")
    if m == 1 and ell == 1:
        raise ValueError("htg(1, n, 1) duplicates vertical edges")

    def vid(i, j):
        return i * n + (j % n)

    edges = []
    for i in range(m):
        for j in range(n):
            edges.append((vid(i, j), vid(i, j + 1)))
    for i in range(m - 1):
        for j in range(n):
            if (i + 1) % 2 == j % 2:
                edges.append((vid(i, j), vid(i + 1, j)))
    for j in range(n):
        if j % 2 == m % 2:
            edges.append((vid(m - 1, j), vid(0, j + ell)))
    return build_graph(m * n, edges)


def valid_htg_parameters(max_order: int):
    """All (m, n, ell) with m*n <= max_order that construct a graph."""
    out = []
    for m in range(1, max_order // 4 + 1):
        for n in range(4, max_order // m + 1, 2):
            for ell in range(0, n // 2 + 1):
                if ell % 2 != m % 2:
                    continue
                if m == 1 and ell == 1:
                    continue
                out.append((m, n, ell))
    return out


# ---------------------------------------------------------------------------
# Cayley graphs over S3 x Dn
# ---------------------------------------------------------------------------


def _dn_mul(a, b, n):
    # dihedral elements stored as (e, f) meaning z^f r^e with r z = z r^-1
    e1, f1 = a
    e2, f2 = b
    return ((e1 * (-1) ** f2 + e2) % n, (f1 + f2) % 2)


def _s3_elements():
    return tuple(sorted(permutations((1, 2, 3))))


def _s3_mul(p, q):
    # apply p first, then q, as maps on {1,2,3}
    return tuple(q[p[i] - 1] for i in range(3))


def s3_times_dn(n: int) -> FiniteGroup:
    """Direct product of the symmetric group S3 with the dihedral group Dn."""
    if n < 3:
        raise ValueError("s3_times_dn needs n >= 3")
    s3 = _s3_elements()
    dn = tuple((e, f) for f in range(2) for e in range(n))
    elements = tuple((p, d) for p in s3 for d in dn)

    def op(a, b):
        return (_s3_mul(a[0], b[0]), _dn_mul(a[1], b[1], n))

    return FiniteGroup.from_op(elements, op)


def _s3_from_transposition(i, j):
    img = [1, 2, 3]
    img[i - 1], img[j - 1] = j, i
    return tuple(img)


def xn_generators(n: int):
    """The three involutions generating the Cayley graph family."""
    a = (_s3_from_transposition(1, 2), (0, 0))  # ((12), 1)
    b = (_s3_from_transposition(1, 3), (0, 1))  # ((13), z)
    c = (_s3_from_transposition(2, 3), (1, 1))  # ((23), zr)
    return a, b, c


def cayley(group: FiniteGroup, connection) -> Graph:
    """Undirected Cayley graph with edges {g, g*s} for s in the connection set."""
    idx = {e: i for i, e in enumerate(group.elements)}
    s_indices = []
    for s in connection:
        i = s if isinstance(s, int) else idx[s]
        if i == group.identity_index:
            raise ValueError("connection set must not contain the identity")
        s_indices.append(i)
    for i in s_indices:
        if group.inverse(i) not in s_indices:
            raise ValueError("connection set must be closed under inverses")
    edges = set()
    for g in range(group.order):
        for s in s_indices:
            h = group.mul(g, s)
            edges.add((min(g, h), max(g, h)))
    return build_graph(group.order, sorted(edges))


def xn(n: int) -> Graph:
    """Cubic Cayley graph over S3 x Dn on the three standard involutions."""
    group = s3_times_dn(n)
    return cayley(group, xn_generators(n))


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic_group needs n >= 1")
    return FiniteGroup.from_op(tuple(range(n)), lambda a, b: (a + b) % n)


# ---------------------------------------------------------------------------
# Text syntax for family specs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Parameterized family member, e.g. gp:12,5 or htg:3,6,3."""

    kind: str
    params: tuple[int, ...]

    _ARITY = {
        "cycle": 1,
        "kdd": 1,
        "prism": 1,
        "mobius": 1,
        "wreath": 1,
        "gp": 2,
        "htg": 3,
        "xn": 1,
    }

    def __post_init__(self):
        if self.kind not in self._ARITY:
            raise ValueError(f"unknown family {self.kind!r}")
        if len(self.params) != self._ARITY[self.kind]:
            raise ValueError(
                f"{self.kind} takes {self._ARITY[self.kind]} parameters, "
                f"got {len(self.params)}"
            )

    def build(self) -> Graph:
        builders = {
            "cycle": cycle,
            "kdd": complete_bipartite,
            "prism": prism,
            "mobius": mobius,
            "wreath": wreath,
            "gp": gp,
            "htg": htg,
            "xn": xn,
        }
        return builders[self.kind](*self.params)

    def __str__(self):
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


def parse_spec(text: str) -> FamilySpec:
    """Parse the canonical text form, e.g. 'gp:12,5'."""
    if ":" not in text:
        raise ValueError(f"not a family spec: {text!r}")
    kind, _, rest = text.partition(":")
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise ValueError(f"bad parameters in family spec {text!r}") from None
    return FamilySpec(kind.strip().lower(), params)


def build_from_spec(text: str) -> Graph:
    return parse_spec(text).build()
