"""RDR-preserving rewiring: edge switching, graph stitching, and an
explorer for reachability between isomorphism classes under switching."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, build_graph, canonical_form, disjoint_union
from .rainbow import RdrWitness, _witness_from_masks, validate_rdf
from .rainbow import enumerate_rdr_colorings


@dataclass(frozen=True)
class SwitchMove:
    """Two edges whose colored endpoints carry the same color.

    e1 = (u1, v1) and e2 = (u2, v2) with the colored endpoints listed
    first; the switch replaces them by (u1, v2) and (u2, v1).
    """

    e1: tuple[int, int]
    e2: tuple[int, int]


def _split_colored(g: Graph, w: RdrWitness, edge):
    """Order an edge as (colored endpoint, empty endpoint)."""
    a, b = edge
    if not g.has_edge(a, b):
        raise ValueError(f"edge {edge} not in graph")
    ma, mb = w.coloring.masks[a], w.coloring.masks[b]
    if (ma == 0) == (mb == 0):
        raise ValueError(f"edge {edge} does not join a colored and an empty vertex")
    return (a, b) if ma else (b, a)


def edge_switch(g: Graph, w: RdrWitness, move: SwitchMove):
    """Swap the empty endpoints of two same-colored edges.

    The coloring is unchanged and is revalidated on the new graph.
    """
    u1, v1 = _split_colored(g, w, move.e1)
    u2, v2 = _split_colored(g, w, move.e2)
    if len({u1, v1, u2, v2}) != 4:
        raise ValueError("switch endpoints must be four distinct vertices")
    masks = w.coloring.masks
    if masks[u1] != masks[u2]:
        raise ValueError("colored endpoints carry different colors")
    if g.has_edge(u1, v2) or g.has_edge(u2, v1):
        raise ValueError("replacement edge already present")
    removed = {tuple(sorted((u1, v1))), tuple(sorted((u2, v2)))}
    edges = [e for e in g.edge_list if e not in removed]
    edges += [tuple(sorted((u1, v2))), tuple(sorted((u2, v1)))]
    new_g = build_graph(g.n, edges)
    d = new_g.regular_degree
    new_w = _witness_from_masks(new_g, d, masks)
    if not validate_rdf(new_g, new_w.coloring):  # pragma: no cover - theorem guard
        raise AssertionError("edge switch broke the rainbow coloring")
    return new_g, new_w


def stitch(g1: Graph, w1: RdrWitness, g2: Graph, w2: RdrWitness, pairs):
    """Join two RDR graphs by crossing same-colored edge pairs.

    Each pair is (edge of g1, edge of g2) whose colored endpoints carry
    the same color; the union keeps both colorings.  The named edges must
    be vertex-disjoint within each graph.
    """
    union = disjoint_union(g1, g2)
    off = g1.n
    masks = list(w1.coloring.masks) + list(w2.coloring.masks)
    used1: set[int] = set()
    used2: set[int] = set()
    removed = set()
    added = []
    for e1, e2 in pairs:
        u1, v1 = _split_colored(g1, w1, e1)
        u2, v2 = _split_colored(g2, w2, e2)
        if {u1, v1} & used1 or {u2, v2} & used2:
            raise ValueError("stitch pairs must be vertex-disjoint")
        used1.update((u1, v1))
        used2.update((u2, v2))
        if w1.coloring.masks[u1] != w2.coloring.masks[u2]:
            raise ValueError("stitch pair colors differ")
        removed.add(tuple(sorted((u1, v1))))
        removed.add(tuple(sorted((u2 + off, v2 + off))))
        added.append(tuple(sorted((u1, v2 + off))))
        added.append(tuple(sorted((u2 + off, v1))))
    edges = [e for e in union.edge_list if e not in removed] + added
    new_g = build_graph(union.n, edges)
    d = new_g.regular_degree
    new_w = _witness_from_masks(new_g, d, tuple(masks))
    if not validate_rdf(new_g, new_w.coloring):  # pragma: no cover - theorem guard
        raise AssertionError("stitch broke the rainbow coloring")
    return new_g, new_w


@dataclass(frozen=True)
class MetaGraphReport:
    """Switching moves between isomorphism classes of RDR graphs."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    connected: bool
    component_sizes: tuple[int, ...]

    def to_json_dict(self):
        return {
            "nodes": list(self.nodes),
            "edges": [list(e) for e in self.edges],
            "connected": self.connected,
            "component_sizes": list(self.component_sizes),
        }


def _class_fingerprint(g: Graph) -> str:
    import hashlib

    key = canonical_form(g).key
    return hashlib.sha256(repr(key).encode()).hexdigest()[:16]


def switching_reachability(graphs) -> MetaGraphReport:
    """Meta-graph on isomorphism classes: an edge whenever some witness
    coloring admits a switch carrying one class onto another.

    Moves are generated from every coloring class (modulo colors and
    automorphisms); switches that would create parallel edges are skipped
    during exploration.
    """
    classes: list[Graph] = []
    keys: dict[tuple, int] = {}
    for g in graphs:
        key = canonical_form(g).key
        if key not in keys:
            keys[key] = len(classes)
            classes.append(g)
    meta_edges: set[tuple[int, int]] = set()
    for idx, g in enumerate(classes):
        for w in enumerate_rdr_colorings(g, "colors-aut"):
            masks = w.coloring.masks
            by_color: dict[int, list[tuple[int, int]]] = {}
            for u, v in g.edge_list:
                colored = u if masks[u] else v
                by_color.setdefault(masks[colored], []).append((u, v))
            for _, edges in sorted(by_color.items()):
                for i in range(len(edges)):
                    for j in range(i + 1, len(edges)):
                        e1, e2 = edges[i], edges[j]
                        if len({*e1, *e2}) != 4:
                            continue
                        try:
                            new_g, _ = edge_switch(g, w, SwitchMove(e1, e2))
                        except ValueError:
                            continue
                        key = canonical_form(new_g).key
                        tgt = keys.get(key)
                        if tgt is not None and tgt != idx:
                            meta_edges.add((min(idx, tgt), max(idx, tgt)))
    n = len(classes)
    meta = build_graph(n, sorted(meta_edges))
    comps = meta.components
    return MetaGraphReport(
        nodes=tuple(_class_fingerprint(g) for g in classes),
        edges=tuple(sorted(meta_edges)),
        connected=len(comps) <= 1,
        component_sizes=tuple(sorted((len(c) for c in comps), reverse=True)),
    )
