import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rdrlab.graphs import (
    build_graph,
    bipartition,
    canonical_form,
    cycles_of_length,
    disjoint_union,
    girth,
    girth_signature,
    is_isomorphic,
    odd_closed_walk,
)
from rdrlab.families import complete_bipartite, gp, htg, mobius, prism

from helpers import brute_force_isomorphic, graphs


def c_n(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestBuildGraph:
    def test_k2(self):
        g = build_graph(2, [(0, 1)])
        assert g.adj == ((1,), (0,))

    def test_c4(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.degrees == (2, 2, 2, 2)

    def test_loop_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            build_graph(3, [(0, 0)])

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            build_graph(3, [(0, 1), (1, 0)])

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="range"):
            build_graph(2, [(0, 2)])


class TestBipartition:
    def test_c4(self):
        b = bipartition(c_n(4))
        assert b.side0 == (0, 2) and b.side1 == (1, 3)

    def test_c5_absent(self):
        assert bipartition(c_n(5)) is None

    def test_k33_sides(self):
        b = bipartition(complete_bipartite(3))
        assert len(b.side0) == len(b.side1) == 3

    def test_disconnected_merge(self):
        g = disjoint_union(c_n(4), c_n(6))
        b = bipartition(g)
        assert 0 in b.side0 and 4 in b.side0

    @given(graphs(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_crossing_or_odd_walk(self, g):
        b = bipartition(g)
        if b is not None:
            s0 = set(b.side0)
            for u, v in g.edge_list:
                assert (u in s0) != (v in s0)
        else:
            walk = odd_closed_walk(g)
            assert walk is not None and walk[0] == walk[-1]
            assert (len(walk) - 1) % 2 == 1
            for a, b_ in zip(walk, walk[1:]):
                assert g.has_edge(a, b_)


class TestGirth:
    def test_c7(self):
        assert girth(c_n(7)) == 7

    def test_k33(self):
        assert girth(complete_bipartite(3)) == 4

    def test_gp_24_5(self):
        assert girth(gp(24, 5)) == 8

    def test_forest_infinite(self):
        assert math.isinf(girth(build_graph(4, [(0, 1), (1, 2)])))

    @given(graphs(min_n=2, max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_girth_matches_networkx(self, g):
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edge_list)
        assert girth(g) == nx.girth(G)


class TestGirthSignature:
    def test_prism6(self):
        assert girth_signature(prism(6)).graph_signature == (1, 1, 2)

    def test_pappus(self):
        rep = girth_signature(htg(3, 6, 3))
        assert rep.girth == 6 and rep.graph_signature == (4, 4, 4)

    def test_c6(self):
        rep = girth_signature(c_n(6))
        assert rep.graph_signature == (1, 1) and rep.cycle_count == 1

    def test_acyclic_rejected(self):
        with pytest.raises(ValueError, match="acyclic"):
            girth_signature(build_graph(3, [(0, 1)]))

    def test_edge_count_sum_rule(self):
        for g in (prism(6), gp(12, 5), htg(3, 6, 3), complete_bipartite(3)):
            rep = girth_signature(g)
            assert sum(rep.edge_counts.values()) == rep.girth * rep.cycle_count

    @given(graphs(min_n=3, max_n=9, p=0.5))
    @settings(max_examples=40, deadline=None)
    def test_enumerated_cycles_are_girth_cycles(self, g):
        gi = girth(g)
        if math.isinf(gi):
            return
        cycles = cycles_of_length(g, gi)
        assert cycles
        seen = set()
        for cyc in cycles:
            assert len(cyc) == gi and len(set(cyc)) == gi
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                assert g.has_edge(a, b)
            canon = frozenset(cyc)
            # same vertex set can support distinct cycles, but the exact
            # tuples must be unique
            assert cyc not in seen
            seen.add(cyc)


class TestCanonicalForm:
    @given(graphs(max_n=8), st.randoms())
    @settings(max_examples=80, deadline=None)
    def test_relabel_invariance(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_form(g).key == canonical_form(g.relabel(perm)).key

    def test_distinguishes_same_order_cubic(self):
        assert canonical_form(complete_bipartite(3)).key != canonical_form(prism(3)).key

    def test_nauru_chain(self):
        assert canonical_form(htg(2, 12, 6)).key == canonical_form(gp(12, 5)).key

    def test_relabeling_is_iso_witness(self):
        g = gp(8, 3)
        cf = canonical_form(g)
        relabeled = g.relabel(cf.relabeling)
        assert relabeled.edge_list == cf.canonical_edges


class TestIsIsomorphic:
    def test_prism6_htg(self):
        flag, wit = is_isomorphic(prism(6), htg(1, 12, 3))
        assert flag
        for u, v in prism(6).edge_list:
            assert htg(1, 12, 3).has_edge(wit[u], wit[v])

    def test_different_orders(self):
        assert is_isomorphic(c_n(6), complete_bipartite(3))[0] is False

    def test_mobius3_is_k33(self):
        assert is_isomorphic(mobius(3), complete_bipartite(3))[0]

    @given(graphs(max_n=6), graphs(max_n=6))
    @settings(max_examples=80, deadline=None)
    def test_matches_brute_force(self, g1, g2):
        assert is_isomorphic(g1, g2)[0] == brute_force_isomorphic(g1, g2)

    @given(graphs(max_n=9))
    @settings(max_examples=40, deadline=None)
    def test_matches_networkx(self, g):
        import random

        perm = list(range(g.n))
        random.Random(g.n).shuffle(perm)
        h = g.relabel(perm)
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edge_list)
        H = nx.Graph()
        H.add_nodes_from(range(h.n))
        H.add_edges_from(h.edge_list)
        assert is_isomorphic(g, h)[0] == nx.is_isomorphic(G, H) is True
