import itertools as itr

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from causaltiers import CycleError, GraphError, LimitError, PDAG

from conftest import WAVE_ARCS, random_dag_instance
from oracles import has_chordless_cycle


def undirected_pairs(g):
    return {frozenset(e) for e in g.undirected_edges}


@st.composite
def small_pdags(draw):
    p = draw(st.integers(2, 7))
    names = [f"V{k}" for k in range(p)]
    directed, undirected = [], []
    for i, j in itr.combinations(range(p), 2):
        kind = draw(st.sampled_from(["none", "fwd", "und"]))
        if kind == "fwd":
            directed.append((names[i], names[j]))  # label-ascending: acyclic
        elif kind == "und":
            undirected.append((names[i], names[j]))
    return PDAG(names, directed=directed, undirected=undirected)


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            PDAG("AB", directed=[("A", "A")])

    def test_rejects_duplicate_pair(self):
        with pytest.raises(GraphError):
            PDAG("AB", directed=[("A", "B")], undirected=[("A", "B")])
        with pytest.raises(GraphError):
            PDAG("AB", directed=[("A", "B"), ("B", "A")])

    def test_rejects_directed_cycle(self):
        with pytest.raises(CycleError):
            PDAG("ABC", directed=[("A", "B"), ("B", "C"), ("C", "A")])

    def test_adjacency_index(self):
        g = PDAG("ABC", directed=[("A", "B")], undirected=[("B", "C")])
        assert g.parents_of("B") == ("A",)
        assert g.children_of("A") == ("B",)
        assert g.neighbors_of("B") == ("C",)
        assert g.adjacent_to("B") == ("A", "C")
        with pytest.raises(GraphError):
            g.parents_of("Z")


class TestSkeletonAndSubgraphs:
    def test_wave_dag_skeleton(self, wave_dag):
        sk = wave_dag.skeleton()
        assert sk.directed_edges == ()
        assert len(sk.undirected_edges) == 7
        assert undirected_pairs(sk) == {frozenset(e) for e in WAVE_ARCS}

    def test_skeleton_identity_on_undirected(self):
        g = PDAG("ABC", undirected=[("A", "B"), ("B", "C")])
        assert g.skeleton() == g

    def test_wave_cpdag_undirected_subgraph(self, wave_cpdag):
        cu = wave_cpdag.undirected_subgraph()
        assert undirected_pairs(cu) == {
            frozenset(p)
            for p in [("A", "B"), ("A", "C"), ("C", "D"), ("C", "F"), ("F", "G")]
        }
        assert cu.directed_edges == ()

    def test_dag_has_empty_undirected_subgraph(self, wave_dag):
        assert wave_dag.undirected_subgraph().num_edges == 0
        assert wave_dag.directed_subgraph() == wave_dag

    @given(small_pdags())
    @settings(max_examples=100, deadline=None)
    def test_subgraphs_partition_edges(self, g):
        u, d = g.undirected_subgraph(), g.directed_subgraph()
        assert set(u.undirected_edges) == set(g.undirected_edges)
        assert set(d.directed_edges) == set(g.directed_edges)
        assert u.num_edges + d.num_edges == g.num_edges
        assert g.skeleton() == PDAG(
            g.nodes,
            undirected=list(u.undirected_edges)
            + [tuple(e) for e in d.directed_edges],
        )

    def test_skeleton_preserves_edge_count_randomly(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            g = random_dag_instance(rng, 10, 2.5)
            sk = g.skeleton()
            assert sk.num_edges == g.num_edges
            assert sk.directed_edges == ()

    def test_induced_subgraph_wave_dag(self, wave_dag):
        sub = wave_dag.induced_subgraph(["C", "D", "E"])
        assert set(sub.directed_edges) == {("C", "D"), ("D", "E")}
        assert sub.undirected_edges == ()

    def test_induced_subgraph_identity_and_empty(self, wave_dag):
        assert wave_dag.induced_subgraph(wave_dag.nodes) == wave_dag
        empty = wave_dag.induced_subgraph([])
        assert empty.num_nodes == 0 and empty.num_edges == 0

    def test_induced_subgraph_unknown_node(self, wave_dag):
        with pytest.raises(GraphError):
            wave_dag.induced_subgraph(["A", "Z"])


class TestCycles:
    def test_partially_directed_cycle(self):
        g = PDAG("ABC", directed=[("A", "B"), ("C", "A")], undirected=[("B", "C")])
        assert g.has_partially_directed_cycle()
        assert not g.has_directed_cycle()

    def test_dag_has_no_cycles(self, wave_dag):
        assert not wave_dag.has_directed_cycle()
        assert not wave_dag.has_partially_directed_cycle()

    def test_undirected_cycle_is_not_partially_directed(self):
        g = PDAG("ABC", undirected=[("A", "B"), ("B", "C"), ("C", "A")])
        assert not g.has_partially_directed_cycle()


class TestChainComponents:
    def test_wave_mpdag_components(self, wave_mpdag):
        comps = wave_mpdag.chain_components()
        assert comps == [
            ("A", "B"),
            ("C",),
            ("D",),
            ("E",),
            ("F",),
            ("G",),
        ]

    def test_connected_undirected_graph(self):
        g = PDAG("ABCD", undirected=[("A", "B"), ("B", "C"), ("C", "D")])
        assert g.chain_components() == [("A", "B", "C", "D")]

    def test_against_union_find(self):
        class UnionFind:
            def __init__(self, items):
                self.parent = {x: x for x in items}

            def find(self, x):
                while self.parent[x] != x:
                    self.parent[x] = self.parent[self.parent[x]]
                    x = self.parent[x]
                return x

            def union(self, x, y):
                self.parent[self.find(x)] = self.find(y)

        rng = np.random.default_rng(7)
        for _ in range(50):
            p = int(rng.integers(2, 12))
            g = random_dag_instance(rng, p, 2.0)
            # undirect half the edges at random
            arcs = list(g.directed_edges)
            keep, drop = [], []
            for e in arcs:
                (keep if rng.random() < 0.5 else drop).append(e)
            g2 = PDAG(g.nodes, directed=keep, undirected=drop)

            uf = UnionFind(g2.nodes)
            for u, v in g2.undirected_edges:
                uf.union(u, v)
            expected = {}
            for v in g2.nodes:
                expected.setdefault(uf.find(v), set()).add(v)
            got = {frozenset(c) for c in g2.chain_components()}
            assert got == {frozenset(c) for c in expected.values()}
            # within-component undirected edge counts
            for comp in g2.chain_components():
                sub = g2.induced_subgraph(comp)
                assert all(
                    frozenset(e) <= set(comp) for e in sub.undirected_edges
                )


class TestChordality:
    def test_square_without_chord(self):
        g = PDAG(
            "ABCD",
            undirected=[("A", "B"), ("B", "C"), ("C", "D"), ("D", "A")],
        )
        assert not g.is_chordal()

    def test_square_with_chord(self):
        g = PDAG(
            "ABCD",
            undirected=[("A", "B"), ("B", "C"), ("C", "D"), ("D", "A"), ("A", "C")],
        )
        assert g.is_chordal()

    def test_trees_are_chordal(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            p = int(rng.integers(2, 10))
            edges = [(f"V{int(rng.integers(0, k))}", f"V{k}") for k in range(1, p)]
            g = PDAG([f"V{k}" for k in range(p)], undirected=edges)
            assert g.is_chordal()

    def test_rejects_directed_edges(self):
        with pytest.raises(GraphError):
            PDAG("AB", directed=[("A", "B")]).is_chordal()

    @pytest.mark.parametrize("p", [4, 5])
    def test_exhaustive_small_graphs(self, p):
        names = [f"V{k}" for k in range(p)]
        pairs = list(itr.combinations(range(p), 2))
        for mask in range(1 << len(pairs)):
            edges = [
                (names[i], names[j])
                for bit, (i, j) in enumerate(pairs)
                if mask >> bit & 1
            ]
            g = PDAG(names, undirected=edges)
            adj = {v: set(g.adjacent_to(v)) for v in names}
            assert g.is_chordal() == (not has_chordless_cycle(adj)), edges

    def test_exhaustive_six_node_graphs(self):
        """Every labelled 6-node graph (covers all isomorphism classes)."""
        names = [f"V{k}" for k in range(6)]
        pairs = list(itr.combinations(range(6), 2))
        for mask in range(1 << len(pairs)):
            edges = [
                (names[i], names[j])
                for bit, (i, j) in enumerate(pairs)
                if mask >> bit & 1
            ]
            g = PDAG(names, undirected=edges)
            adj = {v: set(g.adjacent_to(v)) for v in names}
            assert g.is_chordal() == (not has_chordless_cycle(adj))

    def test_seven_node_samples(self):
        rng = np.random.default_rng(11)
        names = [f"V{k}" for k in range(7)]
        pairs = list(itr.combinations(range(7), 2))
        for _ in range(300):
            q = rng.uniform(0.2, 0.8)
            edges = [(names[i], names[j]) for i, j in pairs if rng.random() < q]
            g = PDAG(names, undirected=edges)
            adj = {v: set(g.adjacent_to(v)) for v in names}
            assert g.is_chordal() == (not has_chordless_cycle(adj))


class TestUnshieldedPaths:
    def test_tree_b_to_d(self, wave_cpdag):
        cu = wave_cpdag.undirected_subgraph()
        assert cu.find_unshielded_paths("B", "D") == [("B", "A", "C", "D")]

    def test_single_edge_path(self):
        g = PDAG("AB", undirected=[("A", "B")])
        assert g.find_unshielded_paths("A", "B") == [("A", "B")]

    def test_complete_graph_only_direct_edge(self):
        names = list("ABCD")
        g = PDAG(names, undirected=list(itr.combinations(names, 2)))
        for u, v in itr.combinations(names, 2):
            assert g.find_unshielded_paths(u, v) == [(u, v)]

    def test_guard(self):
        names = [f"V{k}" for k in range(30)]
        g = PDAG(names, undirected=[(names[k], names[k + 1]) for k in range(29)])
        with pytest.raises(LimitError):
            g.find_unshielded_paths("V0", "V29")
        assert g.find_unshielded_paths("V0", "V29", max_nodes=30)

    @given(small_pdags())
    @settings(max_examples=60, deadline=None)
    def test_no_duplicates_and_triples_unshielded(self, g):
        nodes = g.nodes
        if len(nodes) < 2:
            return
        for s, t in itr.combinations(nodes, 2):
            paths = g.find_unshielded_paths(s, t)
            assert len(paths) == len(set(paths))
            for path in paths:
                assert len(set(path)) == len(path)
                for a, b in zip(path, path[1:]):
                    assert g.has_edge(a, b)
                for a, _, c in zip(path, path[1:], path[2:]):
                    assert not g.has_edge(a, c)
