import json
import random

import pytest

from wqograph.graphs import Graph, build, complement
from wqograph.order import (
    LabelledGraph,
    QuasiOrder,
    antichain_check,
    induced_embed,
    labelled_embed,
    subseq_leq,
)
from wqograph.ops import (
    BipartiteComplement,
    DeleteVertex,
    OpScript,
    OpScriptError,
    SubgraphComplement,
    apply_script,
    bipartite_complement,
    delete_vertex,
    split_labels,
    subgraph_complement,
)


def random_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


class TestSubgraphComplement:
    def test_full_set_is_complement(self):
        g = build("P2+P3")
        assert subgraph_complement(g, range(g.n)) == complement(g)

    def test_pair_toggles_one_edge(self):
        g = build("P4")
        h = subgraph_complement(g, [0, 1])
        assert h.edge_count() == g.edge_count() - 1
        assert subgraph_complement(h, [0, 3]).adjacent(0, 3)

    def test_empty_set_noop(self):
        g = build("C5")
        assert subgraph_complement(g, []) == g

    def test_involution(self):
        rng = random.Random(0)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 8))
            s = [v for v in range(g.n) if rng.random() < 0.5]
            assert subgraph_complement(subgraph_complement(g, s), s) == g


class TestBipartiteComplement:
    def test_c4_parts_to_edgeless(self):
        g = bipartite_complement(build("C4"), [0, 2], [1, 3])
        assert g.edge_count() == 0

    def test_empty_side_noop(self):
        g = build("C5")
        assert bipartite_complement(g, [], [0, 1]) == g

    def test_equals_three_complementations(self):
        rng = random.Random(1)
        for _ in range(200):
            g = random_graph(rng, rng.randint(2, 8))
            vs = list(range(g.n))
            rng.shuffle(vs)
            cut = rng.randint(0, g.n)
            x, y = vs[:cut], vs[cut : cut + rng.randint(0, g.n - cut)]
            via_three = subgraph_complement(
                subgraph_complement(subgraph_complement(g, x), y), x + y
            )
            assert bipartite_complement(g, x, y) == via_three

    def test_overlap_rejected(self):
        with pytest.raises(ValueError):
            bipartite_complement(build("P4"), [0, 1], [1, 2])


class TestDeleteVertex:
    def test_cycle_to_path(self):
        for k in range(4, 9):
            assert delete_vertex(build(f"C{k}"), 0) == build(f"P{k - 1}")

    def test_claw_centre(self):
        assert delete_vertex(build("K1,3"), 0) == build("3P1")

    def test_path_endpoint(self):
        assert delete_vertex(build("P6"), 5) == build("P5")

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            delete_vertex(build("P3"), 3)


class TestScripts:
    def test_empty_script(self):
        g = build("C5")
        assert apply_script(g, OpScript()) == g

    def test_double_complement_identity(self):
        g = build("P2+P4")
        script = OpScript(
            (SubgraphComplement((0, 1, 2)), SubgraphComplement((0, 1, 2)))
        )
        assert apply_script(g, script) == g

    def test_json_round_trip(self):
        script = OpScript(
            (
                SubgraphComplement((0, 2)),
                BipartiteComplement((0,), (1, 3)),
                DeleteVertex(2),
            )
        )
        blob = json.dumps(script.to_json())
        assert OpScript.from_json(json.loads(blob)) == script

    def test_step_error_names_index(self):
        script = OpScript((DeleteVertex(0), DeleteVertex(5)))
        with pytest.raises(OpScriptError) as info:
            apply_script(build("P3"), script)
        assert info.value.step_index == 1

    def test_inverse_round_trip(self):
        rng = random.Random(2)
        g = random_graph(rng, 7)
        script = OpScript(
            (SubgraphComplement((0, 3, 5)), BipartiteComplement((1, 2), (4, 6)))
        )
        assert apply_script(apply_script(g, script), script.inverse()) == g

    def test_deletion_not_invertible(self):
        with pytest.raises(ValueError):
            OpScript((DeleteVertex(0),)).inverse()


class TestDeletionCaveat:
    """Deleting one vertex of a cycle yields a path: the cycles stay an
    antichain while the resulting paths form a chain."""

    def test_cycles_vs_paths(self):
        cycles = [build(f"C{k}") for k in range(4, 9)]
        paths = [delete_vertex(c, 0) for c in cycles]
        assert antichain_check(cycles).is_antichain
        for small, large in zip(paths, paths[1:]):
            assert induced_embed(small, large) is not None


class TestSplitLabels:
    def test_marked_empty_keeps_embeddings(self):
        rng = random.Random(3)
        order = QuasiOrder.total(("a", "b"))
        for _ in range(50):
            h = random_graph(rng, rng.randint(1, 4))
            g = random_graph(rng, rng.randint(1, 6))
            lh = LabelledGraph(h, tuple(rng.choice("ab") for _ in range(h.n)))
            lg = LabelledGraph(g, tuple(rng.choice("ab") for _ in range(g.n)))
            sh, doubled = split_labels(lh, (), order)
            sg, _ = split_labels(lg, (), order)
            assert all(lab[0] == 0 for lab in sh.labels)
            assert (labelled_embed(sh, sg, doubled) is None) == (
                labelled_embed(lh, lg, order) is None
            )

    def test_marked_everything_keeps_embeddings(self):
        rng = random.Random(4)
        order = QuasiOrder.total(("a", "b"))
        for _ in range(50):
            h = random_graph(rng, rng.randint(1, 4))
            g = random_graph(rng, rng.randint(1, 6))
            lh = LabelledGraph(h, tuple(rng.choice("ab") for _ in range(h.n)))
            lg = LabelledGraph(g, tuple(rng.choice("ab") for _ in range(g.n)))
            sh, doubled = split_labels(lh, range(h.n), order)
            sg, _ = split_labels(lg, range(g.n), order)
            assert all(lab[0] == 1 for lab in sh.labels)
            assert (labelled_embed(sh, sg, doubled) is None) == (
                labelled_embed(lh, lg, order) is None
            )
