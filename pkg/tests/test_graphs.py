import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wqograph.graphs import (
    Graph,
    Graph6Error,
    GraphSpecError,
    biclique,
    build,
    complement,
    connected_components,
    cycle_graph,
    decode_graph6,
    delete_vertices,
    encode_graph6,
    from_json_dict,
    induced,
    is_bipartite,
    path_graph,
    relation_between,
    subdivided_claw,
    to_json_dict,
)
from oracles import oracle_isomorphic


def random_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


graphs_strategy = st.integers(0, 7).flatmap(
    lambda n: st.builds(
        lambda bits: Graph.from_edges(
            n,
            [
                p
                for p, b in zip(itertools.combinations(range(n), 2), bits)
                if b
            ],
        ),
        st.lists(
            st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2
        ),
    )
)


class TestCatalog:
    def test_path(self):
        p4 = build("P4")
        assert p4.n == 4 and p4.edge_count() == 3
        assert p4.degree_sequence() == (1, 1, 2, 2)

    def test_subdivided_claw_equals_claw(self):
        assert oracle_isomorphic(build("S1,1,1"), build("K1,3"))

    def test_fig1_diamond(self):
        d = build("co(2P1+P2)")
        assert d.n == 4 and d.edge_count() == 5

    def test_counts(self):
        for h, i, j in [(1, 1, 2), (1, 2, 2), (2, 2, 3)]:
            assert subdivided_claw(h, i, j).n == h + i + j + 1
        for r, s in [(1, 1), (2, 2), (2, 4)]:
            assert biclique(r, s).edge_count() == r * s
        for r in range(3, 9):
            assert cycle_graph(r).edge_count() == r

    def test_multiplier(self):
        g = build("2P1+P2")
        assert g.n == 4 and g.edge_count() == 1
        assert build("3K2").edge_count() == 3

    def test_nested_complement(self):
        g = build("co(co(P4))")
        assert g == build("P4")

    @pytest.mark.parametrize(
        "bad", ["S2,1,1", "P0", "C2", "K0", "0P1", "P4+", "co(P4", "Q3", ""]
    )
    def test_malformed(self, bad):
        with pytest.raises(GraphSpecError):
            build(bad)


class TestComplementInduced:
    def test_complement_k3(self):
        assert complement(build("K3")) == build("3P1")

    def test_c5_self_complementary(self):
        assert oracle_isomorphic(complement(build("C5")), build("C5"))

    def test_involution_exact(self):
        # exhaustive for n <= 4, sampled for 5..7
        for n in range(5):
            for bits in range(1 << (n * (n - 1) // 2)):
                pairs = list(itertools.combinations(range(n), 2))
                g = Graph.from_edges(
                    n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
                )
                assert complement(complement(g)) == g
        rng = random.Random(0)
        for _ in range(50):
            g = random_graph(rng, rng.randint(5, 7))
            assert complement(complement(g)) == g

    def test_induced_c5_any_four_is_p4(self):
        c5 = build("C5")
        for drop in range(5):
            sub = induced(c5, [v for v in range(5) if v != drop])
            assert oracle_isomorphic(sub, build("P4"))

    def test_induced_identity(self):
        g = build("K2,3")
        assert induced(g, range(g.n)) == g

    def test_induced_k5_triple(self):
        assert induced(build("K5"), [0, 1, 2]) == build("K3")

    def test_induced_out_of_range(self):
        with pytest.raises(ValueError):
            induced(build("P3"), [0, 5])

    def test_induced_commutes_with_complement(self):
        rng = random.Random(1)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 7))
            s = [v for v in range(g.n) if rng.random() < 0.6]
            assert induced(complement(g), s) == complement(induced(g, s))


class TestBipartite:
    def test_c4(self):
        assert is_bipartite(build("C4")) == ((0, 2), (1, 3))

    def test_odd_cycle(self):
        assert is_bipartite(build("C5")) is None

    def test_biclique(self):
        parts = is_bipartite(build("K2,2"))
        assert parts is not None and sorted(map(len, parts)) == [2, 2]


class TestRelations:
    def test_biclique_parts_complete(self):
        r = relation_between(build("K2,2"), [0, 1], [2, 3])
        assert r.kind == "complete" and r.matching is False

    def test_2p2_matching(self):
        r = relation_between(build("2P2"), [0, 2], [1, 3])
        assert r.kind == "matching"

    def test_c6_alternating(self):
        # direct count: each side-A vertex has two B-neighbours (so not a
        # matching) and exactly one B-non-neighbour (so a comatching)
        g = build("C6")
        for v in (0, 2, 4):
            assert sum(g.adjacent(v, w) for w in (1, 3, 5)) == 2
        r = relation_between(g, [0, 2, 4], [1, 3, 5])
        assert r.kind == "comatching" and not r.matching

    def test_anticomplete_is_also_matching(self):
        r = relation_between(build("2P2"), [0, 1], [2, 3])
        assert r.kind == "anticomplete" and r.matching

    def test_overlap_rejected(self):
        with pytest.raises(ValueError):
            relation_between(build("P4"), [0, 1], [1, 2])

    def test_complement_duality(self):
        rng = random.Random(2)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 7))
            vs = list(range(g.n))
            rng.shuffle(vs)
            cut = rng.randint(1, g.n - 1)
            a, b = vs[:cut], vs[cut:]
            r = relation_between(g, a, b)
            rc = relation_between(complement(g), a, b)
            assert r.complete == rc.anticomplete
            assert r.anticomplete == rc.complete
            assert r.matching == rc.comatching
            assert r.comatching == rc.matching


class TestGraph6:
    def test_p3_hand_packed(self):
        # 3 vertices -> chr(3+63); column bits (0,1),(0,2),(1,2) = 1,0,1
        # padded to 101000 = 40 -> chr(40+63)
        assert encode_graph6(build("P3")) == chr(66) + chr(103)

    def test_single_vertex_shortest(self):
        assert encode_graph6(Graph.empty(1)) == "@"
        assert decode_graph6("@") == Graph.empty(1)

    def test_round_trip_500(self):
        rng = random.Random(3)
        for _ in range(500):
            g = random_graph(rng, rng.randint(1, 12))
            assert decode_graph6(encode_graph6(g)) == g

    def test_header_accepted(self):
        g = build("C5")
        assert decode_graph6(">>graph6<<" + encode_graph6(g)) == g

    def test_large_n_form(self):
        from wqograph.graphs import set_max_vertices

        set_max_vertices(70)
        try:
            g = path_graph(64)
            enc = encode_graph6(g)
            assert enc.startswith(chr(126))
            assert decode_graph6(enc) == g
        finally:
            set_max_vertices(64)

    @pytest.mark.parametrize(
        "bad,offset",
        [("", 0), (chr(62), 0), ("B" + chr(200), 1), ("Bgg", 2)],
    )
    def test_errors_carry_offsets(self, bad, offset):
        with pytest.raises(Graph6Error) as info:
            decode_graph6(bad)
        assert info.value.offset == offset

    @given(graphs_strategy)
    @settings(max_examples=60, deadline=None)
    def test_round_trip_property(self, g):
        assert decode_graph6(encode_graph6(g)) == g


class TestJson:
    def test_round_trip(self):
        g = build("S1,2,2")
        assert from_json_dict(to_json_dict(g)) == g

    def test_malformed(self):
        with pytest.raises(ValueError):
            from_json_dict({"edges": []})


class TestBasics:
    def test_no_self_loops(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_symmetry_enforced(self):
        with pytest.raises(ValueError):
            Graph(2, (2, 0))

    def test_components(self):
        comps = connected_components(build("P2+P3"))
        assert comps == [(0, 1), (2, 3, 4)]

    def test_delete_vertices(self):
        assert delete_vertices(build("C5"), [0]) == build("P4")
