from itertools import combinations

import pytest

from wqograph.graphs import Graph, build, complement, induced, is_bipartite
from wqograph.instances import (
    c4_branch_valid,
    c4_instance,
    c5_branch_valid,
    c5_claim_mutants,
    c5_instance,
    class_members,
    is_class_member,
    k5_branch_valid,
    k5_instance,
)
from wqograph.ops import BipartiteComplement, apply_script
from wqograph.order import is_free
from wqograph.structure import (
    RouteError,
    c5_case_of,
    decompose_c4,
    decompose_c5,
    decompose_k5,
    find_clique,
    find_induced_cycle,
    route,
)
from wqograph.uniform import verify_witness


class TestRoute:
    def test_branches(self):
        assert route(build("K6")) == "K5"
        assert route(build("C5")) == "C5"
        assert route(build("C4")) == "C4"
        assert route(build("P5")) == "Sparse"

    def test_class_violation_with_witness(self):
        with pytest.raises(RouteError) as info:
            route(build("P2+P3"))
        assert info.value.witness is not None

    def test_anchor_normalisation(self):
        cyc = find_induced_cycle(build("C5"), 5)
        assert cyc == (0, 1, 2, 3, 4)
        assert find_clique(build("K5+P1"), 5) == (0, 1, 2, 3, 4)


class TestDecomposeK5:
    def test_case1_bare_clique(self):
        rep = decompose_k5(build("K5"))
        assert rep.case == 1 and rep.ok

    def test_case2_isolated_vertices(self):
        rep = decompose_k5(build("K5+3P1"))
        assert rep.case == 2 and rep.ok
        image = apply_script(build("K5+3P1"), rep.script)
        assert image.edge_count() == 0

    def test_case2_pendant_star(self):
        g = Graph.from_edges(
            6, [(a, b) for a in range(5) for b in range(a + 1, 5)] + [(0, 5)]
        )
        rep = decompose_k5(g)
        assert rep.case == 2 and rep.ok

    def test_case_battery(self):
        members = class_members(k5_instance, 40, valid=k5_branch_valid)
        seen = set()
        for seed, g in members:
            rep = decompose_k5(g)
            assert rep.ok, (seed, rep.failed_claims())
            seen.add(rep.case)
            image = apply_script(g, rep.script)
            part = rep.parts[0]
            if rep.case == 1:
                assert is_bipartite(image) is not None
            elif rep.case == 4:
                assert is_free(image, [build("P3")]).free
            assert part.ok
        assert seen == {1, 2, 3, 4}

    def test_claim1_violation_reported(self):
        # an outside vertex with two clique neighbours is outside the class
        g = Graph.from_edges(
            6, [(a, b) for a in range(5) for b in range(a + 1, 5)] + [(5, 0), (5, 1)]
        )
        rep = decompose_k5(g)
        assert "L4.1-C1" in rep.failed_claims()

    def test_requires_clique(self):
        with pytest.raises(ValueError):
            decompose_k5(build("C5"))


def _case1_c5_member() -> Graph:
    """All five satellite sets large with the forced pattern, plus a large
    anticomplete independent set."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    vsets = []
    n = 5
    for i in range(5):
        vs = list(range(n, n + 3))
        n += 3
        vsets.append(vs)
        for v in vs:
            edges += [(v, (i - 1) % 5), (v, (i + 1) % 5)]
    for i in range(5):
        for u in vsets[i]:
            for v in vsets[(i + 1) % 5]:
                edges.append((u, v))
    n += 3  # anticomplete independent set
    return Graph.from_edges(n, sorted(set(tuple(sorted(e)) for e in edges)))


class TestDecomposeC5:
    def test_bare_cycle(self):
        rep = decompose_c5(build("C5"))
        assert rep.ok and rep.case == 7
        assert rep.parts[0].detail["order"] <= 2
        assert len(rep.deletions) == 5

    def test_forced_all_large_case(self):
        g = _case1_c5_member()
        assert is_class_member(g)
        rep = decompose_c5(g)
        assert rep.case == 1 and rep.ok
        assert rep.parts[0].detail["order"] <= 6

    def test_battery_100(self):
        members = class_members(c5_instance, 100, valid=c5_branch_valid)
        for seed, g in members:
            rep = decompose_c5(g)
            assert rep.ok, (seed, rep.failed_claims())
            part = rep.parts[0]
            assert part.detail["order"] <= part.detail["order_bound"]
            survivors = tuple(
                v for v in range(g.n) if v not in set(rep.deletions)
            )
            assert apply_script(g, rep.script) == induced(g, survivors)
            assert part.vertices == survivors
            if part.detail["route"] == "direct":
                assert part.detail["order"] == part.detail["stated_order"]

    def test_mutants_name_claims(self):
        members = class_members(c5_instance, 30, valid=c5_branch_valid)
        tested = 0
        for seed, g in members:
            rep = decompose_c5(g)
            for claim, mutant in c5_claim_mutants(g, rep)[:2]:
                mrep = decompose_c5(mutant, cycle=rep.anchor)
                assert claim in mrep.failed_claims(), (seed, claim)
                tested += 1
        assert tested >= 20

    def test_case_table_covers_all_patterns(self):
        seen = set()
        for size in range(6):
            for combo in combinations(range(5), size):
                case, rot = c5_case_of(set(combo))
                assert 1 <= case <= 7 and 0 <= rot < 5
                seen.add(case)
        assert seen == set(range(1, 8))

    def test_requires_cycle(self):
        with pytest.raises(ValueError):
            decompose_c5(build("K5"))


def _triangle_kernel_member(m: int = 3) -> Graph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    v10 = list(range(4, 4 + m))
    v20 = list(range(4 + m, 4 + 2 * m))
    x0 = list(range(4 + 2 * m, 4 + 3 * m))
    for v in v10:
        edges += [(v, 1), (v, 3)]
    for v in v20:
        edges += [(v, 0), (v, 2)]
    for y, z, x in zip(v10, v20, x0):
        edges += [(x, y), (x, z)]
    edges += [(y, z) for y in v10 for z in v20]
    return Graph.from_edges(4 + 3 * m, edges)


class TestDecomposeC4:
    def test_bare_cycle(self):
        rep = decompose_c4(build("C4"))
        assert rep.ok and len(rep.deletions) == 4
        assert all(p.kind != "uniform" for p in rep.parts)

    def test_three_triangle_kernel(self):
        g = _triangle_kernel_member(3)
        assert is_class_member(g)
        rep = decompose_c4(g)
        assert rep.ok
        kernel = next(p for p in rep.parts if p.kind == "uniform")
        assert kernel.detail["order"] == 3
        assert verify_witness(induced(g, kernel.vertices), kernel.detail["witness"]).ok

    def test_battery_50(self):
        members = class_members(c4_instance, 50, valid=c4_branch_valid)
        for seed, g in members:
            rep = decompose_c4(g)
            assert rep.ok, (seed, rep.failed_claims())
            assert len(rep.deletions) <= 17
            n_bc = sum(
                1 for s in rep.script.steps if isinstance(s, BipartiteComplement)
            )
            assert n_bc <= 2
            final = apply_script(g, rep.script)
            # kernel and remainder are disconnected in the final graph
            survivors = sorted(v for v in range(g.n) if v not in set(rep.deletions))
            pos = {v: i for i, v in enumerate(survivors)}
            kernel_parts = [p for p in rep.parts if p.kind == "uniform"]
            if kernel_parts:
                kv = [pos[v] for v in kernel_parts[0].vertices]
                rv = [pos[v] for v in survivors if v not in set(kernel_parts[0].vertices)]
                assert all(not final.adjacent(a, b) for a in kv for b in rv)

    def test_named_sides_can_fail_on_true_member(self):
        # a satellite vertex adjacent to both cycle neighbours may still be
        # adjacent to a one-neighbour vertex: the standard side naming is
        # not independent, but a valid bipartition still exists
        g = Graph.from_edges(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 0), (4, 1), (4, 3), (5, 0), (6, 0), (4, 5)],
        )
        assert is_class_member(g)
        assert c4_branch_valid(g)
        rep = decompose_c4(g)
        assert rep.ok
        part = next(p for p in rep.parts if p.kind == "bipartite-p2p3-free")
        assert part.detail["sides"] == "recomputed"

    def test_regularisation_deletion(self):
        g = _triangle_kernel_member(1)
        if is_class_member(g):
            rep = decompose_c4(g)
            assert rep.ok
            assert all(p.kind != "uniform" for p in rep.parts)

    def test_rejects_c5_bearing_input(self):
        with pytest.raises(ValueError):
            decompose_c4(build("C5"))

    def test_report_json_shape(self):
        rep = decompose_c4(_triangle_kernel_member(2))
        blob = rep.to_json()
        assert blob["branch"] == "C4"
        assert {"id", "ok"} <= set(blob["claims"][0].keys())
        assert isinstance(blob["script"], list)
