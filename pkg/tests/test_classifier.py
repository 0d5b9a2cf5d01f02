import pytest

from wqograph.classifier import (
    ClassPair,
    OPEN_BOTH_PAIRS,
    OPEN_CW_PAIRS,
    OPEN_WQO_PAIRS,
    audit_open_lists,
    canonical_key,
    classify,
    classify_cw,
    classify_wqo,
    equivalent_pairs,
    isomorphic,
    nonisomorphic_graphs,
)
from wqograph.graphs import build, complement


class TestEquivalence:
    def test_triangle_p6_closure(self):
        pairs = equivalent_pairs(ClassPair.of("K3", "P6"))
        paw = build("co(P1+P3)")
        assert any(
            isomorphic(p.h1, paw) or isomorphic(p.h2, paw) for p in pairs
        )
        co_p6 = complement(build("P6"))
        t3 = build("3P1")
        assert any(
            {canonical_key(p.h1), canonical_key(p.h2)}
            == {canonical_key(t3), canonical_key(co_p6)}
            for p in pairs
        )

    def test_self_complementary_member(self):
        pairs = equivalent_pairs(ClassPair.of("P4", "P4"))
        assert len(pairs) == 1  # co(P4) = P4, and no triangle member

    def test_plain_closure_size(self):
        pairs = equivalent_pairs(ClassPair.of("2P2", "P5"))
        assert len(pairs) == 2  # the pair and its complement pair only

    def test_contains_input(self):
        pair = ClassPair.of("K3", "P2+P4")
        assert pair.key() in {p.key() for p in equivalent_pairs(pair)}


class TestClassifyWqo:
    def test_k3_p6(self):
        v = classify_wqo(ClassPair.of("K3", "P6"))
        assert v.status == "WqoLabelled" and v.rule == "T6.1-1(iii)"

    def test_diamond_p2p4(self):
        v = classify_wqo(ClassPair.of("co(2P1+P2)", "P2+P4"))
        assert v.status == "NotWqo" and v.rule == "T6.1-2(iv)"
        assert v.family == "thm51"

    def test_gembar_p1_2p2(self):
        v = classify_wqo(ClassPair.of("co(P1+P4)", "P1+2P2"))
        assert v.status == "NotWqo" and v.family == "thm52"

    def test_diamond_p6_links_family(self):
        v = classify_wqo(ClassPair.of("co(2P1+P2)", "P6"))
        assert v.status == "NotWqo" and v.family == "thm51"

    def test_open_case(self):
        assert classify_wqo(ClassPair.of("co(3P1)", "P1+2P2")).status == "Open"

    def test_two_dense_patterns(self):
        v = classify_wqo(ClassPair.of("C4", "C5"))
        assert v.status == "NotWqo" and v.rule == "T6.1-2(i)"


class TestClassifyCw:
    def test_diamond_p2p3_bounded(self):
        v = classify_cw(ClassPair.of("co(2P1+P2)", "P2+P3"))
        assert v.status == "Bounded" and v.rule == "T6.2-1(iv)"

    def test_diamond_p2p4_unbounded(self):
        v = classify_cw(ClassPair.of("co(2P1+P2)", "P2+P4"))
        assert v.status == "Unbounded" and v.rule == "T6.2-2(iv)"

    def test_open_case(self):
        assert classify_cw(ClassPair.of("3P1", "co(P2+P4)")).status == "Open"

    def test_gem_spotchecks(self):
        assert classify_cw(ClassPair.of("co(P1+P4)", "P1+P4")).status == "Bounded"
        assert classify_cw(ClassPair.of("K3", "P1+P5")).status == "Bounded"


class TestJointClassify:
    def test_wqo_and_cw_example(self):
        status = classify("co(2P1+P2)", "P2+P3")
        blob = status.to_json()
        assert blob["wqo"] == "WqoLabelled" and blob["cw"] == "Bounded"
        assert blob["rule"].startswith("T6.1") and blob["cw_rule"].startswith("T6.2")

    def test_comparable_pair_warned(self):
        status = classify("P3", "P4")
        assert status.warnings
        assert status.wqo.status == "WqoLabelled"  # describes P3-free graphs

    def test_equivalence_invariance(self):
        for a, b in [("K3", "P6"), ("co(2P1+P2)", "P2+P3"), ("2P2", "C4"),
                     ("co(3P1)", "P2+P4")]:
            base = ClassPair.of(a, b)
            wqo = classify_wqo(base).status
            cw = classify_cw(base).status
            for member in equivalent_pairs(base):
                assert classify_wqo(member).status == wqo
                assert classify_cw(member).status == cw


class TestAudit:
    def test_lists_have_documented_sizes(self):
        assert len(OPEN_WQO_PAIRS) == 9
        assert len(OPEN_CW_PAIRS) == 8
        assert len(OPEN_BOTH_PAIRS) == 2

    def test_audit_all_open(self):
        report = audit_open_lists()
        assert report.ok
        blob = report.to_json()
        assert len(blob["wqo_open"]) == 9 and len(blob["cw_open"]) == 8


class TestCorpus:
    def test_counts_match_known_sequence(self):
        assert [len(nonisomorphic_graphs(n)) for n in range(1, 6)] == [
            1,
            2,
            4,
            11,
            34,
        ]

    def test_canonical_key_iso_invariant(self):
        assert canonical_key(build("S1,1,1")) == canonical_key(build("K1,3"))
        assert canonical_key(build("P4")) == canonical_key(complement(build("P4")))
