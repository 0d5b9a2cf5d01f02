"""Classification of hereditary classes defined by two forbidden induced
subgraphs: labelled-wqo status, clique-width boundedness status, pair
equivalence, and the audited open-problem lists.

The decision tables are data, not code branches: each rule is a pattern
pair (containment direction flags plus a few special predicates), so a
report can print exactly which rule matched and on which equivalent pair.
Two pairs are equivalent when one arises from the other by complementing
both members or by swapping a triangle member for the paw (co(P1+P3)) and
vice versa; verdicts are invariant across an equivalence class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .graphs import Graph, build, complement, encode_graph6
from .order import induced_embed, in_class_S, is_linear_forest


class RuleInconsistencyError(RuntimeError):
    """A positive and a negative rule of the same table both fired."""


@lru_cache(maxsize=None)
def _pattern(expr: str) -> Graph:
    return build(expr)


def canonical_key(g: Graph) -> tuple:
    """Isomorphism-invariant key by brute-force permutation minimisation."""
    if g.n > 8:
        raise ValueError("canonical_key is brute force; n <= 8 only")
    best = None
    for perm in permutations(range(g.n)):
        bits = tuple(
            1 if g.adjacent(perm[i], perm[j]) else 0
            for i in range(g.n)
            for j in range(i + 1, g.n)
        )
        if best is None or bits < best:
            best = bits
    return (g.n, best)


def isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_key(a) == canonical_key(b)


@dataclass(frozen=True)
class ClassPair:
    """Unordered pair of forbidden graphs, stored in canonical member order."""

    h1: Graph
    h2: Graph

    @staticmethod
    def of(h1: Graph | str, h2: Graph | str) -> "ClassPair":
        a, b = build(h1), build(h2)
        if (a.n, canonical_key(a)) > (b.n, canonical_key(b)):
            a, b = b, a
        return ClassPair(a, b)

    def key(self) -> tuple:
        return tuple(sorted((canonical_key(self.h1), canonical_key(self.h2))))

    def comparable(self) -> bool:
        small, big = (
            (self.h1, self.h2) if self.h1.n <= self.h2.n else (self.h2, self.h1)
        )
        return induced_embed(small, big) is not None


def equivalent_pairs(pair: ClassPair) -> tuple[ClassPair, ...]:
    """Closure under complement-both and the triangle <-> paw swap."""
    triangle = _pattern("K3")
    paw = _pattern("co(P1+P3)")
    seen: dict[tuple, ClassPair] = {}
    frontier = [pair]
    while frontier:
        p = frontier.pop(0)
        k = p.key()
        if k in seen:
            continue
        seen[k] = p
        nxt = [ClassPair.of(complement(p.h1), complement(p.h2))]
        for a, b in ((p.h1, p.h2), (p.h2, p.h1)):
            if isomorphic(a, triangle):
                nxt.append(ClassPair.of(paw, b))
            if isomorphic(a, paw):
                nxt.append(ClassPair.of(triangle, b))
        frontier.extend(nxt)
    return tuple(seen.values())


# ---------------------------------------------------------------------------
# Pattern atoms and rules


def _matches(g: Graph, atom: tuple) -> bool:
    op = atom[0]
    if op == "any":
        return True
    if op == "sub":  # g embeds into the pattern
        return induced_embed(g, _pattern(atom[1])) is not None
    if op == "sup":  # the pattern embeds into g
        return induced_embed(_pattern(atom[1]), g) is not None
    if op == "co_sub":
        return induced_embed(complement(g), _pattern(atom[1])) is not None
    if op == "co_sup":
        return induced_embed(_pattern(atom[1]), complement(g)) is not None
    if op == "edgeless":
        return g.edge_count() == 0
    if op == "complete":
        return g.edge_count() == g.n * (g.n - 1) // 2
    if op == "not_linear_forest":
        return not is_linear_forest(g)
    if op == "co_not_in_S":
        return not in_class_S(complement(g))
    if op == "not_in_S":
        return not in_class_S(g)
    raise ValueError(f"unknown pattern atom {op!r}")


@dataclass(frozen=True)
class Rule:
    id: str
    verdict: str
    first: tuple[tuple, ...]
    second: tuple[tuple, ...]
    families: dict = field(default_factory=dict)

    def match(self, a: Graph, b: Graph) -> tuple | None:
        """Matched (atom_first, atom_second) or None, in table order."""
        for fa in self.first:
            if not _matches(a, fa):
                continue
            for sa in self.second:
                if _matches(b, sa):
                    return fa, sa
        return None


def _subs(*exprs: str) -> tuple[tuple, ...]:
    return tuple(("sub", e) for e in exprs)


def _sups(*exprs: str) -> tuple[tuple, ...]:
    return tuple(("sup", e) for e in exprs)


def _co_subs(*exprs: str) -> tuple[tuple, ...]:
    return tuple(("co_sub", e) for e in exprs)


def _co_sups(*exprs: str) -> tuple[tuple, ...]:
    return tuple(("co_sup", e) for e in exprs)


WQO_RULES: tuple[Rule, ...] = (
    Rule("T6.1-1(i)", "WqoLabelled", _subs("P4"), (("any",),)),
    Rule("T6.1-1(ii)", "WqoLabelled", (("edgeless",),), (("complete",),)),
    Rule("T6.1-1(iii)", "WqoLabelled", _subs("co(3P1)"), _subs("2P1+P3", "P6")),
    Rule("T6.1-1(iv)", "WqoLabelled", _subs("co(2P1+P2)"), _subs("P2+P3", "P5")),
    Rule(
        "T6.1-2(i)",
        "NotWqo",
        (("not_linear_forest",),),
        (("not_linear_forest",),),
    ),
    Rule("T6.1-2(ii)", "NotWqo", _sups("co(3P1)"), _sups("3P1+P2", "3P2", "2P3")),
    Rule("T6.1-2(iii)", "NotWqo", _sups("co(2P2)"), _sups("4P1", "2P2")),
    Rule(
        "T6.1-2(iv)",
        "NotWqo",
        _sups("co(2P1+P2)"),
        _sups("4P1", "P2+P4", "P6"),
        families={"P2+P4": "thm51", "P6": "thm51"},
    ),
    Rule(
        "T6.1-2(v)",
        "NotWqo",
        _sups("co(P1+P4)"),
        _sups("P1+2P2"),
        families={"P1+2P2": "thm52"},
    ),
)

CW_RULES: tuple[Rule, ...] = (
    Rule("T6.2-1(i)", "Bounded", _subs("P4"), (("any",),)),
    Rule("T6.2-1(ii)", "Bounded", (("edgeless",),), (("complete",),)),
    Rule(
        "T6.2-1(iii)",
        "Bounded",
        _subs("P1+P3"),
        _co_subs(
            "K1,3+3P1",
            "K1,3+P2",
            "P1+P2+P3",
            "P1+P5",
            "P1+S1,1,2",
            "P6",
            "S1,1,3",
            "S1,2,2",
        ),
    ),
    Rule(
        "T6.2-1(iv)",
        "Bounded",
        _subs("2P1+P2"),
        _co_subs("P1+2P2", "2P1+P3", "3P1+P2", "P2+P3"),
    ),
    Rule("T6.2-1(v)", "Bounded", _subs("P1+P4"), _co_subs("P1+P4", "P5")),
    Rule("T6.2-1(vi)", "Bounded", _subs("4P1"), _co_subs("2P1+P3")),
    Rule("T6.2-1(vii)", "Bounded", _subs("K1,3"), _co_subs("K1,3")),
    Rule("T6.2-2(i)", "Unbounded", (("not_in_S",),), (("not_in_S",),)),
    Rule("T6.2-2(ii)", "Unbounded", (("co_not_in_S",),), (("co_not_in_S",),)),
    Rule(
        "T6.2-2(iii)",
        "Unbounded",
        _sups("K1,3", "2P2"),
        _co_sups("4P1", "2P2"),
    ),
    Rule(
        "T6.2-2(iv)",
        "Unbounded",
        _sups("2P1+P2"),
        _co_sups("K1,3", "5P1", "P2+P4", "P6"),
    ),
    Rule(
        "T6.2-2(v)",
        "Unbounded",
        _sups("3P1"),
        _co_sups("2P1+2P2", "2P1+P4", "4P1+P2", "3P2", "2P3"),
    ),
    Rule("T6.2-2(vi)", "Unbounded", _sups("4P1"), _co_sups("P1+P4", "3P1+P2")),
)


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str | None = None
    via: tuple[str, str] | None = None
    family: str | None = None

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.rule:
            out["rule"] = self.rule
            out["via"] = list(self.via)
        if self.family:
            out["family"] = self.family
        return out


def _classify(pair: ClassPair, rules: Sequence[Rule], open_status: str) -> Verdict:
    positives: list[Verdict] = []
    negatives: list[Verdict] = []
    members = equivalent_pairs(pair)
    for rule in rules:
        for p in members:
            for a, b in ((p.h1, p.h2), (p.h2, p.h1)):
                hit = rule.match(a, b)
                if hit is None:
                    continue
                family = None
                _, satom = hit
                if len(satom) > 1 and satom[1] in rule.families:
                    family = rule.families[satom[1]]
                verdict = Verdict(
                    rule.verdict,
                    rule.id,
                    (encode_graph6(a), encode_graph6(b)),
                    family,
                )
                if rule.verdict in ("WqoLabelled", "Bounded"):
                    positives.append(verdict)
                else:
                    negatives.append(verdict)
    if positives and negatives:
        raise RuleInconsistencyError(
            f"pair fired {positives[0].rule} and {negatives[0].rule}"
        )
    if positives:
        return positives[0]
    if negatives:
        return negatives[0]
    return Verdict(open_status)


def classify_wqo(pair: ClassPair) -> Verdict:
    return _classify(pair, WQO_RULES, "Open")


def classify_cw(pair: ClassPair) -> Verdict:
    return _classify(pair, CW_RULES, "Open")


@dataclass(frozen=True)
class ClassStatus:
    pair: ClassPair
    wqo: Verdict
    cw: Verdict
    warnings: tuple[str, ...]

    def to_json(self) -> dict:
        out = {
            "h1": encode_graph6(self.pair.h1),
            "h2": encode_graph6(self.pair.h2),
            "wqo": self.wqo.status,
            "cw": self.cw.status,
        }
        if self.wqo.rule:
            out["rule"] = self.wqo.rule
            out["via"] = list(self.wqo.via)
        if self.wqo.family:
            out["family"] = self.wqo.family
        if self.cw.rule:
            out["cw_rule"] = self.cw.rule
            out["cw_via"] = list(self.cw.via)
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out


def classify(h1: Graph | str, h2: Graph | str) -> ClassStatus:
    """Joint wqo and clique-width status of the (h1, h2)-free class.

    Comparable pairs are classified with a warning; the verdicts then
    describe the class of the smaller pattern.
    """
    pair = ClassPair.of(h1, h2)
    warnings = ()
    if pair.comparable():
        warnings = ("pair is comparable under the induced subgraph relation",)
    return ClassStatus(pair, classify_wqo(pair), classify_cw(pair), warnings)


# ---------------------------------------------------------------------------
# Open problem audit

OPEN_WQO_PAIRS: tuple[tuple[str, str], ...] = (
    ("co(3P1)", "P1+2P2"),
    ("co(3P1)", "P1+P5"),
    ("co(3P1)", "P2+P4"),
    ("co(2P1+P2)", "P1+2P2"),
    ("co(2P1+P2)", "P1+P4"),
    ("co(P1+P4)", "P1+P4"),
    ("co(P1+P4)", "2P2"),
    ("co(P1+P4)", "P2+P3"),
    ("co(P1+P4)", "P5"),
)

OPEN_CW_PAIRS: tuple[tuple[str, str], ...] = (
    ("3P1", "co(P1+S1,1,3)"),
    ("3P1", "co(P2+P4)"),
    ("3P1", "co(S1,2,3)"),
    ("2P1+P2", "co(P1+P2+P3)"),
    ("2P1+P2", "co(P1+P5)"),
    ("P1+P4", "co(P1+2P2)"),
    ("P1+P4", "co(P2+P3)"),
    ("2P1+P3", "co(2P1+P3)"),
)

OPEN_BOTH_PAIRS: tuple[tuple[str, str], ...] = (
    ("K3", "P2+P4"),
    ("co(P1+P4)", "P2+P3"),
)


@dataclass(frozen=True)
class AuditReport:
    wqo_open: tuple[tuple[str, str, str], ...]
    cw_open: tuple[tuple[str, str, str], ...]
    both_open: tuple[tuple[str, str, str, str], ...]

    @property
    def ok(self) -> bool:
        return (
            all(v == "Open" for _, _, v in self.wqo_open)
            and all(v == "Open" for _, _, v in self.cw_open)
            and all(w == "Open" and c == "Open" for _, _, w, c in self.both_open)
        )

    def to_json(self) -> dict:
        return {
            "wqo_open": [list(t) for t in self.wqo_open],
            "cw_open": [list(t) for t in self.cw_open],
            "both_open": [list(t) for t in self.both_open],
            "ok": self.ok,
        }


def audit_open_lists() -> AuditReport:
    """Re-derive every open-problem entry and check it stays Open."""
    wqo_rows = tuple(
        (a, b, classify_wqo(ClassPair.of(a, b)).status) for a, b in OPEN_WQO_PAIRS
    )
    cw_rows = tuple(
        (a, b, classify_cw(ClassPair.of(a, b)).status) for a, b in OPEN_CW_PAIRS
    )
    both_rows = tuple(
        (
            a,
            b,
            classify_wqo(ClassPair.of(a, b)).status,
            classify_cw(ClassPair.of(a, b)).status,
        )
        for a, b in OPEN_BOTH_PAIRS
    )
    return AuditReport(wqo_rows, cw_rows, both_rows)


# ---------------------------------------------------------------------------
# Exhaustive small-pair corpus


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices up to isomorphism."""
    pairs = list(combinations(range(n), 2))
    seen = {}
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        g = Graph.from_edges(n, edges)
        key = canonical_key(g)
        if key not in seen:
            seen[key] = g
    return tuple(seen.values())


def pair_corpus(max_n: int = 5) -> list[ClassPair]:
    """Every unordered pair of graphs with at most max_n vertices each."""
    graphs: list[Graph] = []
    for n in range(1, max_n + 1):
        graphs.extend(nonisomorphic_graphs(n))
    out = []
    for i, a in enumerate(graphs):
        for b in graphs[i:]:
            out.append(ClassPair.of(a, b))
    return out


def check_rule_consistency(max_n: int = 5) -> list[tuple[str, str]]:
    """Classify the whole corpus; any inconsistency is collected (an empty
    result is the expected outcome)."""
    bad = []
    for pair in pair_corpus(max_n):
        try:
            classify_wqo(pair)
            classify_cw(pair)
        except RuleInconsistencyError as exc:
            bad.append((encode_graph6(pair.h1) + "," + encode_graph6(pair.h2), str(exc)))
    return bad
