"""The induced-subgraph quasi-order and its labelled refinement.

The embedding search is a backtracking solver over pattern vertices in
descending-degree order with forward checking: every unassigned pattern
vertex keeps a candidate bitmask that is intersected with the neighbourhood
(or non-neighbourhood) of each newly placed vertex.  Candidates are tried in
ascending host-vertex order, so the first embedding found is deterministic
and tests can pin exact witnesses.

Long searches accept an optional :class:`SearchBudget`; exhausting it raises
:class:`SearchBudgetExceeded`, which callers must treat as "unknown", never
as "no embedding".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, NamedTuple, Sequence

from .graphs import Graph, bits_of, connected_components


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search completed."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass
class SearchBudget:
    """Node-count limit shared across one logical search."""

    limit: int
    used: int = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise SearchBudgetExceeded(self.used)


@dataclass(frozen=True)
class QuasiOrder:
    """A reflexive transitive relation on a finite label set.

    ``pairs`` holds every related pair ``(a, b)`` meaning ``a <= b``.
    Reflexivity and transitivity are checked at construction by comparing
    against the transitive closure.
    """

    elements: tuple[Hashable, ...]
    pairs: frozenset

    def __post_init__(self):
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise ValueError("duplicate elements in quasi-order")
        for a, b in self.pairs:
            if a not in elems or b not in elems:
                raise ValueError(f"pair ({a!r},{b!r}) uses unknown element")
        for a in self.elements:
            if (a, a) not in self.pairs:
                raise ValueError(f"relation not reflexive at {a!r}")
        if self.pairs != _transitive_closure(self.pairs):
            raise ValueError("relation not transitive")

    def leq(self, a, b) -> bool:
        return (a, b) in self.pairs

    def __contains__(self, element) -> bool:
        return element in self.elements

    @staticmethod
    def equality(elements: Iterable[Hashable]) -> "QuasiOrder":
        elems = tuple(elements)
        return QuasiOrder(elems, frozenset((e, e) for e in elems))

    @staticmethod
    def total(elements: Sequence[Hashable]) -> "QuasiOrder":
        """Chain in the given element order."""
        elems = tuple(elements)
        pairs = frozenset(
            (elems[i], elems[j]) for i in range(len(elems)) for j in range(i, len(elems))
        )
        return QuasiOrder(elems, pairs)

    @staticmethod
    def from_pairs(
        elements: Iterable[Hashable], pairs: Iterable[tuple], *, close: bool = False
    ) -> "QuasiOrder":
        elems = tuple(elements)
        rel = set(tuple(p) for p in pairs)
        rel.update((e, e) for e in elems)
        if close:
            rel = set(_transitive_closure(frozenset(rel)))
        return QuasiOrder(elems, frozenset(rel))

    def doubled(self) -> "QuasiOrder":
        """Two incomparable copies: (t, a) <= (t', b) iff t == t' and a <= b."""
        elems = tuple((t, e) for t in (0, 1) for e in self.elements)
        pairs = frozenset(((t, a), (t, b)) for t in (0, 1) for a, b in self.pairs)
        return QuasiOrder(elems, pairs)


def _transitive_closure(pairs: frozenset) -> frozenset:
    rel = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return frozenset(rel)


@dataclass(frozen=True)
class LabelledGraph:
    """A graph whose vertices carry labels (one per vertex, in index order)."""

    graph: Graph
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError("one label per vertex required")


# ---------------------------------------------------------------------------
# Embedding search


def _embed(h: Graph, g: Graph, base_candidates, budget: SearchBudget | None):
    """Core backtracking search; returns an assignment tuple or None."""
    nh, ng = h.n, g.n
    if nh > ng:
        return None
    if nh == 0:
        return ()
    order = sorted(range(nh), key=lambda v: (-h.degree(v), v))
    gmask = g.mask
    hdeg = [h.degree(v) for v in range(nh)]
    gdeg = [g.degree(w) for w in range(ng)]
    cand = []
    for v in order:
        m = base_candidates[v]
        allowed = 0
        for w in bits_of(m):
            if hdeg[v] <= gdeg[w] and nh - 1 - hdeg[v] <= ng - 1 - gdeg[w]:
                allowed |= 1 << w
        if not allowed:
            return None
        cand.append(allowed)
    hadj = [[h.adjacent(order[p], order[q]) for q in range(nh)] for p in range(nh)]
    assign = [0] * nh

    def rec(pos: int, cand_masks) -> bool:
        if pos == nh:
            return True
        m = cand_masks[pos]
        while m:
            low = m & -m
            m ^= low
            w = low.bit_length() - 1
            if budget is not None:
                budget.spend()
            nxt = []
            ok = True
            for q in range(pos + 1, nh):
                if hadj[pos][q]:
                    nm = cand_masks[q] & g.rows[w]
                else:
                    nm = cand_masks[q] & ~g.rows[w] & gmask
                nm &= ~low
                if not nm:
                    ok = False
                    break
                nxt.append(nm)
            if ok:
                assign[pos] = w
                if rec(pos + 1, cand_masks[: pos + 1] + nxt):
                    return True
        return False

    if not rec(0, cand):
        return None
    out = [0] * nh
    for p, v in enumerate(order):
        out[v] = assign[p]
    return tuple(out)


def induced_embed(
    h: Graph, g: Graph, budget: SearchBudget | None = None
) -> tuple[int, ...] | None:
    """First induced embedding of ``h`` into ``g`` under the fixed search
    order, or None.  The search is complete: None means no embedding exists.
    """
    full = [g.mask] * h.n
    return _embed(h, g, full, budget)


def labelled_embed(
    h: LabelledGraph,
    g: LabelledGraph,
    order: QuasiOrder,
    budget: SearchBudget | None = None,
) -> tuple[int, ...] | None:
    """Induced embedding that is also non-decreasing on labels."""
    for lab in (*h.labels, *g.labels):
        if lab not in order:
            raise ValueError(f"label {lab!r} not in the quasi-order")
    cands = []
    for v in range(h.graph.n):
        m = 0
        for w in range(g.graph.n):
            if order.leq(h.labels[v], g.labels[w]):
                m |= 1 << w
        cands.append(m)
    return _embed(h.graph, g.graph, cands, budget)


class FreeResult(NamedTuple):
    free: bool
    pattern_index: int | None
    witness: tuple[int, ...] | None


def is_free(
    g: Graph, forbidden: Sequence[Graph], budget: SearchBudget | None = None
) -> FreeResult:
    """True iff no forbidden graph induced-embeds; otherwise the witness
    vertex set (sorted image) and the index of the pattern found."""
    for idx, pattern in enumerate(forbidden):
        emb = induced_embed(pattern, g, budget)
        if emb is not None:
            return FreeResult(False, idx, tuple(sorted(emb)))
    return FreeResult(True, None, None)


class AntichainResult(NamedTuple):
    is_antichain: bool
    pair: tuple[int, int] | None
    embedding: tuple[int, ...] | None


def antichain_check(
    graphs: Sequence[Graph], budget: SearchBudget | None = None
) -> AntichainResult:
    """True iff no listed graph induced-embeds into another.

    Only the small-into-large direction is searched; for equal orders one
    direction suffices because an embedding between equal orders is an
    isomorphism.  On failure returns the comparable index pair (i, j) with
    graphs[i] embedding into graphs[j].
    """
    for i, gi in enumerate(graphs):
        for j, gj in enumerate(graphs):
            if i == j or gi.n > gj.n:
                continue
            if gi.n == gj.n and i > j:
                continue
            emb = induced_embed(gi, gj, budget)
            if emb is not None:
                return AntichainResult(False, (i, j), emb)
    return AntichainResult(True, None, None)


def subseq_leq(a: Sequence, b: Sequence, order: QuasiOrder) -> bool:
    """Subsequence order: a strictly increasing index map with pointwise <=.

    Decided greedily left to right; the greedy choice is safe because any
    later valid index for a[i] can be exchanged for the earliest one.
    """
    for lab in (*a, *b):
        if lab not in order:
            raise ValueError(f"label {lab!r} not in the quasi-order")
    j = 0
    for x in a:
        while j < len(b) and not order.leq(x, b[j]):
            j += 1
        if j == len(b):
            return False
        j += 1
    return True


# ---------------------------------------------------------------------------
# Special families


def _is_tree(g: Graph, comp: tuple[int, ...]) -> bool:
    edges = sum(g.degree(v) for v in comp) // 2
    return edges == len(comp) - 1


def is_linear_forest(g: Graph) -> bool:
    """Disjoint union of paths: acyclic with maximum degree at most 2."""
    if any(g.degree(v) > 2 for v in range(g.n)):
        return False
    return all(_is_tree(g, comp) for comp in connected_components(g))


def in_class_S(g: Graph) -> bool:
    """Every component is a path or a subdivided claw (tree with exactly one
    degree-3 vertex, three leaves, every other vertex of degree <= 2)."""
    for comp in connected_components(g):
        if not _is_tree(g, comp):
            return False
        degs = sorted(g.degree(v) for v in comp)
        if degs[-1] <= 2:
            continue  # path component
        if degs[-1] != 3 or degs.count(3) != 1 or degs.count(1) != 3:
            return False
    return True


# ---------------------------------------------------------------------------
# Modules and primality (subset enumeration; intended for small graphs)

MODULES_CAP = 16


def modules_of(g: Graph, cap: int = MODULES_CAP) -> list[tuple[int, ...]]:
    """All non-trivial modules, as sorted vertex tuples in mask order."""
    if g.n > cap:
        raise ValueError(f"modules_of is enumeration-based; n={g.n} exceeds cap {cap}")
    out = []
    for m in range(3, 1 << g.n):
        size = bin(m).count("1")
        if size < 2 or size >= g.n:
            continue
        if all(
            (g.rows[y] & m) in (0, m)
            for y in range(g.n)
            if not (m >> y & 1)
        ):
            out.append(bits_of(m))
    return out


def is_prime(g: Graph, cap: int = MODULES_CAP) -> bool:
    return not modules_of(g, cap)
