"""k-uniform graph templates, membership witnesses, bounded uniformicity
search, and template doubling under complementation.

A template is a pair (F, K): a graph F on k classes and a symmetric 0/1
matrix K of order k.  Expanding the template with m copies yields the graph
on slots (copy, class) where (c, i) and (d, j) are adjacent iff

    [c == d and ij is an edge of F]  XOR  [K(i, j) == 1].

A witness assigns every vertex of a graph an injective slot so that the
adjacency law holds pairwise; a graph admitting a witness over some order-k
template is k-uniform, and uniformicity is the least such k.

``complement_template`` doubles a template so that flipping the adjacency
inside any vertex set of a witnessed graph stays witnessable: each class i
gains a primed twin i+k with the same F-neighbourhoods (a false twin, not
adjacent to i), while K extends by K'[i,j] = K'[i,j'] = K'[i',j] = K[i,j]
and K'[i',j'] = 1 - K[i,j].  Moving exactly the flipped vertices to their
primed classes (same copies) is then again a valid witness: pairs with at
most one flipped vertex read the unchanged K and F entries, flipped pairs in
different copies read the flipped K entry, and flipped pairs sharing a copy
read the doubled F edge together with the flipped K entry, which combine to
the required flip.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .graphs import Graph, induced
from .order import SearchBudget


class SearchRefused(RuntimeError):
    """The requested search exceeds the configured bounds; no verdict."""


@dataclass(frozen=True)
class UniformTemplate:
    """Order-k template: class graph ``f`` plus symmetric 0/1 matrix ``matrix``."""

    k: int
    f: Graph
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.f.n != self.k:
            raise ValueError("class graph must have exactly k vertices")
        if len(self.matrix) != self.k or any(len(r) != self.k for r in self.matrix):
            raise ValueError("matrix must be k x k")
        for i in range(self.k):
            for j in range(self.k):
                if self.matrix[i][j] not in (0, 1):
                    raise ValueError("matrix entries must be 0 or 1")
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ValueError("matrix must be symmetric")

    def law(self, ci: tuple[int, int], dj: tuple[int, int]) -> bool:
        """Adjacency of two distinct slots."""
        (c, i), (d, j) = ci, dj
        same_copy_edge = c == d and self.f.adjacent(i, j) if i != j else False
        return same_copy_edge != bool(self.matrix[i][j])

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "F_edges": [[u, v] for u, v in self.f.edges()],
            "K": [list(row) for row in self.matrix],
        }

    @staticmethod
    def from_json(obj: dict) -> "UniformTemplate":
        k = int(obj["k"])
        f = Graph.from_edges(k, [tuple(e) for e in obj["F_edges"]])
        matrix = tuple(tuple(int(x) for x in row) for row in obj["K"])
        return UniformTemplate(k, f, matrix)


@dataclass(frozen=True)
class UniformWitness:
    """Slot assignment certifying template membership of a graph."""

    template: UniformTemplate
    assign: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        out = self.template.to_json()
        out["assign"] = [list(slot) for slot in self.assign]
        return out


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    violation: tuple[int, int] | None = None


def expand_template(template: UniformTemplate, copies: int) -> Graph:
    """The graph on ``copies * k`` vertices; vertex c*k + i is slot (c, i)."""
    if copies < 1:
        raise ValueError("at least one copy required")
    k = template.k
    n = copies * k
    slots = [(v // k, v % k) for v in range(n)]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if template.law(slots[u], slots[v])
    ]
    return Graph.from_edges(n, edges)


def verify_witness(g: Graph, witness: UniformWitness) -> WitnessCheck:
    """Check the adjacency law on every vertex pair.

    Malformed assignments (wrong length, slot out of range, slot reuse)
    raise; a law violation is reported as the first offending pair.
    """
    t = witness.template
    if len(witness.assign) != g.n:
        raise ValueError("assignment must cover every vertex")
    seen = set()
    for v, (c, i) in enumerate(witness.assign):
        if c < 0 or not 0 <= i < t.k:
            raise ValueError(f"vertex {v} assigned invalid slot ({c},{i})")
        if (c, i) in seen:
            raise ValueError(f"slot ({c},{i}) assigned twice")
        seen.add((c, i))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adjacent(u, v) != t.law(witness.assign[u], witness.assign[v]):
                return WitnessCheck(False, (u, v))
    return WitnessCheck(True)


def restrict_witness(witness: UniformWitness, vertices: Iterable[int]) -> UniformWitness:
    """Witness for the induced subgraph on ``vertices`` (hereditarity)."""
    vs = sorted(set(vertices))
    return UniformWitness(witness.template, tuple(witness.assign[v] for v in vs))


# ---------------------------------------------------------------------------
# Bounded uniformicity search

MAX_SEARCH_K = 3
MAX_SEARCH_N = 10


_template_cache: dict[int, list[UniformTemplate]] = {}


def _canonical_templates(k: int) -> list[UniformTemplate]:
    """All (K, F) pairs up to simultaneous class permutation, in search order
    (K packed bits ascending, then F edge sets ascending)."""
    if k in _template_cache:
        return _template_cache[k]
    kpairs = [(i, j) for i in range(k) for j in range(i, k)]
    fpairs = list(combinations(range(k), 2))
    perms = list(permutations(range(k)))
    seen = set()
    out = []
    for kbits in range(1 << len(kpairs)):
        matrix = [[0] * k for _ in range(k)]
        for idx, (i, j) in enumerate(kpairs):
            if kbits >> idx & 1:
                matrix[i][j] = matrix[j][i] = 1
        for fbits in range(1 << len(fpairs)):
            edges = [fpairs[idx] for idx in range(len(fpairs)) if fbits >> idx & 1]
            key = min(_template_key(k, matrix, edges, p) for p in perms)
            if key in seen:
                continue
            seen.add(key)
            out.append(
                UniformTemplate(
                    k,
                    Graph.from_edges(k, edges),
                    tuple(tuple(row) for row in matrix),
                )
            )
    _template_cache[k] = out
    return out


def _template_key(k, matrix, edges, perm):
    kvals = tuple(matrix[perm[i]][perm[j]] for i in range(k) for j in range(i, k))
    eset = frozenset(
        (min(perm.index(u), perm.index(v)), max(perm.index(u), perm.index(v)))
        for u, v in edges
    )
    fvals = tuple(
        1 if (i, j) in eset else 0 for i in range(k) for j in range(i + 1, k)
    )
    return kvals, fvals


def _find_assignment(
    g: Graph, template: UniformTemplate, budget: SearchBudget | None
) -> tuple[tuple[int, int], ...] | None:
    """Backtracking slot assignment; copies are opened in first-use order so
    the first solution is canonical."""
    k = template.k
    assign: list[tuple[int, int]] = []
    used: set[tuple[int, int]] = set()

    def consistent(v: int, slot: tuple[int, int]) -> bool:
        return all(
            g.adjacent(u, v) == template.law(assign[u], slot) for u in range(v)
        )

    def rec(v: int, copies_used: int) -> bool:
        if v == g.n:
            return True
        for c in range(min(copies_used + 1, g.n)):
            for i in range(k):
                slot = (c, i)
                if slot in used:
                    continue
                if budget is not None:
                    budget.spend()
                if consistent(v, slot):
                    assign.append(slot)
                    used.add(slot)
                    if rec(v + 1, max(copies_used, c + 1)):
                        return True
                    assign.pop()
                    used.remove(slot)
        return False

    if rec(0, 0):
        return tuple(assign)
    return None


def is_k_uniform(
    g: Graph,
    k: int,
    *,
    max_k: int = MAX_SEARCH_K,
    max_n: int = MAX_SEARCH_N,
    budget: SearchBudget | None = None,
) -> UniformWitness | None:
    """Search for an order-k witness.  Complete within the configured bounds;
    out-of-bounds requests raise :class:`SearchRefused` so "too big to try"
    is never confused with "not k-uniform".
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k > max_k or g.n > max_n:
        raise SearchRefused(
            f"uniformicity search bounded to k <= {max_k}, n <= {max_n}"
        )
    for template in _canonical_templates(k):
        assign = _find_assignment(g, template, budget)
        if assign is not None:
            return UniformWitness(template, assign)
    return None


def uniformicity(
    g: Graph,
    kmax: int,
    *,
    max_k: int = MAX_SEARCH_K,
    max_n: int = MAX_SEARCH_N,
    budget: SearchBudget | None = None,
) -> tuple[int, UniformWitness] | None:
    """Smallest k <= kmax admitting a witness, with the witness; else None."""
    for k in range(1, kmax + 1):
        witness = is_k_uniform(g, k, max_k=max_k, max_n=max_n, budget=budget)
        if witness is not None:
            return k, witness
    return None


# ---------------------------------------------------------------------------
# Template doubling under complementation


def complement_template(template: UniformTemplate) -> UniformTemplate:
    """Order-2k template accommodating one subgraph complementation."""
    k = template.k
    edges = []
    for u, v in template.f.edges():
        edges.append((u, v))
        edges.append((u, v + k))
        edges.append((v, u + k))
        edges.append((u + k, v + k))
    matrix = [[0] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        for j in range(k):
            base = template.matrix[i][j]
            matrix[i][j] = base
            matrix[i][j + k] = base
            matrix[i + k][j] = base
            matrix[i + k][j + k] = 1 - base
    return UniformTemplate(
        2 * k, Graph.from_edges(2 * k, edges), tuple(tuple(r) for r in matrix)
    )


def transport_complement(
    witness: UniformWitness, flipped: Iterable[int]
) -> UniformWitness:
    """Witness for the graph with adjacency flipped inside ``flipped``, over
    the doubled template: flipped vertices move to their primed classes."""
    k = witness.template.k
    flip = set(flipped)
    assign = tuple(
        (c, i + k) if v in flip else (c, i)
        for v, (c, i) in enumerate(witness.assign)
    )
    return UniformWitness(complement_template(witness.template), assign)


def bipartite_complement_template(template: UniformTemplate) -> UniformTemplate:
    """Order-8k template accommodating one bipartite complementation, which
    decomposes into three subgraph complementations (each side, then the
    union)."""
    return complement_template(complement_template(complement_template(template)))


def transport_bipartite(
    witness: UniformWitness, x: Iterable[int], y: Iterable[int]
) -> UniformWitness:
    """Witness for the graph with the edges between ``x`` and ``y`` flipped."""
    xs = set(x)
    ys = set(y)
    if xs & ys:
        raise ValueError("bipartite complementation requires disjoint sets")
    w = transport_complement(witness, xs)
    w = transport_complement(w, ys)
    return transport_complement(w, xs | ys)


def witness_for_expansion(template: UniformTemplate, copies: int) -> UniformWitness:
    """The identity witness for ``expand_template(template, copies)``."""
    k = template.k
    assign = tuple((v // k, v % k) for v in range(copies * k))
    return UniformWitness(template, assign)


def hereditary_check(
    g: Graph, witness: UniformWitness, vertices: Sequence[int]
) -> WitnessCheck:
    """Restriction of a valid witness verifies on the induced subgraph."""
    return verify_witness(induced(g, vertices), restrict_witness(witness, vertices))
