"""Subgraph complementation, bipartite complementation, vertex deletion,
operation scripts, and the label-splitting construction for tracking a
complemented set through labelled embeddings.

Script steps bind to the graph state at the moment they are applied: a
``del`` step renumbers the remaining vertices, and later steps refer to the
renumbered graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .graphs import Graph, bits_of, mask_of
from .order import LabelledGraph, QuasiOrder


class OpScriptError(ValueError):
    """A script step failed; ``step_index`` locates it."""

    def __init__(self, step_index: int, message: str):
        super().__init__(f"step {step_index}: {message}")
        self.step_index = step_index


def subgraph_complement(g: Graph, vertices: Iterable[int]) -> Graph:
    """Flip adjacency on every pair inside ``vertices``; an involution."""
    m = mask_of(vertices)
    if m & ~g.mask:
        raise ValueError("vertex out of range")
    rows = list(g.rows)
    for v in bits_of(m):
        rows[v] ^= m & ~(1 << v)
    return Graph(g.n, tuple(rows))


def bipartite_complement(g: Graph, x: Iterable[int], y: Iterable[int]) -> Graph:
    """Flip adjacency on every pair with one end in ``x`` and one in ``y``."""
    mx = mask_of(x)
    my = mask_of(y)
    if mx & my:
        raise ValueError("bipartite complementation requires disjoint sets")
    if (mx | my) & ~g.mask:
        raise ValueError("vertex out of range")
    rows = list(g.rows)
    for v in bits_of(mx):
        rows[v] ^= my
    for v in bits_of(my):
        rows[v] ^= mx
    return Graph(g.n, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove one vertex; the rest keep their relative order, renumbered."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    keep = [w for w in range(g.n) if w != v]
    pos = {w: i for i, w in enumerate(keep)}
    rows = [0] * (g.n - 1)
    for w in keep:
        for u in bits_of(g.rows[w]):
            if u != v:
                rows[pos[w]] |= 1 << pos[u]
    return Graph(g.n - 1, tuple(rows))


@dataclass(frozen=True)
class SubgraphComplement:
    vertices: tuple[int, ...]

    def apply(self, g: Graph) -> Graph:
        return subgraph_complement(g, self.vertices)

    def to_json(self) -> dict:
        return {"op": "sc", "s": list(self.vertices)}


@dataclass(frozen=True)
class BipartiteComplement:
    x: tuple[int, ...]
    y: tuple[int, ...]

    def apply(self, g: Graph) -> Graph:
        return bipartite_complement(g, self.x, self.y)

    def to_json(self) -> dict:
        return {"op": "bc", "x": list(self.x), "y": list(self.y)}


@dataclass(frozen=True)
class DeleteVertex:
    v: int

    def apply(self, g: Graph) -> Graph:
        return delete_vertex(g, self.v)

    def to_json(self) -> dict:
        return {"op": "del", "v": self.v}


OpStep = Union[SubgraphComplement, BipartiteComplement, DeleteVertex]


@dataclass(frozen=True)
class OpScript:
    """An ordered list of operations, applied sequentially."""

    steps: tuple[OpStep, ...] = ()

    def to_json(self) -> list:
        return [step.to_json() for step in self.steps]

    @staticmethod
    def from_json(obj: list) -> "OpScript":
        steps: list[OpStep] = []
        for i, raw in enumerate(obj):
            try:
                op = raw["op"]
                if op == "sc":
                    steps.append(SubgraphComplement(tuple(raw["s"])))
                elif op == "bc":
                    steps.append(BipartiteComplement(tuple(raw["x"]), tuple(raw["y"])))
                elif op == "del":
                    steps.append(DeleteVertex(int(raw["v"])))
                else:
                    raise OpScriptError(i, f"unknown op {op!r}")
            except (KeyError, TypeError) as exc:
                raise OpScriptError(i, f"malformed step: {exc}") from exc
        return OpScript(tuple(steps))

    def inverse(self) -> "OpScript":
        """Reversed script undoing each step.  Deletion loses information and
        has no inverse."""
        inv: list[OpStep] = []
        for step in reversed(self.steps):
            if isinstance(step, DeleteVertex):
                raise ValueError("vertex deletion is not invertible")
            inv.append(step)
        return OpScript(tuple(inv))


def apply_script(g: Graph, script: OpScript) -> Graph:
    for i, step in enumerate(script.steps):
        try:
            g = step.apply(g)
        except ValueError as exc:
            raise OpScriptError(i, str(exc)) from exc
    return g


def split_labels(
    lg: LabelledGraph, z: Iterable[int], order: QuasiOrder
) -> tuple[LabelledGraph, QuasiOrder]:
    """Rewrite labels over two incomparable copies of ``order``: vertices in
    ``z`` move to copy 1, the rest to copy 0.  An embedding between two
    graphs labelled this way is forced to map marked vertices to marked
    vertices and unmarked to unmarked.
    """
    zmask = mask_of(z)
    if zmask & ~lg.graph.mask:
        raise ValueError("vertex out of range")
    doubled = order.doubled()
    labels = tuple(
        (1 if zmask >> v & 1 else 0, lab) for v, lab in enumerate(lg.labels)
    )
    return LabelledGraph(lg.graph, labels), doubled
