"""Vertex sets and edge families of the p-Bratteli diagram of hook partitions.

Edges are produced by closed formulas. The block carried by an edge between
floors ``f`` and ``f-1`` always has ``idx = f - 1``, so along a downward path
from floor ``2r`` the blocks are indexed ``2r-1, ..., 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Block,
    DiagramError,
    OddPrime,
    VertexId,
    class_size,
    top_class,
    vertex_to_hook,
)


@dataclass(frozen=True)
class Edge:
    upper: VertexId
    lower: VertexId
    block: Block

    def __post_init__(self) -> None:
        if self.upper.floor != self.lower.floor + 1:
            raise DiagramError("edge must join consecutive floors")


@dataclass(frozen=True)
class FloorSlice:
    p: int
    floor: int
    vertices: tuple[VertexId, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def by_class(self, class_k: int) -> tuple[VertexId, ...]:
        return tuple(v for v in self.vertices if v.class_k == class_k)


def floor_cardinality(p: int, floor: int) -> int:
    """Closed-form vertex count of ``floor``."""
    r = (floor + 1) // 2
    top = p ** (r - 1) * (p - 1)
    if floor % 2 == 0:
        return top + sum(p**k for k in range(r))
    return top + sum(p ** (k + 1) for k in range(r - 1))


def floor_vertices(p: int, floor: int) -> FloorSlice:
    """All vertices of ``floor``: top class first, positions ascending."""
    p = OddPrime(p)
    if floor < 1:
        raise DiagramError(f"floor must be >= 1, got {floor}")
    verts = []
    for class_k in range(top_class(floor), -1, -1):
        for pos in range(class_size(p, floor, class_k)):
            verts.append(VertexId(p, floor, class_k, pos))
    return FloorSlice(p, floor, tuple(verts))


def _edge(upper: VertexId, lower: VertexId, horiz: int, vert: int) -> Edge:
    return Edge(upper, lower, Block(upper.floor - 1, horiz, vert))


def add_children(v: VertexId) -> list[Edge]:
    """Upward edges out of ``v``, i.e. the ways of adding one block to it."""
    p, f, k, pos = v.p, v.floor, v.class_k, v.pos
    up = f + 1
    edges = []
    if v.is_even:
        m = f // 2
        if k == m:
            # top class to the next odd top class: p children at p*i + t
            for t in range(p):
                b = pos * (p - 1) + t
                a = p ** (m - 1) * (p - 1) ** 2 - b
                edges.append(_edge(VertexId(p, up, m, p * pos + t), v, a, b))
        else:
            for t in range(p):
                b = (p - 1) * pos + t
                a = p**k * (p - 1) - b
                edges.append(_edge(VertexId(p, up, k, p * pos + t), v, a, b))
        return edges
    r = (f + 1) // 2
    if k == r - 1:
        edges.append(_edge(VertexId(p, up, r, pos), v, 0, 0))
        unit = p ** (r - 1)
        t, low = divmod(pos, unit)
        edges.append(_edge(VertexId(p, up, r - 1, low), v, unit * t, unit * (p - 2 - t)))
    else:
        t, low = divmod(pos, p**k)
        edges.append(_edge(VertexId(p, up, k, low), v, p**k * t, p**k * (p - 1 - t)))
    return edges


def remove_children(v: VertexId) -> list[Edge]:
    """Downward edges out of ``v``, ordered by the branch digit ``t``.

    Only even vertices below the top class branch: ``p`` ways when ``s >= 2``
    and ``p - 1`` ways when ``s == 1``. Every other vertex has exactly one
    downward edge.
    """
    p, f, k, pos = v.p, v.floor, v.class_k, v.pos
    if f == 1:
        raise DiagramError("floor 1 has no removal edges")
    down = f - 1
    if v.is_even:
        r = f // 2
        if k == r:
            return [Edge(v, VertexId(p, down, r - 1, pos), Block(down, 0, 0))]
        unit = p**k
        if k == r - 1:
            return [
                Edge(v, VertexId(p, down, k, pos + unit * t), Block(down, unit * t, unit * (p - 2 - t)))
                for t in range(p - 1)
            ]
        return [
            Edge(v, VertexId(p, down, k, pos + unit * t), Block(down, unit * t, unit * (p - 1 - t)))
            for t in range(p)
        ]
    r = (f + 1) // 2
    parent, beta = divmod(pos, p)
    vert = (p - 1) * parent + beta
    if k == r - 1:
        horiz = p ** (r - 2) * (p - 1) ** 2 - vert
    else:
        horiz = p**k * (p - 1) - vert
    return [Edge(v, VertexId(p, down, k, parent), Block(down, horiz, vert))]


def projection(p: int, k: int, odd_pos: int) -> int:
    """Position reached from odd position ``odd_pos`` of class ``k`` one floor down.

    Writing ``odd_pos = l + p^k t`` and ``l = alpha p + beta`` this is
    ``alpha + p^(k-1) t``, which is just ``odd_pos // p``.
    """
    p = OddPrime(p)
    if k < 1:
        raise DiagramError(f"projection needs k >= 1, got {k}")
    if not 0 <= odd_pos < p ** (k + 1):
        raise DiagramError(f"odd position {odd_pos} out of range [0, {p ** (k + 1)})")
    t, l = divmod(odd_pos, p**k)
    return l // p + p ** (k - 1) * t


def components(v: VertexId) -> list[VertexId]:
    """The ``p`` vertices two floors below ``v`` that feed its recurrence."""
    if not v.is_even or v.class_k < 1 or v.s < 2:
        raise DiagramError(f"components are defined for even floors with k >= 1 and s >= 2, got {v}")
    p, k = v.p, v.class_k
    alpha = v.pos // p
    return [VertexId(p, v.floor - 2, k, alpha + p ** (k - 1) * t) for t in range(p)]


def block_size_for(upper: VertexId, lower: VertexId) -> int:
    return vertex_to_hook(upper).size - vertex_to_hook(lower).size


def floor_edges(p: int, floor: int) -> list[Edge]:
    """Every edge between ``floor`` and ``floor - 1``, in upper-vertex order."""
    if floor < 2:
        return []
    return [e for v in floor_vertices(p, floor) for e in remove_children(v)]
