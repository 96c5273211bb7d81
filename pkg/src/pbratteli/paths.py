"""Downward paths from an even-floor vertex to floor 1, encoded by digits.

A path starting at ``(2r, k, l)`` is described by digits ``t_0 .. t_{r-1}``.
The low digits ``t_0 .. t_{k-1}`` are the base-p digits of ``l`` and are
fixed. The rest are free. ``t_{k+i}`` picks the branch at the ``i``-th even
floor on the way down (counting the starting floor as 0), and the last digit
``t_{r-1}`` ranges only over ``[0, p-2]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .core import Block, DiagramError, VertexId, base_digits, vertex_to_hook
from .diagram import remove_children


@dataclass(frozen=True)
class DigitDomain:
    fixed: tuple[int, ...]
    # inclusive (lo, hi) for t_k .. t_{r-1}
    free: tuple[tuple[int, int], ...]

    @property
    def first_free(self) -> int:
        return len(self.fixed)

    def size(self) -> int:
        n = 1
        for lo, hi in self.free:
            n *= hi - lo + 1
        return n


def _require_path_origin(v: VertexId) -> None:
    if not v.is_even:
        raise DiagramError(f"paths start on an even floor, got {v}")
    if v.is_top:
        raise DiagramError(f"paths are not enumerated from top-class vertex {v}")


def digit_domain(v: VertexId) -> DigitDomain:
    _require_path_origin(v)
    p, k, r = v.p, v.class_k, v.r
    fixed = base_digits(v.pos, p, k)
    free = tuple((0, p - 1) for _ in range(k, r - 1)) + ((0, p - 2),)
    return DigitDomain(fixed, free)


@dataclass(frozen=True)
class Path:
    origin: VertexId
    digits: tuple[int, ...]
    # blocks[i - 1] is the block with index i, for i = 1 .. 2r-1
    blocks: tuple[Block, ...]
    vertices: tuple[VertexId, ...]

    def block(self, idx: int) -> Block:
        if not 1 <= idx <= len(self.blocks):
            raise DiagramError(f"block index {idx} out of range [1, {len(self.blocks)}]")
        return self.blocks[idx - 1]

    @property
    def terminal(self) -> VertexId:
        return self.vertices[-1]

    @property
    def k(self) -> int:
        return self.origin.class_k

    @property
    def r(self) -> int:
        return self.origin.r


def path_from_digits(v: VertexId, digits: Sequence[int]) -> Path:
    """Walk down from ``v`` choosing the branch named by each free digit.

    ``digits`` may be the full vector ``t_0 .. t_{r-1}`` or only the free part.
    """
    dom = digit_domain(v)
    digits = tuple(digits)
    if len(digits) == len(dom.fixed) + len(dom.free):
        if digits[: dom.first_free] != dom.fixed:
            raise DiagramError(f"low digits {digits[:dom.first_free]} do not match position {v.pos}")
        free = digits[dom.first_free :]
    elif len(digits) == len(dom.free):
        free = digits
    else:
        raise DiagramError(f"expected {len(dom.free)} free digits, got {len(digits)}")
    for d, (lo, hi) in zip(free, dom.free):
        if not lo <= d <= hi:
            raise DiagramError(f"digit {d} out of range [{lo}, {hi}]")

    blocks: list[Block] = []
    verts = [v]
    cur = v
    it = iter(free)
    while cur.floor > 1:
        edges = remove_children(cur)
        edge = edges[next(it)] if len(edges) > 1 else edges[0]
        blocks.append(edge.block)
        cur = edge.lower
        verts.append(cur)
    blocks.reverse()
    return Path(v, dom.fixed + free, tuple(blocks), tuple(verts))


def enumerate_paths(v: VertexId, end_leg: Optional[int] = None) -> Iterator[Path]:
    """Every path from ``v`` in lexicographic order of the free digits."""
    dom = digit_domain(v)
    ranges = [range(lo, hi + 1) for lo, hi in dom.free]
    if end_leg is not None:
        lo, hi = dom.free[-1]
        if not lo <= end_leg <= hi:
            raise DiagramError(f"end leg {end_leg} out of range [{lo}, {hi}]")
        ranges[-1] = range(end_leg, end_leg + 1)
    for free in itertools.product(*ranges):
        yield path_from_digits(v, free)


def enumerate_with_prefix(v: VertexId, prefix: Sequence[int]) -> Iterator[Path]:
    """Paths whose first free digits equal ``prefix``; used to split work."""
    dom = digit_domain(v)
    prefix = tuple(prefix)
    rest = [range(lo, hi + 1) for lo, hi in dom.free[len(prefix) :]]
    for tail in itertools.product(*rest):
        yield path_from_digits(v, prefix + tail)


def path_count(v: VertexId, end_leg: Optional[int] = None) -> int:
    _require_path_origin(v)
    s = v.s
    if end_leg is not None:
        return v.p ** (s - 1)
    return v.p ** (s - 1) * (v.p - 1)


def replay_blocks(path: Path) -> bool:
    """Check that stripping the blocks from the origin hook lands on the terminal hook."""
    start = vertex_to_hook(path.origin)
    size, leg = start.size, start.leg
    for b in reversed(path.blocks):
        size -= b.size
        leg -= b.vert
    end = vertex_to_hook(path.terminal)
    p = path.origin.p
    return (size, leg) == (end.size, end.leg) == (p - 1, path.digits[-1])
