"""Descents, inversions and signs of downward paths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import DiagramError, VertexId, j_kt
from .paths import Path, enumerate_paths, path_count


def block_gt(b1, b2) -> bool:
    """Strict order on equal-size blocks: more horizontal and fewer vertical nodes."""
    if b1.size != b2.size:
        raise DiagramError(f"blocks of different sizes are not comparable: {b1.size} vs {b2.size}")
    return b1.horiz > b2.horiz and b1.vert < b2.vert


def _marker_holds(path: Path) -> bool:
    # the extra descent/inversion at index 2k, decided by the digit behind block 2k+1
    p, k = path.origin.p, path.k
    t = path.block(2 * k + 1).horiz // p**k
    return t < (p - 1) // 2


@dataclass(frozen=True)
class DescentSet:
    indices: frozenset[int]

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices


@dataclass(frozen=True)
class InversionSet:
    pairs: frozenset[tuple[int, int]]
    marker: bool

    def __len__(self) -> int:
        return len(self.pairs) + int(self.marker)


def descent_set(path: Path) -> DescentSet:
    k, r = path.k, path.r
    out = set()
    if _marker_holds(path):
        out.add(2 * k)
    for i in range(2 * k + 2, 2 * r - 1):
        if block_gt(path.block(i), path.block(i + 1)):
            out.add(i)
    return DescentSet(frozenset(out))


def inversion_set(path: Path) -> InversionSet:
    k, r = path.k, path.r
    lo, hi = 2 * k + 2, 2 * r - 1
    pairs = frozenset(
        (i, j)
        for i in range(lo, hi + 1)
        for j in range(i + 1, hi + 1)
        if block_gt(path.block(i), path.block(j))
    )
    return InversionSet(pairs, _marker_holds(path))


def sign(path: Path) -> int:
    return -1 if len(inversion_set(path)) % 2 else 1


def sign_balance(v: VertexId) -> int:
    """Sum of signs over all paths from ``v``.

    Top-class vertices have a single trivial path and balance ``+1``.
    """
    if v.is_even and v.is_top:
        return 1
    return sum(sign(P) for P in enumerate_paths(v))


def descent_t(p: int, k: int, l: int) -> int:
    """The ``t`` with ``j_{t-1} < l <= j_t``; zero for ``l == 0`` or ``k == 0``."""
    if k == 0 or l == 0:
        return 0
    for t in range(1, p):
        if j_kt(p, k, t - 1) < l <= j_kt(p, k, t):
            return t
    # l past j_{p-1} cannot happen since j_{p-1} = p^k - 1
    raise DiagramError(f"no t for l={l}")


def predicts_top_descent(v: VertexId, t1: int) -> bool:
    """Whether a path whose first free digit is ``t1`` descends at block 2r-2 (needs s >= 2)."""
    p, k, l = v.p, v.class_k, v.pos
    if v.s < 2:
        raise DiagramError("prediction at block 2r-2 needs s >= 2")
    if k >= 1 and 2 * l < p**k - 1:
        return t1 <= (p - 1) // 2
    return t1 <= (p - 3) // 2


def predicts_second_descent(v: VertexId, t1: int, t2: int) -> bool:
    """Whether digits ``(t1, t2)`` give a descent at block 2r-3 (needs s >= 3)."""
    p, k, l = v.p, v.class_k, v.pos
    if v.s < 3:
        raise DiagramError("prediction at block 2r-3 needs s >= 3")
    t = descent_t(p, k, l)
    if t1 <= t - 1:
        return t2 >= p - 1 - t1
    return t1 >= 1 and t2 >= p - t1


@dataclass(frozen=True)
class DescentTotal:
    block: int
    brute: int
    closed: int

    @property
    def agrees(self) -> bool:
        return self.brute == self.closed


def closed_descent_total(v: VertexId, which: int) -> int:
    """Predicted number of paths from ``v`` with a descent at block ``which``.

    ``which`` is either ``2r-2`` or ``2r-3``.
    """
    p, k, l, s, r = v.p, v.class_k, v.pos, v.s, v.r
    if which == 2 * r - 2:
        if s == 1:
            return (p - 1) // 2
        if k >= 1 and 2 * l < p**k - 1:
            return p ** (s - 2) * (p - 1) * (p + 1) // 2
        return p ** (s - 2) * (p - 1) * (p - 1) // 2
    if which == 2 * r - 3:
        if s <= 2:
            return 0
        return p ** (s - 3) * (p - 1) * (p * (p - 1) // 2 + descent_t(p, k, l))
    raise DiagramError(f"block must be 2r-2={2 * r - 2} or 2r-3={2 * r - 3}, got {which}")


def descent_totals_at(v: VertexId, which: int, paths: Optional[Iterable[Path]] = None) -> DescentTotal:
    if v.is_top or not v.is_even:
        raise DiagramError(f"descent totals need an even non-top vertex, got {v}")
    r = v.r
    if which not in (2 * r - 2, 2 * r - 3) or which < 0:
        raise DiagramError(f"block must be 2r-2={2 * r - 2} or 2r-3={2 * r - 3}, got {which}")
    closed = closed_descent_total(v, which)
    if paths is None:
        paths = enumerate_paths(v)
    brute = sum(1 for P in paths if which in descent_set(P))
    return DescentTotal(which, brute, closed)


def des_histogram(v: VertexId) -> dict[int, int]:
    hist: dict[int, int] = {}
    for P in enumerate_paths(v):
        d = len(descent_set(P))
        hist[d] = hist.get(d, 0) + 1
    assert sum(hist.values()) == path_count(v)
    return hist
