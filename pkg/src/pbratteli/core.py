"""Indexing primitives and domain types for the hook-partition Bratteli diagram.

A vertex is addressed by canonical coordinates ``(p, floor, class_k, pos)``.
On an even floor ``2r`` the classes are ``0..r`` (``r`` is the top class);
on an odd floor ``2r-1`` they are ``0..r-1`` (``r-1`` is the top class).
All counts are Python ints, so nothing overflows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache


class DiagramError(ValueError):
    """Raised for coordinates or partitions that are not part of the diagram."""


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class OddPrime(int):
    """An ``int`` that is guaranteed to be an odd prime."""

    def __new__(cls, p: int) -> "OddPrime":
        if isinstance(p, OddPrime):
            return p
        if isinstance(p, bool) or not isinstance(p, int):
            raise DiagramError(f"p must be an odd prime, got {p!r}")
        if p < 3 or not _is_prime(p):
            raise DiagramError(f"p must be an odd prime, got {p}")
        return super().__new__(cls, p)


def geom_sum(p: int, k: int) -> int:
    """Return ``1 + p + ... + p^(k-1)``; zero when ``k == 0``."""
    if k < 0:
        raise DiagramError(f"k must be non-negative, got {k}")
    return (p**k - 1) // (p - 1)


def geom_range(p: int, lo: int, hi: int) -> int:
    """Return ``p^lo + ... + p^hi``, or 0 for an empty range (``hi < lo``)."""
    if hi < lo:
        return 0
    return geom_sum(p, hi + 1) - geom_sum(p, lo)


def j_kt(p: int, k: int, t: int) -> int:
    """Return ``t * (1 + p + ... + p^(k-1))`` for ``0 <= t <= p-1``, ``k >= 1``."""
    if k < 1:
        raise DiagramError(f"k must be >= 1, got {k}")
    if not 0 <= t <= p - 1:
        raise DiagramError(f"t must lie in [0, {p - 1}], got {t}")
    return t * geom_sum(p, k)


def x_ak(p: int, a: int, k: int) -> int:
    """Return ``p^k * (a*p - (a+1))``."""
    if a < 1 or k < 0:
        raise DiagramError(f"x_(a,k) needs a >= 1 and k >= 0, got a={a}, k={k}")
    return p**k * (a * p - (a + 1))


def base_digits(n: int, p: int, width: int) -> tuple[int, ...]:
    """Base-``p`` digits of ``n``, least significant first, padded to ``width``."""
    digits = []
    for _ in range(width):
        n, d = divmod(n, p)
        digits.append(d)
    if n:
        raise DiagramError(f"value does not fit in {width} base-{p} digits")
    return tuple(digits)


def top_class(floor: int) -> int:
    """Index of the top class on ``floor``."""
    return floor // 2 if floor % 2 == 0 else (floor - 1) // 2


def class_size(p: int, floor: int, class_k: int) -> int:
    """Number of positions in class ``class_k`` of ``floor``."""
    top = top_class(floor)
    if not 0 <= class_k <= top:
        raise DiagramError(f"floor {floor} has no class {class_k}")
    if class_k == top:
        r = (floor + 1) // 2
        return p ** (r - 1) * (p - 1)
    if floor % 2 == 0:
        return p**class_k
    return p ** (class_k + 1)


_ID_RE = re.compile(r"^p:(\d+)/f:(\d+)/k:(\d+)/l:(\d+)$")


@dataclass(frozen=True, order=True)
class VertexId:
    p: int
    floor: int
    class_k: int
    pos: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", OddPrime(self.p))
        if self.floor < 1:
            raise DiagramError(f"floor must be >= 1, got {self.floor}")
        n = class_size(self.p, self.floor, self.class_k)
        if not 0 <= self.pos < n:
            raise DiagramError(
                f"position {self.pos} out of range [0, {n}) for "
                f"class {self.class_k} on floor {self.floor}"
            )

    @property
    def r(self) -> int:
        return (self.floor + 1) // 2

    @property
    def is_even(self) -> bool:
        return self.floor % 2 == 0

    @property
    def is_top(self) -> bool:
        return self.class_k == top_class(self.floor)

    @property
    def s(self) -> int:
        """``r - k``; the distance of the class from the bottom of the diagram."""
        return self.r - self.class_k

    def __str__(self) -> str:
        return f"p:{self.p}/f:{self.floor}/k:{self.class_k}/l:{self.pos}"

    @classmethod
    def parse(cls, text: str) -> "VertexId":
        m = _ID_RE.match(text.strip())
        if not m:
            raise DiagramError(f"malformed vertex id {text!r}")
        return cls(*(int(g) for g in m.groups()))


@dataclass(frozen=True)
class HookPartition:
    """The hook ``(size - leg, 1^leg)`` sitting on ``floor``."""

    floor: int
    size: int
    leg: int

    def __post_init__(self) -> None:
        if not 0 <= self.leg < self.size:
            raise DiagramError(f"hook needs 0 <= leg < size, got ({self.size}, {self.leg})")

    @property
    def arm(self) -> int:
        return self.size - self.leg

    def parts(self) -> tuple[int, ...]:
        return (self.arm,) + (1,) * self.leg


@dataclass(frozen=True)
class Block:
    idx: int
    horiz: int
    vert: int

    def __post_init__(self) -> None:
        if self.idx < 0 or self.horiz < 0 or self.vert < 0:
            raise DiagramError(f"invalid block {self!r}")

    @property
    def size(self) -> int:
        return self.horiz + self.vert

    @property
    def is_empty(self) -> bool:
        return self.horiz == 0 and self.vert == 0


def _class_shape(p: int, floor: int, class_k: int) -> tuple[int, int]:
    """``(size, leg offset)`` shared by every vertex of one class."""
    r = (floor + 1) // 2
    if class_k == top_class(floor):
        return p ** (r - 1) * (p - 1), 0
    s = r - class_k
    if floor % 2 == 0:
        return x_ak(p, 2 * s, class_k), x_ak(p, s, class_k)
    return x_ak(p, 2 * s - 1, class_k), x_ak(p, s - 1, class_k)


def vertex_to_hook(v: VertexId) -> HookPartition:
    size, offset = _class_shape(v.p, v.floor, v.class_k)
    return HookPartition(v.floor, size, offset + v.pos)


def hook_to_vertex(p: int, h: HookPartition) -> VertexId:
    p = OddPrime(p)
    for class_k in range(top_class(h.floor) + 1):
        size, offset = _class_shape(p, h.floor, class_k)
        if size != h.size:
            continue
        pos = h.leg - offset
        if 0 <= pos < class_size(p, h.floor, class_k):
            return VertexId(p, h.floor, class_k, pos)
    raise DiagramError(f"not a diagram vertex: {h}")
