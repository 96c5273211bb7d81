"""Case labels for the closed formulas of M and the formulas themselves.

For ``k >= 2`` and ``s >= 3`` the residue range ``[0, p^k)`` is cut into
explicit intervals. Each interval carries a label, and the classifier
insists that exactly one interval contains ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import DiagramError, OddPrime, geom_range


THEOREMS = ("P0", "P1", "Base", "Less", "Greater")


@dataclass(frozen=True)
class CaseLabel:
    theorem: str
    case: str
    t: Optional[int] = None
    i: Optional[int] = None
    i_prime: Optional[int] = None

    def __str__(self) -> str:
        extra = [f"{name}={val}" for name, val in (("t", self.t), ("i", self.i), ("i'", self.i_prime)) if val is not None]
        tail = f"({', '.join(extra)})" if extra else ""
        return f"{self.theorem}:{self.case}{tail}"


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int
    label: CaseLabel

    def __contains__(self, l: int) -> bool:
        return self.lo <= l <= self.hi


def _ladder(p: int, k: int, t: int, depth: int, theorem: str, case: str, tag_t: bool) -> list[Interval]:
    # the sub-intervals [ (t-1)G(i,k-1) + p^i , (t-1)G(i+1,k-1) + p^(i+1) - 1 ] for i < depth
    G = lambda a, b: geom_range(p, a, b)  # noqa: E731
    out = []
    for i in range(depth):
        lo = (t - 1) * G(i, k - 1) + p**i
        hi = (t - 1) * G(i + 1, k - 1) + p ** (i + 1) - 1
        out.append(Interval(lo, hi, CaseLabel(theorem, case, t if tag_t else None, i)))
    return out


@lru_cache(maxsize=None)
def case_intervals(p: int, k: int, s: int) -> tuple[Interval, ...]:
    """Labelled intervals covering ``[0, p^k)`` for ``k >= 2`` and ``s >= 3``."""
    p = OddPrime(p)
    if k < 2 or s < 3:
        raise DiagramError("interval cases exist only for k >= 2 and s >= 3")
    G = lambda a, b: geom_range(p, a, b)  # noqa: E731
    h = (p - 1) // 2
    J = G(0, k - 1)
    less = s < k + 2
    name = "Less" if less else "Greater"
    # ``depth`` is how many ladder rungs precede the "ii" interval
    depth = s - 3 if less else k - 1
    out = [Interval(0, 0, CaseLabel(name, "a"))]
    for t in range(1, p):
        if t == h:
            continue
        b, ii = ("b-i", "b-ii") if t < h else ("d-i", "d-ii")
        out += _ladder(p, k, t, depth, name, b, True)
        lo = (t - 1) * G(depth, k - 1) + p**depth
        out.append(Interval(lo, t * J, CaseLabel(name, ii, t)))
    out += _ladder(p, k, h, depth, name, "c-i", False)
    if less:
        out.append(Interval((h - 1) * G(depth, k - 1) + p**depth, h * G(s - 2, k - 1) - 1, CaseLabel(name, "c-ii")))
        for ip in range(1, s - 1):
            out.append(Interval(h * G(ip, k - 1), h * G(ip - 1, k - 1) - 1, CaseLabel(name, "c-iii", i_prime=ip)))
        out.append(Interval(h * J, h * J, CaseLabel(name, "c-iv")))
    else:
        for ip in range(1, k):
            out.append(Interval(h * G(ip, k - 1), h * G(ip - 1, k - 1) - 1, CaseLabel(name, "c-ii", i_prime=ip)))
        out.append(Interval(h * J, h * J, CaseLabel(name, "c-iii")))
    # drop empty rungs (lo > hi), which occur when a ladder step has no room
    return tuple(iv for iv in out if iv.lo <= iv.hi)


def classify_case(p: int, k: int, s: int, l: int) -> CaseLabel:
    p = OddPrime(p)
    if k < 0 or s < 1:
        raise DiagramError(f"need k >= 0 and s >= 1, got k={k}, s={s}")
    if not 0 <= l < p**k:
        raise DiagramError(f"l={l} outside [0, {p**k})")
    h = (p - 1) // 2
    if s == 1:
        return CaseLabel("Base", "s1")
    if k == 0:
        return CaseLabel("P0", "all")
    if s == 2:
        return CaseLabel("Base", "low" if 2 * l < p**k - 1 else "high")
    if k == 1:
        return CaseLabel("P1", "low" if l < h else "high", t=l)
    hits = [iv.label for iv in case_intervals(p, k, s) if l in iv]
    if len(hits) != 1:
        raise DiagramError(f"l={l} matched {len(hits)} cases for p={p}, k={k}, s={s}")
    return hits[0]


def closed_value(p: int, k: int, s: int, l: int, label: Optional[CaseLabel] = None) -> int:
    """Evaluate the closed formula for M selected by ``label``."""
    p = OddPrime(p)
    if label is None:
        label = classify_case(p, k, s, l)
    G = lambda a, b: geom_range(p, a, b)  # noqa: E731
    h = (p - 1) // 2
    th, c = label.theorem, label.case
    if th == "Base":
        if c == "s1":
            return h
        return h * (2 * p + 1) if c == "low" else h * (2 * p - 1)
    if th == "P0":
        return h * (2 * (s - 1) * p ** (s - 1) - (2 * s - 3) * p ** (s - 2))
    if th == "P1":
        t = label.t
        shift = 0 if c == "low" else 2 * p
        return p ** (s - 3) * h * (2 * (s - 1) * p * p + 2 * t - shift - (2 * s - 5))
    t, i, ip = label.t, label.i, label.i_prime
    if th == "Less":
        A = 2 * (s - 1) * p ** (s - 1)
        S = G(0, s - 3)
        tail = 2 * G(0, s - i - 4) if i is not None else 0
        body = {
            "a": lambda: A + 1,
            "b-i": lambda: A + 1 + 2 * t * S - tail,
            "b-ii": lambda: A + 1 + 2 * t * S,
            "d-i": lambda: A - 1 + (2 * t - 2 * p) * S - tail,
            "d-ii": lambda: A - 1 + (2 * t - 2 * p) * S,
            "c-i": lambda: A + 1 + (p - 1) * S - tail,
            "c-ii": lambda: A + p ** (s - 2),
            "c-iii": lambda: A - 2 - p ** (s - 2) - 2 * G(1, s - 3) + 2 * G(s - ip - 1, s - 2),
            "c-iv": lambda: A - 2 - p ** (s - 2) - 2 * G(1, s - 3),
        }[c]()
        return h * body
    if th == "Greater":
        A = 2 * (s - 1) * p ** (k + 1) - 2 * (s - k) + 3
        J = G(0, k - 1)
        tail = 2 * G(0, k - i - 2) if i is not None else 0
        body = {
            "a": lambda: A,
            "b-i": lambda: A + 2 * t * J - tail,
            "b-ii": lambda: A + 2 * t * J,
            "d-i": lambda: A + 2 * (t - p) * J - tail,
            "d-ii": lambda: A + (2 * t - 2 * p) * J,
            "c-i": lambda: A + (p - 1) * J - tail,
            "c-ii": lambda: A - p**k - 2 * G(1, k - 1) + 2 * G(k - ip + 1, k) - 1,
            "c-iii": lambda: A - p**k - 2 * G(1, k - 1) - 1,
        }[c]()
        return p ** (s - 2 - k) * h * body
    raise DiagramError(f"unknown label {label}")


def base_s3_value(p: int, k: int, l: int) -> int:
    """M at ``s = 3`` for ``k >= 2`` from the six-way split on ``l``.

    Kept separate from the interval machinery so the two can be checked
    against each other.
    """
    p = OddPrime(p)
    if k < 2 or not 0 <= l < p**k:
        raise DiagramError("base s=3 formula needs k >= 2 and 0 <= l < p^k")
    h = (p - 1) // 2
    J = geom_range(p, 0, k - 1)
    if l == 0:
        return h * (4 * p * p + 1)
    for t in range(1, h):
        if (t - 1) * J + 1 <= l <= t * J:
            # 2t + 1, not 2t - 1: confirmed by path enumeration
            return h * (4 * p * p + 2 * t + 1)
    if (h - 1) * J + 1 <= l <= h * geom_range(p, 1, k - 1) - 1:
        return h * (4 * p * p + p)
    if h * geom_range(p, 1, k - 1) <= l <= h * J - 1:
        return h * (4 * p * p + p - 2)
    if l == h * J:
        return h * (4 * p * p - p - 2)
    t = -(-l // J)
    return h * (4 * p * p - 1 + 2 * (t - p))
