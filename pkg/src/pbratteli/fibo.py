"""The p^(k)-Fibonacci numbers M by enumeration, recurrence and closed form."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .cases import classify_case, closed_value
from .core import DiagramError, OddPrime, VertexId
from .diagram import components
from .paths import digit_domain, enumerate_with_prefix, path_count
from .stats import closed_descent_total, descent_set

DEFAULT_BUDGET = 10**8


def _require_fib_vertex(v: VertexId) -> None:
    if not v.is_even or v.is_top:
        raise DiagramError(f"M is defined on even-floor vertices below the top class, got {v}")


def vertex_for(p: int, k: int, s: int, l: int) -> VertexId:
    """The even-floor vertex with class ``k`` and ``r - k = s``."""
    if s < 1:
        raise DiagramError(f"s must be >= 1, got {s}")
    return VertexId(p, 2 * (s + k), k, l)


@dataclass(frozen=True)
class FibRecord:
    vertex: VertexId
    value: int
    method: str

    def __post_init__(self) -> None:
        if self.value < 0:
            raise DiagramError("M is never negative")


def _des_sum(args: tuple[VertexId, tuple[int, ...]]) -> int:
    v, prefix = args
    return sum(len(descent_set(P)) for P in enumerate_with_prefix(v, prefix))


def m_brute(v: VertexId, budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Sum of ``des`` over every path from ``v``.

    Refuses to run when the path count exceeds ``budget``. With
    ``workers > 1`` (or 0 for one per CPU) the work is split on the first
    free digit across processes.
    """
    _require_fib_vertex(v)
    n = path_count(v)
    if n > budget:
        raise DiagramError(f"{n} paths exceed the brute-force budget of {budget}")
    if workers == 0:
        workers = os.cpu_count() or 1
    lo, hi = digit_domain(v).free[0]
    jobs = [(v, (d,)) for d in range(lo, hi + 1)]
    if workers <= 1 or len(jobs) == 1:
        return sum(map(_des_sum, jobs))
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return sum(pool.map(_des_sum, jobs))


def _recurrence_children(v: VertexId) -> list[VertexId]:
    if v.class_k == 0:
        return [VertexId(v.p, v.floor - 2, 0, 0)] * v.p
    return components(v)


def m_recurrence(v: VertexId, memo: Optional[dict[str, int]] = None) -> int:
    """M via the recursion on the ``p`` components two floors down.

    ``M(v) = sum of M over components + D(2r-2) + D(2r-3)`` where the ``D``
    terms count the descents at the two top comparable blocks.
    """
    _require_fib_vertex(v)
    if memo is None:
        memo = {}
    key = str(v)
    if key in memo:
        return memo[key]
    r = v.r
    if v.s == 1:
        val = (v.p - 1) // 2
    else:
        val = sum(m_recurrence(c, memo) for c in _recurrence_children(v))
        val += closed_descent_total(v, 2 * r - 2) + closed_descent_total(v, 2 * r - 3)
    memo[key] = val
    return val


def m_closed(v: VertexId) -> int:
    _require_fib_vertex(v)
    return closed_value(v.p, v.class_k, v.s, v.pos, classify_case(v.p, v.class_k, v.s, v.pos))


METHODS = {"brute": m_brute, "recur": m_recurrence, "closed": m_closed}


def m_value(v: VertexId, method: str, budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    if method == "brute":
        return m_brute(v, budget=budget, workers=workers)
    if method == "recur":
        return m_recurrence(v)
    if method == "closed":
        return m_closed(v)
    raise DiagramError(f"unknown method {method!r}")


def sequence(
    p: int,
    k: int,
    l: int,
    s_range: Iterable[int],
    method: str = "closed",
    check_brute: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> list[int]:
    out = []
    for s in s_range:
        v = vertex_for(p, k, s, l)
        val = m_value(v, method, budget=budget)
        if check_brute and path_count(v) <= budget and m_brute(v, budget) != val:
            raise DiagramError(f"brute force disagrees at {v}")
        out.append(val)
    return out


# --- the two-step recurrence --------------------------------------------------


def _t_of(p: int, k: int, l: int) -> int:
    # t with j_{t-1} < l <= j_t, or 0 for l == 0
    if l == 0:
        return 0
    J = (p**k - 1) // (p - 1)
    return -(-l // J)


def tabulated_bs(p: int, k: int, l: int, s: int) -> int:
    """The constant term of the two-step recurrence as a function of ``t`` alone."""
    p = OddPrime(p)
    h = (p - 1) // 2
    base = p ** (s - 1) * (p - 1)
    if k == 0:
        return base * (p * p - 1)
    if k == 1:
        t = l
        return base * (p * p + p + t) if t < h else base * (p * p + t)
    J = (p**k - 1) // (p - 1)
    t = _t_of(p, k, l)
    if l == 0 or (t <= h and l < t * J) or (l == t * J and t < h):
        return base * (p * p + p + t)
    if l == h * J:
        # only reachable as the left endpoint of the next t-interval
        t = h + 1
    return base * (p * p + t)


def exact_bs(p: int, k: int, l: int, s: int) -> int:
    """Constant term obtained by expanding the ``t1 = 0`` component one level.

    Equals the descent counts at blocks ``2r-2``, ``2r-3`` of the top vertex
    plus those of the vertex at ``l // p`` one class-floor down.
    """
    top = vertex_for(p, k, s + 2, l)
    mid = vertex_for(p, k, s + 1, l // p if k else 0)
    total = 0
    for v in (top, mid):
        r = v.r
        total += closed_descent_total(v, 2 * r - 2) + closed_descent_total(v, 2 * r - 3)
    return total


@dataclass
class RrResult:
    p: int
    k: int
    l: int
    checked: list[int] = field(default_factory=list)
    failing: list[tuple[int, int]] = field(default_factory=list)  # (s, lhs - rhs)

    @property
    def ok(self) -> bool:
        return not self.failing

    def __bool__(self) -> bool:
        return self.ok


def rr_check(p: int, k: int, l: int, s_max: int, exact: bool = False) -> RrResult:
    """Check ``M(s+2) = b_s + sum M(s, ...) + sum M(s+1, ...)`` for ``k+2 <= s <= s_max-2``.

    Values come from ``m_closed``. ``exact=True`` swaps in :func:`exact_bs`.
    """
    p = OddPrime(p)
    if not 0 <= l < p**k:
        raise DiagramError(f"l={l} outside [0, {p**k})")
    res = RrResult(p, k, l)
    M = lambda s, pos: m_closed(vertex_for(p, k, s, pos))  # noqa: E731
    for s in range(max(k + 2, 2), s_max - 1):
        lhs = M(s + 2, l)
        if k == 0:
            rest = p * M(s, 0) + (p - 1) * M(s + 1, 0)
        else:
            alpha = l // p
            upper = components(vertex_for(p, k, s + 2, l))
            lower = components(vertex_for(p, k, s + 1, alpha))
            rest = sum(M(s, c.pos) for c in lower) + sum(M(s + 1, c.pos) for c in upper[1:])
        bs = exact_bs(p, k, l, s) if exact else tabulated_bs(p, k, l, s)
        res.checked.append(s)
        if lhs != bs + rest:
            res.failing.append((s, lhs - bs - rest))
    return res
