"""Self-check suites bundled behind ``pbratteli verify``.

Each suite returns a :class:`SuiteResult`. A suite checks many small facts
and records how many it looked at and which ones failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .cases import case_intervals, classify_case
from .core import Block, VertexId, j_kt, vertex_to_hook
from .diagram import add_children, floor_edges, floor_vertices
from .fibo import DEFAULT_BUDGET, m_brute, m_closed, m_recurrence, rr_check
from .gfs import gf_matches_sequence
from .paths import enumerate_paths, path_count, path_from_digits, replay_blocks
from .stats import (
    block_gt,
    descent_set,
    descent_totals_at,
    predicts_second_descent,
    predicts_top_descent,
    sign_balance,
)

MAX_SAMPLES = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: int = 0
    samples: list[str] = field(default_factory=list)

    def check(self, ok: bool, what: object) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if len(self.samples) < MAX_SAMPLES:
                self.samples.append(str(what))

    def as_dict(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failures": self.failures, "samples": self.samples}


def path_origins(p: int, max_floor: int) -> Iterator[VertexId]:
    for f in range(2, max_floor + 1, 2):
        for v in floor_vertices(p, f):
            if not v.is_top:
                yield v


def hook_cells(arm: int, leg: int) -> set[tuple[int, int]]:
    return {(0, j) for j in range(arm)} | {(i, 0) for i in range(1, leg + 1)}


def cell_difference_ok(upper: VertexId, lower: VertexId, b: Block) -> bool:
    """Compare a block with the set difference of the two Young diagrams."""
    hu, hl = vertex_to_hook(upper), vertex_to_hook(lower)
    U, L = hook_cells(hu.arm, hu.leg), hook_cells(hl.arm, hl.leg)
    if not L <= U:
        return False
    diff = U - L
    horiz = sum(1 for (i, _) in diff if i == 0)
    return len(diff) == b.size and horiz == b.horiz and len(diff) - horiz == b.vert


def suite_edges(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("edges_up_down")
    for f in range(2, max_floor + 1):
        down = {(e.upper, e.lower, e.block) for e in floor_edges(p, f)}
        up = {(e.upper, e.lower, e.block) for v in floor_vertices(p, f - 1) for e in add_children(v)}
        res.check(down == up, f"floor {f}")
    return res


def suite_edge_cells(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("edge_cell_difference")
    for f in range(2, max_floor + 1):
        for e in floor_edges(p, f):
            res.check(cell_difference_ok(e.upper, e.lower, e.block), f"{e.upper}->{e.lower}")
    return res


def suite_paths(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("path_count_and_replay")
    for v in path_origins(p, max_floor):
        n = 0
        k, r = v.class_k, v.r
        for P in enumerate_paths(v):
            n += 1
            ok = replay_blocks(P) and P.block(2 * k + 1).horiz == p**k * P.digits[r - 1]
            ok = ok and all(P.block(2 * j + 1).horiz == p**k * P.digits[k + r - j - 1] for j in range(k + 1, r))
            ok = ok and all(P.block(2 * j - 1).is_empty for j in range(1, k + 1))
            res.check(ok, f"{v} {P.digits}")
        res.check(n == path_count(v), f"{v}: enumerated {n}")
    return res


def suite_s1_descent_total(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("s1_descent_total")
    h = (p - 1) // 2
    for v in path_origins(p, max_floor):
        if v.s != 1:
            continue
        total = 0
        for P in enumerate_paths(v):
            d = len(descent_set(P))
            t = P.digits[-1]
            res.check(d == (1 if t < h else 0), f"{v} {P.digits}")
            total += d
        res.check(total == h, f"{v}: total {total}")
    return res


def suite_block_order(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("block_order")
    # all same-size block pairs grow like p^(2k), so stop at k = 2
    for k in range(0, min(3, max(1, max_floor // 2))):
        n = p**k * (p - 1)
        for a in range(n + 1):
            for b in range(n + 1):
                gt = block_gt(Block(1, n - a, a), Block(1, n - b, b))
                res.check(gt == (a < b), (k, a, b))
    return res


def suite_special_paths(p: int, max_floor: int, **_) -> SuiteResult:
    """Constant-digit paths from ``l = j_t`` descend at 2r-2 or 2r-3 according to ``t``."""
    res = SuiteResult("constant_digit_paths")
    h = (p - 1) // 2
    for v in path_origins(p, max_floor):
        k, r = v.class_k, v.r
        if k < 1 or v.s < 3:
            continue
        for t in range(p):
            if v.pos != j_kt(p, k, t):
                continue
            for last in range(p - 1):
                D = descent_set(path_from_digits(v, (t,) * (v.s - 1) + (last,)))
                want = (t < h, t > h)
                res.check(((2 * r - 2) in D, (2 * r - 3) in D) == want, f"{v} t={t}")
    return res


def suite_descent_location(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("descent_location")
    for v in path_origins(p, max_floor):
        k, r = v.class_k, v.r
        if v.s < 2:
            continue
        for P in enumerate_paths(v):
            D = descent_set(P)
            t1 = P.digits[k]
            res.check(((2 * r - 2) in D) == predicts_top_descent(v, t1), f"{v} {P.digits} @2r-2")
            if v.s >= 3:
                ok = ((2 * r - 3) in D) == predicts_second_descent(v, t1, P.digits[k + 1])
                res.check(ok, f"{v} {P.digits} @2r-3")
    return res


def suite_descent_totals(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("descent_totals")
    for v in path_origins(p, max_floor):
        r = v.r
        for which in (2 * r - 2, 2 * r - 3):
            if which < 0:
                continue
            tot = descent_totals_at(v, which)
            res.check(tot.agrees, f"{v} block {which}: {tot.brute} vs {tot.closed}")
    return res


def suite_sign_balance(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("sign_balance")
    for v in path_origins(p, max_floor):
        res.check(sign_balance(v) == 0, str(v))
    return res


def suite_triple(p: int, max_floor: int, budget: int = DEFAULT_BUDGET, workers: int = 1, **_) -> SuiteResult:
    res = SuiteResult("triple_agreement")
    memo: dict[str, int] = {}
    for v in path_origins(p, max_floor):
        if path_count(v) > budget:
            continue
        b, r, c = m_brute(v, budget, workers), m_recurrence(v, memo), m_closed(v)
        res.check(b == r == c, f"{v}: {b} {r} {c}")
    return res


def suite_recurrence_closed(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("recurrence_vs_closed")
    memo: dict[str, int] = {}
    for v in path_origins(p, max_floor + 4):
        r, c = m_recurrence(v, memo), m_closed(v)
        res.check(r == c, f"{v}: {r} {c}")
    return res


def suite_classifier(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("classifier_partition")
    for k in range(0, 5):
        for s in range(1, 9):
            for l in range(p**k):
                try:
                    classify_case(p, k, s, l)
                    ok = True
                except ValueError:
                    ok = False
                res.check(ok, (k, s, l))
            if k >= 2 and s >= 3:
                covered = sum(iv.hi - iv.lo + 1 for iv in case_intervals(p, k, s))
                res.check(covered == p**k, f"k={k} s={s}: intervals cover {covered}")
    return res


def suite_rr(p: int, max_floor: int, **_) -> SuiteResult:
    """Two-step recurrence: exact constant for k <= 3, tabulated constant for k <= 1."""
    res = SuiteResult("two_step_recurrence")
    for k in range(0, 4):
        for l in range(p**k):
            out = rr_check(p, k, l, k + 8, exact=True)
            res.check(out.ok, f"exact k={k} l={l}: {out.failing}")
            if k <= 1:
                out = rr_check(p, k, l, 10)
                res.check(out.ok, f"tabulated k={k} l={l}: {out.failing}")
    return res


def suite_gf(p: int, max_floor: int, **_) -> SuiteResult:
    res = SuiteResult("gf_match")
    for k in range(0, 4):
        for l in range(p**k):
            res.check(gf_matches_sequence(p, k, l, 10), (k, l))
    return res


SUITES: list[Callable[..., SuiteResult]] = [
    suite_edges,
    suite_edge_cells,
    suite_paths,
    suite_s1_descent_total,
    suite_block_order,
    suite_special_paths,
    suite_descent_location,
    suite_descent_totals,
    suite_sign_balance,
    suite_triple,
    suite_recurrence_closed,
    suite_classifier,
    suite_rr,
    suite_gf,
]


def run_all(p: int, max_floor: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[SuiteResult]:
    return [suite(p, max_floor, budget=budget, workers=workers) for suite in SUITES]
