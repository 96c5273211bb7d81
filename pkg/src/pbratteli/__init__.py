"""Exact combinatorics on the p-Bratteli diagram of hook partitions."""

from .cases import CaseLabel, classify_case
from .core import Block, DiagramError, HookPartition, OddPrime, VertexId, hook_to_vertex, vertex_to_hook
from .diagram import add_children, components, floor_vertices, projection, remove_children
from .fibo import m_brute, m_closed, m_recurrence, rr_check, sequence
from .gfs import GfSpec, gf_coeff, gf_for_case, gf_matches_sequence
from .paths import Path, digit_domain, enumerate_paths, path_count, path_from_digits
from .stats import block_gt, descent_set, descent_totals_at, inversion_set, sign, sign_balance

__all__ = [
    "Block",
    "CaseLabel",
    "DiagramError",
    "GfSpec",
    "HookPartition",
    "OddPrime",
    "Path",
    "VertexId",
    "add_children",
    "block_gt",
    "classify_case",
    "components",
    "descent_set",
    "descent_totals_at",
    "digit_domain",
    "enumerate_paths",
    "floor_vertices",
    "gf_coeff",
    "gf_for_case",
    "gf_matches_sequence",
    "hook_to_vertex",
    "inversion_set",
    "m_brute",
    "m_closed",
    "m_recurrence",
    "path_count",
    "path_from_digits",
    "projection",
    "remove_children",
    "rr_check",
    "sequence",
    "sign",
    "sign_balance",
    "vertex_to_hook",
]
