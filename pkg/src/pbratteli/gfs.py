"""Rational generating functions of the shape

    scale * ( A / (1 - p x) + (C - D x) / (1 - p x)^2 )

and exact extraction of their coefficients. The coefficient of ``x^n`` is the
value of M at ``s = n + k + 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cases import CaseLabel, classify_case
from .core import DiagramError, OddPrime, geom_range
from .fibo import sequence


@dataclass(frozen=True)
class GfSpec:
    p: int
    scale: Fraction
    A: int
    C: int
    D: int

    def __add__(self, other: "GfSpec") -> "GfSpec":
        if not isinstance(other, GfSpec):
            return NotImplemented
        if self.p != other.p or self.scale != other.scale:
            raise DiagramError("can only add generating functions with the same p and scale")
        return GfSpec(self.p, self.scale, self.A + other.A, self.C + other.C, self.D + other.D)


def raw_coeff(g: GfSpec, n: int) -> Fraction:
    if n < 0:
        raise DiagramError(f"n must be >= 0, got {n}")
    p = g.p
    inner = g.A * p**n + g.C * (n + 1) * p**n
    if n:
        inner -= g.D * n * p ** (n - 1)
    return g.scale * inner


def gf_coeff(g: GfSpec, n: int) -> int:
    val = raw_coeff(g, n)
    if val.denominator != 1 or val < 0:
        raise DiagramError(f"coefficient {val} of x^{n} is not a non-negative integer")
    return int(val)


def gf_for_case(p: int, k: int, label: CaseLabel) -> GfSpec:
    """Parameters of the generating function for the sequence carrying ``label``."""
    p = OddPrime(p)
    scale = Fraction(p - 1, 2)
    G = lambda a, b: geom_range(p, a, b)  # noqa: E731
    th, c = label.theorem, label.case
    if k == 0:
        if th != "P0":
            raise DiagramError(f"label {label} is not a k=0 sequence label")
        return GfSpec(p, scale, -1, 2 * p, 2 * p)
    if k == 1:
        if th != "P1":
            raise DiagramError(f"label {label} is not a k=1 sequence label")
        t = label.t
        A = 2 * p * p + 2 * t - 1 if c == "low" else 2 * p * p + 2 * t - 2 * p - 1
        return GfSpec(p, scale, A, 2 * p * p, 2 * p)
    if th != "Greater":
        raise DiagramError(f"only sequences from s = k + 2 on have a generating function, got {label}")
    J = G(0, k - 1)
    base = 2 * k * p ** (k + 1) - 1
    t, i, ip = label.t, label.i, label.i_prime
    h = (p - 1) // 2
    extra = {
        "a": lambda: 0,
        "b-i": lambda: 2 * t * J - 2 * G(0, k - i - 2),
        "c-i": lambda: 2 * h * J - 2 * G(0, k - i - 2),
        "d-i": lambda: 2 * (t - p) * J - 2 * G(0, k - i - 2),
        "b-ii": lambda: 2 * t * J,
        "d-ii": lambda: (2 * t - 2 * p) * J,
        "c-ii": lambda: -(p**k) - 2 * G(1, k - 1) + 2 * G(k - ip + 1, k) - 1,
        "c-iii": lambda: -(p**k) - 2 * G(1, k - 1) - 1,
    }
    if c not in extra:
        raise DiagramError(f"unknown label {label}")
    return GfSpec(p, scale, base + extra[c](), 2 * p ** (k + 1), 2 * p)


def gf_for(p: int, k: int, l: int) -> GfSpec:
    return gf_for_case(p, k, classify_case(p, k, k + 2, l))


def gf_matches_sequence(p: int, k: int, l: int, n_terms: int) -> bool:
    if n_terms < 1:
        raise DiagramError("n_terms must be >= 1")
    g = gf_for(p, k, l)
    expected = sequence(p, k, l, range(k + 2, k + 2 + n_terms))
    return [gf_coeff(g, n) for n in range(n_terms)] == expected
