"""Closed forms for the return probability and the elliptic-integral
generating-function identity.

p_{2n}(0) equals half the sum of two squared Legendre values at the origin,
which collapses the generating function sum p_n(0) z^n to
(1+z^2)/pi * K(z^2) + 1/2.  The truncated series carries a rigorous tail
bound so the identity can be checked to a stated tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactnum import DyadicRational
from .specfun import central_binomial, elliptic_k_agm, legendre_p0


def p0_legendre(n: int) -> DyadicRational:
    """Exact p_{2n}(0) = (1/2) [P_{n-1}(0)^2 + P_n(0)^2], with p_0(0) = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return DyadicRational(1)
    value = (legendre_p0(n - 1) ** 2 + legendre_p0(n) ** 2) / 2
    return DyadicRational.from_fraction(value)


def p0_closed(m: int) -> DyadicRational:
    """Exact p_{4m}(0) = p_{4m+2}(0) = C(2m,m)^2 / 2^(4m+1), for m >= 1."""
    if m < 1:
        raise ValueError("the pairing closed form starts at m = 1")
    return DyadicRational(central_binomial(m) ** 2, 4 * m + 1)


def return_probability(n: int) -> DyadicRational:
    """Exact p_n(0) at any time n (zero at odd times)."""
    if n < 0:
        raise ValueError("time must be nonnegative")
    if n % 2 == 1:
        return DyadicRational(0)
    return p0_legendre(n // 2)


def gf_partial_sum(z: float, truncation: int) -> float:
    """sum_{n<=N} p_n(0) z^n with exact probabilities rounded only at the end."""
    _check_z(z)
    if truncation < 0:
        raise ValueError("truncation must be nonnegative")
    # exact p_n(0), float z powers; fsum keeps the accumulation compensated
    terms = []
    zn = 1.0
    for n in range(truncation + 1):
        if n % 2 == 0:
            terms.append(float(return_probability(n)) * zn)
        zn *= z
    return math.fsum(terms)


def gf_closed_form(z: float) -> float:
    """Closed form (1+z^2)/pi * K(z^2) + 1/2 of the generating function."""
    _check_z(z)
    return (1.0 + z * z) / math.pi * elliptic_k_agm(z * z) + 0.5


def tail_bound(z: float, truncation: int) -> float:
    """Upper bound on sum_{n>N} p_n(0) z^n.

    Every omitted probability is at most 1/(pi floor(N/4)) (from
    C(2m,m)^2 <= 16^m/(pi m)), and the remaining powers of z sum
    geometrically.
    """
    _check_z(z)
    if truncation < 4:
        raise ValueError("tail bound needs truncation >= 4")
    if z == 0.0:
        return 0.0
    return z ** (truncation + 1) / ((1.0 - z) * max(1.0, math.pi * (truncation // 4)))


def truncation_for(z: float, target: float = 1e-12) -> int:
    """Smallest truncation (>= 4) whose tail bound is at or below target."""
    _check_z(z)
    n = 4
    while tail_bound(z, n) > target:
        n += 1
        if n > 100_000:
            raise ValueError(f"tail bound does not reach {target} at z={z}")
    return n


@dataclass(frozen=True)
class GfPoint:
    """One comparison of the truncated series against the closed form."""

    z: float
    lhs_partial: float
    rhs_closed: float
    truncation: int
    tail_bound: float

    @property
    def abs_diff(self) -> float:
        return abs(self.lhs_partial - self.rhs_closed)


def gf_point(z: float, truncation: int | None = None) -> GfPoint:
    """Evaluate both sides at z; default truncation pushes the tail below 1e-12."""
    if truncation is None:
        truncation = truncation_for(z)
    elif truncation < 4:
        raise ValueError("truncation must be at least 4 for a valid tail bound")
    return GfPoint(
        z=z,
        lhs_partial=gf_partial_sum(z, truncation),
        rhs_closed=gf_closed_form(z),
        truncation=truncation,
        tail_bound=tail_bound(z, truncation),
    )


def _check_z(z: float) -> None:
    if not 0.0 <= z < 1.0:
        raise ValueError(f"z must lie in [0, 1), got {z}")
