"""Special-function kernel: central binomials, Legendre/Jacobi values at the
origin, the terminating Gauss hypergeometric sum, and the complete elliptic
integral K(k) by AGM iteration and by power series.

All polynomial values are exact rationals; only K(k) is floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction

_AGM_MAX_ITER = 64


def central_binomial(n: int) -> int:
    """C(2n, n) exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n)


def legendre_p0(n: int) -> Fraction:
    """P_n(0) in the standard convention: 0 for odd n, (-1)^m C(2m,m)/4^m for n=2m."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2 == 1:
        return Fraction(0)
    m = n // 2
    sign = -1 if m % 2 else 1
    return Fraction(sign * math.comb(2 * m, m), 4**m)


def hyp2f1_terminating(a: int, b: Fraction, c: Fraction, z: Fraction) -> Fraction:
    """2F1(a,b;c;z) for a a nonpositive integer: the exact finite sum
    sum_{j=0}^{-a} (a)_j (b)_j / ((c)_j j!) z^j.
    """
    if a > 0:
        raise ValueError("first parameter must be a nonpositive integer")
    b, c, z = Fraction(b), Fraction(c), Fraction(z)
    if c.denominator == 1 and c <= 0 and c >= a:
        raise ValueError(f"c={c} is a forbidden nonpositive integer for a={a}")
    m = -a
    total = Fraction(0)
    term = Fraction(1)
    for j in range(m + 1):
        total += term
        if j == m:
            break
        term *= Fraction(a + j) * (b + j) * z / ((c + j) * (j + 1))
    return total


def jacobi_p0(alpha: int, n: int) -> Fraction:
    """P_n^(alpha,0)(0) for alpha in {0, 1}, via the terminating 2F1 at 1/2
    with the gamma-ratio prefactor reduced to a binomial coefficient.
    """
    if alpha not in (0, 1):
        raise ValueError("alpha must be 0 or 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    prefactor = math.comb(n + alpha, n)
    return prefactor * hyp2f1_terminating(
        -n, Fraction(n + alpha + 1), Fraction(alpha + 1), Fraction(1, 2)
    )


def _check_modulus(k: float) -> None:
    if k < 0.0:
        raise ValueError(f"modulus k={k} is negative")
    if k >= 1.0:
        raise ValueError(f"K(k) diverges for k >= 1 (got k={k})")


def elliptic_k_agm(k: float) -> float:
    """K(k) = pi / (2 AGM(1, sqrt(1-k^2))) for 0 <= k < 1.

    Convention: K(k) = integral over [0, pi/2] of (1 - k^2 sin^2 t)^(-1/2) dt.
    """
    _check_modulus(k)
    return elliptic_k_from_complement(1.0 - k * k)


def elliptic_k_from_complement(one_minus_k_sq: float) -> float:
    """K(k) given 1-k^2 directly; avoids cancellation near k = 1."""
    if one_minus_k_sq <= 0.0 or one_minus_k_sq > 1.0:
        raise ValueError(f"1-k^2 must lie in (0, 1], got {one_minus_k_sq}")
    a = 1.0
    b = math.sqrt(one_minus_k_sq)
    eps = math.ulp(1.0)
    for _ in range(_AGM_MAX_ITER):
        if abs(a - b) <= 4.0 * eps * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


def elliptic_k_series(k: float, terms: int) -> float:
    """Truncated series (pi/2) sum_{n<terms} C(2n,n)^2 (k/4)^(2n).

    Monotone increasing partial sums; the tail is bounded by the next term
    over 1-k^2 (see elliptic_k_series_tail).
    """
    _check_modulus(k)
    if terms < 1:
        raise ValueError("terms must be at least 1")
    parts = []
    term = 1.0
    ksq = k * k
    for n in range(terms):
        parts.append(term)
        term *= ksq * (2 * n + 1) ** 2 / (2 * n + 2) ** 2
    return 0.5 * math.pi * math.fsum(parts)


def elliptic_k_series_tail(k: float, terms: int) -> float:
    """Upper bound for K(k) minus the 'terms'-term partial sum.

    Term ratio is k^2 ((2n+1)/(2n+2))^2 < k^2, so the tail is dominated by a
    geometric series starting at term number 'terms'.
    """
    _check_modulus(k)
    if terms < 1:
        raise ValueError("terms must be at least 1")
    term = 1.0
    ksq = k * k
    for n in range(terms):
        term *= ksq * (2 * n + 1) ** 2 / (2 * n + 2) ** 2
    return 0.5 * math.pi * term / (1.0 - ksq)
