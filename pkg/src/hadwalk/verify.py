"""One-shot cross-oracle verification: every closed form against every other
route, plus the numeric identities, assembled as a deterministic report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import classical, genfun, pathsum, specfun, walk
from .exactnum import DyadicRational

#: the directly computed value table: time -> exact p_n(0)
VALUE_TABLE = {
    0: DyadicRational(1),
    2: DyadicRational(1, 1),
    4: DyadicRational(1, 3),
    6: DyadicRational(1, 3),
    8: DyadicRational(9, 7),
    10: DyadicRational(9, 7),
    12: DyadicRational(25, 9),
    14: DyadicRational(25, 9),
    16: DyadicRational(1225, 15),
    18: DyadicRational(1225, 15),
}


@dataclass(frozen=True)
class VerifyCheck:
    name: str
    passed: bool
    expected: str
    actual: str
    tolerance: str = "exact"


@dataclass
class VerifyReport:
    scope: str
    checks: list[VerifyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _add(report: VerifyReport, name: str, passed: bool, expected, actual, tolerance="exact"):
    report.checks.append(
        VerifyCheck(name, bool(passed), str(expected), str(actual), str(tolerance))
    )


def _check_value_table(report: VerifyReport) -> None:
    bad = []
    for n, expected in sorted(VALUE_TABLE.items()):
        got = walk.return_probability_direct(n)
        if got != expected:
            bad.append((n, got))
    _add(
        report,
        "value table p_0..p_18",
        not bad,
        "table of 10 exact dyadics",
        "all match" if not bad else f"mismatches at {bad}",
    )


def _check_four_oracles(report: VerifyReport, n_max: int) -> None:
    bad = []
    psi = walk.WaveFunction.point_mass(walk.QubitState.symmetric())
    coin = walk.CoinMatrix.hadamard()
    for n in range(1, n_max + 1):
        psi = psi.step(coin).step(coin)
        gl, gr = psi.cores(0)
        direct = DyadicRational(gl.norm_sq() + gr.norm_sq(), psi.scale_exp)
        values = {
            "xi": pathsum.return_probability_paths(n),
            "prop1": genfun.p0_legendre(n),
        }
        if n >= 2:
            values["closed"] = genfun.p0_closed(n // 2)
        for label, v in values.items():
            if v != direct:
                bad.append((2 * n, label))
    _add(
        report,
        f"four-oracle equality p_2n, n<={n_max}",
        not bad,
        "all routes identical",
        "all match" if not bad else f"mismatches: {bad[:5]}",
    )


def _check_conservation(report: VerifyReport, n_max: int) -> None:
    coin = walk.CoinMatrix.hadamard()
    psi = walk.WaveFunction.point_mass(walk.QubitState.symmetric())
    bad_norm = bad_sym = 0
    for _ in range(n_max):
        psi = psi.step(coin)
        dist = walk.distribution(psi)
        if dist.total() != 1:
            bad_norm += 1
        if any(dist.at(x) != dist.at(-x) for x in dist.probs):
            bad_sym += 1
    _add(report, f"normalization n<={n_max}", bad_norm == 0, "sum = 1 exactly",
         "holds" if not bad_norm else f"{bad_norm} failures")
    _add(report, f"symmetry n<={n_max}", bad_sym == 0, "p(x) = p(-x) exactly",
         "holds" if not bad_sym else f"{bad_sym} failures")


def _check_odd_times(report: VerifyReport, n_max: int) -> None:
    bad = [n for n in range(1, n_max + 1, 2) if walk.return_probability_direct(n) != 0]
    _add(report, f"odd-time return zero n<={n_max}", not bad, "0", "holds" if not bad else f"{bad}")


def _check_pairing(report: VerifyReport, m_max: int) -> None:
    bad = [
        m
        for m in range(1, m_max + 1)
        if genfun.p0_legendre(2 * m) != genfun.p0_legendre(2 * m + 1)
    ]
    _add(report, f"pairing p_4m = p_4m+2, m<={m_max}", not bad, "equal pairs",
         "holds" if not bad else f"{bad}")


def _check_closed_vs_dp(report: VerifyReport, lm_max: int) -> None:
    coin = walk.CoinMatrix.hadamard()
    grid = pathsum.path_sum_grid(pathsum.StepPair(lm_max, lm_max), coin)
    bad = []
    for l in range(1, lm_max + 1):
        for m in range(1, lm_max + 1):
            lem = pathsum.path_sum_closed(pathsum.StepPair(l, m))
            if not lem.same_value(grid[(l, m)]):
                bad.append((l, m))
    _add(report, f"closed-form coefficients = DP, l,m<={lm_max}", not bad,
         "identical vectors", "holds" if not bad else f"{bad[:5]}")


def _check_table1(report: VerifyReport) -> None:
    coins = [
        walk.CoinMatrix.hadamard(),
        walk.CoinMatrix.unitary(0.6, 0.8j, 0.8j, 0.6),
    ]
    worst = 0.0
    for coin in coins:
        mats = pathsum.basis_matrices(coin)
        pure = [
            pathsum.PQRSVectorFloat(1, 0, 0, 0),
            pathsum.PQRSVectorFloat(0, 1, 0, 0),
            pathsum.PQRSVectorFloat(0, 0, 1, 0),
            pathsum.PQRSVectorFloat(0, 0, 0, 1),
        ]
        for i in range(4):
            for j in range(4):
                composed = pathsum.pqrs_compose(pure[i], pure[j], coin)
                literal = mats[i] @ mats[j]
                diff = np.abs(pathsum.pqrs_to_matrix(composed, coin) - literal).max()
                worst = max(worst, float(diff))
    _add(report, "product table vs literal 2x2 products (16 pairs, 2 coins)",
         worst <= 1e-14, "<= 1e-14", f"max abs diff {worst:.3e}", "1e-14")


def _check_jacobi_recurrence(report: VerifyReport, n_max: int) -> None:
    plain = [specfun.jacobi_p0(0, n) for n in range(n_max + 2)]
    bad = [
        n
        for n in range(n_max + 1)
        if plain[n] - plain[n + 1] != specfun.jacobi_p0(1, n)
    ]
    _add(report, f"jacobi downward recurrence n<={n_max}", not bad,
         "exact rational identity", "holds" if not bad else f"{bad[:5]}")


def _check_hyp_chain(report: VerifyReport, n_max: int) -> None:
    from fractions import Fraction

    bad = []
    for n in range(1, n_max + 1):
        direct = sum(
            Fraction((-1) ** (g - 1) * math.comb(n - 1, g - 1) ** 2, g)
            for g in range(1, n + 1)
        )
        f1 = specfun.hyp2f1_terminating(-(n - 1), Fraction(-(n - 1)), Fraction(2), Fraction(-1))
        f2 = 2 ** (n - 1) * specfun.hyp2f1_terminating(
            -(n - 1), Fraction(n + 1), Fraction(2), Fraction(1, 2)
        )
        f3 = Fraction(2 ** (n - 1), n) * specfun.jacobi_p0(1, n - 1)
        if not direct == f1 == f2 == f3:
            bad.append(n)
    _add(report, f"hypergeometric chain n<={n_max}", not bad,
         "four equal rationals", "holds" if not bad else f"{bad[:5]}")


def _check_gf_identity(report: VerifyReport, zs: tuple[float, ...]) -> None:
    for z in zs:
        point = genfun.gf_point(z)
        tol = point.tail_bound + 1e-10
        _add(
            report,
            f"generating function identity z={z}",
            point.abs_diff <= tol,
            f"|lhs-rhs| <= {tol:.3e}",
            f"{point.abs_diff:.3e} (N={point.truncation})",
            f"{tol:.3e}",
        )


def _check_polya(report: VerifyReport, zs: tuple[float, ...]) -> None:
    for z in zs:
        n_trunc = 4
        while classical.rw_gf_tail_bound(2, z, n_trunc) > 1e-12:
            n_trunc += 2
        partial = math.fsum(
            float(classical.rw_return_prob(2, n)) * z**n for n in range(n_trunc + 1)
        )
        closed = classical.rw_gf(2, z)
        tol = classical.rw_gf_tail_bound(2, z, n_trunc) + 1e-10
        _add(
            report,
            f"2d random-walk generating function z={z}",
            abs(partial - closed) <= tol,
            f"|lhs-rhs| <= {tol:.3e}",
            f"{abs(partial - closed):.3e} (N={n_trunc})",
            f"{tol:.3e}",
        )


def _check_watson(report: VerifyReport, with_quadrature: bool) -> None:
    closed = classical.watson_g_closed()
    _add(report, "watson G closed form, 5-decimal prefix",
         _prefix5(closed) == "1.51638", "1.51638", _prefix5(closed), "prefix")
    f_return = 1.0 - 1.0 / closed
    _add(report, "3d return probability F, 5-decimal prefix",
         _prefix5(f_return) == "0.34053", "0.34053", _prefix5(f_return), "prefix")
    if with_quadrature:
        quad = classical.watson_g_quadrature(1e-8)
        diff = abs(quad.value - closed)
        _add(report, "watson G quadrature vs closed", diff <= 1e-6,
             "<= 1e-6", f"{diff:.3e}", "1e-6")


def _prefix5(x: float) -> str:
    """First five decimals without rounding, matching printed-table digits."""
    scaled = math.floor(x * 10**5)
    return f"{scaled // 10**5}.{scaled % 10**5:05d}"


def run_verify(scope: str = "fast") -> VerifyReport:
    """Run the cross-oracle suite; scope "fast" (n<=30) or "full" (n<=100
    plus the Watson quadrature)."""
    if scope not in ("fast", "full"):
        raise ValueError("scope must be 'fast' or 'full'")
    full = scope == "full"
    report = VerifyReport(scope)
    _check_value_table(report)
    _check_four_oracles(report, 100 if full else 30)
    _check_conservation(report, 100 if full else 30)
    _check_odd_times(report, 99 if full else 29)
    _check_pairing(report, 50 if full else 15)
    _check_closed_vs_dp(report, 30 if full else 12)
    _check_table1(report)
    _check_jacobi_recurrence(report, 200 if full else 50)
    _check_hyp_chain(report, 50 if full else 20)
    _check_gf_identity(report, (0.1, 0.3, 0.5, 0.7) if full else (0.5,))
    _check_polya(report, (0.3, 0.6) if full else (0.3,))
    _check_watson(report, with_quadrature=full)
    return report
