import itertools

import numpy as np
import pytest

from hadwalk.exactnum import DyadicRational, G_ZERO, GaussianInteger, ScaledAmplitude
from hadwalk.walk import (
    CoinMatrix,
    FloatWaveFunction,
    QubitState,
    WaveFunction,
    distribution,
    evolve,
    return_probability_direct,
    step,
)


def brute_force_distribution(n):
    """Oracle: enumerate all 2^n left/right step sequences with literal
    2x2 complex matrices, summing amplitudes per endpoint before squaring."""
    r = 2.0**-0.5
    p = np.array([[r, r], [0, 0]])
    q = np.array([[0, 0], [r, -r]])
    phi = np.array([r, 1j * r])
    amps = {}
    for seq in itertools.product("LR", repeat=n):
        vec = phi
        pos = 0
        for move in seq:
            vec = (p if move == "L" else q) @ vec
            pos += -1 if move == "L" else 1
        amps[pos] = amps.get(pos, np.zeros(2, complex)) + vec
    return {pos: float(np.vdot(vec, vec).real) for pos, vec in amps.items()}


class TestCoinMatrix:
    def test_hadamard_is_exact(self):
        coin = CoinMatrix.hadamard()
        assert coin.is_exact
        assert coin.a == pytest.approx(2**-0.5)

    def test_unitarity_violations_named(self):
        with pytest.raises(ValueError, match=r"\|a\|\^2\+\|c\|\^2"):
            CoinMatrix.unitary(1.0, 0.0, 0.5, 1.0)
        with pytest.raises(ValueError, match=r"\|b\|\^2\+\|d\|\^2"):
            CoinMatrix.unitary(1.0, 0.0, 0.0, 0.5)
        with pytest.raises(ValueError, match=r"conj"):
            CoinMatrix.unitary(2**-0.5, 2**-0.5, 2**-0.5, 2**-0.5)


class TestQubitState:
    def test_symmetric_is_normalized(self):
        q = QubitState.symmetric()
        assert q.left.probability() + q.right.probability() == DyadicRational(1)

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError, match="not normalized"):
            QubitState(
                ScaledAmplitude(GaussianInteger(1), 0),
                ScaledAmplitude(GaussianInteger(1), 0),
            )

    def test_parity_mismatch_rejected(self):
        # |left|^2 = 1/2 at exponent 2, |right|^2 = 1/2 at exponent 1:
        # normalized, but the exponents cannot be reconciled in Z[i]
        q = QubitState(
            ScaledAmplitude(GaussianInteger(1, 1), 2),
            ScaledAmplitude(GaussianInteger(1), 1),
        )
        with pytest.raises(ValueError, match="parity"):
            q.common_scale()


class TestExactEngine:
    def test_single_step_amplitudes(self):
        psi = evolve(QubitState.symmetric(), CoinMatrix.hadamard(), 1)
        # (1/2)(1+i) |L> at x=-1 and (1/2)(1-i) |R> at x=+1
        left_l, left_r = psi.amplitude(-1)
        right_l, right_r = psi.amplitude(1)
        assert left_l == ScaledAmplitude(GaussianInteger(1, 1), 2)
        assert left_r == ScaledAmplitude(G_ZERO)
        assert right_l == ScaledAmplitude(G_ZERO)
        assert right_r == ScaledAmplitude(GaussianInteger(1, -1), 2)
        dist = distribution(psi)
        assert dist.at(-1) == DyadicRational(1, 1)
        assert dist.at(1) == DyadicRational(1, 1)

    def test_zero_state_stays_zero(self):
        zero = WaveFunction(0, 0, [(G_ZERO, G_ZERO)])
        stepped = zero.step(CoinMatrix.hadamard())
        assert all(gl.is_zero() and gr.is_zero() for gl, gr in stepped._pairs)

    def test_time_zero_is_point_mass(self):
        psi = evolve(QubitState.symmetric(), CoinMatrix.hadamard(), 0)
        assert distribution(psi).probs == {0: DyadicRational(1)}

    def test_two_step_distribution(self):
        dist = distribution(evolve(QubitState.symmetric(), CoinMatrix.hadamard(), 2))
        assert dist.probs == {
            -2: DyadicRational(1, 2),
            0: DyadicRational(1, 1),
            2: DyadicRational(1, 2),
        }

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 10])
    def test_against_brute_force(self, n):
        oracle = brute_force_distribution(n)
        dist = distribution(evolve(QubitState.symmetric(), CoinMatrix.hadamard(), n))
        for x in dist.probs:
            assert float(dist.at(x)) == pytest.approx(oracle.get(x, 0.0), abs=1e-12)

    @pytest.mark.parametrize(
        "n,expected",
        [
            (0, DyadicRational(1)),
            (2, DyadicRational(1, 1)),
            (4, DyadicRational(1, 3)),
            (6, DyadicRational(1, 3)),
            (8, DyadicRational(9, 7)),
            (16, DyadicRational(1225, 15)),
        ],
    )
    def test_return_probability_values(self, n, expected):
        assert return_probability_direct(n) == expected

    @pytest.mark.parametrize("n", [1, 3, 7, 99])
    def test_odd_time_returns_zero(self, n):
        assert return_probability_direct(n) == DyadicRational(0)

    def test_conservation_symmetry_parity(self):
        coin = CoinMatrix.hadamard()
        psi = WaveFunction.point_mass(QubitState.symmetric())
        for _ in range(60):
            psi = psi.step(coin)
            dist = distribution(psi)
            assert psi.norm_sq_total() == DyadicRational(1)
            assert dist.total() == DyadicRational(1)
            assert all(dist.at(x) == dist.at(-x) for x in dist.probs)
            # off-parity positions hold no amplitude
            for x in range(-psi.time, psi.time + 1):
                if (x - psi.time) % 2 != 0:
                    gl, gr = psi.cores(x)
                    assert gl.is_zero() and gr.is_zero()

    def test_asymmetric_initial_qubit(self):
        left_only = QubitState(
            ScaledAmplitude(GaussianInteger(1), 0), ScaledAmplitude(G_ZERO)
        )
        dist = distribution(evolve(left_only, CoinMatrix.hadamard(), 6))
        assert dist.total() == DyadicRational(1)
        assert dist.at(-2) != dist.at(2)

    def test_exact_state_rejects_float_coin(self):
        psi = WaveFunction.point_mass(QubitState.symmetric())
        float_coin = CoinMatrix.unitary(2**-0.5, 2**-0.5, 2**-0.5, -(2**-0.5))
        with pytest.raises(TypeError):
            step(psi, float_coin)


class TestFloatEngine:
    def test_matches_exact_engine(self):
        r = 2**-0.5
        coin = CoinMatrix.unitary(r, r, r, -r)
        psi_f = FloatWaveFunction.point_mass(QubitState.symmetric())
        psi_e = WaveFunction.point_mass(QubitState.symmetric())
        hadamard = CoinMatrix.hadamard()
        for _ in range(60):
            psi_f = psi_f.step(coin)
            psi_e = psi_e.step(hadamard)
        exact = distribution(psi_e)
        floats = distribution(psi_f)
        assert set(floats) == set(exact.probs)
        for x, p in floats.items():
            assert p == pytest.approx(float(exact.at(x)), abs=1e-12)

    def test_general_coin_normalization(self):
        coin = CoinMatrix.unitary(0.6, 0.8j, 0.8j, 0.6)
        psi = evolve(QubitState.symmetric(), coin, 40)
        probs = distribution(psi)
        assert sum(probs.values()) == pytest.approx(1.0, abs=1e-12)

    def test_step_dispatch_demotes_exact_coin(self):
        psi = FloatWaveFunction.point_mass(QubitState.symmetric())
        out = step(psi, CoinMatrix.hadamard())
        assert isinstance(out, FloatWaveFunction)
