"""State-vector evolution of the coined walk on the integer line.

Two engines share one stepping rule psi'(x) = P psi(x+1) + Q psi(x-1):
an exact engine for the Hadamard coin (Gaussian-integer cores under a shared
power of 1/sqrt(2)) and a float engine for arbitrary unitary coins.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exactnum import (
    G_I,
    G_ONE,
    G_ZERO,
    DyadicRational,
    GaussianInteger,
    ScaledAmplitude,
)

UNITARITY_TOL = 1e-12

_ZERO_PAIR = (G_ZERO, G_ZERO)


class CoinMatrix:
    """2x2 unitary coin [[a, b], [c, d]].

    The exact variant stores every entry as core * (1/sqrt2) with the core a
    Gaussian-integer unit or zero; only the Hadamard coin is built that way.
    """

    __slots__ = ("a", "b", "c", "d", "exact_cores")

    def __init__(
        self,
        a: complex,
        b: complex,
        c: complex,
        d: complex,
        exact_cores: tuple[GaussianInteger, ...] | None = None,
    ) -> None:
        self.a = complex(a)
        self.b = complex(b)
        self.c = complex(c)
        self.d = complex(d)
        self.exact_cores = exact_cores
        self._validate_unitary()

    @classmethod
    def hadamard(cls) -> CoinMatrix:
        r = 2.0**-0.5
        return cls(r, r, r, -r, exact_cores=(G_ONE, G_ONE, G_ONE, -G_ONE))

    @classmethod
    def unitary(cls, a: complex, b: complex, c: complex, d: complex) -> CoinMatrix:
        """Float coin; raises ValueError naming any violated unitarity condition."""
        return cls(a, b, c, d)

    @property
    def is_exact(self) -> bool:
        return self.exact_cores is not None

    def _validate_unitary(self) -> None:
        col1 = abs(self.a) ** 2 + abs(self.c) ** 2
        col2 = abs(self.b) ** 2 + abs(self.d) ** 2
        cross = self.a * self.b.conjugate() + self.c * self.d.conjugate()
        if abs(col1 - 1.0) > UNITARITY_TOL:
            raise ValueError(f"coin not unitary: |a|^2+|c|^2 = {col1!r}, expected 1")
        if abs(col2 - 1.0) > UNITARITY_TOL:
            raise ValueError(f"coin not unitary: |b|^2+|d|^2 = {col2!r}, expected 1")
        if abs(cross) > UNITARITY_TOL:
            raise ValueError(
                f"coin not unitary: a*conj(b)+c*conj(d) = {cross!r}, expected 0"
            )

    def __repr__(self) -> str:
        kind = "exact" if self.is_exact else "float"
        return f"CoinMatrix({self.a}, {self.b}, {self.c}, {self.d}; {kind})"


class QubitState:
    """Chirality qubit (left, right) with exactly unit norm."""

    __slots__ = ("left", "right")

    def __init__(self, left: ScaledAmplitude, right: ScaledAmplitude) -> None:
        total = left.probability() + right.probability()
        if total != 1:
            raise ValueError(f"initial qubit not normalized: |L|^2+|R|^2 = {total}")
        self.left = left
        self.right = right

    @classmethod
    def symmetric(cls) -> QubitState:
        """(1/sqrt2) [1, i]: the initial qubit giving a symmetric distribution."""
        return cls(ScaledAmplitude(G_ONE, 1), ScaledAmplitude(G_I, 1))

    def common_scale(self) -> tuple[GaussianInteger, GaussianInteger, int]:
        """Both cores under one shared exponent (parity permitting)."""
        e = max(self.left.scale_exp, self.right.scale_exp)
        try:
            return self.left.rescaled(e).core, self.right.rescaled(e).core, e
        except ValueError as exc:
            raise ValueError(
                "qubit components have incompatible scale parity; "
                "exact evolution cannot mix them"
            ) from exc

    def to_complex(self) -> tuple[complex, complex]:
        return complex(self.left), complex(self.right)


class WaveFunction:
    """Exact walk state: dense Gaussian-integer amplitude pairs on [-n, n]
    under one shared power of 1/sqrt(2)."""

    __slots__ = ("time", "scale_exp", "_pairs")

    def __init__(
        self,
        time: int,
        scale_exp: int,
        pairs: list[tuple[GaussianInteger, GaussianInteger]],
    ) -> None:
        if len(pairs) != 2 * time + 1:
            raise ValueError("amplitude storage must cover [-time, time]")
        self.time = time
        self.scale_exp = scale_exp
        self._pairs = pairs

    @classmethod
    def point_mass(cls, qubit: QubitState) -> WaveFunction:
        gl, gr, exp = qubit.common_scale()
        return cls(0, exp, [(gl, gr)])

    def amplitude(self, x: int) -> tuple[ScaledAmplitude, ScaledAmplitude]:
        gl, gr = self.cores(x)
        return (
            ScaledAmplitude(gl, self.scale_exp),
            ScaledAmplitude(gr, self.scale_exp),
        )

    def cores(self, x: int) -> tuple[GaussianInteger, GaussianInteger]:
        if abs(x) > self.time:
            return _ZERO_PAIR
        return self._pairs[x + self.time]

    def support(self) -> range:
        """Positions sharing the time's parity, from -n to n."""
        return range(-self.time, self.time + 1, 2)

    def step(self, coin: CoinMatrix) -> WaveFunction:
        if not coin.is_exact:
            raise TypeError("exact wavefunction stepped with a float coin")
        ca, cb, cc, cd = coin.exact_cores
        old = self._pairs
        n = len(old)
        new_l = [G_ZERO] * (n + 2)
        new_r = [G_ZERO] * (n + 2)
        # new x draws its P-part from old x+1 and its Q-part from old x-1;
        # with the center shifted by one the source index equals the target
        # index for the P-part and lags by two for the Q-part.  Amplitudes
        # live on the even indices only (position parity == time parity).
        for i in range(0, n, 2):
            gl, gr = old[i]
            new_l[i] = ca * gl + cb * gr
            new_r[i + 2] = cc * gl + cd * gr
        return WaveFunction(
            self.time + 1, self.scale_exp + 1, list(zip(new_l, new_r))
        )

    def norm_sq_total(self) -> DyadicRational:
        total = sum(gl.norm_sq() + gr.norm_sq() for gl, gr in self._pairs)
        return DyadicRational(total, self.scale_exp)


class FloatWaveFunction:
    """Float walk state for arbitrary unitary coins."""

    __slots__ = ("time", "left", "right")

    def __init__(self, time: int, left: np.ndarray, right: np.ndarray) -> None:
        self.time = time
        self.left = left
        self.right = right

    @classmethod
    def point_mass(cls, qubit: QubitState | tuple[complex, complex]) -> FloatWaveFunction:
        if isinstance(qubit, QubitState):
            l0, r0 = qubit.to_complex()
        else:
            l0, r0 = qubit
        return cls(0, np.array([l0], complex), np.array([r0], complex))

    def step(self, coin: CoinMatrix) -> FloatWaveFunction:
        n = self.left.size
        left = np.zeros(n + 2, complex)
        right = np.zeros(n + 2, complex)
        left[:-2] = coin.a * self.left + coin.b * self.right
        right[2:] = coin.c * self.left + coin.d * self.right
        return FloatWaveFunction(self.time + 1, left, right)

    def probabilities(self) -> dict[int, float]:
        probs = (np.abs(self.left) ** 2 + np.abs(self.right) ** 2).real
        t = self.time
        return {x: float(probs[x + t]) for x in range(-t, t + 1, 2)}


@dataclass(frozen=True)
class Distribution:
    """Exact position distribution at one time."""

    time: int
    probs: dict[int, DyadicRational]

    def total(self) -> DyadicRational:
        return sum(self.probs.values(), DyadicRational(0))

    def at(self, x: int) -> DyadicRational:
        return self.probs.get(x, DyadicRational(0))


def step(psi: WaveFunction | FloatWaveFunction, coin: CoinMatrix):
    """One time step; exact state requires the exact (Hadamard) coin."""
    if isinstance(psi, WaveFunction) and not coin.is_exact:
        raise TypeError("exact wavefunction stepped with a float coin")
    if isinstance(psi, FloatWaveFunction) and coin.is_exact:
        # exact coins carry float entries too, so demotion is well defined
        coin = CoinMatrix.unitary(coin.a, coin.b, coin.c, coin.d)
    return psi.step(coin)


def evolve(initial: QubitState, coin: CoinMatrix, n: int) -> WaveFunction | FloatWaveFunction:
    """n steps from a point mass at the origin."""
    if n < 0:
        raise ValueError("time must be nonnegative")
    psi: WaveFunction | FloatWaveFunction
    if coin.is_exact:
        psi = WaveFunction.point_mass(initial)
    else:
        psi = FloatWaveFunction.point_mass(initial)
    for _ in range(n):
        psi = psi.step(coin)
    return psi


def distribution(psi: WaveFunction | FloatWaveFunction) -> Distribution | dict[int, float]:
    """Position distribution; exact (dyadic) for the exact engine."""
    if isinstance(psi, FloatWaveFunction):
        return psi.probabilities()
    probs: dict[int, DyadicRational] = {}
    for x in psi.support():
        gl, gr = psi.cores(x)
        probs[x] = DyadicRational(gl.norm_sq() + gr.norm_sq(), psi.scale_exp)
    return Distribution(psi.time, probs)


def return_probability_direct(n: int) -> DyadicRational:
    """Exact p_n(0) for the Hadamard walk from the symmetric qubit."""
    if n < 0:
        raise ValueError("time must be nonnegative")
    if n % 2 == 1:
        return DyadicRational(0)
    psi = evolve(QubitState.symmetric(), CoinMatrix.hadamard(), n)
    assert isinstance(psi, WaveFunction)
    gl, gr = psi.cores(0)
    return DyadicRational(gl.norm_sq() + gr.norm_sq(), psi.scale_exp)
