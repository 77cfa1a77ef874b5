"""Exact arithmetic substrate: dyadic rationals, Gaussian integers, and
amplitudes of the form g * (1/sqrt(2))^s with g a Gaussian integer.

Every probability produced by the Hadamard walk is an exact dyadic rational,
and every amplitude lives in Z[i] * (1/sqrt(2))^s, so these three types are
enough to run the whole walk without a single rounding error.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from functools import total_ordering


@total_ordering
class DyadicRational:
    """numerator / 2^denom_exp, kept with the smallest possible exponent."""

    __slots__ = ("_num", "_exp")

    def __init__(self, numerator: int, denom_exp: int = 0) -> None:
        if denom_exp < 0:
            raise ValueError("denom_exp must be nonnegative")
        if numerator == 0:
            denom_exp = 0
        else:
            while numerator % 2 == 0 and denom_exp > 0:
                numerator //= 2
                denom_exp -= 1
        self._num = numerator
        self._exp = denom_exp

    @property
    def numerator(self) -> int:
        return self._num

    @property
    def denom_exp(self) -> int:
        return self._exp

    @classmethod
    def from_fraction(cls, q: Fraction) -> DyadicRational:
        d = q.denominator
        exp = d.bit_length() - 1
        if d != 1 << exp:
            raise ValueError(f"{q} is not dyadic (denominator {d})")
        return cls(q.numerator, exp)

    @classmethod
    def parse(cls, text: str) -> DyadicRational:
        """Inverse of str(); accepts the "n/2^k" wire format."""
        m = _re.fullmatch(r"\s*(-?\d+)/2\^(\d+)\s*", text)
        if m is None:
            raise ValueError(f"not a dyadic rational string: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def to_fraction(self) -> Fraction:
        return Fraction(self._num, 1 << self._exp)

    def to_decimal_string(self) -> str:
        """Exact terminating decimal expansion (n/2^k = n*5^k / 10^k)."""
        if self._exp == 0:
            return str(self._num)
        digits = self._num * 5**self._exp
        sign = "-" if digits < 0 else ""
        s = str(abs(digits)).rjust(self._exp + 1, "0")
        return f"{sign}{s[:-self._exp]}.{s[-self._exp:]}"

    def __str__(self) -> str:
        return f"{self._num}/2^{self._exp}"

    def __repr__(self) -> str:
        return f"DyadicRational({self._num}, {self._exp})"

    def __hash__(self) -> int:
        return hash((self._num, self._exp))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = DyadicRational(other)
        if isinstance(other, DyadicRational):
            return self._num == other._num and self._exp == other._exp
        return NotImplemented

    def __lt__(self, other: DyadicRational | int) -> bool:
        if isinstance(other, int):
            other = DyadicRational(other)
        e = max(self._exp, other._exp)
        return (self._num << (e - self._exp)) < (other._num << (e - other._exp))

    def __add__(self, other: DyadicRational | int) -> DyadicRational:
        if isinstance(other, int):
            other = DyadicRational(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        e = max(self._exp, other._exp)
        num = (self._num << (e - self._exp)) + (other._num << (e - other._exp))
        return DyadicRational(num, e)

    __radd__ = __add__

    def __neg__(self) -> DyadicRational:
        return DyadicRational(-self._num, self._exp)

    def __sub__(self, other: DyadicRational | int) -> DyadicRational:
        if isinstance(other, int):
            other = DyadicRational(other)
        return self + (-other)

    def __mul__(self, other: DyadicRational | int) -> DyadicRational:
        if isinstance(other, int):
            other = DyadicRational(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return DyadicRational(self._num * other._num, self._exp + other._exp)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return self._num / (1 << self._exp) if self._exp < 1024 else float(self.to_fraction())

    def __bool__(self) -> bool:
        return self._num != 0


DYADIC_ZERO = DyadicRational(0)
DYADIC_ONE = DyadicRational(1)


class GaussianInteger:
    """Element of Z[i] with arbitrary-precision components."""

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int = 0) -> None:
        self.re = re
        self.im = im

    def __repr__(self) -> str:
        return f"GaussianInteger({self.re}, {self.im})"

    def __str__(self) -> str:
        return f"{self.re}{self.im:+}i"

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = GaussianInteger(other)
        if isinstance(other, GaussianInteger):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __add__(self, other: GaussianInteger | int) -> GaussianInteger:
        if isinstance(other, int):
            other = GaussianInteger(other)
        if not isinstance(other, GaussianInteger):
            return NotImplemented
        return GaussianInteger(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianInteger:
        return GaussianInteger(-self.re, -self.im)

    def __sub__(self, other: GaussianInteger | int) -> GaussianInteger:
        if isinstance(other, int):
            other = GaussianInteger(other)
        return self + (-other)

    def __mul__(self, other: GaussianInteger | int) -> GaussianInteger:
        if isinstance(other, int):
            return GaussianInteger(self.re * other, self.im * other)
        if not isinstance(other, GaussianInteger):
            return NotImplemented
        return GaussianInteger(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> GaussianInteger:
        return GaussianInteger(self.re, -self.im)

    def times_i(self) -> GaussianInteger:
        return GaussianInteger(-self.im, self.re)

    def norm_sq(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


G_ZERO = GaussianInteger(0, 0)
G_ONE = GaussianInteger(1, 0)
G_I = GaussianInteger(0, 1)


class ScaledAmplitude:
    """core * (1/sqrt(2))^scale_exp, core a Gaussian integer.

    The ring is not closed under addition across an odd exponent gap
    (that would need sqrt(2) in the coefficients), so addition demands
    matching exponent parity.  The Hadamard walk always stays on one
    parity, which is why this representation suffices.
    """

    __slots__ = ("core", "scale_exp")

    def __init__(self, core: GaussianInteger, scale_exp: int = 0) -> None:
        if scale_exp < 0:
            raise ValueError("scale_exp must be nonnegative")
        # canonical: absorb factors of 2 into the exponent, zero at exponent 0
        if core.is_zero():
            scale_exp = 0
        else:
            while scale_exp >= 2 and core.re % 2 == 0 and core.im % 2 == 0:
                core = GaussianInteger(core.re // 2, core.im // 2)
                scale_exp -= 2
        self.core = core
        self.scale_exp = scale_exp

    @classmethod
    def zero(cls) -> ScaledAmplitude:
        return cls(G_ZERO, 0)

    def rescaled(self, scale_exp: int) -> ScaledAmplitude:
        """Same value at a larger exponent of matching parity."""
        diff = scale_exp - self.scale_exp
        if not self.core.is_zero():
            if diff < 0:
                raise ValueError("cannot lower the exponent of a canonical amplitude")
            if diff % 2 != 0:
                raise ValueError("exponent parity mismatch: sqrt(2) is not in Z[i]")
        out = ScaledAmplitude.__new__(ScaledAmplitude)
        out.core = self.core * (1 << (diff // 2)) if diff > 0 else self.core
        out.scale_exp = scale_exp
        return out

    def __repr__(self) -> str:
        return f"ScaledAmplitude({self.core!r}, {self.scale_exp})"

    def __str__(self) -> str:
        return f"({self.core}) * (1/sqrt2)^{self.scale_exp}"

    def __hash__(self) -> int:
        return hash((self.core, self.scale_exp))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScaledAmplitude):
            return NotImplemented
        return self.core == other.core and self.scale_exp == other.scale_exp

    def __add__(self, other: ScaledAmplitude) -> ScaledAmplitude:
        if not isinstance(other, ScaledAmplitude):
            return NotImplemented
        if self.core.is_zero():
            return other
        if other.core.is_zero():
            return self
        if (self.scale_exp - other.scale_exp) % 2 != 0:
            raise ValueError("exponent parity mismatch: sqrt(2) is not in Z[i]")
        e = max(self.scale_exp, other.scale_exp)
        return ScaledAmplitude(
            self.rescaled(e).core + other.rescaled(e).core, e
        )

    def __neg__(self) -> ScaledAmplitude:
        return ScaledAmplitude(-self.core, self.scale_exp)

    def __sub__(self, other: ScaledAmplitude) -> ScaledAmplitude:
        return self + (-other)

    def __mul__(self, other: ScaledAmplitude | GaussianInteger | int) -> ScaledAmplitude:
        if isinstance(other, (GaussianInteger, int)):
            return ScaledAmplitude(self.core * other, self.scale_exp)
        if not isinstance(other, ScaledAmplitude):
            return NotImplemented
        return ScaledAmplitude(self.core * other.core, self.scale_exp + other.scale_exp)

    def probability(self) -> DyadicRational:
        """|value|^2 = norm_sq(core) / 2^scale_exp, exactly."""
        return DyadicRational(self.core.norm_sq(), self.scale_exp)

    def __complex__(self) -> complex:
        return complex(self.core) * 2.0 ** (-self.scale_exp / 2.0)


def amplitude_prob(a: ScaledAmplitude) -> DyadicRational:
    """Exact Born probability of an amplitude."""
    return a.probability()
