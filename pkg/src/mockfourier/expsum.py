"""Finite exponential sums ``x -> sum_j c_j exp(2 pi i f_j x)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .ifs import IfsSystem

if TYPE_CHECKING:
    from .cycles import ExtremeCycle, HadamardPair

TWO_PI = 2.0 * np.pi
ZERO_FACTOR = 1e-15


@dataclass(frozen=True)
class ExpSum:
    """Frequencies are exact rationals; they become floats only at the trig call."""

    frequencies: tuple[Fraction, ...]
    coefficients: tuple[complex, ...]

    def __post_init__(self):
        if len(self.frequencies) != len(self.coefficients):
            raise ValueError("frequencies and coefficients differ in length")
        if len(set(self.frequencies)) != len(self.frequencies):
            raise ValueError("frequencies must be pairwise distinct")

    @classmethod
    def from_terms(cls, terms: Iterable[tuple]) -> "ExpSum":
        terms = list(terms)
        return cls(
            tuple(Fraction(f) for f, _ in terms),
            tuple(complex(c) for _, c in terms),
        )

    def __len__(self):
        return len(self.frequencies)

    def coefficient_sum(self) -> complex:
        return complex(sum(self.coefficients))

    def __call__(self, x):
        if isinstance(x, Rational):
            return self._eval_exact(Fraction(x))
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape, dtype=complex)
        for f, c in zip(self.frequencies, self.coefficients):
            out += c * np.exp(1j * TWO_PI * float(f) * x)
        return out if out.ndim else complex(out)

    def _eval_exact(self, x: Fraction) -> complex:
        # reduce the phase mod 1 in exact arithmetic first
        total = 0j
        for f, c in zip(self.frequencies, self.coefficients):
            phase = (f * x) % 1
            total += c * np.exp(1j * TWO_PI * float(phase))
        return complex(total)


def _uniform(digits: Sequence[int]) -> ExpSum:
    n = len(digits)
    return ExpSum(tuple(Fraction(b) for b in digits), (1.0 / n,) * n)


def m_B(system: IfsSystem) -> ExpSum:
    return _uniform(system.B)


def m_L(pair: "HadamardPair") -> ExpSum:
    return _uniform(pair.L)


def m_c_from_cycles(cycles: Sequence["ExtremeCycle"]) -> ExpSum:
    """``sum_c exp(-2 pi i c x)`` over every extreme cycle point ``c``."""
    points = [c for cyc in cycles for c in cyc.points]
    return ExpSum(tuple(-c for c in points), (1.0 + 0j,) * len(points))


def qmf_check(pair: "HadamardPair", x) -> tuple[float, float]:
    """Return ``(sum_l |m_B(sigma_l x)|**2, sum_b |m_L(tau_b x)|**2)``; both are 1."""
    R = pair.system.R
    mb, ml = m_B(pair.system), m_L(pair)
    x = np.asarray(x, dtype=float)
    first = sum(np.abs(mb((x + l) / R)) ** 2 for l in pair.L)
    second = sum(np.abs(ml((x + b) / R)) ** 2 for b in pair.system.B)
    if x.ndim == 0:
        return float(first), float(second)
    return first, second


def mu_hat(system: IfsSystem, t, depth: int) -> complex:
    """Truncated Fourier transform ``prod_{k=1}^{depth} m_B(R**-k t)`` of the measure.

    A factor of modulus below 1e-15 is an analytic zero and short-circuits
    the product to exactly 0.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    mb = m_B(system)
    t = Fraction(t)
    prod = 1 + 0j
    for k in range(1, depth + 1):
        factor = mb(t / system.R**k)
        if abs(factor) < ZERO_FACTOR:
            return 0j
        prod *= factor
    return prod
