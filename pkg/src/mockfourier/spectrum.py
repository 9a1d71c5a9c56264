"""Spectrum levels ``Lambda_0 = -(cycle points)``, ``Lambda_{n+1} = R Lambda_n + L``,
and partial Fourier sums over them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Optional

import numpy as np

from .cycles import HadamardPair, find_extreme_cycles
from .errors import SpectrumOverflow

INT64_MAX = np.iinfo(np.int64).max


class LevelStats(NamedTuple):
    min: Fraction
    max: Fraction
    cardinality: int
    density: Optional[float]  # only when every element is an integer


@dataclass(frozen=True, eq=False)
class SpectrumLevel:
    """``Lambda_n`` stored as sorted int64 numerators over the common denominator ``d``."""

    n: int
    numerators: np.ndarray
    d: int

    def __len__(self):
        return int(self.numerators.size)

    @property
    def elements(self) -> list[Fraction]:
        return [Fraction(int(k), self.d) for k in self.numerators]

    @property
    def values(self) -> np.ndarray:
        return self.numerators / self.d

    def __contains__(self, lam) -> bool:
        lam = Fraction(lam)
        if (lam * self.d).denominator != 1:
            return False
        k = int(lam * self.d)
        i = np.searchsorted(self.numerators, k)
        return i < self.numerators.size and self.numerators[i] == k


def lambda0(pair: HadamardPair) -> SpectrumLevel:
    d = pair.system.d
    ks = sorted({-int(x * d) for c in find_extreme_cycles(pair) for x in c.points})
    return SpectrumLevel(0, np.asarray(ks, dtype=np.int64), d)


def next_level(pair: HadamardPair, level: SpectrumLevel) -> SpectrumLevel:
    R, d = pair.R, level.d
    big = max(abs(int(level.numerators[0])), abs(int(level.numerators[-1])))
    if R * big + max(abs(l) for l in pair.L) * d > INT64_MAX:
        raise SpectrumOverflow(f"level {level.n + 1} numerators exceed 64 bits")
    shifts = np.asarray(pair.L, dtype=np.int64) * d
    out = np.unique((R * level.numerators[:, None] + shifts[None, :]).ravel())
    # unique representation R*lam + l
    assert out.size == level.numerators.size * pair.N, "non-unique representation"
    return SpectrumLevel(level.n + 1, out, d)


def spectrum_level(pair: HadamardPair, n: int) -> SpectrumLevel:
    level = lambda0(pair)
    for _ in range(n):
        level = next_level(pair, level)
    return level


def spectrum_levels(pair: HadamardPair, n_max: int) -> list[SpectrumLevel]:
    levels = [lambda0(pair)]
    for _ in range(n_max):
        levels.append(next_level(pair, levels[-1]))
    return levels


def level_stats(level: SpectrumLevel) -> LevelStats:
    lo, hi = int(level.numerators[0]), int(level.numerators[-1])
    density = None
    if not np.any(level.numerators % level.d):
        density = len(level) / ((hi - lo) // level.d + 1)
    return LevelStats(Fraction(lo, level.d), Fraction(hi, level.d), len(level), density)


def fourier_coeff(pair: HadamardPair, f: Callable, lam, backend) -> complex:
    """``int f(y) exp(-2 pi i lam y) dmu(y)`` with a WordQuadrature or EltonSampler backend."""
    lam = float(lam)
    return complex(backend.integrate(lambda y: f(y) * np.exp(-2j * np.pi * lam * y)))


def fourier_coeffs(pair: HadamardPair, f: Callable, level: SpectrumLevel, backend) -> np.ndarray:
    return np.array([fourier_coeff(pair, f, lam, backend) for lam in level.values])


def partial_sum(pair: HadamardPair, f: Callable, n: int, x, backend, level=None):
    """``s_n(f; x) = sum_{lam in Lambda_n} <f, e_lam> e_lam(x)``."""
    level = level if level is not None else spectrum_level(pair, n)
    coeffs = fourier_coeffs(pair, f, level, backend)
    x = np.asarray(x, dtype=float)
    out = np.exp(2j * np.pi * np.multiply.outer(x, level.values)) @ coeffs
    return complex(out) if out.ndim == 0 else out
