"""Ergodic constant ``Delta(N m_L)`` and the Ruelle operator ``R_L`` on cylinder anchors.

A :class:`CellFunction` of depth ``m`` holds one value per depth-``m`` digit
word, sampled at the word's anchor.  Since ``tau_b`` of the anchor of ``w``
is the anchor of ``bw``, one application of ``R_L`` maps depth ``m`` to depth
``m - 1`` without any interpolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cycles import HadamardPair, find_extreme_cycles
from .dirichlet import DEFAULT_MARGIN, cycle_sum, l1_norm
from .errors import DepthExhausted, ExcessClamping
from .expsum import m_L
from .ifs import EltonSampler, WordQuadrature, check_budget, word_nodes

LOG_FLOOR = 1e-15
MAX_CLAMP_FRACTION = 1e-3
ZERO_THRESHOLD = 1e-6


@dataclass(frozen=True)
class DeltaEstimate:
    value: float
    method: str
    depth: Optional[int] = None
    orbit_length: Optional[int] = None
    seed: Optional[int] = None
    clamp_count: int = 0
    n_samples: int = 0


def _log_abs_NmL(pair: HadamardPair, x: np.ndarray) -> tuple[np.ndarray, int]:
    mod = np.abs(pair.N * m_L(pair)(x))
    clamped = mod < LOG_FLOOR
    return np.log(np.where(clamped, LOG_FLOOR, mod)), int(clamped.sum())


def delta_estimate(
    pair: HadamardPair,
    method: str = "word",
    *,
    depth: int = 22,
    orbit_length: int = 10**6,
    burn_in: int = 1000,
    seed: int = 0,
) -> DeltaEstimate:
    """``exp(int log|N m_L| dmu)``, by word average or Elton orbit."""
    if method == "word":
        x = word_nodes(pair.system, depth)
        params = dict(depth=depth)
    elif method == "elton":
        x = EltonSampler(pair.system, seed, burn_in, orbit_length).orbit()
        params = dict(orbit_length=orbit_length, seed=seed)
    else:
        raise ValueError(f"unknown method {method!r}")
    logs, clamps = _log_abs_NmL(pair, x)
    if clamps >= MAX_CLAMP_FRACTION * x.size:
        raise ExcessClamping(f"{clamps} of {x.size} samples hit the log floor")
    return DeltaEstimate(math.exp(logs.mean()), method, clamp_count=clamps, n_samples=x.size, **params)


@dataclass(frozen=True, eq=False)
class CellFunction:
    pair: HadamardPair
    depth: int
    values: np.ndarray

    @classmethod
    def constant(cls, pair: HadamardPair, depth: int, value: float = 1.0) -> "CellFunction":
        check_budget(pair.N, depth)
        return cls(pair, depth, np.full(pair.N**depth, float(value)))

    @property
    def nodes(self) -> np.ndarray:
        return word_nodes(self.pair.system, self.depth)

    def integrate(self, weight=None) -> float:
        """``int f * weight dmu`` as an anchor average."""
        v = self.values if weight is None else self.values * weight(self.nodes)
        return float(np.real(v.mean()))


def _ruelle_weights(pair: HadamardPair, depth: int) -> np.ndarray:
    return np.abs(m_L(pair)(word_nodes(pair.system, depth))).reshape(pair.N, -1)


def ruelle_apply(pair: HadamardPair, f: CellFunction) -> CellFunction:
    """``(R_L f)(x_w) = sum_b |m_L(x_{bw})| f(x_{bw})``; depth drops by one."""
    if f.depth < 1:
        raise DepthExhausted("cannot apply R_L to a depth-0 cell function")
    w = _ruelle_weights(pair, f.depth)
    g = (w * f.values.reshape(pair.N, -1)).sum(axis=0)
    return CellFunction(pair, f.depth - 1, g)


def ruelle_iterates(pair: HadamardPair, n: int, depth: int) -> CellFunction:
    """``R_L**n 1`` sampled at depth ``depth - n``."""
    if n > depth:
        raise DepthExhausted(f"n = {n} exceeds depth {depth}")
    f = CellFunction.constant(pair, depth)
    for _ in range(n):
        f = ruelle_apply(pair, f)
    return f


def ruelle_sup_series(pair: HadamardPair, depth: int) -> np.ndarray:
    """``sup R_L**n 1`` for ``n = 0..depth`` from one bottom-up pass."""
    f = CellFunction.constant(pair, depth)
    sups = [1.0]
    for _ in range(depth):
        f = ruelle_apply(pair, f)
        sups.append(float(f.values.max()))
    return np.array(sups)


def ruelle_power_sup(pair: HadamardPair, n: int, depth: Optional[int] = None) -> float:
    """Level-``n`` estimate ``(sup R_L**n 1) ** (1/n)`` of the growth constant.

    The sup is taken over the depth ``depth - n`` anchors, so the default
    ``depth = n + 6`` leaves ``N**6`` sample points rather than only ``x = 0``.
    """
    depth = n + DEFAULT_MARGIN if depth is None else depth
    if n < 1:
        raise ValueError("n must be >= 1")
    return float(ruelle_iterates(pair, n, depth).values.max()) ** (1.0 / n)


def ruelle_l1_identity(pair: HadamardPair, n: int, depth: Optional[int] = None) -> tuple[float, float]:
    """Both sides of ``||D_n||_1 = int |m_c| R_L**n 1 dmu`` at matched depth."""
    depth = n + DEFAULT_MARGIN if depth is None else depth
    g = ruelle_iterates(pair, n, depth)
    m_c = cycle_sum(pair)
    lhs = g.integrate(lambda x: np.abs(m_c(x)))
    rhs = l1_norm(pair, n, WordQuadrature(pair.system, depth))
    return lhs, rhs


@dataclass
class FixedPointReport:
    h: CellFunction
    eigenvalue: float
    factors: list
    min_value: float
    near_zeros: np.ndarray  # anchors where h < ZERO_THRESHOLD


def fixed_point_iterate(pair: HadamardPair, depth: int, iters: int) -> FixedPointReport:
    """Power iteration ``h <- R_L h / max(R_L h)`` from ``h = 1``.

    Each step consumes one level, so ``iters <= depth``; the last scaling
    factor estimates the leading eigenvalue.
    """
    if iters > depth:
        raise DepthExhausted(f"iters = {iters} exceeds depth {depth}")
    h = CellFunction.constant(pair, depth)
    factors = []
    for _ in range(iters):
        g = ruelle_apply(pair, h)
        top = float(g.values.max())
        factors.append(top)
        h = CellFunction(pair, g.depth, g.values / top)
    near = h.nodes[h.values < ZERO_THRESHOLD]
    return FixedPointReport(h, factors[-1] if factors else 1.0, factors, float(h.values.min()), near)


def extreme_b_cycles(pair: HadamardPair):
    """Extreme B-cycles: cycles of ``tau_b`` on which ``|m_L| = 1``."""
    return find_extreme_cycles(pair.swapped())
