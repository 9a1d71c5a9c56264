"""Mahler measure of digit polynomials ``p_L(z) = sum_{l in L} z**l``.

Two routes: the root product ``|a| prod max(1, |z_k|)`` (roots by Aberth
simultaneous iteration) and a midpoint rule for ``exp int_0^1 log|p(e(x))| dx``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import BudgetExceeded, DuplicateExponent, NoConvergence
from .ifs import node_budget

STEP_TOL = 1e-14
MAX_ITER = 1000
RESIDUAL_TOL = 1e-10
LOG_FLOOR = 1e-15


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...]  # ascending degree
    shift: int = 0
    origin: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        c = list(self.coefficients)
        if not c or c[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        if c[0] == 0:
            raise ValueError("constant term must be nonzero (shift out powers of z)")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, np.asarray(self.coefficients, dtype=float))

    def derivative(self, z):
        c = np.polynomial.polynomial.polyder(np.asarray(self.coefficients, dtype=float))
        return np.polynomial.polynomial.polyval(z, c)

    def __str__(self):
        terms = []
        for k, a in enumerate(self.coefficients):
            if a:
                mono = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
                terms.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(terms)


def poly_from_L(L: Sequence[int]) -> IntPolynomial:
    L = [int(l) for l in L]
    if not L:
        raise ValueError("L must be nonempty")
    if len(set(L)) != len(L):
        raise DuplicateExponent(f"repeated exponent in {L}")
    lo = min(L)
    coeffs = [0] * (max(L) - lo + 1)
    for l in L:
        coeffs[l - lo] = 1
    return IntPolynomial(tuple(coeffs), shift=lo, origin=tuple(sorted(L)))


@dataclass(frozen=True)
class RootSet:
    roots: np.ndarray
    residual: float  # max |p(root)|
    iterations: int


def roots(p: IntPolynomial) -> RootSet:
    """All complex roots by Aberth-Ehrlich iteration.

    Starts on a circle of radius ``1 + max|a_k / a_n|``; stops once every
    step is below ``1e-14`` relative, or after 1000 sweeps.
    """
    n = p.degree
    if n < 1:
        raise ValueError("degree must be >= 1")
    a = np.asarray(p.coefficients, dtype=float)
    radius = 1.0 + np.max(np.abs(a[:-1] / a[-1]))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    it = 0
    for it in range(1, MAX_ITER + 1):
        w = p(z) / p.derivative(z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        step = w / (1.0 - w * inv.sum(axis=1))
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
        if np.all(np.abs(step) <= STEP_TOL * np.maximum(1.0, np.abs(z))):
            break
    residual = float(np.max(np.abs(p(z))))
    scale = float(np.max(np.polynomial.polynomial.polyval(np.abs(z), np.abs(a))))
    if residual > RESIDUAL_TOL * scale:
        raise NoConvergence(f"residual {residual:.3e} after {it} iterations")
    order = np.lexsort((z.imag, z.real))
    return RootSet(z[order], residual, it)


def mahler_roots(p: IntPolynomial) -> float:
    lead = abs(p.coefficients[-1])
    if p.degree == 0:
        return float(lead)
    mods = np.abs(roots(p).roots)
    return float(lead * np.prod(np.maximum(1.0, mods)))


def mahler_quadrature(p: IntPolynomial, K: int = 2**20, return_clamps: bool = False):
    """``exp`` of the K-point midpoint average of ``log|p(exp(2 pi i x))|``."""
    if K < 1024:
        raise ValueError("K must be >= 1024")
    x = (np.arange(K) + 0.5) / K
    mod = np.abs(p(np.exp(2j * np.pi * x)))
    clamped = mod < LOG_FLOOR
    value = math.exp(np.log(np.where(clamped, LOG_FLOOR, mod)).mean())
    return (value, int(clamped.sum())) if return_clamps else value


@lru_cache(maxsize=4096)
def _mahler_cached(coefficients: tuple[int, ...]) -> float:
    return mahler_roots(IntPolynomial(coefficients))


def search_dr(R: int, digit_bound: int, top: int = 10) -> list[tuple[tuple[int, ...], float]]:
    """Rank complete residue systems ``L`` mod ``R`` with ``0 in L``, ``0 <= l <= digit_bound``.

    Returns the ``top`` largest Mahler measures, ties (to 1e-9) broken by the
    lexicographically smallest ``L``.  This is the best value found under the
    digit bound, not the supremum over all residue systems.
    """
    if R < 2:
        raise ValueError("R must be >= 2")
    choices = [list(range(r, digit_bound + 1, R)) for r in range(1, R)]
    count = math.prod(len(c) for c in choices)
    if count == 0:
        return []
    if count > node_budget():
        raise BudgetExceeded(f"{count} candidate residue systems exceed the budget")
    bound = math.sqrt(R) + 1e-9
    results = []
    for pick in itertools.product(*choices):
        L = (0,) + tuple(sorted(pick))
        value = _mahler_cached(poly_from_L(L).coefficients)
        assert value <= bound, (L, value)
        results.append((L, value))
    results.sort(key=lambda t: (-round(t[1], 9), t[0]))
    return results[:top]
