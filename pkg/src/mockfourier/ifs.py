"""Affine iterated function systems x -> (x + b) / R and their invariant measure.

Two integration backends are provided for the invariant measure:

* :class:`WordQuadrature` averages over the ``N**depth`` cylinder anchors
  ``sum_k R**-k b_k`` (zero tail), i.e. the invariance equation iterated
  ``depth`` times and evaluated at a single point.
* :class:`EltonSampler` runs a random orbit of the IFS (chaos game) and
  returns a Birkhoff average.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.signal import lfilter

from .errors import (
    BudgetExceeded,
    CongruentDigits,
    DuplicateDigit,
    InvalidDigit,
    MissingZero,
    ScaleTooSmall,
)

DEFAULT_BUDGET = 2**24
BUDGET_ENV = "SFL_BUDGET"


def node_budget() -> int:
    """Maximum number of quadrature nodes; ``SFL_BUDGET`` overrides the default."""
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def check_budget(N: int, depth: int) -> None:
    budget = node_budget()
    if N**depth > budget:
        raise BudgetExceeded(f"{N}**{depth} = {N**depth} nodes exceeds budget {budget}")


def check_digits(R: int, digits: Sequence[int], what: str = "digits") -> None:
    """Shared checks for digit sets: contains 0, distinct, incongruent mod R."""
    if 0 not in digits:
        raise MissingZero(f"0 must belong to the {what} {list(digits)}")
    if len(set(digits)) != len(digits):
        raise DuplicateDigit(f"repeated element in {what} {list(digits)}")
    seen: dict[int, int] = {}
    for b in digits:
        r = b % R
        if r in seen:
            raise CongruentDigits(f"congruent digits {seen[r]} and {b} mod {R}")
        seen[r] = b


@dataclass(frozen=True)
class IfsSystem:
    """Scale ``R`` and digit set ``B`` (stored sorted)."""

    R: int
    B: tuple[int, ...]

    def __post_init__(self):
        if self.R <= 1:
            raise ScaleTooSmall(f"scale R must be > 1, got {self.R}")
        check_digits(self.R, self.B)
        object.__setattr__(self, "B", tuple(sorted(int(b) for b in self.B)))

    @property
    def N(self) -> int:
        return len(self.B)

    @property
    def d(self) -> int:
        g = math.gcd(*self.B)
        return g if g else 1

    @property
    def hausdorff_dim(self) -> float:
        return math.log(self.N) / math.log(self.R)

    @property
    def hull(self) -> tuple[float, float]:
        """Convex hull of the attractor."""
        return self.B[0] / (self.R - 1), self.B[-1] / (self.R - 1)

    def tau(self, b: int, x):
        return (x + b) / self.R


def validate_system(R: int, B: Sequence[int]) -> IfsSystem:
    B = [int(b) for b in B]
    if len(set(B)) != len(B):
        raise DuplicateDigit(f"repeated digit in B={B}")
    return IfsSystem(int(R), tuple(B))


def encode(system: IfsSystem, word: Sequence[int]) -> float:
    """Zero-tail encoding ``sum_k R**-k * word[k-1]`` of a finite digit word."""
    x = 0.0
    for b in reversed(word):
        if b not in system.B:
            raise InvalidDigit(f"{b} is not a digit of B={list(system.B)}")
        x = (x + b) / system.R
    return x


@lru_cache(maxsize=48)
def _nodes(system: IfsSystem, depth: int) -> np.ndarray:
    if depth == 0:
        out = np.zeros(1)
    else:
        prev = _nodes(system, depth - 1)
        B = np.asarray(system.B, dtype=float)
        out = ((B[:, None] + prev[None, :]) / system.R).ravel()
    out.setflags(write=False)
    return out


def word_nodes(system: IfsSystem, depth: int) -> np.ndarray:
    """Anchors of all depth-``depth`` words, first digit slowest-varying.

    Node ``i * N**(depth-1) + j`` is ``tau_{B[i]}`` applied to node ``j`` of
    the previous level, so ``nodes.reshape(N, -1)[i]`` is ``tau_{B[i]}(X)``.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    check_budget(system.N, depth)
    return _nodes(system, depth)


def _evaluate(f: Callable, x: np.ndarray) -> np.ndarray:
    return np.broadcast_to(np.asarray(f(x)), x.shape)


@dataclass(frozen=True)
class WordQuadrature:
    system: IfsSystem
    depth: int

    @property
    def n_nodes(self) -> int:
        return self.system.N**self.depth

    @property
    def weight(self) -> float:
        return 1.0 / self.n_nodes

    @property
    def nodes(self) -> np.ndarray:
        return word_nodes(self.system, self.depth)

    def integrate(self, f: Callable):
        return integrate_words(self.system, f, self.depth)


def integrate_words(system: IfsSystem, f: Callable, depth: int):
    """``N**-depth * sum_{|w| = depth} f(encode(w))``.

    ``f`` must accept a float array and return an array of the same shape
    (real or complex) or a scalar.
    """
    x = word_nodes(system, depth)
    return _evaluate(f, x).sum() / x.size


@dataclass(frozen=True)
class EltonSampler:
    system: IfsSystem
    seed: int = 0
    burn_in: int = 1000
    orbit_length: int = 10**6
    x0: float = 0.0

    def __post_init__(self):
        if self.burn_in < 0 or self.orbit_length <= 0:
            raise ValueError("burn_in must be >= 0 and orbit_length > 0")

    def digits(self) -> np.ndarray:
        """Digit sequence, one draw per step; Philox is counter based."""
        rng = np.random.Generator(np.random.Philox(key=self.seed))
        idx = rng.integers(0, self.system.N, size=self.burn_in + self.orbit_length)
        return np.asarray(self.system.B, dtype=float)[idx]

    def full_orbit(self) -> np.ndarray:
        """All ``burn_in + orbit_length`` points, transient included."""
        R = self.system.R
        # y[j] = (y[j-1] + b[j]) / R with y[-1] = x0
        return lfilter([1.0 / R], [1.0, -1.0 / R], self.digits(), zi=[self.x0 / R])[0]

    def orbit(self) -> np.ndarray:
        return self.full_orbit()[self.burn_in:]

    def integrate(self, f: Callable):
        return integrate_elton(self, f)


def elton_orbit(sampler: EltonSampler) -> np.ndarray:
    return sampler.orbit()


def integrate_elton(sampler: EltonSampler, f: Callable):
    x = sampler.orbit()
    return _evaluate(f, x).mean()
