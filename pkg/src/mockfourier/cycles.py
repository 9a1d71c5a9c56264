"""Hadamard pairs and the finite search for extreme L-cycles.

Cycle points live on the lattice ``(1/d) Z`` with ``d = gcd(B)``; all cycle
logic works on integer numerators ``k`` of ``k / d`` so divisibility tests
are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    CongruentDigits,
    CongruentElements,
    DuplicateDigit,
    MissingZero,
    NotUnitary,
    SizeMismatch,
)
from .expsum import m_B
from .ifs import IfsSystem, check_digits

UNITARY_TOL = 1e-10
EXTREME_TOL = 1e-12


@dataclass(frozen=True)
class HadamardPair:
    system: IfsSystem
    L: tuple[int, ...]
    unitarity_defect: float = 0.0

    @property
    def R(self) -> int:
        return self.system.R

    @property
    def B(self) -> tuple[int, ...]:
        return self.system.B

    @property
    def N(self) -> int:
        return self.system.N

    def swapped(self) -> "HadamardPair":
        """The pair with the roles of ``B`` and ``L`` exchanged (same matrix, transposed)."""
        return check_hadamard(IfsSystem(self.R, self.L), self.B)

    def label(self) -> str:
        join = lambda s: ",".join(map(str, s))
        return f"R={self.R};B={join(self.B)};L={join(self.L)}"


def hadamard_matrix(R: int, B: Sequence[int], L: Sequence[int]) -> np.ndarray:
    # b*l is an exact integer; reduce mod R before the trig call
    phase = np.mod(np.asarray(B)[:, None] * np.asarray(L)[None, :], R) / R
    return np.exp(2j * np.pi * phase) / math.sqrt(len(B))


def check_hadamard(system: IfsSystem, L: Sequence[int]) -> HadamardPair:
    L = [int(l) for l in L]
    if len(L) != system.N:
        raise SizeMismatch(f"|L| = {len(L)} but |B| = {system.N}")
    if 0 not in L:
        raise MissingZero(f"0 must belong to L={L}")
    try:
        check_digits(system.R, L, what="L")
    except (CongruentDigits, DuplicateDigit) as exc:
        raise CongruentElements(str(exc)) from None
    M = hadamard_matrix(system.R, system.B, L)
    gram = M @ M.conj().T - np.eye(system.N)
    defect = float(np.linalg.norm(gram, 2))
    if np.abs(gram).max() > UNITARY_TOL:
        raise NotUnitary(defect)
    return HadamardPair(system, tuple(sorted(L)), defect)


@dataclass(frozen=True)
class ExtremeCycle:
    """Cycle points ``x_0..x_{p-1}`` with ``sigma_{digits[i]}(x_i) = x_{i+1 mod p}``."""

    points: tuple[Fraction, ...]
    digits: tuple[int, ...] = ()

    @property
    def period(self) -> int:
        return len(self.points)

    def __str__(self):
        return "{" + ",".join(str(p) for p in self.points) + "}"


@dataclass(frozen=True)
class CycleCheck:
    ok: bool
    reason: str = "ok"

    def __bool__(self):
        return self.ok


def _candidate_range(pair: HadamardPair) -> range:
    R, d = pair.R, pair.system.d
    lo = -((-d * min(pair.L)) // (R - 1))  # ceil
    hi = (d * max(pair.L)) // (R - 1)
    return range(lo, hi + 1)


def _successor(pair: HadamardPair, k: int) -> tuple[int, int] | None:
    """Unique ``(l, k')`` with ``sigma_l(k/d) = k'/d``, or None."""
    R, d = pair.R, pair.system.d
    hits = [l for l in pair.L if (k + l * d) % R == 0]
    assert len(hits) <= 1, f"two successors {hits} for {k}/{d}"
    if not hits:
        return None
    l = hits[0]
    return l, (k + l * d) // R


def _canonical(ks: list[int], ls: list[int], d: int) -> ExtremeCycle:
    i = ks.index(min(ks))
    ks, ls = ks[i:] + ks[:i], ls[i:] + ls[:i]
    return ExtremeCycle(tuple(Fraction(k, d) for k in ks), tuple(ls))


def find_extreme_cycles(pair: HadamardPair) -> list[ExtremeCycle]:
    """All extreme L-cycles, each starting at its smallest point, sorted.

    Every candidate ``k/d`` in ``[min L/(R-1), max L/(R-1)]`` is walked along
    its unique successor until a dead end or a revisit.
    """
    d = pair.system.d
    candidates = _candidate_range(pair)
    done: set[int] = set()
    found: dict[tuple, ExtremeCycle] = {}
    for start in candidates:
        path: list[int] = []
        digits: list[int] = []
        index: dict[int, int] = {}
        k = start
        while k not in index and k not in done and k in candidates:
            index[k] = len(path)
            path.append(k)
            step = _successor(pair, k)
            if step is None:
                break
            digits.append(step[0])
            k = step[1]
        else:
            if k in index:
                i = index[k]
                cyc = _canonical(path[i:], digits[i:], d)
                found[cyc.points] = cyc
        done.update(path)
    cycles = sorted(found.values(), key=lambda c: c.points[0])
    mb = m_B(pair.system)
    for cyc in cycles:
        for x in cyc.points:
            # automatic on the lattice; guards against a wrong d
            assert abs(abs(mb(x)) - 1.0) <= EXTREME_TOL, (x, mb(x))
    return cycles


def verify_cycle(pair: HadamardPair, cycle: ExtremeCycle) -> CycleCheck:
    """Re-check closure under the digit maps (exact) and ``|m_B| = 1`` on the cycle.

    When ``cycle.digits`` is empty the connecting digits are searched for.
    """
    pts = [Fraction(x) for x in cycle.points]
    p = len(pts)
    if p == 0:
        return CycleCheck(False, "empty")
    if cycle.digits and len(cycle.digits) != p:
        return CycleCheck(False, "digit count differs from period")
    R = pair.R
    for i, x in enumerate(pts):
        target = pts[(i + 1) % p]
        options = [cycle.digits[i]] if cycle.digits else list(pair.L)
        if cycle.digits and cycle.digits[i] not in pair.L:
            return CycleCheck(False, f"digit {cycle.digits[i]} not in L")
        if not any((x + l) / R == target for l in options):
            return CycleCheck(False, f"no digit maps {x} to {target}")
    mb = m_B(pair.system)
    for x in pts:
        if abs(abs(mb(x)) - 1.0) > EXTREME_TOL:
            return CycleCheck(False, f"|m_B({x})| != 1")
    return CycleCheck(True)
