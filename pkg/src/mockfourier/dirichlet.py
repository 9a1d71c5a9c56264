"""Dirichlet kernels over spectrum levels and their L1(mu) norms."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .cycles import HadamardPair, find_extreme_cycles
from .errors import DepthTooShallow, InsufficientData
from .expsum import ExpSum, m_c_from_cycles, m_L
from .ifs import EltonSampler, WordQuadrature, word_nodes
from .spectrum import SpectrumLevel

DEFAULT_MARGIN = 6
MIN_DEPTH_MARGIN = 2
_CHUNK = 1 << 22


def dirichlet_direct(level: SpectrumLevel, x):
    """``D_n(x) = sum_{lam in Lambda_n} exp(2 pi i lam x)`` by direct summation."""
    x = np.asarray(x, dtype=float)
    flat = x.ravel()
    lam = level.values
    out = np.empty(flat.size, dtype=complex)
    step = max(1, _CHUNK // max(lam.size, 1))
    for i in range(0, flat.size, step):
        block = flat[i:i + step]
        out[i:i + step] = np.exp(2j * np.pi * np.multiply.outer(block, lam)).sum(axis=1)
    out = out.reshape(x.shape)
    return complex(out) if out.ndim == 0 else out


def cycle_sum(pair: HadamardPair) -> ExpSum:
    return m_c_from_cycles(find_extreme_cycles(pair))


def dirichlet_product(pair: HadamardPair, m_c: ExpSum, n: int, x):
    """``N**n m_c(R**n x) prod_{k<n} m_L(R**k x)``."""
    x = np.asarray(x, dtype=float)
    ml = m_L(pair)
    out = pair.N**n * np.asarray(m_c(pair.R**n * x), dtype=complex)
    for k in range(n):
        out = out * ml(pair.R**k * x)
    return complex(out) if out.ndim == 0 else out


def abs_kernel_on_words(pair: HadamardPair, n: int, depth: int, m_c: ExpSum | None = None) -> np.ndarray:
    """``|D_n|`` at every depth-``depth`` anchor, in :func:`word_nodes` order.

    ``R**k x_v`` differs from the anchor of ``v`` with its first ``k`` digits
    removed by a multiple of ``d``, and both ``|m_L|`` and ``|m_c|`` are
    ``d``-periodic, so every factor is read off a shallower level exactly.
    """
    if depth < n:
        raise DepthTooShallow(f"depth {depth} < n = {n}")
    m_c = m_c if m_c is not None else cycle_sum(pair)
    ml = m_L(pair)
    system, N = pair.system, pair.N
    prod = np.empty(N**depth)
    prod.reshape(N**n, -1)[:] = np.abs(m_c(word_nodes(system, depth - n)))[None, :]
    for k in range(n):
        prod.reshape(N**k, -1)[:] *= np.abs(ml(word_nodes(system, depth - k)))[None, :]
    prod *= float(N**n)
    return prod


def abs_kernel_on_orbit(pair: HadamardPair, n: int, sampler: EltonSampler, m_c: ExpSum | None = None) -> np.ndarray:
    """``|D_n|`` along an Elton orbit, using ``R x_j = x_{j-1} + b_j``."""
    if sampler.burn_in < n:
        raise DepthTooShallow(f"burn_in {sampler.burn_in} < n = {n}")
    m_c = m_c if m_c is not None else cycle_sum(pair)
    full = sampler.full_orbit()
    start, total = sampler.burn_in, full.size
    a = np.abs(m_L(pair)(full))
    prod = np.abs(m_c(full[start - n:total - n]))
    for k in range(n):
        prod = prod * a[start - k:total - k]
    return pair.N**n * prod


def l1_norm(pair: HadamardPair, n: int, backend=None, *, margin: int = DEFAULT_MARGIN) -> float:
    """Estimate ``||D_n||_1 = int |D_n| dmu`` from the product formula.

    ``backend`` is a :class:`WordQuadrature` (default depth ``n + margin``) or
    an :class:`EltonSampler`.
    """
    if backend is None:
        backend = WordQuadrature(pair.system, n + margin)
    if isinstance(backend, EltonSampler):
        return float(abs_kernel_on_orbit(pair, n, backend).mean())
    if backend.depth < n + MIN_DEPTH_MARGIN:
        raise DepthTooShallow(
            f"depth {backend.depth} < n + {MIN_DEPTH_MARGIN}: integrand oscillates at scale R**-{n}"
        )
    return float(abs_kernel_on_words(pair, n, backend.depth).mean())


@dataclass
class KernelNormSeries:
    pair_id: str
    entries: list = field(default_factory=list)  # (n, norm, backend, depth, seed)

    @property
    def ns(self) -> np.ndarray:
        return np.array([e[0] for e in self.entries])

    @property
    def norms(self) -> np.ndarray:
        return np.array([e[1] for e in self.entries])

    @property
    def fitted_rho(self) -> float:
        return growth_rate(self)


def kernel_norm_series(
    pair: HadamardPair,
    ns: Sequence[int],
    *,
    backend: str = "word",
    margin: int = DEFAULT_MARGIN,
    depth: Optional[int] = None,
    orbit_length: int = 10**6,
    burn_in: int = 1000,
    seed: int = 0,
) -> KernelNormSeries:
    """``||D_n||_1`` for each ``n``; word depth is ``depth`` if given, else ``n + margin``."""
    series = KernelNormSeries(pair.label())
    m_c = cycle_sum(pair)
    sampler = None
    if backend == "elton":
        sampler = EltonSampler(pair.system, seed=seed, burn_in=max(burn_in, max(ns)), orbit_length=orbit_length)
    for n in sorted(ns):
        if sampler is not None:
            norm = float(abs_kernel_on_orbit(pair, n, sampler, m_c).mean())
            series.entries.append((n, norm, "elton", orbit_length, seed))
        else:
            m = depth if depth is not None else n + margin
            if m < n + MIN_DEPTH_MARGIN:
                raise DepthTooShallow(f"depth {m} < n + {MIN_DEPTH_MARGIN}")
            norm = float(abs_kernel_on_words(pair, n, m, m_c).mean())
            series.entries.append((n, norm, "word", m, None))
    return series


def fit_rho(ns: Sequence[float], norms: Sequence[float]) -> float:
    """``exp`` of the least-squares slope of ``log norm`` against ``n``."""
    ns = np.asarray(ns, dtype=float)
    norms = np.asarray(norms, dtype=float)
    if ns.size < 3:
        raise InsufficientData(f"need at least 3 points, got {ns.size}")
    slope = np.polyfit(ns, np.log(norms), 1)[0]
    return math.exp(slope)


def growth_rate(series: KernelNormSeries, window: Optional[tuple[int, int]] = None) -> float:
    """Fitted growth factor over ``window = (n_lo, n_hi)`` inclusive; default drops n < 3."""
    ns, norms = series.ns, series.norms
    lo, hi = window if window is not None else (3, int(ns.max()) if ns.size else 0)
    keep = (ns >= lo) & (ns <= hi)
    return fit_rho(ns[keep], norms[keep])
