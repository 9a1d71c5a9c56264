"""Mock and scrambled Fourier series on affine IFS measures: spectra, Dirichlet
kernels and divergence indicators."""

__version__ = "0.1.0"

from .cycles import ExtremeCycle, HadamardPair, check_hadamard, find_extreme_cycles, verify_cycle
from .dirichlet import dirichlet_direct, dirichlet_product, growth_rate, kernel_norm_series, l1_norm
from .errors import MockFourierError
from .expsum import ExpSum, m_B, m_c_from_cycles, m_L, mu_hat, qmf_check
from .ifs import EltonSampler, IfsSystem, WordQuadrature, encode, integrate_elton, integrate_words, validate_system
from .mahler import mahler_quadrature, mahler_roots, poly_from_L, roots, search_dr
from .ruelle import delta_estimate, fixed_point_iterate, ruelle_apply, ruelle_l1_identity, ruelle_power_sup
from .spectrum import fourier_coeff, lambda0, level_stats, next_level, partial_sum, spectrum_level


def pair(R, B, L) -> HadamardPair:
    """Validate ``(R, B)`` and ``L`` in one call."""
    return check_hadamard(validate_system(R, B), L)
