"""Closed-form capacities under channel hardening.

Every function here is vectorized over ``theta`` where it takes one, which
is what the power-splitting search relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import DerivedCoeffs, SystemParams, derive_coeffs


@dataclass(frozen=True)
class CapacityResult:
    c_d: float
    gamma_e_threshold: float
    c_soc: float

    @property
    def c_e(self) -> float:
        return self.c_d - self.c_soc if self.c_soc > 0.0 else math.nan


def _maybe_scalar(x):
    x = np.asarray(x, dtype=np.float64)
    return float(x) if x.ndim == 0 else x


def legit_snr(p: SystemParams, coeffs: DerivedCoeffs, theta=None):
    """Hardened destination SNR."""
    th = np.asarray(p.theta if theta is None else theta, dtype=np.float64)
    n = float(p.n_r)
    num = coeffs.a * th * (1.0 - th) * p.rho * n**3
    den = coeffs.b * th * p.rho * n**2 + coeffs.c * (1.0 - th) * n + 1.0
    return num / den


def eavesdropper_snr_quantile(p: SystemParams, coeffs: DerivedCoeffs, prob: float, theta=None):
    """Value x with F_gamma_E(x) = prob under the hardened model."""
    if not 0.0 <= prob < 1.0:
        raise ValueError(f"prob={prob!r} must lie in [0, 1)")
    th = np.asarray(p.theta if theta is None else theta, dtype=np.float64)
    n = float(p.n_r)
    t = -math.log1p(-prob)
    num = t * coeffs.e_coef * th * (1.0 - th) * n**2
    den = coeffs.c * (1.0 - th) * n + 1.0 + t * coeffs.f * th * n
    return num / den


def capacity_destination(p: SystemParams, coeffs: DerivedCoeffs | None = None, theta=None):
    coeffs = derive_coeffs(p) if coeffs is None else coeffs
    return _maybe_scalar(p.bandwidth_w * np.log2(1.0 + legit_snr(p, coeffs, theta)))


def gamma_e_cdf(x, p: SystemParams, coeffs: DerivedCoeffs | None = None):
    """Hardened cdf of the eavesdropper SNR, vectorized over ``x``."""
    coeffs = derive_coeffs(p) if coeffs is None else coeffs
    x = np.asarray(x, dtype=np.float64)
    if np.any(x < 0.0) or np.any(np.isnan(x)):
        raise ValueError("gamma_e_cdf is defined for x >= 0 only")
    th = p.theta
    n = float(p.n_r)
    scale = coeffs.e_coef * th * (1.0 - th) * n**2
    if scale <= 0.0:
        # gamma_E is identically zero
        return _maybe_scalar(np.ones_like(x))
    bound = coeffs.e_coef * (1.0 - th) * n / coeffs.f
    inside = x < bound
    den = np.where(inside, scale - coeffs.f * th * n * x, 1.0)
    expo = (coeffs.c * (1.0 - th) * n + 1.0) * x / den
    out = np.where(inside, -np.expm1(-expo), 1.0)
    return _maybe_scalar(out)


def _soc_parts(p: SystemParams, coeffs: DerivedCoeffs, theta):
    c_d = p.bandwidth_w * np.log2(1.0 + legit_snr(p, coeffs, theta))
    x = eavesdropper_snr_quantile(p, coeffs, 1.0 - p.epsilon, theta)
    c_e = p.bandwidth_w * np.log2(1.0 + x)
    return c_d, x, np.maximum(c_d - c_e, 0.0)


def c_soc_of_theta(p: SystemParams, theta, coeffs: DerivedCoeffs | None = None):
    """Secrecy outage capacity as a function of the splitting ratio."""
    coeffs = derive_coeffs(p) if coeffs is None else coeffs
    return _maybe_scalar(_soc_parts(p, coeffs, theta)[2])


def secrecy_outage_capacity(p: SystemParams, coeffs: DerivedCoeffs | None = None) -> CapacityResult:
    coeffs = derive_coeffs(p) if coeffs is None else coeffs
    c_d, x, c_soc = _soc_parts(p, coeffs, p.theta)
    return CapacityResult(c_d=float(c_d), gamma_e_threshold=float(x), c_soc=float(c_soc))


def asymptotic_c_soc(p: SystemParams) -> float:
    """Limit of the secrecy outage capacity as the source power grows without bound.

    The limit does not depend on ``p_s`` or ``alpha_sr``.
    """
    th = p.theta
    if not 0.0 < th < 1.0:
        raise ValueError(f"theta={th!r}: the high-power limit needs 0 < theta < 1")
    if p.eta == 0.0 or p.rho == 0.0:
        return 0.0
    n = float(p.n_r)
    ln_eps = math.log(p.epsilon)
    num = p.rho * p.alpha_rd * n * (p.eta * th * p.alpha_re * ln_eps - (1.0 - th))
    den = (p.eta * p.alpha_rd * p.rho * th * n + (1.0 - th)) * p.alpha_re * ln_eps
    return max(p.bandwidth_w * math.log2(num / den), 0.0)
