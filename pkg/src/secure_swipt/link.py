"""Instantaneous quantities of the power-splitting AF relay chain.

The relay transform (MRC on the source link, MRT toward the estimated
destination channel) is never formed as a matrix; both SNRs reduce to norms
and inner products of the fading vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .channel import ChannelRealization
from .params import DerivedCoeffs, SystemParams, derive_coeffs


@dataclass(frozen=True)
class LinkSample:
    kappa_sq: float
    harvested_energy: float
    gamma_d: float
    gamma_e: float
    c_d_inst: float
    c_e_inst: float
    secrecy_rate_inst: float
    degenerate: bool = False


@dataclass(frozen=True)
class LinkBatch:
    """Per-trial arrays for a batch of realizations."""

    h_sr_norm_sq: np.ndarray
    gamma_d: np.ndarray
    gamma_e: np.ndarray
    degenerate_count: int


def kappa_squared(p: SystemParams, h_sr_norm_sq):
    """Relay amplification power satisfying the harvested-energy budget."""
    s = np.asarray(h_sr_norm_sq, dtype=np.float64)
    harvested = p.theta * p.eta * p.alpha_sr * p.p_s * s
    out = harvested / ((1.0 - p.theta) * p.p_s * p.alpha_sr * s + 1.0)
    return float(out) if out.ndim == 0 else out


def harvested_energy(p: SystemParams, h_sr_norm_sq):
    out = p.theta * p.eta * p.alpha_sr * p.p_s * np.asarray(h_sr_norm_sq, dtype=np.float64) * p.slot_t
    return float(out) if out.ndim == 0 else out


def _stats(ch: ChannelRealization):
    single = ch.h_sr.ndim == 1
    arrays = [np.atleast_2d(v) for v in (ch.h_sr, ch.h_rd_hat, ch.h_rd, ch.h_re)]
    return single, _kernels.channel_stats(*arrays)


def _unwrap(single, arr):
    return float(arr[0]) if single else arr


def gamma_destination(p: SystemParams, coeffs: DerivedCoeffs, ch: ChannelRealization):
    single, (s, g, q_d, _) = _stats(ch)
    return _unwrap(single, _kernels.af_snr(coeffs.a, coeffs.b, coeffs.c, p.theta, s, g, q_d))


def gamma_eavesdropper(p: SystemParams, coeffs: DerivedCoeffs, ch: ChannelRealization):
    single, (s, g, _, q_e) = _stats(ch)
    return _unwrap(single, _kernels.af_snr(coeffs.e_coef, coeffs.f, coeffs.c, p.theta, s, g, q_e))


def link_batch(p: SystemParams, coeffs: DerivedCoeffs, ch: ChannelRealization) -> LinkBatch:
    _, (s, g, q_d, q_e) = _stats(ch)
    gamma_d = _kernels.af_snr(coeffs.a, coeffs.b, coeffs.c, p.theta, s, g, q_d)
    gamma_e = _kernels.af_snr(coeffs.e_coef, coeffs.f, coeffs.c, p.theta, s, g, q_e)
    return LinkBatch(
        h_sr_norm_sq=s,
        gamma_d=gamma_d,
        gamma_e=gamma_e,
        degenerate_count=int(np.count_nonzero(g <= 0.0)),
    )


def rate(p: SystemParams, gamma):
    """Link capacity in bit/s; ``bandwidth_w`` already accounts for the two slots."""
    return p.bandwidth_w * np.log2(1.0 + np.asarray(gamma, dtype=np.float64))


def evaluate_link(p: SystemParams, coeffs: DerivedCoeffs | None, ch: ChannelRealization) -> LinkSample:
    if ch.h_sr.ndim != 1:
        raise ValueError("evaluate_link takes a single realization; use link_batch for batches")
    coeffs = derive_coeffs(p) if coeffs is None else coeffs
    batch = link_batch(p, coeffs, ch)
    s = float(batch.h_sr_norm_sq[0])
    gamma_d = float(batch.gamma_d[0])
    gamma_e = float(batch.gamma_e[0])
    c_d = float(rate(p, gamma_d))
    c_e = float(rate(p, gamma_e))
    return LinkSample(
        kappa_sq=kappa_squared(p, s),
        harvested_energy=harvested_energy(p, s),
        gamma_d=gamma_d,
        gamma_e=gamma_e,
        c_d_inst=c_d,
        c_e_inst=c_e,
        secrecy_rate_inst=max(c_d - c_e, 0.0),
        degenerate=batch.degenerate_count > 0,
    )
