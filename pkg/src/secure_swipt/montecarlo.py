"""Brute-force Monte Carlo checks of the closed forms.

Trials are produced in blocks of ``channel.CHUNK_SIZE``; block ``k`` always
uses substream ``k`` of the master seed, and blocks are concatenated in
index order, so every estimate is identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .capacity import capacity_destination, gamma_e_cdf
from .channel import chunk_bounds, chunk_rng, draw_batch
from .link import LinkBatch, link_batch, rate
from .params import SystemParams, derive_coeffs

MIN_OUTAGE_TRIALS = 1_000
MIN_CAPACITY_TRIALS = 10_000


@dataclass(frozen=True)
class OutageEstimate:
    p_out: float
    trials: int
    half_width: float
    count: int

    @property
    def interval(self):
        return self.p_out - self.half_width, self.p_out + self.half_width

    def covers(self, prob: float) -> bool:
        return abs(self.p_out - prob) <= self.half_width


@dataclass(frozen=True)
class SweepRecord:
    value: float
    analytic_c_soc: float
    empirical_c_soc: float
    c_d: float
    asymptote: float
    theta: float
    baseline_c_soc: float
    trials: int
    seed: int


def simulate(p: SystemParams, trials: int, seed: int, workers: int = 1) -> LinkBatch:
    """Per-trial ``||h_sr||^2``, destination and eavesdropper SNRs."""
    if trials < 1:
        raise ValueError("trials must be positive")
    coeffs = derive_coeffs(p)

    def run(chunk):
        index, n = chunk
        return link_batch(p, coeffs, draw_batch(p, n, chunk_rng(seed, index)))

    chunks = list(chunk_bounds(trials))
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, chunks))
    else:
        parts = [run(c) for c in chunks]
    return LinkBatch(
        h_sr_norm_sq=np.concatenate([b.h_sr_norm_sq for b in parts]),
        gamma_d=np.concatenate([b.gamma_d for b in parts]),
        gamma_e=np.concatenate([b.gamma_e for b in parts]),
        degenerate_count=sum(b.degenerate_count for b in parts),
    )


def binomial_half_width(p_out: float, trials: int) -> float:
    return 3.0 * math.sqrt(p_out * (1.0 - p_out) / trials)


def estimate_outage(
    p: SystemParams, rate_bps: float, trials: int, seed: int, workers: int = 1
) -> OutageEstimate:
    """Empirical Pr(rate > C_D - C_E) with C_D held at its hardened value."""
    if rate_bps < 0:
        raise ValueError("rate must be nonnegative")
    if trials < MIN_OUTAGE_TRIALS:
        raise ValueError(f"need at least {MIN_OUTAGE_TRIALS} trials, got {trials}")
    c_d = capacity_destination(p)
    c_e = rate(p, simulate(p, trials, seed, workers).gamma_e)
    count = int(np.count_nonzero(rate_bps > c_d - c_e))
    p_out = count / trials
    return OutageEstimate(p_out=p_out, trials=trials, half_width=binomial_half_width(p_out, trials), count=count)


def outage_order_index(epsilon: float, trials: int) -> int:
    """0-based ascending index of the secrecy-rate order statistic for outage ``epsilon``.

    Equivalent to position ceil((1 - epsilon) * M) in a descending sort.
    """
    k = math.ceil(round((1.0 - epsilon) * trials, 9))
    return min(max(trials - k, 0), trials - 1)


def secrecy_rate_samples(
    p: SystemParams, trials: int, seed: int, workers: int = 1, per_draw_cd: bool = False
) -> np.ndarray:
    """Unclipped C_D - C_E per trial.

    With ``per_draw_cd`` the legitimate rate comes from each draw instead of
    the hardened constant, which exposes the hardening error.
    """
    batch = simulate(p, trials, seed, workers)
    c_d = rate(p, batch.gamma_d) if per_draw_cd else capacity_destination(p)
    return c_d - rate(p, batch.gamma_e)


def empirical_secrecy_outage_capacity(
    p: SystemParams, trials: int, seed: int, workers: int = 1, per_draw_cd: bool = False
) -> float:
    """Largest rate whose empirical secrecy outage frequency is ``p.epsilon``."""
    if trials < MIN_CAPACITY_TRIALS:
        raise ValueError(f"need at least {MIN_CAPACITY_TRIALS} trials, got {trials}")
    samples = np.sort(secrecy_rate_samples(p, trials, seed, workers, per_draw_cd))
    return max(float(samples[outage_order_index(p.epsilon, trials)]), 0.0)


def gamma_e_samples(p: SystemParams, trials: int, seed: int, workers: int = 1) -> np.ndarray:
    return simulate(p, trials, seed, workers).gamma_e


def empirical_cdf_gamma_e(p: SystemParams, trials: int, seed: int, grid, workers: int = 1):
    grid = np.asarray(grid, dtype=np.float64)
    if np.any(np.diff(grid) < 0):
        raise ValueError("grid must be sorted ascending")
    samples = np.sort(gamma_e_samples(p, trials, seed, workers))
    counts = np.searchsorted(samples, grid, side="right")
    return [(float(x), c / trials) for x, c in zip(grid, counts)]


def ks_distance_gamma_e(p: SystemParams, trials: int, seed: int, workers: int = 1) -> float:
    """Kolmogorov-Smirnov distance between simulated and hardened gamma_E laws."""
    coeffs = derive_coeffs(p)
    samples = gamma_e_samples(p, trials, seed, workers)
    return float(stats.kstest(samples, lambda x: gamma_e_cdf(np.maximum(x, 0.0), p, coeffs)).statistic)


def capacity_spread(p: SystemParams, trials: int, seed: int, workers: int = 1) -> float:
    """Coefficient of variation (std/mean) of the per-draw destination capacity."""
    c_d = rate(p, simulate(p, trials, seed, workers).gamma_d)
    return float(np.std(c_d) / np.mean(c_d))
