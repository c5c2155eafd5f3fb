"""Rayleigh small-scale fading draws and the imperfect-CSI mismatch model."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import SystemParams

# Trials are generated in fixed-size blocks, each from its own substream of the
# master seed, so results do not depend on how blocks are spread over workers.
CHUNK_SIZE = 4096


@dataclass(frozen=True)
class ChannelRealization:
    """Small-scale fading for one slot.

    Fields are 1-D of length ``n_r`` for a single draw, or 2-D
    ``(trials, n_r)`` for a batch.
    """

    h_sr: np.ndarray
    h_rd_hat: np.ndarray
    err: np.ndarray
    h_rd: np.ndarray
    h_re: np.ndarray

    def __len__(self):
        return 1 if self.h_sr.ndim == 1 else self.h_sr.shape[0]


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    """Circularly-symmetric CN(0, 1) samples: (x + iy)/sqrt(2)."""
    shape = (shape,) if np.isscalar(shape) else tuple(shape)
    z = rng.standard_normal(shape + (2,)).view(np.complex128)[..., 0]
    z *= np.sqrt(0.5)
    return z


def reconstruct_true_csi(h_rd_hat, err, rho: float) -> np.ndarray:
    h_rd_hat = np.asarray(h_rd_hat)
    err = np.asarray(err)
    if h_rd_hat.shape != err.shape:
        raise ValueError(
            f"estimate and error shapes differ: {h_rd_hat.shape} vs {err.shape}"
        )
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho={rho!r} must lie in [0, 1]")
    return np.sqrt(rho) * h_rd_hat + np.sqrt(1.0 - rho) * err


def draw_batch(p: SystemParams, trials: int, rng: np.random.Generator) -> ChannelRealization:
    # one fill for all four vectors, reinterpreted in place as complex
    block = rng.standard_normal((4, trials, p.n_r, 2)).view(np.complex128)[..., 0]
    block *= np.sqrt(0.5)
    h_sr, h_rd_hat, err, h_re = block
    h_rd = reconstruct_true_csi(h_rd_hat, err, p.rho)
    return ChannelRealization(h_sr=h_sr, h_rd_hat=h_rd_hat, err=err, h_rd=h_rd, h_re=h_re)


def draw(p: SystemParams, rng_state: np.random.Generator) -> ChannelRealization:
    """One realization; identical to row 0 of ``draw_batch(p, 1, rng_state)``."""
    batch = draw_batch(p, 1, rng_state)
    return ChannelRealization(
        h_sr=batch.h_sr[0],
        h_rd_hat=batch.h_rd_hat[0],
        err=batch.err[0],
        h_rd=batch.h_rd[0],
        h_re=batch.h_re[0],
    )


def chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    """Generator for block ``chunk_index`` of the stream rooted at ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(chunk_index,)))


def chunk_bounds(trials: int, chunk_size: int = CHUNK_SIZE):
    """Yield ``(chunk_index, n)`` covering ``trials`` in order."""
    index = 0
    start = 0
    while start < trials:
        n = min(chunk_size, trials - start)
        yield index, n
        index += 1
        start += n
