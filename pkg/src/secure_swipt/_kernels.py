"""Hot per-trial kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly and the environment
variable ``SECURE_SWIPT_NUMBA`` is not set to ``0``/``false``/``no``.
Both paths are importable as ``*_numpy`` / ``*_numba`` so they can be
compared directly; ``*_numba`` silently equals ``*_numpy`` when numba is
missing.
"""

import os

import numpy as np

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return lambda func: func


def _flag_enabled(value):
    return value.strip().lower() not in ("0", "false", "no", "off")


USE_NUMBA = NUMBA_AVAILABLE and _flag_enabled(os.environ.get("SECURE_SWIPT_NUMBA", "1"))
BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# channel statistics: ||h_sr||^2, ||h_hat||^2, |h_rd^H h_hat|^2, |h_re^H h_hat|^2
# ---------------------------------------------------------------------------


def channel_stats_numpy(h_sr, h_rd_hat, h_rd, h_re):
    s = np.sum(h_sr.real**2 + h_sr.imag**2, axis=-1)
    g = np.sum(h_rd_hat.real**2 + h_rd_hat.imag**2, axis=-1)
    q_d = np.abs(np.sum(np.conj(h_rd) * h_rd_hat, axis=-1)) ** 2
    q_e = np.abs(np.sum(np.conj(h_re) * h_rd_hat, axis=-1)) ** 2
    return s, g, q_d, q_e


@njit(cache=True, nogil=True)
def _channel_stats_jit(h_sr, h_rd_hat, h_rd, h_re):
    m, n = h_sr.shape
    s = np.empty(m)
    g = np.empty(m)
    q_d = np.empty(m)
    q_e = np.empty(m)
    for i in range(m):
        acc_s = 0.0
        acc_g = 0.0
        dr = 0.0
        di = 0.0
        er = 0.0
        ei = 0.0
        for k in range(n):
            x = h_sr[i, k]
            acc_s += x.real * x.real + x.imag * x.imag
            u = h_rd_hat[i, k]
            acc_g += u.real * u.real + u.imag * u.imag
            v = h_rd[i, k]
            # conj(v) * u
            dr += v.real * u.real + v.imag * u.imag
            di += v.real * u.imag - v.imag * u.real
            w = h_re[i, k]
            er += w.real * u.real + w.imag * u.imag
            ei += w.real * u.imag - w.imag * u.real
        s[i] = acc_s
        g[i] = acc_g
        q_d[i] = dr * dr + di * di
        q_e[i] = er * er + ei * ei
    return s, g, q_d, q_e


def channel_stats_numba(h_sr, h_rd_hat, h_rd, h_re):
    return _channel_stats_jit(
        np.ascontiguousarray(h_sr, dtype=np.complex128),
        np.ascontiguousarray(h_rd_hat, dtype=np.complex128),
        np.ascontiguousarray(h_rd, dtype=np.complex128),
        np.ascontiguousarray(h_re, dtype=np.complex128),
    )


# ---------------------------------------------------------------------------
# AF end-to-end SNR from the statistics above
# ---------------------------------------------------------------------------


def af_snr_numpy(num_coef, den_coef, c, theta, s, g, q):
    s = np.asarray(s, dtype=np.float64)
    g = np.asarray(g, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    num = num_coef * theta * (1.0 - theta) * q * s * s
    den = den_coef * theta * q * s + g * (c * (1.0 - theta) * s + 1.0)
    out = np.zeros(np.broadcast(num, den).shape)
    ok = (g > 0.0) & (den > 0.0)
    np.divide(num, den, out=out, where=ok)
    return out


@njit(cache=True, nogil=True)
def _af_snr_jit(num_coef, den_coef, c, theta, s, g, q):
    m = s.shape[0]
    out = np.empty(m)
    k = num_coef * theta * (1.0 - theta)
    for i in range(m):
        den = den_coef * theta * q[i] * s[i] + g[i] * (c * (1.0 - theta) * s[i] + 1.0)
        if g[i] > 0.0 and den > 0.0:
            out[i] = k * q[i] * s[i] * s[i] / den
        else:
            out[i] = 0.0
    return out


def af_snr_numba(num_coef, den_coef, c, theta, s, g, q):
    s = np.ascontiguousarray(s, dtype=np.float64)
    g = np.ascontiguousarray(g, dtype=np.float64)
    q = np.ascontiguousarray(q, dtype=np.float64)
    if s.ndim != 1 or g.shape != s.shape or q.shape != s.shape:
        return af_snr_numpy(num_coef, den_coef, c, theta, s, g, q)
    return _af_snr_jit(float(num_coef), float(den_coef), float(c), float(theta), s, g, q)


if USE_NUMBA:
    channel_stats = channel_stats_numba
    af_snr = af_snr_numba
else:
    channel_stats = channel_stats_numpy
    af_snr = af_snr_numpy
