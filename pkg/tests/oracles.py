"""Reference computations that share no code with the package.

* ``mp_*``: the closed forms re-typed in 40-digit mpmath.
* ``exact_outage``: outage probability of the *un-hardened* eavesdropper SNR.
  Given ||h_sr||^2 = s, the eavesdropper SNR reduces to
  e t (1-t) s^2 y / (f t s y + c (1-t) s + 1) with y ~ Exp(1), and s is
  Gamma(n_r, 1). Integrating the conditional tail over s is exact.
* ``brute_force_theta``: fine-grid scan of the power-splitting objective
  written as a ratio of log arguments.
* ``explicit_matrix_snr``: builds the relay transform matrix and evaluates
  the received-signal SNR literally, without the simplified fraction.
"""

import math

import numpy as np
from mpmath import mp, mpf
from scipy import integrate, optimize, stats


def _mp_params(p):
    mp.dps = 40
    return {k: mpf(repr(getattr(p, k))) if k != "n_r" else p.n_r for k in (
        "n_r", "p_s", "theta", "rho", "eta", "epsilon", "bandwidth_w",
        "alpha_sr", "alpha_rd", "alpha_re")}


def mp_coeffs(p):
    q = _mp_params(p)
    P, asr = q["p_s"], q["alpha_sr"]
    return dict(
        a=q["eta"] * P**2 * asr**2 * q["alpha_rd"],
        b=q["eta"] * P * asr * q["alpha_rd"],
        c=P * asr,
        e=q["eta"] * P**2 * asr**2 * q["alpha_re"],
        f=q["eta"] * P * asr * q["alpha_re"],
    )


def mp_capacities(p):
    """(c_d, c_soc unclipped) in mpmath."""
    q = _mp_params(p)
    k = mp_coeffs(p)
    N, th, W = q["n_r"], q["theta"], q["bandwidth_w"]
    c_d = W * mp.log(1 + k["a"] * th * (1 - th) * q["rho"] * N**3
                     / (k["b"] * th * q["rho"] * N**2 + k["c"] * (1 - th) * N + 1), 2)
    l = mp.log(q["epsilon"])
    x = k["e"] * th * (1 - th) * N**2 * l / (k["f"] * th * N * l - k["c"] * (1 - th) * N - 1)
    return c_d, c_d - W * mp.log(1 + x, 2)


def mp_high_power_limit(p):
    """Theorem-2 capacity evaluated at a huge source power."""
    big = p.replace(p_s=1e12)
    return mp_capacities(big)[1]


def conditional_tail(p, x, s):
    """Pr(gamma_E > x | ||h_sr||^2 = s) for the full per-draw SNR."""
    th = p.theta
    k = mp_coeffs(p)
    e, f, c = float(k["e"]), float(k["f"]), float(k["c"])
    d = e * th * (1 - th) * s * s - f * th * s * x
    if d <= 0:
        return 0.0  # x beyond the conditional support
    return math.exp(-(c * s * (1 - th) + 1) * x / d)


def exact_tail(p, x):
    """Pr(gamma_E > x) for the full per-draw eavesdropper SNR."""
    n = p.n_r
    dist = stats.gamma(n)
    lo, hi = dist.ppf(1e-14), dist.ppf(1 - 1e-14)
    val, _ = integrate.quad(lambda s: conditional_tail(p, x, s) * dist.pdf(s), lo, hi,
                            points=[n - 3 * math.sqrt(n), n, n + 3 * math.sqrt(n)], limit=400,
                            epsabs=1e-13, epsrel=1e-11)
    return val


def exact_outage(p, rate, c_d):
    """Pr(rate > c_d - W log2(1 + gamma_E))."""
    x = 2.0 ** ((c_d - rate) / p.bandwidth_w) - 1.0
    return exact_tail(p, x)


def exact_rate_for_outage(p, c_d, prob):
    """Rate whose exact outage probability equals ``prob``."""
    return optimize.brentq(lambda r: exact_outage(p, r, c_d) - prob, 0.0, c_d, xtol=1e-9)


def explicit_matrix_snr(p, h_sr, h_rd_hat, h_link, alpha_link):
    """SNR of sqrt(alpha) h^H r with r = sqrt(1-theta) W y_R, W formed explicitly."""
    s = np.vdot(h_sr, h_sr).real
    kappa_sq = p.theta * p.eta * p.alpha_sr * p.p_s * s / ((1 - p.theta) * p.p_s * p.alpha_sr * s + 1)
    u = h_rd_hat / np.linalg.norm(h_rd_hat)
    v = h_sr / np.linalg.norm(h_sr)
    W = math.sqrt(kappa_sq) * np.outer(u, v.conj())
    row = math.sqrt(alpha_link) * (h_link.conj() @ W)
    signal = abs(row @ (math.sqrt(1 - p.theta) * math.sqrt(p.p_s * p.alpha_sr) * h_sr)) ** 2
    # forwarded relay noise enters without the 1 - theta factor
    noise = np.vdot(row, row).real + 1.0
    return signal / noise


def op1_ratio(p, theta):
    """Power-splitting objective written as the ratio of the two log arguments."""
    n = p.n_r
    a = p.eta * p.p_s**2 * p.alpha_sr**2 * p.alpha_rd
    b = p.eta * p.p_s * p.alpha_sr * p.alpha_rd
    c = p.p_s * p.alpha_sr
    e = p.eta * p.p_s**2 * p.alpha_sr**2 * p.alpha_re
    f = p.eta * p.p_s * p.alpha_sr * p.alpha_re
    l = math.log(p.epsilon)
    t = theta
    top = 1 + a * t * (1 - t) * p.rho * n**3 / (b * t * p.rho * n**2 + c * (1 - t) * n + 1)
    bot = 1 + e * t * (1 - t) * n**2 * l / (f * t * n * l - c * (1 - t) * n - 1)
    return top / bot


def brute_force_theta(p, step=1e-5):
    """(theta, capacity) maximizing the objective on a uniform grid."""
    theta = np.linspace(0.0, 1.0, int(round(1 / step)) + 1)
    vals = op1_ratio(p, theta)
    i = int(np.argmax(vals))
    return theta[i], p.bandwidth_w * math.log2(max(vals[i], 1.0))
