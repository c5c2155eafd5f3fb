"""Scenario configuration for the SWIPT LS-MIMO AF relay link.

All powers are linear and normalized to unit noise variance, so the source
power ``p_s`` is also the transmit SNR.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass


class InvalidParameterError(ValueError):
    """Raised when a scenario field is outside its admissible range."""

    def __init__(self, field: str, value, reason: str):
        self.field = field
        self.value = value
        super().__init__(f"{field}={value!r}: {reason}")


@dataclass(frozen=True)
class SystemParams:
    n_r: int = 100
    p_s: float = 10.0
    theta: float = 0.1
    rho: float = 0.9
    eta: float = 0.8
    epsilon: float = 0.05
    bandwidth_w: float = 1.0e4
    alpha_sr: float = 1.0
    alpha_rd: float = 1.0
    alpha_re: float = 1.0
    slot_t: float = 1.0

    def __post_init__(self):
        validate(self)

    @property
    def snr_db(self) -> float:
        return linear_to_db(self.p_s)

    def replace(self, **changes) -> "SystemParams":
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class DerivedCoeffs:
    """Composite constants of the destination and eavesdropper SNR formulas."""

    a: float
    b: float
    c: float
    e_coef: float
    f: float


FIELD_NAMES = tuple(f.name for f in dataclasses.fields(SystemParams))

_UNIT_INTERVAL = ("theta", "rho", "eta")
_POSITIVE = ("p_s", "bandwidth_w", "alpha_sr", "alpha_rd", "alpha_re", "slot_t")


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def linear_to_db(x: float) -> float:
    return 10.0 * math.log10(x)


def _finite(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidParameterError(name, value, "must be a real number")
    if not math.isfinite(value):
        raise InvalidParameterError(name, value, "must be finite")


def validate(raw_params: SystemParams) -> SystemParams:
    """Return ``raw_params`` unchanged if every field is in range.

    Raises
    ------
    InvalidParameterError
        Naming the first offending field.
    """
    n_r = raw_params.n_r
    if isinstance(n_r, bool) or not isinstance(n_r, int) or n_r < 1:
        raise InvalidParameterError("n_r", n_r, "must be a positive integer")
    for name in _UNIT_INTERVAL:
        value = getattr(raw_params, name)
        _finite(name, value)
        if not 0.0 <= value <= 1.0:
            raise InvalidParameterError(name, value, "must lie in [0, 1]")
    eps = raw_params.epsilon
    _finite("epsilon", eps)
    if not 0.0 < eps < 1.0:
        raise InvalidParameterError("epsilon", eps, "must lie strictly inside (0, 1)")
    for name in _POSITIVE:
        value = getattr(raw_params, name)
        _finite(name, value)
        if value <= 0.0:
            raise InvalidParameterError(name, value, "must be positive")
    return raw_params


def derive_coeffs(p: SystemParams) -> DerivedCoeffs:
    b = p.eta * p.p_s * p.alpha_sr * p.alpha_rd
    f = p.eta * p.p_s * p.alpha_sr * p.alpha_re
    c = p.p_s * p.alpha_sr
    return DerivedCoeffs(
        a=p.eta * p.p_s**2 * p.alpha_sr**2 * p.alpha_rd,
        b=b,
        c=c,
        e_coef=p.eta * p.p_s**2 * p.alpha_sr**2 * p.alpha_re,
        f=f,
    )
