"""Secure SWIPT over a large-scale MIMO amplify-and-forward relay."""

from .capacity import (
    CapacityResult,
    asymptotic_c_soc,
    c_soc_of_theta,
    capacity_destination,
    gamma_e_cdf,
    secrecy_outage_capacity,
)
from .channel import ChannelRealization, draw, draw_batch, reconstruct_true_csi
from .link import LinkSample, evaluate_link, gamma_destination, gamma_eavesdropper, harvested_energy, kappa_squared
from .montecarlo import (
    OutageEstimate,
    SweepRecord,
    empirical_cdf_gamma_e,
    empirical_secrecy_outage_capacity,
    estimate_outage,
)
from .params import DerivedCoeffs, InvalidParameterError, SystemParams, derive_coeffs, validate
from .splitter import SplitResult, optimize_theta

__version__ = "0.1.0"
