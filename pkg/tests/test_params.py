import math

import pytest
from hypothesis import given, strategies as st

from secure_swipt.params import (
    DerivedCoeffs,
    InvalidParameterError,
    SystemParams,
    db_to_linear,
    derive_coeffs,
    linear_to_db,
    validate,
)


def test_in_range_values_accepted():
    p = SystemParams(theta=0.1, rho=0.9, epsilon=0.05, alpha_sr=1, alpha_rd=1, alpha_re=1)
    assert validate(p) is p


@pytest.mark.parametrize(
    "field, value",
    [
        ("theta", 1.2),
        ("theta", -0.1),
        ("rho", 1.5),
        ("eta", -1.0),
        ("epsilon", 0.0),
        ("epsilon", 1.0),
        ("n_r", 0),
        ("n_r", 2.5),
        ("p_s", 0.0),
        ("bandwidth_w", -1.0),
        ("alpha_re", 0.0),
        ("slot_t", math.inf),
        ("theta", math.nan),
    ],
)
def test_out_of_range_rejected_naming_field(field, value):
    with pytest.raises(InvalidParameterError) as info:
        SystemParams(**{field: value})
    assert info.value.field == field
    assert field in str(info.value)


def test_unit_interval_endpoints_allowed():
    SystemParams(theta=0.0, rho=0.0, eta=0.0)
    SystemParams(theta=1.0, rho=1.0, eta=1.0)


def test_replace_revalidates():
    with pytest.raises(InvalidParameterError):
        SystemParams().replace(epsilon=1.5)


def test_coeffs_default_scenario():
    k = derive_coeffs(SystemParams(eta=0.8, p_s=10, alpha_sr=1, alpha_rd=1, alpha_re=1))
    assert k == DerivedCoeffs(a=80.0, b=8.0, c=10.0, e_coef=80.0, f=8.0)


def test_coeffs_unit_products():
    k = derive_coeffs(SystemParams(eta=1, p_s=1, alpha_sr=1, alpha_rd=1, alpha_re=1))
    assert (k.a, k.b, k.c, k.e_coef, k.f) == (1, 1, 1, 1, 1)


def test_coeffs_strong_eavesdropper():
    k = derive_coeffs(SystemParams(eta=0.8, p_s=10, alpha_sr=1, alpha_re=1.5))
    assert k.e_coef == pytest.approx(120.0, rel=1e-15)
    assert k.f == pytest.approx(12.0, rel=1e-15)


def test_db_roundtrip():
    assert db_to_linear(10.0) == pytest.approx(10.0)
    assert db_to_linear(0.0) == 1.0
    assert linear_to_db(db_to_linear(-7.5)) == pytest.approx(-7.5)
    assert SystemParams(p_s=100.0).snr_db == pytest.approx(20.0)


positive = st.floats(min_value=1e-3, max_value=1e3)
# subnormal efficiencies underflow the products to zero
efficiency = st.one_of(st.just(0.0), st.floats(min_value=1e-3, max_value=1.0))


@given(p_s=positive, eta=efficiency, asr=positive, ard=positive, are=positive)
def test_coeff_scaling_and_ratios(p_s, eta, asr, ard, are):
    p = SystemParams(p_s=p_s, eta=eta, alpha_sr=asr, alpha_rd=ard, alpha_re=are)
    k = derive_coeffs(p)
    k2 = derive_coeffs(p.replace(p_s=2 * p_s))
    assert k2.a == pytest.approx(4 * k.a, rel=1e-12)
    assert k2.e_coef == pytest.approx(4 * k.e_coef, rel=1e-12)
    assert k2.b == pytest.approx(2 * k.b, rel=1e-12)
    assert k2.c == pytest.approx(2 * k.c, rel=1e-12)
    assert k2.f == pytest.approx(2 * k.f, rel=1e-12)
    assert k.a == pytest.approx(k.b * p_s * asr, rel=1e-12)
    assert k.e_coef == pytest.approx(k.f * p_s * asr, rel=1e-12)
    if eta > 0:
        assert k.a / k.e_coef == pytest.approx(ard / are, rel=1e-12)
        assert k.b / k.f == pytest.approx(ard / are, rel=1e-12)
