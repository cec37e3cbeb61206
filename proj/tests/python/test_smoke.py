import math

import pytest

import xilab


def test_theta_and_kernel_values():
    assert xilab.theta_w(1.0).value == pytest.approx(0.04321740560665401, abs=1e-14)
    assert xilab.e0(0.0).value == pytest.approx(0.8933938009342469, abs=1e-13)
    assert abs(xilab.jacobi_identity_residual(0.5)) < 1e-12


def test_xi_oracle():
    assert xilab.xi(0.5 + 0j).real == pytest.approx(0.4971207781883141, abs=1e-12)
    z = xilab.find_critical_zero(14.0, 15.0)
    assert z == pytest.approx(14.1347251417346938, abs=1e-6)
    ep = xilab.ep_omega(0.25, 1.0)
    direct = xilab.xi(0.75 + 1j)
    assert abs(ep - direct) < 1e-8


def test_window_transform_and_crossing():
    w = xilab.WindowParams(sigma=0.25, t2=1.0, t0=0.5)
    g = xilab.gr(1.0, w)
    assert g.value == pytest.approx(-0.3601243475119091, abs=1e-9)
    rec = xilab.first_crossing(w)
    assert rec is not None
    assert 2.0 < rec.omega_z < 2.5

    degenerate = xilab.WindowParams(sigma=0.25, t2=0.0, t0=0.5)
    assert xilab.first_crossing(degenerate) is None


def test_contradiction_integral_sign():
    r = xilab.contradiction_integral(0.25, 0.5)
    assert r.value == pytest.approx(2.620930028843509e-5, rel=1e-8)
    assert r.value > 10 * r.err_estimate


def test_domain_errors_map_to_python():
    with pytest.raises(ValueError):
        xilab.theta_w(-1.0)
    with pytest.raises(ValueError):
        xilab.contradiction_integral(0.5, 0.5)


def test_verify_suite():
    claims = xilab.verify("identities")
    assert claims
    assert all(c.status == xilab.ClaimStatus.passed for c in claims)
    assert math.isclose(
        [c for c in claims if c.claim_id == "theta_delta_identity"][0].measured,
        -0.5,
        abs_tol=1e-12,
    )
