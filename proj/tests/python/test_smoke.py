"""Smoke tests for the python module: a few classical values, one scan,
one interlace pass and the error taxonomy."""

import cmath
import math

import pytest

import zlab

GAMMA1 = 14.134725141734693790457251983562470271
GAMMA2 = 21.022039638771554992628479593896902777


def test_zeta_classical_values():
    assert zlab.zeta(2).real == pytest.approx(math.pi**2 / 6, rel=1e-12)
    assert zlab.zeta(0).real == pytest.approx(-0.5, rel=1e-12)
    assert abs(zlab.zeta(complex(0.5, GAMMA1))) < 1e-8


def test_chi_and_functional_equation():
    assert zlab.chi(0.5) == pytest.approx(1.0, rel=1e-12)
    s = complex(0.3, 18.0)
    lhs = zlab.zeta(s)
    rhs = zlab.chi(s) * zlab.zeta(complex(1 - s.real, -s.imag))
    assert abs(lhs - rhs) <= 1e-9 * abs(lhs)


def test_theta_and_omega_identity():
    t = 30.0
    theta_jet = zlab.theta(t, 1)
    omega0 = zlab.omega(complex(0.5, t))[0]
    assert theta_jet[1] == pytest.approx(-0.5 * omega0.real, abs=1e-10)


def test_z_and_quality():
    value, quality = zlab.z_checked(0, 20.0)
    assert value == pytest.approx(1.1478424121851973, rel=1e-8)
    assert abs(quality) <= 1e-8 * (1 + abs(value))


def test_hardy_families():
    s = complex(2.0, 11.0)
    f1 = zlab.f(1, s)[0]
    h1 = zlab.h(1, s)[0]
    om = zlab.omega(s)[0]
    assert h1 == pytest.approx(-om / 2, rel=1e-12)
    assert zlab.g(1, s) == pytest.approx(f1 / h1, rel=1e-12)
    a = zlab.a_coeffs(2, s)
    assert len(a) == 3
    assert a[0] == pytest.approx(zlab.h(2, s)[0], rel=1e-11)


def test_scan_and_interlace():
    zeros = zlab.scan_zeros(0, 10.0, 25.0, threads=2)
    assert [pytest.approx(z.t, abs=1e-8) for z in zeros] == [GAMMA1, GAMMA2]
    rep = zlab.interlace_check(0, 20.0, 60.0, threads=2)
    assert rep.violations == []
    assert rep.ambiguous == []
    assert all(g.count == 1 for g in rep.gaps)


def test_count_report():
    rep = zlab.count_zeros(0, 100.0, threads=2)
    assert rep.observed == 29
    assert rep.residual == pytest.approx(0.873, abs=0.01)


def test_winding_and_pole_order():
    assert zlab.winding_count("H", 1, 0.75, 1.25, -0.25, 0.25) == -1
    assert zlab.pole_order("H", 2, complex(3.0, 0.0)) == 2


def test_error_taxonomy():
    with pytest.raises(zlab.PoleError):
        zlab.zeta(1.0)
    with pytest.raises(zlab.DomainViolation):
        zlab.omega(complex(3.0, 0.02))
    with pytest.raises(zlab.DomainViolation):
        zlab.z(0, 1.0)
