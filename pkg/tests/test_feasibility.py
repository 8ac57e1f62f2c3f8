"""Feasibility calculators: closed forms and declared margins."""

import numpy as np
import pytest

from mrosc import (
    InputDomainError,
    decoherence_check,
    feasibility_report,
    force_noise_ceiling,
    scatter_resolution,
    standard_quantum_limit,
)
from mrosc.constants import HBAR


def test_standard_quantum_limit():
    assert standard_quantum_limit(1e-14, 1.0) == pytest.approx(7.26e-11, rel=1e-3)
    # quadrupling the mass halves the resolution limit
    assert standard_quantum_limit(4e-14, 1.0) == pytest.approx(
        standard_quantum_limit(1e-14, 1.0) / 2, rel=1e-12)
    with pytest.raises(InputDomainError):
        standard_quantum_limit(0.0, 1.0)


def test_force_noise_ceiling():
    value = force_noise_ceiling(10.0, 100.0)
    assert value == pytest.approx(100.0 * np.sqrt(HBAR * 10.0) / np.sqrt(np.pi), rel=1e-12)
    assert 1e-15 <= value <= 1e-14
    assert force_noise_ceiling(10.0, 200.0) == pytest.approx(2 * value, rel=1e-12)
    assert force_noise_ceiling(40.0, 100.0) == pytest.approx(2 * value, rel=1e-12)


def test_decoherence_check_margins():
    assert decoherence_check(0.0, 1e-19, 1.0)
    # a rate exactly at 1/t2 fails the one-decade margin
    t2 = 0.5
    delta_x = 1e-18
    s_ff = (1.0 / t2) * HBAR ** 2 / delta_x ** 2
    assert not decoherence_check(s_ff, delta_x, t2)
    assert decoherence_check(0.05 * s_ff, delta_x, t2)

    # 10 kg / 100 rad/s / sqrt(S_FF) = 1e-15 over one period: the rate is
    # ~0.3 of 1/t2, inside the plain inequality but outside the declared
    # one-decade margin, so the check reports False
    sigma0 = standard_quantum_limit(10.0, 100.0)
    period = 2 * np.pi / 100.0
    rate = (1e-15) ** 2 * sigma0 ** 2 / HBAR ** 2
    assert rate < 1.0 / period
    assert not decoherence_check((1e-15) ** 2, sigma0, period)


def test_scatter_resolution():
    # 1e-6/sqrt(1e8) = 1e-10 in exact arithmetic; the double quotient sits
    # one ulp below the decimal literal, so "exact" means last-place exact
    assert scatter_resolution(1e-6, 1e8) == pytest.approx(1e-10, rel=4e-16)
    assert scatter_resolution(5e-7, 1) == 5e-7
    assert scatter_resolution(1e-6, 4e8) == pytest.approx(0.5e-10, rel=1e-12)
    with pytest.raises(InputDomainError):
        scatter_resolution(1e-6, 0)


def test_report_assembly():
    report = feasibility_report(10.0, 100.0, s_ff=1e-32, t2=0.01,
                                wavelength=1e-6, photons=1e8)
    assert report.offset_half_range == pytest.approx(np.sqrt(2) * report.sql, rel=1e-12)
    assert report.scatter_resolution == pytest.approx(1e-10, rel=4e-16)
    assert report.decoherence_ok is True
    minimal = feasibility_report(1e-14, 1.0)
    assert minimal.scatter_resolution is None
    assert minimal.decoherence_ok is None
