"""Acceptance gate: every criterion at its stated tolerance, one printed
pass/fail line each.  Run with `pytest -s tests/test_acceptance.py` to see
the lines as they complete."""

import time
from contextlib import contextmanager

import mpmath as mp
import numpy as np
import pytest

from mrosc import (
    OscillatorParams,
    averaged_witness,
    beta2_offset_rule,
    erf_complex,
    force_noise_ceiling,
    nsit,
    probability_table,
    scatter_resolution,
    table1,
    witness_dimensional,
    witness_report,
)
from mrosc.oracle import SolverConfig, oracle_probability_table
from mrosc.witness import TABLE_ROWS

mp.mp.dps = 30

PUBLISHED_NSIT = {(1, 14): 0.12, (1, 8): 0.15, (1, 4): 0.17, (1, 3): 0.16,
                  (3, 8): 0.15, (2, 5): 0.14, (3, 4): 0.17}
PUBLISHED_LGI = {(1, 14): 0.08, (1, 8): 0.04, (1, 4): None, (1, 3): None,
                 (3, 8): 0.04, (2, 5): 0.07, (3, 4): None}


@contextmanager
def criterion(number: int, name: str):
    try:
        yield
    except Exception:
        print(f"ACCEPTANCE {number} ({name}): FAIL")
        raise
    print(f"ACCEPTANCE {number} ({name}): PASS")


def test_criterion_1_violation_table():
    with criterion(1, "violation table reproduction, < 10 s"):
        start = time.monotonic()
        rows = table1()
        elapsed = time.monotonic() - start
        for key, report in zip(TABLE_ROWS, rows):
            assert report.nsit_violation == pytest.approx(
                PUBLISHED_NSIT[key], abs=0.005), key
            expected_lgi = PUBLISHED_LGI[key]
            if expected_lgi is None:
                assert report.lgi_violation <= 0.0, key
            else:
                assert report.lgi_violation == pytest.approx(
                    expected_lgi, abs=0.005), key
        assert elapsed < 10.0, f"table took {elapsed:.2f} s"


def test_criterion_2_mass_independence():
    with criterion(2, "mass independence to 1e-9"):
        reference = witness_report(np.pi / 4, np.sqrt(2.0), 1)
        # spanning set for (mass, omega, p0); dimensionless p0 is kept
        # below ~1e6 so the exact cancellation in gamma survives double
        # rounding at the 1e-9 comparison tolerance
        triples = [
            (1e-25, 1e6, 1e-21),
            (1e-25, 1.0, 0.0),
            (1e-20, 1e3, 1e-21),
            (1e-14, 1.0, 0.0),
            (10.0, 100.0, -1e-21),
            (10.0, 1e6, 1e-21),
        ]
        for mass, omega, p0 in triples:
            params = OscillatorParams(mass=mass, omega=omega, p0=p0)
            t2 = (np.pi / 4) / omega
            report = witness_dimensional(params, t2,
                                         beta2_offset_rule(params, t2))
            assert abs(report.n_plus - reference.n_plus) <= 1e-9, (mass, omega, p0)
            assert abs(report.n_minus - reference.n_minus) <= 1e-9
            assert np.max(np.abs(report.L - reference.L)) <= 1e-9
            assert abs(report.nsit_violation - reference.nsit_violation) <= 1e-9
            assert abs(report.lgi_violation - reference.lgi_violation) <= 1e-9


def test_criterion_3_probability_algebra():
    with criterion(3, "probability algebra on 200 random cases to 1e-7"):
        rng = np.random.default_rng(2024)
        done = 0
        while done < 200:
            theta = rng.uniform(0.02, 2 * np.pi - 0.02)
            if abs(np.sin(theta)) < 0.02:
                continue
            gamma = rng.uniform(-2.5, 2.5)
            e1 = rng.uniform(-1.5, 1.5)
            e2 = rng.uniform(-1.5, 1.5)
            table = probability_table(theta, gamma, e1, e2)
            assert abs(table.joint.sum() - 1.0) <= 1e-7
            assert abs(table.joint[0].sum() - table.p_q[0]) <= 1e-7
            assert abs(table.joint[1].sum() - table.p_q[1]) <= 1e-7
            n_plus, n_minus = nsit(table)
            assert abs(n_plus + n_minus) <= 1e-7
            done += 1


def test_criterion_4_oracle_equivalence():
    with criterion(4, "grid-solver equivalence to 1e-4, < 60 s per case"):
        config = SolverConfig()
        for theta, gamma in ((np.pi / 4, 1.0), (np.pi / 2, 1.0),
                             (3 * np.pi / 4, -1.0), (3 * np.pi / 2, 1.0)):
            start = time.monotonic()
            numeric = oracle_probability_table(theta, gamma, config)
            analytic = probability_table(theta, gamma)
            elapsed = time.monotonic() - start
            assert np.max(np.abs(numeric.joint - analytic.joint)) <= 1e-4
            for a, b in zip(numeric.p_q + numeric.p_r,
                            analytic.p_q + analytic.p_r):
                assert abs(a - b) <= 1e-4
            assert elapsed < 60.0, f"case {theta:.3f} took {elapsed:.1f} s"


def test_criterion_5_phase_reflection():
    with criterion(5, "phase reflection symmetry to 1e-7"):
        for theta in (np.pi / 7, np.pi / 4, 2 * np.pi / 5):
            a = witness_report(theta, np.sqrt(2.0), 1)
            b = witness_report(np.pi - theta, np.sqrt(2.0), 1)
            assert abs(a.n_plus - b.n_plus) <= 1e-7
            assert abs(a.nsit_violation - b.nsit_violation) <= 1e-7
            assert abs(a.lgi_violation - b.lgi_violation) <= 1e-7
            assert np.max(np.abs(a.L - b.L[::-1, :])) <= 1e-7


def test_criterion_6_imprecision_average():
    with criterion(6, "imprecision average: NSIT survives, LGI does not"):
        ladder = [averaged_witness(np.pi / 2, (-1, 1), (-1, 1),
                                   np.sqrt(2.0), 1, n=n)
                  for n in (11, 21, 41)]
        for a, b in zip(ladder, ladder[1:]):
            assert abs(a.n_plus - b.n_plus) <= 1e-4
            assert abs(a.lgi_violation - b.lgi_violation) <= 1e-4
        final = ladder[-1]
        assert final.nsit_violation > 0.0
        assert final.lgi_violation <= 0.0
        # frozen regression fixtures from the same ladder
        assert final.n_plus == pytest.approx(-0.10068100862984071, abs=1e-7)
        assert final.lgi_violation == pytest.approx(-0.2816057804164024, abs=1e-7)


def test_criterion_7_special_functions():
    with criterion(7, "complex erf vs extended-precision oracle to 1e-12"):
        rng = np.random.default_rng(99)
        points = []
        while len(points) < 500:
            z = complex(rng.uniform(-8, 8), rng.uniform(-8, 8))
            if abs(z) <= 8:
                points.append(z)
        for z in points:
            mine = erf_complex(z)
            true = complex(mp.erf(mp.mpc(z.real, z.imag)))
            assert abs(mine - true) <= 1e-12 * abs(true), z


def test_criterion_8_feasibility_numbers():
    with criterion(8, "feasibility closed forms"):
        ceiling = force_noise_ceiling(10.0, 100.0)
        assert 1e-15 <= ceiling <= 1e-14
        # exact up to one last-place rounding of the decimal inputs
        assert scatter_resolution(1e-6, 1e8) == pytest.approx(1e-10, rel=4e-16)
