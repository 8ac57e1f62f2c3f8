"""Grid Schrödinger solver: unitarity, closed-form transport checks,
projection semantics, and convergence order."""

import numpy as np
import pytest

from mrosc import (
    InputDomainError,
    SolverConfig,
    branch_density,
    evolve,
    free_density,
    init_coherent,
    mr_defect,
    project,
)
from mrosc.oracle import oracle_density_profile, oracle_probability_table
from mrosc.witness import probability_table

LIGHT = SolverConfig(points=2 ** 13, steps_per_radian=400)


def _mirror(rho: np.ndarray) -> np.ndarray:
    # x -> -x on the midpoint grid maps sample j to N-1-j
    return rho[::-1]


def test_config_validation():
    with pytest.raises(InputDomainError):
        SolverConfig(points=2 ** 14 + 1)
    with pytest.raises(InputDomainError):
        SolverConfig(y_half_width=5.0)
    with pytest.raises(InputDomainError):
        SolverConfig(band_margin=200.0)


def test_initial_state_moments():
    state = init_coherent(LIGHT)
    assert state.norm_squared == pytest.approx(1.0, abs=1e-12)
    mean = np.sum(state.y_grid * state.density) * state.dy
    var = np.sum(state.y_grid ** 2 * state.density) * state.dy
    assert mean == pytest.approx(0.0, abs=1e-10)
    assert var == pytest.approx(0.5, abs=1e-6)


def test_full_period_revival():
    state = init_coherent(LIGHT)
    evolved = evolve(state, 2 * np.pi, LIGHT)
    assert np.max(np.abs(evolved.density - state.density)) <= 1e-5
    assert evolved.norm_squared == pytest.approx(1.0, abs=1e-8)


def test_half_period_parity():
    state = init_coherent(LIGHT)
    evolved = evolve(state, np.pi, LIGHT)
    assert np.max(np.abs(evolved.density - _mirror(state.density))) <= 1e-5


def test_free_transport_matches_closed_form():
    theta = np.pi / 4
    state = init_coherent(LIGHT)
    evolved = evolve(state, theta, LIGHT)
    y = evolved.y_grid - LIGHT.p0_tilde * np.sin(theta)
    assert np.max(np.abs(evolved.density - free_density(y))) <= 1e-5


def test_convergence_is_second_order():
    theta = np.pi / 3
    errors = []
    for spr in (25, 50, 100):
        cfg = SolverConfig(points=2 ** 13, steps_per_radian=spr)
        evolved = evolve(init_coherent(cfg), theta, cfg)
        y = evolved.y_grid - cfg.p0_tilde * np.sin(theta)
        errors.append(np.max(np.abs(evolved.density - free_density(y))))
    assert errors[0] / errors[1] == pytest.approx(4.0, rel=0.2)
    assert errors[1] / errors[2] == pytest.approx(4.0, rel=0.2)


def test_grid_tail_stays_confined():
    state = init_coherent(LIGHT)
    for theta in (np.pi / 4, np.pi, 2 * np.pi):
        evolved = evolve(state, theta, LIGHT)
        outside = np.abs(evolved.y_grid) > 20.0
        assert np.sum(evolved.density[outside]) * evolved.dy < 1e-10


def test_project_splits_and_renormalizes():
    state = init_coherent(LIGHT)
    left, p_left = project(state, 0.0, -1)
    right, p_right = project(state, 0.0, +1)
    assert p_left == pytest.approx(0.5, abs=1e-6)
    assert p_right == pytest.approx(0.5, abs=1e-6)
    assert p_left + p_right == pytest.approx(1.0, abs=1e-9)
    assert left.norm_squared == pytest.approx(1.0, abs=1e-12)


def test_project_whole_grid_and_idempotence():
    state = init_coherent(LIGHT)
    _, p = project(state, state.y_grid[-1] - state.dy / 2, -1)
    assert p == pytest.approx(1.0, abs=1e-10)
    once, p1 = project(state, 0.1, +1)
    twice, p2 = project(once, 0.1, +1)
    assert p2 == pytest.approx(1.0, abs=1e-13)
    assert np.allclose(twice.amplitude, once.amplitude, rtol=0, atol=1e-13)


def test_project_boundary_must_be_on_grid():
    state = init_coherent(LIGHT)
    with pytest.raises(InputDomainError):
        project(state, 100.0, 1)
    with pytest.raises(InputDomainError):
        project(state, 0.0, 0)


def test_density_profile_matches_analytic_pointwise():
    cfg = SolverConfig(p0_tilde=0.0, steps_per_radian=400)
    y, rho_free, rho_plus, rho_minus = oracle_density_profile(np.pi / 2, cfg)
    sel = np.abs(y) <= 6
    assert np.max(np.abs(rho_free[sel] - free_density(y[sel]))) <= 1e-6
    assert np.max(np.abs(rho_plus[sel] - branch_density(y[sel], np.pi / 2, +1))) <= 1e-6
    defect = rho_free - rho_plus - rho_minus
    assert np.max(np.abs(defect[sel] - mr_defect(y[sel], np.pi / 2))) <= 1e-6
    # spot check at unit displacement against the closed form
    j = np.argmin(np.abs(y - 1.0))
    assert defect[j] == pytest.approx(mr_defect(y[j], np.pi / 2), abs=1e-6)


def test_probability_table_against_analytic_quick():
    table_num = oracle_probability_table(np.pi / 2, 1.0, LIGHT)
    table_ana = probability_table(np.pi / 2, 1.0)
    assert np.max(np.abs(table_num.joint - table_ana.joint)) <= 1e-5
    assert table_num.joint.sum() == pytest.approx(1.0, abs=1e-6)
    for a, b in zip(table_num.p_r, table_ana.p_r):
        assert a == pytest.approx(b, abs=1e-6)


def test_probability_table_frame_independence():
    # the momentum kick must drop out after the co-moving mapping
    base = oracle_probability_table(np.pi / 4, 1.0, SolverConfig(
        points=2 ** 13, steps_per_radian=400, p0_tilde=0.0))
    kicked = oracle_probability_table(np.pi / 4, 1.0, SolverConfig(
        points=2 ** 13, steps_per_radian=400, p0_tilde=2.0))
    assert np.max(np.abs(base.joint - kicked.joint)) <= 1e-5
