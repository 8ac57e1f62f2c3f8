"""Independent verification engine: direct grid solution of the oscillator
Schrödinger equation with hard projection at the first boundary.

Works in the rest frame with dimensionless position x (units
sqrt(hbar/(m w))) and phase theta = w t, where

    i d(psi)/d(theta) = (1/2) (-d^2/dx^2 + x^2) psi.

Time stepping is second-order Strang splitting with FFT kinetic steps
(exactly unitary, norm drift at roundoff level); the initial coherent
state carries an explicit momentum kick p0_tilde, and results are mapped
to the co-moving variable y = x - p0_tilde*sin(theta) only at measurement
time, keeping the solver maximally independent of the analytic path's
built-in frame.

Tail handling.  A sharp projection creates 1/k^2 momentum tails whose
fast components land outside any affordable box (the position-space
branch density decays only like |sin theta|/(2 pi^1.5 y^2); the mass
beyond |y| = Y is about that coefficient divided by Y, e.g. ~2e-3 past
Y = 40 at theta = pi/2).  Rather than losing that mass to wrap-around,
the projection is performed on a refined auxiliary grid, band limited to
|k| <= k_keep, and the out-of-band mass is carried as two numbers
assigned ballistically (a momentum-k component lands at y ~ k sin(theta),
far beyond every finite boundary, so it belongs wholly to the extreme
R+/R- bin on the side sign(k sin theta)).  The in-band part is decimated
to the main grid exactly (it is band limited) and evolved; measured
probabilities then add the carried masses back.  Bookkeeping is exact:
joint rows sum to the first-measurement probabilities at roundoff.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from scipy import fft as _fft
from scipy.special import erfc as _erfc_real

from .errors import InputDomainError, NormDriftError
from .quantum import as_phase
from .witness import ProbabilityTable

__all__ = [
    "SolverConfig",
    "GridState",
    "init_coherent",
    "evolve",
    "project",
    "oracle_density_profile",
    "oracle_probability_table",
]

_DRIFT_LIMIT = 1e-6


@dataclass(frozen=True)
class SolverConfig:
    """Grid solver configuration.

    Defaults reproduce the analytic probability tables to ~1e-8 in a few
    seconds per phase.  The far-tail assignment assumes band-edge
    components land far beyond the second boundary, which holds for
    |sin theta| down to ~0.1 at these defaults; near the propagator poles
    raise points/y_half_width accordingly.
    """

    y_half_width: float = 40.0
    points: int = 2 ** 14
    steps_per_radian: int = 2000
    p0_tilde: float = 1.0       # initial momentum kick, dimensionless
    fine_factor: int = 64       # refinement of the projection grid
    band_margin: float = 10.0   # box headroom reserved for packet spread

    def __post_init__(self):
        if self.points % 2 != 0 or self.points < 16:
            raise InputDomainError(f"points must be even and >= 16, got {self.points}")
        if not (np.isfinite(self.y_half_width) and self.y_half_width > 10):
            raise InputDomainError("y_half_width must exceed 10")
        if self.steps_per_radian < 1:
            raise InputDomainError("steps_per_radian must be >= 1")
        if int(self.fine_factor) < 1:
            raise InputDomainError("fine_factor must be >= 1")
        if not (0 < self.band_margin < self.y_half_width):
            raise InputDomainError("band_margin must lie inside the box")

    @property
    def dy(self) -> float:
        return 2.0 * self.y_half_width / self.points

    @property
    def k_max(self) -> float:
        return np.pi / self.dy


@dataclass(frozen=True)
class GridState:
    """Wavefunction samples on a uniform periodic grid."""

    y_grid: np.ndarray
    amplitude: np.ndarray
    dy: float

    def __post_init__(self):
        if len(self.y_grid) != len(self.amplitude):
            raise InputDomainError("grid and amplitude lengths differ")

    @property
    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amplitude) ** 2) * self.dy)

    @property
    def density(self) -> np.ndarray:
        return np.abs(self.amplitude) ** 2

    def normalized(self) -> "GridState":
        return replace(self, amplitude=self.amplitude / np.sqrt(self.norm_squared))


def _grid(config: SolverConfig, factor: int = 1) -> np.ndarray:
    """Midpoint-offset uniform grid: no node falls on the origin, so the
    branch cut sits between nodes (midpoint-rule accuracy for the sampled
    step) and the grid is exactly symmetric under x -> -x."""
    n = config.points * factor
    step = 2.0 * config.y_half_width / n
    return -config.y_half_width + step * (np.arange(n) + 0.5)


def _coherent_samples(x: np.ndarray, p0_tilde: float) -> np.ndarray:
    """Ground-state-width packet: pi^-1/4 exp(-x^2/2 + i p0 x)."""
    return np.pi ** -0.25 * np.exp(-0.5 * x * x + 1j * p0_tilde * x)


def init_coherent(config: SolverConfig) -> GridState:
    """Discretized initial coherent state, numerically normalized."""
    x = _grid(config)
    psi = _coherent_samples(x, config.p0_tilde)
    state = GridState(y_grid=x, amplitude=psi, dy=config.dy)
    return state.normalized()


def evolve(state: GridState, theta_span: float, config: SolverConfig) -> GridState:
    """Propagate by theta_span radians of oscillator phase.

    Strang splitting exp(-iV dt/2) exp(-iT dt) exp(-iV dt/2) with the
    kinetic factor applied exactly in Fourier space; unconditionally
    stable and unitary.  Raises NormDriftError if the relative norm moves
    by more than 1e-6 (signals a mis-tuned grid, not a scheme failure).
    """
    theta_span = float(theta_span)
    if not (np.isfinite(theta_span) and theta_span > 0):
        raise InputDomainError(f"theta_span must be positive, got {theta_span!r}")
    n_steps = max(1, int(np.ceil(theta_span * config.steps_per_radian)))
    dt = theta_span / n_steps

    x = state.y_grid
    k = 2.0 * np.pi * _fft.fftfreq(x.size, d=state.dy)
    exp_v_half = np.exp(-0.25j * dt * x * x)
    exp_v_full = exp_v_half * exp_v_half
    exp_t = np.exp(-0.5j * dt * k * k)

    norm0 = state.norm_squared
    psi = state.amplitude * exp_v_half
    for step in range(n_steps):
        psi = _fft.ifft(exp_t * _fft.fft(psi))
        psi *= exp_v_full if step < n_steps - 1 else exp_v_half
    out = GridState(y_grid=x, amplitude=psi, dy=state.dy)

    drift = abs(out.norm_squared - norm0) / norm0
    if drift > _DRIFT_LIMIT:
        raise NormDriftError(f"norm drifted by {drift:.3e} over span {theta_span:g}")
    return out


def _halfweight_mask(x: np.ndarray, boundary: float, side: int, dy: float) -> np.ndarray:
    """Amplitude mask keeping one side; a node sitting on the boundary gets
    sqrt(1/2) so the two sides' probabilities sum exactly to the total."""
    mask = np.zeros(x.size)
    if side == 1:
        mask[x > boundary] = 1.0
    else:
        mask[x < boundary] = 1.0
    on_boundary = np.abs(x - boundary) < 0.25 * dy
    mask[on_boundary] = np.sqrt(0.5)
    return mask


def project(state: GridState, boundary_y: float, side: int) -> tuple[GridState, float]:
    """Sharp which-side projection: zero the discarded side.

    Returns the renormalized kept state and the captured probability;
    the two sides' probabilities sum to the state norm exactly.
    """
    if side not in (1, -1):
        raise InputDomainError(f"side must be +1 or -1, got {side!r}")
    boundary_y = float(boundary_y)
    if not (state.y_grid[0] <= boundary_y <= state.y_grid[-1]):
        raise InputDomainError(
            f"boundary {boundary_y!r} outside grid "
            f"[{state.y_grid[0]:g}, {state.y_grid[-1]:g}]")
    mask = _halfweight_mask(state.y_grid, boundary_y, side, state.dy)
    kept = state.amplitude * mask
    captured = float(np.sum(np.abs(kept) ** 2) * state.dy)
    total = state.norm_squared
    prob = captured / total
    if captured == 0.0:
        return replace(state, amplitude=kept), 0.0
    return replace(state, amplitude=kept / np.sqrt(captured)), prob


def _keep_band(theta: float, config: SolverConfig) -> float:
    """Largest |k| whose ballistic trajectory k*sin(tau) stays inside the
    box, with headroom, at EVERY intermediate time tau <= theta (the
    excursion peaks at a quarter period, not necessarily at theta);
    capped below the coarse Nyquist frequency."""
    excursion = 1.0 if theta >= np.pi / 2 else max(abs(np.sin(theta)), 1e-12)
    box_limit = (config.y_half_width - config.band_margin) / excursion
    return min(0.95 * config.k_max, box_limit)


def _bandlimited_branch(side: int, phase, config: SolverConfig):
    """Cut the initial state at x=0 on the refined grid, band limit, and
    decimate.  Returns (unnormalized coarse GridState, first-measurement
    probability, far-tail mass toward +inf, toward -inf).

    The cut falls between grid nodes: the sampled step then matches the
    continuum transform at midpoint-rule accuracy O(dx_f^2) and the two
    branches partition the norm exactly (a node on the cut would cost an
    O(dx_f) spectral bias)."""
    n_f = config.points * config.fine_factor
    x_f = _grid(config, config.fine_factor)
    dx_f = x_f[1] - x_f[0]
    psi = _coherent_samples(x_f, config.p0_tilde)
    psi /= np.sqrt(np.sum(np.abs(psi) ** 2) * dx_f)
    psi = np.where(x_f * side > 0, psi, 0.0)
    p_q = float(np.sum(np.abs(psi) ** 2) * dx_f)

    phi = _fft.fft(psi)
    k = 2.0 * np.pi * _fft.fftfreq(n_f, d=dx_f)
    k_keep = _keep_band(phase.theta, config)
    mode_mass = (np.abs(phi) ** 2) * (dx_f / n_f)
    # Smooth (erf) band edge: a brick-wall filter would ring like sinc
    # across the whole box and corrupt the evolved density at the 1e-4
    # level once the periodic wrap interferes with the core.
    width = min(1.5, 0.1 * k_keep)
    taper = 0.5 * _erfc_real((np.abs(k) - k_keep) / width)
    removed = mode_mass * (1.0 - taper * taper)
    # A fast component k lands near y = k*sin(theta): beyond the box and
    # hence beyond every finite boundary, on the side sign(k*sin(theta)).
    mass_pos_k = float(removed[k > 0].sum())
    mass_neg_k = float(removed[k < 0].sum())
    if phase.sin >= 0:
        far_plus, far_minus = mass_pos_k, mass_neg_k
    else:
        far_plus, far_minus = mass_neg_k, mass_pos_k

    phi *= taper
    n_c = config.points
    phi[np.abs(k) >= 0.999 * config.k_max] = 0.0  # keep decimation exact
    phi_c = np.concatenate([phi[: n_c // 2], phi[n_f - n_c // 2:]]) * (n_c / n_f)
    # band-limited resample onto the coarse midpoint grid (the fine and
    # coarse grids have different half-cell origins)
    x_c = _grid(config)
    k_c = 2.0 * np.pi * _fft.fftfreq(n_c, d=config.dy)
    phi_c *= np.exp(1j * k_c * (x_c[0] - x_f[0]))
    psi_c = _fft.ifft(phi_c)
    state = GridState(y_grid=x_c, amplitude=psi_c, dy=config.dy)
    return state, p_q, far_plus, far_minus


def _integral_above(x: np.ndarray, rho: np.ndarray, b: float, dy: float) -> float:
    """integral of rho over [b, x_end]: composite trapezoid with an
    Euler-Maclaurin endpoint correction plus a quadratically interpolated
    partial cell, O(dy^3) accurate for smooth densities."""
    if b <= x[0]:
        return float(np.trapezoid(rho, dx=dy))
    if b >= x[-1]:
        return 0.0
    j0 = int(np.searchsorted(x, b, side="left"))
    tail = float(np.trapezoid(rho[j0:], dx=dy))
    if 1 <= j0 < x.size - 1:
        deriv = (rho[j0 + 1] - rho[j0 - 1]) / (2.0 * dy)
        tail += dy * dy / 12.0 * deriv
        # quadratic through the three nodes around the split, integrated
        # over [b, x_j0]
        t = (b - x[j0]) / dy  # in [-1, 0]
        f0, fm, fp = rho[j0], rho[j0 - 1], rho[j0 + 1]
        c1 = 0.5 * (fp - fm)
        c2 = 0.5 * (fp - 2.0 * f0 + fm)
        tail += -dy * (f0 * t + 0.5 * c1 * t * t + c2 * t ** 3 / 3.0)
    return tail


def oracle_density_profile(theta, config: SolverConfig | None = None):
    """Free and unnormalized branch densities on the co-moving grid.

    Numerical counterpart of the analytic density tabulation, for
    pointwise cross-checks of the macrorealism defect.  Returns
    (y_grid, rho_free, rho_plus, rho_minus); the branch states are
    prepared band limited (a sharp cut sampled directly on the coarse
    grid would alias its 1/k tail back into the box at the 1e-3 level).
    """
    config = config or SolverConfig()
    phase = as_phase(theta)
    free = evolve(init_coherent(config), phase.theta, config)
    rhos = []
    for s in (1, -1):
        branch, _, _, _ = _bandlimited_branch(s, phase, config)
        rhos.append(evolve(branch, phase.theta, config).density)
    y = free.y_grid - config.p0_tilde * phase.sin
    return y, free.density, rhos[0], rhos[1]


def oracle_probability_table(theta, gamma: float, config: SolverConfig | None = None) -> ProbabilityTable:
    """End-to-end numerical re-derivation of the probability table.

    Pipeline: initialize, project at the origin (refined grid, band
    limited), evolve each branch and the unprojected state by theta,
    then integrate densities on each side of the second boundary
    (gamma mapped to the rest frame) with the carried far-tail masses
    added to the extreme bins.
    """
    config = config or SolverConfig()
    phase = as_phase(theta)
    gamma = float(gamma)
    boundary = gamma + config.p0_tilde * phase.sin
    if abs(boundary) > config.y_half_width - config.band_margin:
        raise InputDomainError(
            f"second boundary {boundary:g} too close to the box edge")

    free = evolve(init_coherent(config), phase.theta, config)
    p_r_plus = _integral_above(free.y_grid, free.density, boundary, free.dy)
    p_r = (p_r_plus, float(free.norm_squared - p_r_plus))

    joint = np.empty((2, 2))
    p_q = [0.0, 0.0]
    for i, s in enumerate((1, -1)):
        branch, p_q_s, far_plus, far_minus = _bandlimited_branch(s, phase, config)
        branch = evolve(branch, phase.theta, config)
        rho = branch.density
        above = _integral_above(branch.y_grid, rho, boundary, branch.dy)
        total = float(np.sum(rho) * branch.dy)
        joint[i, 0] = above + far_plus
        joint[i, 1] = (total - above) + far_minus
        p_q[i] = p_q_s

    return ProbabilityTable(p_q=(p_q[0], p_q[1]), p_r=p_r, joint=joint,
                            theta=phase.theta, gamma=gamma)
