"""Observable probabilities and the two macrorealism witnesses.

Measurement protocol: a which-side-of-the-origin measurement Q at t1 = 0,
then a which-side-of-gamma measurement R at phase theta = w*t2, on an
oscillator coherent state.  In co-moving dimensionless coordinates the
complete statistics are

    p(Q-/+)        = [1 +/- erf(e1)] / 2
    p(R-/+)        = [1 +/- erf(gamma + e2)] / 2      (no Q measurement)
    p(Q_s, R-)     = integral_{-inf}^{gamma+e2} g_s(y) dy
    p(Q_s, R+)     = integral_{gamma+e2}^{+inf} g_s(y) dy

with g_s the branch densities of the quantum module and (e1, e2) the
dimensionless boundary offsets of the two measurements.

Witnesses:

    NSIT   N_+/- = p(R+/-) - [p(Q+, R+/-) + p(Q-, R+/-)]  (0 classically)
    LGI    L_{s1 s2} = 1 + s1<Q> + s2<R> + s1 s2 <QR> >= 0 classically,
           violation reported as max over the four sign pairs of (-L).

<R> always uses the no-prior-measurement marginal: noninvasive
measurability equates the two ensembles, and the joint-derived marginal
differs from it by exactly the NSIT defect.

When the second boundary is placed at (peak position) + sign*c*(spread),
gamma = sign*c/sqrt(2) independently of mass, frequency and momentum, so
every quantity here is a function of (theta, c, sign, offsets) alone; the
dimensional entry points convert and delegate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._integrate import integrate_half_line
from .constants import HBAR, QUAD_TOL, SIN_MIN
from .errors import InputDomainError, PhaseSingularError, QuadratureError
from .quantum import Phase, as_phase, branch_density
from .specfun import erf_real

__all__ = [
    "MeasurementConfig",
    "OscillatorParams",
    "ProbabilityTable",
    "WitnessReport",
    "TABLE_ROWS",
    "gamma_from_offset",
    "gamma_from_dimensional",
    "beta2_offset_rule",
    "probability_table",
    "nsit",
    "lgi",
    "witness_from_table",
    "witness_report",
    "witness_dimensional",
    "table1",
]

# Index convention for all 2x2 arrays in this module: index 0 <-> +1,
# index 1 <-> -1, rows = first measurement (Q or s1), cols = second (R or s2).
_SIGNS = (1, -1)

# The seven published second-measurement times, as fractions of the period.
TABLE_ROWS = ((1, 14), (1, 8), (1, 4), (1, 3), (3, 8), (2, 5), (3, 4))

_CONSISTENCY_TOL = 1e-8


def _check_sign(sign: int) -> int:
    if sign not in (1, -1):
        raise InputDomainError(f"sign must be +1 or -1, got {sign!r}")
    return int(sign)


def gamma_from_offset(c: float, sign: int) -> float:
    """Dimensionless second boundary gamma = sign * c / sqrt(2).

    c >= 0 is the boundary offset from the moving packet peak in units of
    the packet spread; the mass independence of the witnesses rests on
    gamma depending on nothing else.
    """
    c = float(c)
    if not np.isfinite(c) or c < 0:
        raise InputDomainError(f"offset scale c must be finite and >= 0, got {c!r}")
    return _check_sign(sign) * c / np.sqrt(2.0)


@dataclass(frozen=True)
class MeasurementConfig:
    """Dimensionless measurement schedule: phase plus second boundary.

    When built by the offset rule, gamma == sign * c / sqrt(2) exactly.
    """

    theta: Phase
    gamma: float
    c: float | None = None
    sign: int | None = None

    def __post_init__(self):
        if not np.isfinite(self.gamma):
            raise InputDomainError("gamma must be finite")
        if (self.c is None) != (self.sign is None):
            raise InputDomainError("c and sign must be given together")
        if self.c is not None:
            expected = gamma_from_offset(self.c, self.sign)
            if self.gamma != expected:
                raise InputDomainError(
                    f"gamma={self.gamma!r} inconsistent with offset rule "
                    f"sign*c/sqrt(2)={expected!r}")

    @classmethod
    def from_offset_rule(cls, theta, c: float, sign: int) -> "MeasurementConfig":
        phase = as_phase(theta)
        return cls(theta=phase, gamma=gamma_from_offset(c, sign),
                   c=float(c), sign=_check_sign(sign))


@dataclass(frozen=True)
class OscillatorParams:
    """Dimensional experiment description (SI units)."""

    mass: float            # kg
    omega: float           # rad/s
    p0: float = 0.0        # kg m/s
    hbar: float = HBAR     # J s, overridable for dimensionless unit tests

    def __post_init__(self):
        if not (np.isfinite(self.mass) and self.mass > 0):
            raise InputDomainError(f"mass must be > 0, got {self.mass!r}")
        if not (np.isfinite(self.omega) and self.omega > 0):
            raise InputDomainError(f"omega must be > 0, got {self.omega!r}")
        if not np.isfinite(self.p0):
            raise InputDomainError("p0 must be finite")
        if not (np.isfinite(self.hbar) and self.hbar > 0):
            raise InputDomainError("hbar must be > 0")

    @property
    def length_scale(self) -> float:
        """sqrt(hbar / (m w)): converts x to dimensionless x-tilde."""
        return float(np.sqrt(self.hbar / (self.mass * self.omega)))

    @property
    def momentum_scale(self) -> float:
        """sqrt(hbar m w): converts p to dimensionless p-tilde."""
        return float(np.sqrt(self.hbar * self.mass * self.omega))


def gamma_from_dimensional(params: OscillatorParams, beta2: float, t2: float) -> float:
    """gamma = beta2 sqrt(m w / hbar) - p0 sin(w t2) / sqrt(hbar m w)."""
    theta = params.omega * float(t2)
    return float(beta2) / params.length_scale \
        - params.p0 * np.sin(theta) / params.momentum_scale


@dataclass(frozen=True)
class ProbabilityTable:
    """Complete observable statistics of the two-measurement protocol.

    p_q, p_r are (plus, minus) pairs; joint is 2x2 with rows Q+/Q- and
    columns R+/R-.  Construction enforces normalization and marginal
    consistency to 1e-8 (the sentinel for correct tail quadrature).
    """

    p_q: tuple[float, float]
    p_r: tuple[float, float]
    joint: np.ndarray
    theta: float = field(default=float("nan"))
    gamma: float = field(default=float("nan"))
    eps1_tilde: float = 0.0
    eps2_tilde: float = 0.0

    def __post_init__(self):
        joint = np.asarray(self.joint, dtype=float)
        if joint.shape != (2, 2):
            raise InputDomainError("joint must be 2x2")
        object.__setattr__(self, "joint", joint)
        values = np.concatenate([joint.ravel(), self.p_q, self.p_r])
        if np.any(values < -_CONSISTENCY_TOL) or np.any(values > 1 + _CONSISTENCY_TOL):
            raise QuadratureError(f"probabilities outside [0,1]: {values!r}")
        checks = {
            "p_q sum": abs(sum(self.p_q) - 1.0),
            "p_r sum": abs(sum(self.p_r) - 1.0),
            "joint sum": abs(joint.sum() - 1.0),
            "row Q+": abs(joint[0].sum() - self.p_q[0]),
            "row Q-": abs(joint[1].sum() - self.p_q[1]),
        }
        bad = {k: v for k, v in checks.items() if v > _CONSISTENCY_TOL}
        if bad:
            raise QuadratureError(
                f"probability table inconsistent beyond {_CONSISTENCY_TOL:g}: {bad}")


def _chirp_breakpoints(phase: Phase, center: float) -> list[float]:
    """Panel boundaries tracking the kernel's quadratic chirp near a pole.

    Close to a propagator pole the dominant-branch density carries
    diffraction fringes exp(+-i u^2 cot(theta)/2) around the kernel center
    (local wavelength 2*pi*|tan theta|/|u|).  Seed panels of about one
    fringe each out to |u| = 6, beyond which the fringe amplitude is below
    1e-9; capped at ~2.6e5 panels, past which (|sin theta| <~ 3e-6) the
    quadrature budget may be exhausted and reported.
    """
    cot = abs(phase.cot)
    if cot <= 5.0:
        return []
    du2 = max(4.0 * np.pi / cot, 2.8e-4)  # one fringe per panel, capped
    u = np.sqrt(np.arange(du2, 36.0, du2))
    return list(center + u) + list(center - u)


def probability_table(theta, gamma: float, eps1_tilde: float = 0.0,
                      eps2_tilde: float = 0.0, *, tol: float = QUAD_TOL) -> ProbabilityTable:
    """Assemble the full probability table at one (theta, gamma, offsets).

    The four joint entries are four independent half-line quadratures of
    the branch densities (left and right sides are NOT obtained from each
    other by subtraction, so the normalization and marginal invariants are
    genuine checks of the algebraic-tail handling).  Singles are closed
    forms in erf.
    """
    phase = as_phase(theta)
    gamma = float(gamma)
    e1 = float(eps1_tilde)
    e2 = float(eps2_tilde)
    if not (np.isfinite(gamma) and np.isfinite(e1) and np.isfinite(e2)):
        raise InputDomainError("gamma and offsets must be finite")

    split = gamma + e2
    p_q = (0.5 * (1.0 - erf_real(e1)), 0.5 * (1.0 + erf_real(e1)))
    p_r = (0.5 * (1.0 - erf_real(split)), 0.5 * (1.0 + erf_real(split)))

    # Panel seeds: Gaussian core scale 1 around 0, kernel feature around
    # e1*cos(theta) at scale sqrt(2|sin theta|) (shrinks near the poles).
    kernel_center = e1 * np.cos(phase.theta)
    kernel_scale = max(np.sqrt(2.0 * abs(phase.sin)), 4e-4)
    seeds = [0.0, -2.0, 2.0, -5.0, 5.0, split]
    for k in (1.0, 4.0):
        seeds += [kernel_center - k * kernel_scale, kernel_center + k * kernel_scale]
    seeds.extend(_chirp_breakpoints(phase, kernel_center))
    core = max(12.0, abs(split) + 2.0, abs(kernel_center) + 8.0)

    joint = np.empty((2, 2))
    for i, s in enumerate(_SIGNS):
        def g(y, _s=s):
            return branch_density(y, phase, _s, e1)

        joint[i, 1] = integrate_half_line(g, split, "left", tol=tol,
                                          core_halfwidth=core, seed_points=seeds)
        joint[i, 0] = integrate_half_line(g, split, "right", tol=tol,
                                          core_halfwidth=core, seed_points=seeds)

    return ProbabilityTable(p_q=p_q, p_r=p_r, joint=joint, theta=phase.theta,
                            gamma=gamma, eps1_tilde=e1, eps2_tilde=e2)


def nsit(table: ProbabilityTable) -> tuple[float, float]:
    """No-signalling-in-time defects (N+, N-); both vanish classically.

    N+ + N- = 0 identically (the two regions are complementary), so the
    violation magnitude |N+/-| is unambiguous.
    """
    n_plus = table.p_r[0] - (table.joint[0, 0] + table.joint[1, 0])
    n_minus = table.p_r[1] - (table.joint[0, 1] + table.joint[1, 1])
    return float(n_plus), float(n_minus)


def lgi(table: ProbabilityTable) -> tuple[np.ndarray, float]:
    """Two-time Leggett-Garg functionals L_{s1,s2} and max(-L).

    L = 1 + s1<Q> + s2<R> + s1 s2 <QR> with <R> from the unmeasured-Q
    ensemble.  Positive max(-L) certifies violation; the value is reported
    signed either way.
    """
    mean_q = table.p_q[0] - table.p_q[1]
    mean_r = table.p_r[0] - table.p_r[1]
    j = table.joint
    corr = j[0, 0] - j[0, 1] - j[1, 0] + j[1, 1]
    L = np.empty((2, 2))
    for i, s1 in enumerate(_SIGNS):
        for k, s2 in enumerate(_SIGNS):
            L[i, k] = 1.0 + s1 * mean_q + s2 * mean_r + s1 * s2 * corr
    return L, float(np.max(-L))


@dataclass(frozen=True)
class WitnessReport:
    """Witness values plus the inputs that produced them (provenance)."""

    n_plus: float
    n_minus: float
    L: np.ndarray            # rows s1 = +1,-1; cols s2 = +1,-1
    nsit_violation: float    # |N+/-|
    lgi_violation: float     # max(-L); <= 0 means no violation
    theta: float
    gamma: float
    eps1_tilde: float = 0.0
    eps2_tilde: float = 0.0
    c: float | None = None
    sign: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "L", np.asarray(self.L, dtype=float))
        if self.L.shape != (2, 2):
            raise InputDomainError("L must be 2x2")
        if abs(self.n_plus + self.n_minus) > _CONSISTENCY_TOL:
            raise QuadratureError(
                f"N+ + N- = {self.n_plus + self.n_minus:.3e} exceeds "
                f"{_CONSISTENCY_TOL:g}")
        if np.any(self.L < -2 - _CONSISTENCY_TOL) or np.any(self.L > 4 + _CONSISTENCY_TOL):
            raise QuadratureError(f"L outside [-2, 4]: {self.L!r}")

    @property
    def lgi_violated(self) -> bool:
        return self.lgi_violation > 0.0


def witness_from_table(table: ProbabilityTable, *, c: float | None = None,
                       sign: int | None = None) -> WitnessReport:
    """Evaluate both witnesses on an existing probability table."""
    n_plus, n_minus = nsit(table)
    L, violation = lgi(table)
    return WitnessReport(
        n_plus=n_plus, n_minus=n_minus, L=L,
        nsit_violation=abs(n_plus), lgi_violation=violation,
        theta=table.theta, gamma=table.gamma,
        eps1_tilde=table.eps1_tilde, eps2_tilde=table.eps2_tilde,
        c=c, sign=sign)


def witness_report(theta, c: float, sign: int, offsets=(0.0, 0.0), *,
                   tol: float = QUAD_TOL) -> WitnessReport:
    """Full witness at gamma = sign*c/sqrt(2) with boundary offsets.

    offsets is an (eps1_tilde, eps2_tilde) pair; OffsetPair instances from
    the imprecision module work directly.
    """
    config = MeasurementConfig.from_offset_rule(theta, c, sign)
    e1, e2 = _offset_pair(offsets)
    table = probability_table(config.theta, config.gamma, e1, e2, tol=tol)
    return witness_from_table(table, c=config.c, sign=config.sign)


def _offset_pair(offsets) -> tuple[float, float]:
    e1 = getattr(offsets, "eps1_tilde", None)
    if e1 is not None:
        return float(e1), float(offsets.eps2_tilde)
    e1, e2 = offsets
    return float(e1), float(e2)


def witness_dimensional(params: OscillatorParams, t2: float, beta2: float,
                        eps1: float = 0.0, eps2: float = 0.0, *,
                        tol: float = QUAD_TOL) -> WitnessReport:
    """Witness from SI inputs: t2 in s, beta2/eps1/eps2 in m.

    Converts to (theta = w t2, gamma, eps_i * sqrt(m w / hbar)) and
    delegates; given identical converted inputs, the result is bit
    identical to the dimensionless path.
    """
    theta = params.omega * float(t2)
    if abs(np.sin(theta)) < SIN_MIN:
        raise PhaseSingularError(
            f"omega*t2 = {theta!r} is singular (|sin| < {SIN_MIN:g})")
    gamma = gamma_from_dimensional(params, beta2, t2)
    e1 = float(eps1) / params.length_scale
    e2 = float(eps2) / params.length_scale
    table = probability_table(theta, gamma, e1, e2, tol=tol)
    return witness_from_table(table)


def beta2_offset_rule(params: OscillatorParams, t2: float, c: float = np.sqrt(2.0),
                      sign: int = 1) -> float:
    """Second boundary in meters: (peak position) + sign * c * (spread).

    Peak position p0 sin(w t2)/(m w), spread sqrt(hbar/(2 m w)); this is
    the placement that cancels every dimensional parameter out of gamma.
    """
    _check_sign(sign)
    if c < 0:
        raise InputDomainError("offset scale c must be >= 0")
    theta = params.omega * float(t2)
    peak = params.p0 * np.sin(theta) / (params.mass * params.omega)
    spread = params.length_scale / np.sqrt(2.0)
    return float(peak + sign * c * spread)


def table1(*, tol: float = QUAD_TOL) -> list[WitnessReport]:
    """The seven published rows: t2/T in {1/14, 1/8, 1/4, 1/3, 3/8, 2/5, 3/4}
    at c = sqrt(2), positive sign, zero offsets."""
    reports = []
    for num, den in TABLE_ROWS:
        theta = 2.0 * np.pi * num / den
        reports.append(witness_report(theta, np.sqrt(2.0), 1, (0.0, 0.0), tol=tol))
    return reports
