"""Dimensionless oscillator state machinery.

Everything lives in co-moving, dimensionless coordinates

    y     = x * sqrt(m w / hbar) - p0 sin(w t2) / sqrt(hbar m w),
    theta = w * t2,

in which the freely evolved coherent-state density is exp(-y^2)/sqrt(pi)
for every phase, and the whole problem depends on (theta, gamma, offsets)
only.  Dimensional inputs are converted at the boundary (witness module);
this is exactly the mechanism that makes the violations mass independent.

A sharp which-side measurement at the origin at t=0 splits the state into
two branches.  Propagated to phase theta, the unnormalized branch density
for branch s = +/-1 with a first-boundary offset e1 (dimensionless) is

    g_s(y) = exp(-y^2) |1 + s*erf(z)|^2 / (4 sqrt(pi)),
    z      = i(-y + e1*exp(i theta)) / (sin(theta) sqrt(2 - 2i cot(theta))).

Sharp edges diffract: g_s decays only like |sin theta| / (2 pi^1.5 y^2) on
its suppressed side, so the direct formula (huge |erf| times tiny Gaussian)
is evaluated here through the Faddeeva function:

    1 + s*erf(z) = erfc(-s z),
    |erfc(zeta)|^2 exp(-y^2) = exp(-e1^2) |w(i zeta)|^2        (Re zeta >= 0)

using the identity -y^2 - 2 Re(z^2) = -e1^2, exact for all (y, theta, e1).
On the opposite side erfc(zeta) = 2 - exp(-z^2) w(-i zeta) expands into
three stably computable terms.  Result: no overflow for any y.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import wofz

from .constants import SIN_MIN, SQRT_PI
from .errors import InputDomainError, PhaseSingularError

__all__ = [
    "Phase",
    "DensityProfile",
    "as_phase",
    "free_density",
    "branch_density",
    "branch_tail_coefficient",
    "mr_defect",
    "density_profile",
]


@dataclass(frozen=True)
class Phase:
    """Dimensionless measurement phase theta = omega * t2.

    Rejected when theta <= 0 or |sin theta| < SIN_MIN: the propagator
    normalization diverges at integer multiples of half a period.
    """

    theta: float

    def __post_init__(self):
        theta = float(self.theta)
        if not np.isfinite(theta) or theta <= 0.0:
            raise PhaseSingularError(f"phase must be positive and finite, got {theta!r}")
        if abs(np.sin(theta)) < SIN_MIN:
            raise PhaseSingularError(
                f"phase theta={theta!r} is singular: |sin theta| = "
                f"{abs(np.sin(theta)):.3e} < {SIN_MIN:g} (propagator pole at "
                "integer multiples of half a period)"
            )
        object.__setattr__(self, "theta", theta)

    @property
    def sin(self) -> float:
        return float(np.sin(self.theta))

    @property
    def cot(self) -> float:
        return float(np.cos(self.theta) / np.sin(self.theta))


def as_phase(theta) -> Phase:
    """Coerce a float or Phase to a validated Phase."""
    return theta if isinstance(theta, Phase) else Phase(float(theta))


def free_density(y):
    """Density at phase theta with no first measurement: exp(-y^2)/sqrt(pi).

    Theta independent in the co-moving frame; integrates to 1 over R.
    """
    y = np.asarray(y, dtype=float)
    out = np.exp(-y * y) / SQRT_PI
    return float(out) if out.ndim == 0 else out


def _kernel_argument(y: np.ndarray, phase: Phase, eps1_tilde: float) -> np.ndarray:
    """z(y) entering erf; principal branch of the complex square root.

    The underlying Gaussian exponent parameter has strictly positive real
    part, so the principal root is the convergent one.
    """
    denom = phase.sin * np.sqrt(2.0 - 2.0j * phase.cot)
    return 1j * (-y + eps1_tilde * np.exp(1j * phase.theta)) / denom


def branch_density(y, theta, branch: int, eps1_tilde: float = 0.0):
    """Unnormalized post-measurement branch density g_s(y; theta, e1).

    branch is +1 or -1.  For eps1_tilde = 0 each branch integrates to 1/2
    (the first-measurement outcome probability).  Nonnegative for all y;
    the evaluation is overflow-free out to |y| = 1e14 (see module docstring).
    """
    phase = as_phase(theta)
    if branch not in (1, -1):
        raise InputDomainError(f"branch must be +1 or -1, got {branch!r}")
    e1 = float(eps1_tilde)
    if not np.isfinite(e1):
        raise InputDomainError("eps1_tilde must be finite")

    y_arr = np.asarray(y, dtype=float)
    scalar = y_arr.ndim == 0
    y_arr = np.atleast_1d(y_arr)

    z = _kernel_argument(y_arr, phase, e1)
    z2 = z * z
    zeta = -branch * z

    out = np.empty_like(y_arr)
    pref = np.exp(-e1 * e1) / (4.0 * SQRT_PI)

    sup = zeta.real >= 0.0  # suppressed side: erfc decays
    out[sup] = pref * np.abs(wofz(1j * zeta[sup])) ** 2

    dom = ~sup  # dominant side: erfc(zeta) = 2 - exp(-z^2) w(-i zeta)
    if np.any(dom):
        w2 = wofz(1j * branch * z[dom])
        ey2 = np.exp(-y_arr[dom] * y_arr[dom])
        # Re(-y^2 - z^2) = -(y^2 + e1^2)/2 <= 0: never overflows.
        cross = np.exp(-y_arr[dom] * y_arr[dom] - z2[dom]) * w2
        out[dom] = (4.0 * ey2 - 4.0 * cross.real
                    + np.exp(-e1 * e1) * np.abs(w2) ** 2) / (4.0 * SQRT_PI)

    np.maximum(out, 0.0, out=out)  # clip roundoff-negative values near zeros
    return float(out[0]) if scalar else out


def branch_tail_coefficient(theta, eps1_tilde: float = 0.0) -> float:
    """Leading suppressed-side tail coefficient A in g ~ A / y^2.

    A = exp(-e1^2) |sin theta| / (2 pi^1.5); used for tail-corrected grid
    integrals and documentation of the beyond-grid mass A/Y.
    """
    phase = as_phase(theta)
    return float(np.exp(-eps1_tilde ** 2) * abs(phase.sin) / (2.0 * np.pi ** 1.5))


def mr_defect(y, theta):
    """Pointwise macrorealism defect d(y) = free - (g+ + g-) at zero offset.

    Macrorealism requires the unmeasured density to equal the branch sum;
    any nonzero value certifies failure.  Integrates to 0 over R.
    """
    phase = as_phase(theta)
    return (free_density(y)
            - branch_density(y, phase, +1, 0.0)
            - branch_density(y, phase, -1, 0.0))


@dataclass(frozen=True)
class DensityProfile:
    """Tabulated free and branch densities on a uniform y grid."""

    y_grid: np.ndarray
    rho_free: np.ndarray
    rho_plus: np.ndarray
    rho_minus: np.ndarray
    theta: float = field(default=float("nan"))

    def __post_init__(self):
        n = len(self.y_grid)
        if any(len(a) != n for a in (self.rho_free, self.rho_plus, self.rho_minus)):
            raise InputDomainError("profile columns must share the grid length")
        if np.any(np.diff(self.y_grid) <= 0):
            raise InputDomainError("y_grid must be strictly increasing")
        for name in ("rho_free", "rho_plus", "rho_minus"):
            if np.any(np.asarray(getattr(self, name)) < 0):
                raise InputDomainError(f"{name} must be nonnegative")


def density_profile(theta, y_min: float, y_max: float, points: int) -> DensityProfile:
    """Tabulate free_density and both branch densities on a uniform grid."""
    phase = as_phase(theta)
    points = int(points)
    if points < 2:
        raise InputDomainError(f"points must be >= 2, got {points}")
    if not (np.isfinite(y_min) and np.isfinite(y_max) and y_min < y_max):
        raise InputDomainError(f"need finite y_min < y_max, got [{y_min}, {y_max}]")
    y = np.linspace(float(y_min), float(y_max), points)
    return DensityProfile(
        y_grid=y,
        rho_free=free_density(y),
        rho_plus=branch_density(y, phase, +1, 0.0),
        rho_minus=branch_density(y, phase, -1, 0.0),
        theta=phase.theta,
    )
