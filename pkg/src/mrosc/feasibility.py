"""Closed-form experimental feasibility calculators.

Order-of-magnitude planning numbers for running the witness protocol on a
real trapped oscillator: the standard quantum limit of position
measurement, the boundary-jitter half-range that keeps the dimensionless
offsets inside [-1, 1], the force-noise ceiling below which decoherence
over one period is negligible, and the photon-budget position resolution
of scattered-light detection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import HBAR
from .errors import InputDomainError

__all__ = [
    "FeasibilityReport",
    "standard_quantum_limit",
    "force_noise_ceiling",
    "decoherence_check",
    "scatter_resolution",
    "feasibility_report",
]

# "Much less than" operationalized as one decade; applied to the
# decoherence rate vs 1/t2 comparison and stated in the report.
DECOHERENCE_MARGIN = 0.1


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not (np.isfinite(value) and value > 0):
            raise InputDomainError(f"{name} must be positive and finite, got {value!r}")


def standard_quantum_limit(mass: float, omega: float, *, hbar: float = HBAR) -> float:
    """Back-action-limited position resolution sqrt(hbar/(2 m w)) in meters.

    Also the ground-state spread of the trapped oscillator, so boundary
    placement at this precision needs no squeezing or sub-SQL metrology.
    """
    _require_positive(mass=mass, omega=omega)
    return float(np.sqrt(hbar / (2.0 * mass * omega)))


def force_noise_ceiling(mass: float, omega: float, *, hbar: float = HBAR) -> float:
    """Force-noise amplitude ceiling w*sqrt(hbar m)/sqrt(pi) in N/sqrt(Hz).

    sqrt(S_FF) must sit well below this for coherence to survive a
    measurement delay of order one period; 10 kg at 100 rad/s gives
    ~1.8e-15 N/sqrt(Hz).  Larger masses help: force noise induces less
    acceleration.
    """
    _require_positive(mass=mass, omega=omega)
    return float(omega * np.sqrt(hbar * mass) / np.sqrt(np.pi))


def decoherence_check(s_ff: float, delta_x: float, t2: float, *,
                      hbar: float = HBAR) -> bool:
    """True iff the force-noise decoherence rate S_FF (dx)^2 / hbar^2 stays
    a decade below 1/t2 (margin DECOHERENCE_MARGIN)."""
    if not (np.isfinite(s_ff) and s_ff >= 0):
        raise InputDomainError(f"s_ff must be >= 0, got {s_ff!r}")
    _require_positive(delta_x=delta_x, t2=t2)
    rate = s_ff * delta_x ** 2 / hbar ** 2
    return bool(rate < DECOHERENCE_MARGIN / t2)


def scatter_resolution(wavelength: float, photons: float) -> float:
    """Scattered-light position resolution lambda/sqrt(n) in meters.

    With micron light, ~1e8 collected photons resolve the ground-state
    spread of a 1e-14 kg particle in a 1 rad/s trap.
    """
    _require_positive(wavelength=wavelength)
    if not (np.isfinite(photons) and photons >= 1):
        raise InputDomainError(f"photons must be >= 1, got {photons!r}")
    return float(wavelength / np.sqrt(photons))


@dataclass(frozen=True)
class FeasibilityReport:
    """Bundle of the feasibility numbers for one (mass, omega) point."""

    sql: float                          # m
    offset_half_range: float            # m, = sqrt(2) * sql
    force_noise_ceiling: float          # N/sqrt(Hz)
    scatter_resolution: float | None = None   # m
    decoherence_ok: bool | None = None
    decoherence_margin: float = DECOHERENCE_MARGIN

    def __post_init__(self):
        _require_positive(sql=self.sql, offset_half_range=self.offset_half_range,
                          force_noise_ceiling=self.force_noise_ceiling)


def feasibility_report(mass: float, omega: float, *,
                       s_ff: float | None = None,
                       delta_x: float | None = None,
                       t2: float | None = None,
                       wavelength: float | None = None,
                       photons: float | None = None,
                       hbar: float = HBAR) -> FeasibilityReport:
    """Assemble a FeasibilityReport; optional blocks are filled when their
    inputs are supplied (delta_x defaults to the SQL spread)."""
    sql = standard_quantum_limit(mass, omega, hbar=hbar)
    report = {
        "sql": sql,
        "offset_half_range": float(np.sqrt(2.0) * sql),
        "force_noise_ceiling": force_noise_ceiling(mass, omega, hbar=hbar),
    }
    if s_ff is not None and t2 is not None:
        report["decoherence_ok"] = decoherence_check(
            s_ff, sql if delta_x is None else delta_x, t2, hbar=hbar)
    if wavelength is not None and photons is not None:
        report["scatter_resolution"] = scatter_resolution(wavelength, photons)
    return FeasibilityReport(**report)
