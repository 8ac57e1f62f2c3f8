"""Boundary-imprecision analysis.

In any real run the two measurement boundaries sit at beta_i + eps_i with
run-to-run jitter eps_i, so the observed witnesses are averages over the
offset distribution.  Everything here works with the dimensionless offsets

    eps_i_tilde = eps_i * sqrt(m w / hbar),

whose admissible ranges are therefore proportional to 1/sqrt(m w) in
dimensional terms: heavier or stiffer oscillators need proportionally
tighter boundary control, and the dimensional half-width mapping to
eps_tilde in [-1, 1] is sqrt(hbar/(m w)) = sqrt(2) * (standard quantum
limit).

Provided operations: a single-offset witness, an offset-grid heatmap, and
the uniform average over an offset rectangle (deterministic tensor
Gauss-Legendre by default, seeded Monte Carlo as a cross-check).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .constants import QUAD_TOL
from .errors import InputDomainError
from .quantum import as_phase
from .witness import (
    OscillatorParams,
    WitnessReport,
    gamma_from_offset,
    probability_table,
    witness_from_table,
    witness_report,
)

__all__ = [
    "OffsetPair",
    "HeatmapResult",
    "offset_witness",
    "heatmap",
    "averaged_witness",
    "dimensional_offset_range",
]


@dataclass(frozen=True)
class OffsetPair:
    """Dimensionless boundary offsets for the two measurements."""

    eps1_tilde: float = 0.0
    eps2_tilde: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.eps1_tilde) and np.isfinite(self.eps2_tilde)):
            raise InputDomainError("offsets must be finite")

    def __iter__(self):
        return iter((self.eps1_tilde, self.eps2_tilde))


def offset_witness(theta, offsets, c: float, sign: int, *,
                   tol: float = QUAD_TOL) -> WitnessReport:
    """Witness at gamma = sign*c/sqrt(2) with fixed boundary offsets.

    Same code path as the zero-offset witness (to which it reduces exactly
    at (0, 0)): eps1 rotates into the kernel argument as eps1*exp(i theta),
    eps2 shifts the integration split point.
    """
    return witness_report(theta, c, sign, offsets, tol=tol)


@dataclass(frozen=True)
class HeatmapResult:
    """Witness values on an offset grid.

    n_plus[i, j] and lgi_violation[i, j] correspond to
    (eps1_axis[i], eps2_axis[j]).
    """

    eps1_axis: np.ndarray
    eps2_axis: np.ndarray
    n_plus: np.ndarray
    lgi_violation: np.ndarray

    def __post_init__(self):
        shape = (len(self.eps1_axis), len(self.eps2_axis))
        if self.n_plus.shape != shape or self.lgi_violation.shape != shape:
            raise InputDomainError("matrix dimensions must match the axes")

    @property
    def n_minus(self) -> np.ndarray:
        return -self.n_plus


def _cell(args):
    theta, gamma, e1, e2, tol = args
    table = probability_table(theta, gamma, e1, e2, tol=tol)
    report = witness_from_table(table)
    return report.n_plus, report.lgi_violation, report.L


def _evaluate_cells(theta, gamma, pairs, tol, workers):
    jobs = [(theta, gamma, e1, e2, tol) for e1, e2 in pairs]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_cell, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [_cell(j) for j in jobs]


def heatmap(theta, eps1_range, eps2_range, n: int, c: float, sign: int, *,
            tol: float = QUAD_TOL, workers: int | None = None) -> HeatmapResult:
    """n x n grid of offset witnesses over eps1_range x eps2_range.

    Cells are independent pure evaluations; workers > 1 runs them in a
    process pool with identical (scheduling-independent) results.
    """
    n = int(n)
    if n < 2:
        raise InputDomainError(f"need n >= 2 grid points, got {n}")
    phase = as_phase(theta)
    gamma = gamma_from_offset(c, sign)
    e1_axis = np.linspace(float(eps1_range[0]), float(eps1_range[1]), n)
    e2_axis = np.linspace(float(eps2_range[0]), float(eps2_range[1]), n)
    pairs = [(e1, e2) for e1 in e1_axis for e2 in e2_axis]
    cells = _evaluate_cells(phase.theta, gamma, pairs, tol, workers)
    n_plus = np.array([cell[0] for cell in cells]).reshape(n, n)
    lgi_v = np.array([cell[1] for cell in cells]).reshape(n, n)
    return HeatmapResult(eps1_axis=e1_axis, eps2_axis=e2_axis,
                         n_plus=n_plus, lgi_violation=lgi_v)


def averaged_witness(theta, eps1_range, eps2_range, c: float, sign: int, *,
                     scheme: str = "quadrature", n: int = 21,
                     seed: int | None = None, tol: float = QUAD_TOL,
                     workers: int | None = None) -> WitnessReport:
    """Uniform average of N+/- and the L entries over an offset rectangle.

    scheme "quadrature" uses an order-n tensor Gauss-Legendre rule
    (deterministic); "sampled" draws n uniform points from a seeded
    generator, for cross-checks only.  Degenerate ranges collapse to point
    evaluations on that axis.  Jitter at the standard-quantum-limit scale
    corresponds to eps ranges [-1, 1] x [-1, 1].
    """
    phase = as_phase(theta)
    gamma = gamma_from_offset(c, sign)
    lo1, hi1 = float(eps1_range[0]), float(eps1_range[1])
    lo2, hi2 = float(eps2_range[0]), float(eps2_range[1])
    if hi1 < lo1 or hi2 < lo2:
        raise InputDomainError("offset ranges must be ordered")
    n = int(n)
    if n < 1:
        raise InputDomainError("n must be >= 1")

    if scheme == "quadrature":
        nodes1, weights1 = _gl_nodes(lo1, hi1, n)
        nodes2, weights2 = _gl_nodes(lo2, hi2, n)
        pairs = [(e1, e2) for e1 in nodes1 for e2 in nodes2]
        weights = np.outer(weights1, weights2).ravel()
    elif scheme == "sampled":
        if seed is None:
            raise InputDomainError("sampled scheme requires a seed")
        rng = np.random.default_rng(int(seed))
        e1s = rng.uniform(lo1, hi1, size=n) if hi1 > lo1 else np.full(n, lo1)
        e2s = rng.uniform(lo2, hi2, size=n) if hi2 > lo2 else np.full(n, lo2)
        pairs = list(zip(e1s, e2s))
        weights = np.full(n, 1.0 / n)
    else:
        raise InputDomainError(f"unknown averaging scheme {scheme!r}")

    cells = _evaluate_cells(phase.theta, gamma, pairs, tol, workers)
    n_plus = float(np.dot(weights, [cell[0] for cell in cells]))
    L = np.tensordot(weights, np.array([cell[2] for cell in cells]), axes=1)
    return WitnessReport(
        n_plus=n_plus, n_minus=-n_plus, L=L,
        nsit_violation=abs(n_plus), lgi_violation=float(np.max(-L)),
        theta=phase.theta, gamma=gamma,
        eps1_tilde=0.5 * (lo1 + hi1), eps2_tilde=0.5 * (lo2 + hi2),
        c=float(c), sign=int(sign))


def _gl_nodes(lo: float, hi: float, n: int):
    """Gauss-Legendre nodes/normalized weights on [lo, hi]; a degenerate
    interval collapses to a single unit-weight node."""
    if hi == lo:
        return np.array([lo]), np.array([1.0])
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (hi - lo) * x + 0.5 * (hi + lo), 0.5 * w


def dimensional_offset_range(params: OscillatorParams) -> float:
    """Half-width sqrt(hbar/(m w)) in meters mapping to eps_tilde in [-1, 1].

    Equals sqrt(2) times the standard quantum limit; shrinks like
    1/sqrt(m w), which is the entire practical burden of scaling the test
    to large masses.
    """
    return params.length_scale
