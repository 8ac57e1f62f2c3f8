"""Semantic exception hierarchy.

Every declared failure mode of the library maps onto one of these classes;
public functions never raise bare ValueError/ArithmeticError.
"""

from __future__ import annotations


class MroscError(Exception):
    """Base class for all library errors."""


class InputDomainError(MroscError, ValueError):
    """Arguments violate an operation's contract.

    Covers: non-positive mass/frequency, negative boundary-offset scale c,
    bad grid/config parameters, a projection boundary outside the grid, and
    a Faddeeva argument in the lower half-plane.
    """


class PhaseSingularError(InputDomainError):
    """|sin(theta)| below SIN_MIN: the oscillator propagator is singular
    at integer multiples of half a period, so the phase is rejected."""


class KernelOverflowError(MroscError, FloatingPointError):
    """A special-function value exceeds the representable range.

    Raised instead of returning Inf/NaN (erf grows like exp(|Im z|^2) off
    the real axis)."""


class QuadratureError(MroscError):
    """Requested integration tolerance not reached within the evaluation
    budget.  Reported rather than silently degraded."""


class NormDriftError(MroscError):
    """Grid solver norm drift exceeded its bound; the stepping configuration
    is mis-tuned."""
