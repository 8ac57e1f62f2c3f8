"""Shared physical and numerical constants."""

import math

# Reduced Planck constant, J s (2018 CODATA exact-derived value).
# Overridable per-call in the dimensional entry points for unit tests.
HBAR = 1.054571817e-34

# Phases with |sin(theta)| below this are rejected: the oscillator
# propagator normalization 1/sqrt(sin(omega t)) diverges there.
SIN_MIN = 1e-6

SQRT_PI = math.sqrt(math.pi)

# Default absolute tolerance for the probability integrals.  One order
# tighter than the 1e-8 contract so downstream 1e-7 checks keep margin.
QUAD_TOL = 1e-9
