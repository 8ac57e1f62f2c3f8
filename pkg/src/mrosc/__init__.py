"""Macrorealism witnesses for coarse-grained position measurements on an
oscillator coherent state.

Two sharp which-side position measurements, the second boundary tied to
the moving packet (peak + c * spread), give quantum statistics that
violate both the two-time no-signalling-in-time condition and a two-time
Leggett-Garg inequality by amounts depending only on the measurement
phase w*t2 and the boundary rule: independent of mass, frequency and
momentum.  The package computes those statistics to quadrature accuracy,
analyzes their robustness to boundary imprecision, cross-checks every
probability against an independent grid Schrödinger solver, and bundles
the experimental feasibility formulas.
"""

from .constants import HBAR, QUAD_TOL, SIN_MIN
from .errors import (
    InputDomainError,
    KernelOverflowError,
    MroscError,
    NormDriftError,
    PhaseSingularError,
    QuadratureError,
)
from .feasibility import (
    FeasibilityReport,
    decoherence_check,
    feasibility_report,
    force_noise_ceiling,
    scatter_resolution,
    standard_quantum_limit,
)
from .imprecision import (
    HeatmapResult,
    OffsetPair,
    averaged_witness,
    dimensional_offset_range,
    heatmap,
    offset_witness,
)
from .oracle import (
    GridState,
    SolverConfig,
    evolve,
    init_coherent,
    oracle_probability_table,
    project,
)
from .quantum import (
    DensityProfile,
    Phase,
    branch_density,
    branch_tail_coefficient,
    density_profile,
    free_density,
    mr_defect,
)
from .specfun import erf_complex, erf_real, erfc_complex, erfi_real, faddeeva
from .witness import (
    MeasurementConfig,
    OscillatorParams,
    ProbabilityTable,
    WitnessReport,
    beta2_offset_rule,
    gamma_from_dimensional,
    gamma_from_offset,
    lgi,
    nsit,
    probability_table,
    table1,
    witness_dimensional,
    witness_report,
)

__version__ = "0.1.0"
