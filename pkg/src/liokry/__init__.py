"""Spectral gaps of driven-dissipative Liouvillians from real-time subspaces.

The library builds Lindblad generators for a Kerr-cat oscillator, estimates
their slowest decay rate from short real-time evolutions of a handful of
mixed states, and cross-checks against dense diagonalisation. Phase-space
maps and a mean-field onset analysis round out the toolbox; the ``liokry``
console script drives parameter sweeps from JSON configs.
"""

__version__ = "0.1.0"

from .catmodel import (
    MeanFieldState,
    OnsetEstimate,
    TraceZeroSampler,
    cat_regime_onset,
    landau_functional,
    mean_field_evolve,
    mean_field_rhs,
    sample_initial,
    steady_photon_number,
)
from .errors import (
    AllSingularError,
    BlowUpError,
    ConfigError,
    CoverageWarning,
    DegeneracyWarning,
    DimensionError,
    GapUndefinedError,
    GrowthError,
    HermiticityError,
    LiokryError,
    OracleError,
    PositivityError,
    ScalingError,
    SolverError,
    StabilityError,
    TruncationWarning,
    UnderflowError,
    WindingWarning,
)
from .fock import (
    FockOperator,
    FockSpace,
    KerrCatParams,
    cat_state,
    coherent_state,
    destroy,
    identity,
    kerr_cat_hamiltonian,
    logical_operators,
    number,
    parity,
)
from .krylov import (
    METHODS,
    ConditioningRow,
    GapEstimate,
    KrylovConfig,
    KrylovData,
    build_basis,
    conditioning_report,
    filter_profile,
    reconstruct_eigenstate,
    slice_data,
    solve_gevp,
)
from .liouville import (
    LiouvilleSpectrum,
    Superket,
    Superoperator,
    devectorize,
    dissipator_superop,
    full_spectrum_oracle,
    hamiltonian_superop,
    kerr_cat_liouvillian,
    non_normality,
    state_fidelity,
    steady_state,
    vectorize,
)
from .numerics import (
    DEFAULT_SETTINGS,
    EigenDecomposition,
    NumericSettings,
    SvdDecomposition,
)
from .wigner import PhaseSpaceGrid, WignerMap, wigner_of

__all__ = [
    "__version__",
    "AllSingularError",
    "BlowUpError",
    "ConditioningRow",
    "ConfigError",
    "CoverageWarning",
    "DEFAULT_SETTINGS",
    "DegeneracyWarning",
    "DimensionError",
    "EigenDecomposition",
    "FockOperator",
    "FockSpace",
    "GapEstimate",
    "GapUndefinedError",
    "GrowthError",
    "HermiticityError",
    "KerrCatParams",
    "KrylovConfig",
    "KrylovData",
    "LiokryError",
    "LiouvilleSpectrum",
    "METHODS",
    "MeanFieldState",
    "NumericSettings",
    "OnsetEstimate",
    "OracleError",
    "PhaseSpaceGrid",
    "PositivityError",
    "ScalingError",
    "SolverError",
    "StabilityError",
    "Superket",
    "Superoperator",
    "SvdDecomposition",
    "TraceZeroSampler",
    "TruncationWarning",
    "UnderflowError",
    "WignerMap",
    "WindingWarning",
    "build_basis",
    "cat_regime_onset",
    "cat_state",
    "coherent_state",
    "conditioning_report",
    "destroy",
    "devectorize",
    "dissipator_superop",
    "filter_profile",
    "full_spectrum_oracle",
    "hamiltonian_superop",
    "identity",
    "kerr_cat_hamiltonian",
    "kerr_cat_liouvillian",
    "landau_functional",
    "logical_operators",
    "mean_field_evolve",
    "mean_field_rhs",
    "non_normality",
    "number",
    "parity",
    "reconstruct_eigenstate",
    "sample_initial",
    "slice_data",
    "solve_gevp",
    "state_fidelity",
    "steady_photon_number",
    "steady_state",
    "vectorize",
    "wigner_of",
]
