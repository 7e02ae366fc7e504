"""Two-parameter norms and best simultaneous approximation.

The package models linear spaces carrying a norm of pairs of vectors,
checks the defining axioms numerically, solves best simultaneous
approximation problems over finite subspaces, certifies distances with
dual functionals, and probes convergence of finite sequence prefixes.
"""

from .approx import (
    BlendReport,
    Certificate,
    CertificateSoundness,
    RestartResult,
    SimultaneousProblem,
    SolveReport,
    SolverConfig,
    SubspaceBasis,
    UniquenessReport,
    blend_check,
    certificate,
    certificate_soundness,
    distance_to_subspace,
    objective,
    oracle_solve,
    set_distance,
    solve,
    uniqueness_probe,
)
from .sequences import (
    CauchyProfile,
    NormLimitReport,
    ProbeProfile,
    SequencePrefix,
    cauchy_profile,
    convergence_profile,
    norm_limit_check,
)
from .spaces import (
    AxiomReport,
    AxiomViolation,
    DependentTripleReport,
    EuclideanGram,
    IdentityReport,
    WhitePolynomial,
    as_element,
    check_axioms,
    dependent_triple_check,
    element_dim,
    seminorm_b,
    seminorm_map,
    shift_identity_check,
    two_norm,
    two_norm_rows,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "AxiomViolation",
    "BlendReport",
    "CauchyProfile",
    "Certificate",
    "CertificateSoundness",
    "DependentTripleReport",
    "EuclideanGram",
    "IdentityReport",
    "NormLimitReport",
    "ProbeProfile",
    "RestartResult",
    "SequencePrefix",
    "SimultaneousProblem",
    "SolveReport",
    "SolverConfig",
    "SubspaceBasis",
    "UniquenessReport",
    "WhitePolynomial",
    "as_element",
    "blend_check",
    "cauchy_profile",
    "certificate",
    "certificate_soundness",
    "check_axioms",
    "convergence_profile",
    "dependent_triple_check",
    "distance_to_subspace",
    "element_dim",
    "norm_limit_check",
    "objective",
    "oracle_solve",
    "seminorm_b",
    "seminorm_map",
    "set_distance",
    "shift_identity_check",
    "solve",
    "two_norm",
    "two_norm_rows",
    "uniqueness_probe",
    "__version__",
]
