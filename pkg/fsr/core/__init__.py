from .cartier import CartierEngine, CompatibilityReport, ContractionQuery, CoreResult, CtRecord, SandwichTable
from .complexes import (
    AInvariantTable,
    SimplicialComplex,
    a_invariants_squarefree,
    complex_of_ideal,
    link,
    reduced_cohomology_ranks,
)
from .exceptions import (
    FsrError,
    InputError,
    InternalInconsistencyError,
    PreconditionError,
    VerificationError,
)
from .monomials import (
    FacePrime,
    Monomial,
    MonomialIdeal,
    colon,
    contains,
    dimension,
    frobenius_power,
    ideal_sum,
    image_mod_face_prime,
    intersect,
    minimal_primes,
    normalize,
    radical,
)
from .oracle import BruteForceOracle, OracleBudget
from .regularity import RegularityEngine, RegularityLimitReport
from .rings import FrobeniusLevel, StanleyReisnerRing, localize_at_face_prime
from .simplex import SelectionLP, disjunctive_lp_value
from .thresholds import ConvergenceTable, NuRecord, ThresholdEngine, ThresholdRecord

__all__ = [
    "AInvariantTable",
    "BruteForceOracle",
    "CartierEngine",
    "CompatibilityReport",
    "ContractionQuery",
    "ConvergenceTable",
    "CoreResult",
    "CtRecord",
    "FacePrime",
    "FrobeniusLevel",
    "FsrError",
    "InputError",
    "InternalInconsistencyError",
    "Monomial",
    "MonomialIdeal",
    "NuRecord",
    "OracleBudget",
    "PreconditionError",
    "RegularityEngine",
    "RegularityLimitReport",
    "SandwichTable",
    "SelectionLP",
    "SimplicialComplex",
    "StanleyReisnerRing",
    "ThresholdEngine",
    "ThresholdRecord",
    "VerificationError",
    "a_invariants_squarefree",
    "colon",
    "complex_of_ideal",
    "contains",
    "dimension",
    "disjunctive_lp_value",
    "frobenius_power",
    "ideal_sum",
    "image_mod_face_prime",
    "intersect",
    "link",
    "localize_at_face_prime",
    "minimal_primes",
    "normalize",
    "radical",
    "reduced_cohomology_ranks",
]
