"""orbitkit - coadjoint orbits of maximal unipotent subgroups of Chevalley groups.

Exact computation of orbit dimensions for canonical forms attached to
orthogonal subsets of root systems, together with the involution bound
l(sigma) - s(sigma) and tools to verify the two against each other.
"""

from .chevalley import ChevalleyTable, n_const, structure_constants
from .config import Settings, load_settings
from .enumeration import (
    decompose_components,
    enumerate_orthogonal_subsets,
    reduce_singular,
    scan_non_admissible,
    validate_hit,
    verify_m_conditions,
    verify_main_theorem,
    verify_sweep,
)
from .exceptions import (
    DomainError,
    FieldTooSmall,
    ForeignRoot,
    NotARoot,
    NotIsotropic,
    NotOrthogonal,
    NotReduced,
    OrbitKitException,
    RootParseError,
    TooLarge,
    UnsupportedRank,
    WrongSystem,
)
from .form import (
    PrimeField,
    canonical_form,
    check_isotropic,
    check_maximal_isotropic,
    coadjoint_act,
    default_prime,
    form_matrix,
    orbit_dimension,
    rank_and_radical,
)
from .models import (
    Functional,
    InvolutionStats,
    NonAdmissibleHit,
    OrthoSubset,
    Root,
    RootSystemId,
    SingularPair,
    TableRow,
    VerifyReport,
)
from .rootexpr import format_root, parse_root, parse_roots
from .rootsys import RootSystem, build_root_system
from .tables import evaluate_table
from .weyl import WeylElement, involution_of, involution_stats, mu, reflect

__version__ = "0.1.0"

__all__ = [
    "ChevalleyTable",
    "n_const",
    "structure_constants",
    "Settings",
    "load_settings",
    "decompose_components",
    "enumerate_orthogonal_subsets",
    "reduce_singular",
    "scan_non_admissible",
    "validate_hit",
    "verify_m_conditions",
    "verify_main_theorem",
    "verify_sweep",
    "DomainError",
    "FieldTooSmall",
    "ForeignRoot",
    "NotARoot",
    "NotIsotropic",
    "NotOrthogonal",
    "NotReduced",
    "OrbitKitException",
    "RootParseError",
    "TooLarge",
    "UnsupportedRank",
    "WrongSystem",
    "PrimeField",
    "canonical_form",
    "check_isotropic",
    "check_maximal_isotropic",
    "coadjoint_act",
    "default_prime",
    "form_matrix",
    "orbit_dimension",
    "rank_and_radical",
    "Functional",
    "InvolutionStats",
    "NonAdmissibleHit",
    "OrthoSubset",
    "Root",
    "RootSystemId",
    "SingularPair",
    "TableRow",
    "VerifyReport",
    "format_root",
    "parse_root",
    "parse_roots",
    "RootSystem",
    "build_root_system",
    "evaluate_table",
    "WeylElement",
    "involution_of",
    "involution_stats",
    "mu",
    "reflect",
]
