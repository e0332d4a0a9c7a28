"""
synla: the synaptic-algebra calculus on real symmetric matrices.

Spectral operations, generalized infima and suprema, projection and effect
classification, commutants, and a certifier deciding whether a subspace of
symmetric matrices is a vector lattice.
"""

from .commutant import (
    Subspace,
    bicommutant,
    center,
    commutant,
    extend_to_cblock,
    is_cblock,
    is_commutative_family,
)
from .errors import (
    ConsistencyError,
    DimensionError,
    NonCommutativeError,
    NotEffectError,
    NotInvertibleError,
    NotMemberError,
    NotPositiveError,
    NotProjectionError,
    NotSymmetricError,
    PreconditionError,
    SynlaError,
)
from .genlattice import check_disjoint, check_maximal_lower_bound, ginf, gsup, is_disjunctive
from .instance_gen import GenSpec, generate
from .proj_effect import (
    classify_commutative_effect_set,
    classify_projection_set,
    compatible,
    proj_join,
    proj_meet,
)
from .symmat import DEFAULT_TOL, TolerancePolicy, as_sym, loewner_leq
from .synaptic_ops import absolute, carrier, decompose, spectral_proj, spectral_resolution, sqrt
from .vlcert import (
    CertReport,
    ClosureReport,
    certify_vector_lattice,
    check_closure,
    is_commutative,
    lattice_ops,
    riesz_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "CertReport",
    "ClosureReport",
    "ConsistencyError",
    "DEFAULT_TOL",
    "DimensionError",
    "GenSpec",
    "NonCommutativeError",
    "NotEffectError",
    "NotInvertibleError",
    "NotMemberError",
    "NotPositiveError",
    "NotProjectionError",
    "NotSymmetricError",
    "PreconditionError",
    "Subspace",
    "SynlaError",
    "TolerancePolicy",
    "absolute",
    "as_sym",
    "bicommutant",
    "carrier",
    "center",
    "certify_vector_lattice",
    "check_closure",
    "check_disjoint",
    "check_maximal_lower_bound",
    "classify_commutative_effect_set",
    "classify_projection_set",
    "commutant",
    "compatible",
    "decompose",
    "extend_to_cblock",
    "generate",
    "ginf",
    "gsup",
    "is_cblock",
    "is_commutative",
    "is_commutative_family",
    "is_disjunctive",
    "lattice_ops",
    "loewner_leq",
    "proj_join",
    "proj_meet",
    "riesz_decompose",
    "spectral_proj",
    "spectral_resolution",
    "sqrt",
]
