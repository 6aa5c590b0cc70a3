from .algebra import (
    AlgebraObject,
    BialgebraObject,
    CoalgebraObject,
    alg_lift,
    check_adjunction,
    check_bialgebra,
    check_colax_coherence,
    check_lax_coherence,
    coalg_lift,
    colax_from_lax,
    lax_from_colax,
)
from .dual import check_barop_identity, check_dual_functor, dual_adjunction, dual_functor_lax
from .tambara import TruncatedFreeAlgebra, check_tambara, tambara_truncated

__all__ = [
    "AlgebraObject", "BialgebraObject", "CoalgebraObject", "TruncatedFreeAlgebra",
    "alg_lift", "coalg_lift", "colax_from_lax", "lax_from_colax",
    "check_adjunction", "check_bialgebra", "check_colax_coherence", "check_lax_coherence",
    "check_barop_identity", "check_dual_functor", "dual_adjunction", "dual_functor_lax",
    "check_tambara", "tambara_truncated",
]
