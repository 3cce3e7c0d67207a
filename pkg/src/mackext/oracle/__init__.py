"""Independent computation of dim Ext^n(S_1, S_1) by linear algebra over F_p."""

from .algebra import HomSpace, SimpleModule, YoshidaAlgebra
from .resolution import ext_dims, resolve_simple, top_multiplicities
from .subgroups import Subgroup, all_subgroups, check_guard

__all__ = [
    "HomSpace",
    "SimpleModule",
    "Subgroup",
    "YoshidaAlgebra",
    "all_subgroups",
    "check_guard",
    "ext_dims",
    "resolve_simple",
    "top_multiplicities",
]
