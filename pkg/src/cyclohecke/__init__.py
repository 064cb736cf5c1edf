"""Exact seminormal representations of the cyclotomic Hecke algebras H(m,1,n)."""

from ._kernels import BACKEND
from .combinatorics import MPartition, StandardMTableau, mpartitions, standard_tableaux
from .forms import gram_matrix, verify_invariance
from .repn import (
    build_representation, commutant_dimension, idempotent, jm_matrices, verify_baxter_identities,
    verify_defining_relations,
)
from .scalar import LaurentPoly, ParamSpec, RatFn, check_genericity, parse, render
from .smash import build_tensor_module, decompose

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "MPartition", "StandardMTableau", "mpartitions", "standard_tableaux",
    "gram_matrix", "verify_invariance", "build_representation", "commutant_dimension",
    "idempotent", "jm_matrices", "verify_baxter_identities", "verify_defining_relations",
    "LaurentPoly", "ParamSpec", "RatFn", "check_genericity", "parse", "render",
    "build_tensor_module", "decompose",
]
