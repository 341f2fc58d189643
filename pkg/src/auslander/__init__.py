"""Exact module theory for the Auslander algebra of k[x]/(x^t).

Representations and Hom/Ext computation, thin-module classification, worm
diagrams, and the braid actions by right mutation and spherical twist.
"""

from .repcore import (
    QuiverAlgebra, Representation, Morphism, ThinModule, make_algebra,
    simple, projective, injective, delta, nabla, rank, direct_sum,
)
from .homcalc import ExtTriple, ext_dims, ext_dims_oracle, hom_basis, euler_pairing, quadratic_form

__all__ = [
    "QuiverAlgebra", "Representation", "Morphism", "ThinModule", "make_algebra",
    "simple", "projective", "injective", "delta", "nabla", "rank", "direct_sum",
    "ExtTriple", "ext_dims", "ext_dims_oracle", "hom_basis", "euler_pairing",
    "quadratic_form",
]
