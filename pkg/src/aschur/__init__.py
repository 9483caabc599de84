"""Exact kernel for the extended affine Weyl group, affine Hecke algebra
and affine q-Schur algebra of type A, with a relation-verification engine
driven by the quantum-group action on tensor space."""

from .aweyl import AffinePerm, ParabolicIndex
from .hecke import HeckeElement, t_element, x_lambda, young_parabolic
from .latmat import PeriodicMatrix, coset_from_matrix, matrix_from_coset
from .operators import OperatorExpr, Sym
from .ring import LaurentPoly, gauss_binom, quantum_fact, quantum_int, specialize
from .schur import SchurBasisIndex, SchurElement, hecke_embed, phi_value
from .tensor import act_expr_basis, tau, weight_of, weight_space_basis
from .weights import Weight, all_weights, omega

__all__ = [
    "AffinePerm",
    "HeckeElement",
    "LaurentPoly",
    "OperatorExpr",
    "ParabolicIndex",
    "PeriodicMatrix",
    "SchurBasisIndex",
    "SchurElement",
    "Sym",
    "Weight",
    "act_expr_basis",
    "all_weights",
    "coset_from_matrix",
    "gauss_binom",
    "hecke_embed",
    "matrix_from_coset",
    "omega",
    "phi_value",
    "quantum_fact",
    "quantum_int",
    "specialize",
    "t_element",
    "tau",
    "weight_of",
    "weight_space_basis",
    "x_lambda",
    "young_parabolic",
]
