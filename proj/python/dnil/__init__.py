"""Differential nilalgebras D_m = k_+{x}/[x^m].

Polynomials are written in the text grammar used by the command-line tool,
for example ``"x1^2 + 2*x0*x2"``; functions accept either text or a
:class:`Polynomial`.
"""

from ._core import (
    ParseError,
    Polynomial,
    ResourceExhausted,
    alpha_basis,
    component_dimension,
    derivation_kernel_dimension,
    embed,
    embed_size,
    grassmann_nil_index,
    injectivity_rank,
    membership,
    monomials,
    nil_index,
    normal_form,
    normal_form_via_embedding,
    operator_nil_index,
    verify_injectivity,
    verify_nilpotent,
    verify_ritt,
    witness_element,
    witness_operator,
)

__all__ = [
    "ParseError",
    "Polynomial",
    "ResourceExhausted",
    "alpha_basis",
    "component_dimension",
    "derivation_kernel_dimension",
    "embed",
    "embed_size",
    "grassmann_nil_index",
    "injectivity_rank",
    "membership",
    "monomials",
    "nil_index",
    "normal_form",
    "normal_form_via_embedding",
    "operator_nil_index",
    "verify_injectivity",
    "verify_nilpotent",
    "verify_ritt",
    "witness_element",
    "witness_operator",
]
