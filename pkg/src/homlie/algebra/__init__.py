"""Hom-Lie algebras: data model, axioms, structure, morphisms and actions."""

from .action import act, adjoint_action, as_action, check_action
from .classify import Classification, classify_2dim
from .constructions import check_hom_associative, from_hom_associative, yau_twist
from .core import HomLieAlgebra, ValidationReport, Violation, bracket, is_hom_lie, validate
from .morphism import Morphism, change_basis, check_morphism, identity_morphism, is_isomorphism
from .structure import (
    alpha_closure,
    bracket_span,
    center,
    commutator,
    derived_algebra,
    direct_product,
    full,
    ideal_closure,
    is_alpha_invariant,
    is_hom_ideal,
    is_perfect,
    is_subalgebra,
    multiplicative_quotient,
    product_injections,
    product_projections,
    quotient_algebra,
    span_of_basis,
    subalgebra,
)

__all__ = [
    "Classification",
    "HomLieAlgebra",
    "Morphism",
    "ValidationReport",
    "Violation",
    "act",
    "adjoint_action",
    "alpha_closure",
    "as_action",
    "bracket",
    "bracket_span",
    "center",
    "change_basis",
    "check_action",
    "check_hom_associative",
    "check_morphism",
    "classify_2dim",
    "commutator",
    "derived_algebra",
    "direct_product",
    "from_hom_associative",
    "full",
    "ideal_closure",
    "identity_morphism",
    "is_alpha_invariant",
    "is_hom_ideal",
    "is_hom_lie",
    "is_isomorphism",
    "is_perfect",
    "is_subalgebra",
    "multiplicative_quotient",
    "product_injections",
    "product_projections",
    "quotient_algebra",
    "span_of_basis",
    "subalgebra",
    "validate",
    "yau_twist",
]
