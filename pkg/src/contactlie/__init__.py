"""Exact computations on contact Lie algebras.

Index, contact forms, conical orbits, stable points, the fundamental and
contact semi-invariants, semi-direct product reductions and bounded-degree
semi-invariants, for Lie algebras given by rational structure constants.
"""

from .lie import LieAlgebra, JacobiError, Subspace, bracket, structure_matrix, validate
from .coadjoint import (
    Sampling,
    analyze,
    classify_generic_stabiliser,
    contact_semi_invariant,
    fundamental_semi_invariant,
    index,
    is_conical_orbit,
    is_contact_algebra,
    is_contact_form,
    is_stable_point,
    stabiliser,
)
from .families import FamilySpec, construct
from .poly import MPoly, poly_gcd, symbolic_pfaffian
from .semidirect import SemidirectDecomposition, analyze_semidirect, build_semidirect, principal_element, rais_check
from .semiinv import (
    algebraic_independence,
    canonical_truncation,
    semi_invariants_up_to_degree,
    weight_relation_and_generator,
)

__version__ = "0.1.0"

__all__ = [
    "Sampling",
    "analyze",
    "classify_generic_stabiliser",
    "contact_semi_invariant",
    "fundamental_semi_invariant",
    "index",
    "is_conical_orbit",
    "is_contact_algebra",
    "is_contact_form",
    "is_stable_point",
    "stabiliser",
    "algebraic_independence",
    "canonical_truncation",
    "semi_invariants_up_to_degree",
    "weight_relation_and_generator",
    "LieAlgebra",
    "JacobiError",
    "Subspace",
    "bracket",
    "structure_matrix",
    "validate",
    "FamilySpec",
    "construct",
    "MPoly",
    "poly_gcd",
    "symbolic_pfaffian",
    "SemidirectDecomposition",
    "analyze_semidirect",
    "build_semidirect",
    "principal_element",
    "rais_check",
]
