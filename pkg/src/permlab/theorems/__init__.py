"""Executable forms of the classification statements, each checkable against brute force."""

from .bivariate import (
    THM14_READINGS,
    PairMapCoeffs,
    Prop43Report,
    hu_family,
    lemma33_predicate,
    nonzero_squares,
    prop43_scan,
    thm14_predicate,
    thm15_predicate,
    weil_threshold,
)
from .caps import DEFAULT_CAPS, ENV_VAR, SearchCapExceeded, check_cap, search_cap
from .equivalence import ClassResult, ClassTag, candidate_classes, thm17_classify, verify_class_witness
from .projective import (
    CUBE,
    CUBE_MINUS,
    NU_CUBE,
    Lemma55Result,
    canonical_forms,
    lemma55_normalize,
    mobius_through,
    nu_cube,
    pgl2,
    predicted_class_for_cubic,
)
from .quartic import (
    THM12_CLAUSES,
    THM12_READINGS,
    ConjugacyWitness,
    QuarticCoeffs,
    Thm11Result,
    Thm13Coeffs,
    conjugacy_index,
    conjugate_coeffs,
    reduced_key,
    thm11_predicate,
    thm12_clauses,
    thm12_predicate,
    thm13_predicate,
    valid_gammas,
    witness_holds,
)

__all__ = [
    "THM14_READINGS",
    "PairMapCoeffs",
    "Prop43Report",
    "hu_family",
    "lemma33_predicate",
    "nonzero_squares",
    "prop43_scan",
    "thm14_predicate",
    "thm15_predicate",
    "weil_threshold",
    "DEFAULT_CAPS",
    "ENV_VAR",
    "SearchCapExceeded",
    "check_cap",
    "search_cap",
    "ClassResult",
    "ClassTag",
    "candidate_classes",
    "thm17_classify",
    "verify_class_witness",
    "CUBE",
    "CUBE_MINUS",
    "NU_CUBE",
    "Lemma55Result",
    "canonical_forms",
    "lemma55_normalize",
    "mobius_through",
    "nu_cube",
    "pgl2",
    "predicted_class_for_cubic",
    "THM12_CLAUSES",
    "THM12_READINGS",
    "ConjugacyWitness",
    "QuarticCoeffs",
    "Thm11Result",
    "Thm13Coeffs",
    "conjugacy_index",
    "conjugate_coeffs",
    "reduced_key",
    "thm11_predicate",
    "thm12_clauses",
    "thm12_predicate",
    "thm13_predicate",
    "valid_gammas",
    "witness_holds",
]
