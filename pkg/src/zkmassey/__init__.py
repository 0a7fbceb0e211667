"""Cohomology of moment-angle complexes, triple products, and the six-vertex
obstruction classification."""

from .errors import InternalCheckError
from .fields import GF, GF2, QQ, Field, field_from_key
from .graphs import (
    SmallGraph,
    canonical_form,
    complement,
    is_isomorphic,
    isomorphism_witness,
)
from .hochster import (
    BettiTable,
    ClassVectorizer,
    CohomologyClass,
    MultiCochain,
    add,
    bar,
    betti_table,
    chi,
    cup,
    cup_classes,
    eps,
    eps_set,
    is_cocycle,
    is_zero_class,
    scale,
    sub,
    total_coboundary,
    zero_cochain,
)
from .linalg import BACKEND
from .massey import (
    DefiningSystem,
    MasseyResult,
    coset_check,
    coset_classes,
    indeterminacy,
    triple_massey,
)
from .obstruction import DetectionHit, build_catalog, catalog_masks, detect, has_obstruction
from .oracle import (
    VerificationReport,
    WitnessTriple,
    derive_minimal_obstructions,
    massey_witness_search,
    verify_lemma,
    verify_theorem,
)
from .simplicial import (
    SimplicialComplex,
    build_complex,
    flag_complex,
    full_subcomplex,
    one_skeleton,
)

__version__ = "0.1.0"

__all__ = [
    "InternalCheckError",
    "Field",
    "GF",
    "GF2",
    "QQ",
    "field_from_key",
    "SmallGraph",
    "canonical_form",
    "complement",
    "is_isomorphic",
    "isomorphism_witness",
    "SimplicialComplex",
    "build_complex",
    "flag_complex",
    "full_subcomplex",
    "one_skeleton",
    "MultiCochain",
    "CohomologyClass",
    "BettiTable",
    "ClassVectorizer",
    "betti_table",
    "chi",
    "add",
    "sub",
    "scale",
    "bar",
    "cup",
    "cup_classes",
    "eps",
    "eps_set",
    "total_coboundary",
    "is_cocycle",
    "is_zero_class",
    "zero_cochain",
    "DefiningSystem",
    "MasseyResult",
    "triple_massey",
    "indeterminacy",
    "coset_classes",
    "coset_check",
    "DetectionHit",
    "build_catalog",
    "catalog_masks",
    "detect",
    "has_obstruction",
    "WitnessTriple",
    "massey_witness_search",
    "VerificationReport",
    "verify_theorem",
    "derive_minimal_obstructions",
    "verify_lemma",
    "BACKEND",
    "__version__",
]
