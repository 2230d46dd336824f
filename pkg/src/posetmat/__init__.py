"""Poset matrices: partial composition, canonical forms, enumeration."""

from .canon import CanonicalKey, are_isomorphic, canonical_form
from .compose import (
    CompositionKind,
    CompositionResult,
    compose,
    compose_square,
    compose_tri_down,
    compose_tri_up,
)
from .core import (
    InvalidPosetError,
    LabelSet,
    MalformedMatrixError,
    PosetError,
    PosetMatrix,
    StorageOrderError,
    ValidationReport,
    default_labels,
    dual,
    hasse_edges,
    induced_subposet,
    is_connected,
    maximal_elements,
    minimal_elements,
    normalize_linear_extension,
    validate_axioms,
)
from .enumeration import (
    CatalogIntegrityError,
    CatalogEntry,
    ClassCatalog,
    CountRow,
    CountTable,
    KNOWN_COUNTS,
    composition_closure,
    count_table,
    emit_catalog,
    enumerate_by_composition,
    enumerate_oracle,
    run_order5_table,
)
from .generators import C2, I2, antichain, chain, named_operands
from .io import (
    MatrixParseError,
    RecipeError,
    eval_recipe,
    parse_matrix,
    parse_recipe,
    serialize_matrix,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "C2",
    "CanonicalKey",
    "CatalogEntry",
    "CatalogIntegrityError",
    "ClassCatalog",
    "CompositionKind",
    "CompositionResult",
    "CountRow",
    "CountTable",
    "I2",
    "InvalidPosetError",
    "KNOWN_COUNTS",
    "LabelSet",
    "MalformedMatrixError",
    "MatrixParseError",
    "PosetError",
    "PosetMatrix",
    "RecipeError",
    "StorageOrderError",
    "ValidationReport",
    "antichain",
    "are_isomorphic",
    "canonical_form",
    "chain",
    "compose",
    "compose_square",
    "compose_tri_down",
    "compose_tri_up",
    "composition_closure",
    "count_table",
    "default_labels",
    "dual",
    "emit_catalog",
    "enumerate_by_composition",
    "enumerate_oracle",
    "eval_recipe",
    "hasse_edges",
    "induced_subposet",
    "is_connected",
    "maximal_elements",
    "minimal_elements",
    "named_operands",
    "normalize_linear_extension",
    "parse_matrix",
    "parse_recipe",
    "run_order5_table",
    "serialize_matrix",
    "to_dot",
    "validate_axioms",
]
