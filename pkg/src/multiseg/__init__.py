"""Segment and multisegment calculus for smooth representations of p-adic GL(n).

Exact combinatorics of Zelevinsky segments: Bernstein-Zelevinsky
derivative candidates, union-intersection closures, Speh blocks with their
exact derivatives, and the decidable classifications built on top of them.
"""

from .core import (
    CHR,
    CuspidalLine,
    CuspidalPoint,
    IrreducibleLabel,
    LabelKind,
    Multisegment,
    Segment,
    dual,
    dual_line,
    linked,
    mseg,
    point_precedes,
    precedes,
    seg,
    shift,
    to_exact,
)
from .derivatives import (
    Side,
    apply_vector,
    check_csupp_containment,
    derivative_candidates,
    generic_derivative_pieces,
    highest_derivative,
    level,
    shifted,
    truncate,
    truncate_order,
    truncation_vectors,
)
from .moves import (
    UIStep,
    check_N_monotonicity,
    generic_from_csupp,
    standard_to_singletons,
    ui_chain_lengths,
    ui_closure,
    ui_steps,
)
from .speh import (
    CertificationError,
    SpehBlock,
    SpehDecomposition,
    is_speh,
    prefix_candidates,
    respects_block_prefixes,
    speh_decompose,
    speh_derivative_at_order,
    speh_left_derivative,
    speh_right_derivative,
    speh_sandwich_embedding_ok,
    speh_times_segment_irreducible,
)
from .classify import (
    AsymmetryReport,
    ComponentSpec,
    Elimination,
    Obstruction,
    Verdict,
    asymmetry_check,
    component_nonzero,
    generic_hom_necessary,
    hom_opposite_nonzero,
    is_generic_St,
    is_one_dimensional,
    is_relatively_projective,
    restriction_components,
)
from .parser import ParseError, SemanticError, SessionInput, parse, print_session

__version__ = "0.1.0"

__all__ = [
    "CHR",
    "CuspidalLine",
    "CuspidalPoint",
    "IrreducibleLabel",
    "LabelKind",
    "Multisegment",
    "Segment",
    "dual",
    "dual_line",
    "linked",
    "mseg",
    "point_precedes",
    "precedes",
    "seg",
    "shift",
    "to_exact",
    "Side",
    "apply_vector",
    "check_csupp_containment",
    "derivative_candidates",
    "generic_derivative_pieces",
    "highest_derivative",
    "level",
    "shifted",
    "truncate",
    "truncate_order",
    "truncation_vectors",
    "UIStep",
    "check_N_monotonicity",
    "generic_from_csupp",
    "standard_to_singletons",
    "ui_chain_lengths",
    "ui_closure",
    "ui_steps",
    "CertificationError",
    "SpehBlock",
    "SpehDecomposition",
    "is_speh",
    "prefix_candidates",
    "respects_block_prefixes",
    "speh_decompose",
    "speh_derivative_at_order",
    "speh_left_derivative",
    "speh_right_derivative",
    "speh_sandwich_embedding_ok",
    "speh_times_segment_irreducible",
    "AsymmetryReport",
    "ComponentSpec",
    "Elimination",
    "Obstruction",
    "Verdict",
    "asymmetry_check",
    "component_nonzero",
    "generic_hom_necessary",
    "hom_opposite_nonzero",
    "is_generic_St",
    "is_one_dimensional",
    "is_relatively_projective",
    "restriction_components",
    "ParseError",
    "SemanticError",
    "SessionInput",
    "parse",
    "print_session",
    "__version__",
]
