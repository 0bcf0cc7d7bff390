"""Exact algebra of crossed and quadratic modules, and the classification of
self-maps of S2 x S2 fixing the diagonal."""

from ._core import (
    check_structure,
    classify,
    commutator_index,
    fgab_equal,
    mbar_compose,
    mbar_elements,
    mbar_units,
    monoid_table,
    nil2_commutator,
    nil2_inv,
    nil2_normalize,
    nil2_op,
    run,
    selfmap_count,
    solve_homology_constraints,
    tensor_induced,
)

__all__ = [
    "check_structure",
    "classify",
    "commutator_index",
    "fgab_equal",
    "mbar_compose",
    "mbar_elements",
    "mbar_units",
    "monoid_table",
    "nil2_commutator",
    "nil2_inv",
    "nil2_normalize",
    "nil2_op",
    "run",
    "selfmap_count",
    "solve_homology_constraints",
    "tensor_induced",
]
