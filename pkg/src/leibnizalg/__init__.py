"""Exact computation with finite-dimensional Leibniz algebras over the rationals."""

from .linalg import (
    QQ,
    Matrix,
    Subspace,
    char_poly,
    envelope_dimension,
    matrix_commutant,
    minimal_polynomial,
    nullspace,
    rational_roots,
    rref,
    solve,
    subspace_intersect,
    subspace_sum,
)
from .algebra import (
    InternalCheckError,
    InvalidAlgebraError,
    LeibnizAlgebra,
    SeriesReport,
    SimplicityVerdict,
    StructureReport,
    abelian_algebra,
    algebra_from_brackets,
    direct_sum_algebra,
)
from .reps import (
    AxiomViolationError,
    EquivalenceVerdict,
    IrreducibilityVerdict,
    Representation,
    adjoint_rep,
    dichotomy_classify,
    direct_sum,
    equivalence,
    from_lie_rep,
    irreducibility,
    is_invariant,
    module_restriction,
    restrict,
    spin_submodule,
    sym_span,
)
from .sl2 import (
    ExtensionSolution,
    Sl2ConstraintReport,
    check_sl2_constraints,
    classify_extension_irreps,
    extension_rep_solve,
    simple_ext_algebra,
    sl2_algebra,
    sl2_irrep_rho,
    sl2_leibniz_irrep,
)
from .decompose import (
    DecompositionResult,
    KernelActionReport,
    commutant,
    complete_reducibility_necessary,
    decompose,
    example_5_3,
    example_5_5,
    h_gap_positions,
    solve_lowering_left,
)
from .fileio import (
    ParseError,
    frac_str,
    parse_algebra,
    parse_rep,
    serialize_algebra,
    serialize_rep,
)

__all__ = [
    "QQ",
    "Matrix",
    "Subspace",
    "char_poly",
    "envelope_dimension",
    "matrix_commutant",
    "minimal_polynomial",
    "nullspace",
    "rational_roots",
    "rref",
    "solve",
    "subspace_intersect",
    "subspace_sum",
    "InternalCheckError",
    "InvalidAlgebraError",
    "LeibnizAlgebra",
    "SeriesReport",
    "SimplicityVerdict",
    "StructureReport",
    "abelian_algebra",
    "algebra_from_brackets",
    "direct_sum_algebra",
    "AxiomViolationError",
    "EquivalenceVerdict",
    "IrreducibilityVerdict",
    "Representation",
    "adjoint_rep",
    "dichotomy_classify",
    "direct_sum",
    "equivalence",
    "from_lie_rep",
    "irreducibility",
    "is_invariant",
    "module_restriction",
    "restrict",
    "spin_submodule",
    "sym_span",
    "ExtensionSolution",
    "Sl2ConstraintReport",
    "check_sl2_constraints",
    "classify_extension_irreps",
    "extension_rep_solve",
    "simple_ext_algebra",
    "sl2_algebra",
    "sl2_irrep_rho",
    "sl2_leibniz_irrep",
    "DecompositionResult",
    "KernelActionReport",
    "commutant",
    "complete_reducibility_necessary",
    "decompose",
    "example_5_3",
    "example_5_5",
    "h_gap_positions",
    "solve_lowering_left",
    "ParseError",
    "frac_str",
    "parse_algebra",
    "parse_rep",
    "serialize_algebra",
    "serialize_rep",
]

__version__ = "0.1.0"
