"""Complete-reducibility analysis for two-sided modules.

A module that splits into irreducible components must kill the algebra's
kernel on both action sides; that necessary condition is checked first.
Splitting itself goes through the commutant: primary components of a
deterministic commutant element are invariant, and recursion refines them
until every leaf has commutant dimension one. Two benchmark modules of
dimension five round out the catalogue: one whose adjoint module admits no
irreducible decomposition, and one that splits as 3 + 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import InternalCheckError, LeibnizAlgebra, algebra_from_brackets
from .linalg import (
    Matrix, Subspace, commutator_equation_rows, matrix_commutant,
    minimal_polynomial, nullspace, rational_roots, subspace_intersect,
    subspace_sum,
)
from .reps import (
    Representation, adjoint_rep, direct_sum, is_invariant, module_restriction,
)
from .sl2 import sl2_leibniz_irrep

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class KernelActionReport:
    """Whether every kernel basis vector acts by zero on both sides."""
    ok: bool
    witness_vector: tuple | None = None
    witness_side: str | None = None  # "rho" or "lambda"
    witness_matrix: Matrix | None = None


def complete_reducibility_necessary(rep: Representation) -> KernelActionReport:
    """Necessary condition for a direct sum of irreducible components.

    On every irreducible component the left action is zero or the negative
    of the right one, and the right action kills the kernel; summing over
    components, both actions of every kernel element vanish. A nonzero
    action is returned as a witness.
    """
    rep._require_valid()
    kern = rep.algebra.leibniz_kernel()
    for v in kern.basis.data:
        r = rep.rho_of(v)
        if not r.is_zero():
            return KernelActionReport(False, v, "rho", r)
        l = rep.lambda_of(v)
        if not l.is_zero():
            return KernelActionReport(False, v, "lambda", l)
    return KernelActionReport(True)


def commutant(rep: Representation) -> list[Matrix]:
    """Basis of all matrices commuting with both actions of every basis element."""
    rep._require_valid()
    return matrix_commutant(rep.action_matrices(), rep.space_dim)


@dataclass(frozen=True)
class DecompositionResult:
    """Verdict on splitting a module into invariant direct summands.

    verdict "decomposed" comes with at least two components, each with a
    trivial commutant; "indecomposable" means no decomposition into
    irreducible components exists (the obstruction says whether the kernel
    action or a trivial commutant proved it); "undetermined" means some
    piece has a nontrivial commutant but no rational primary splitting was
    found. Components always partition the module.
    """
    verdict: str
    components: tuple[Subspace, ...]
    obstruction: str | None = None


def _poly_divide_out_root(coeffs: list[Fraction], a: Fraction) -> list[Fraction]:
    """Synthetic division of an ascending-coefficient polynomial by (t - a)."""
    n = len(coeffs) - 1
    out = [ZERO] * n
    carry = ZERO
    for k in range(n - 1, -1, -1):
        carry = coeffs[k + 1] + a * carry
        out[k] = carry
    return out


def _poly_eval(coeffs: list[Fraction], a: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * a + c
    return acc


def _poly_of_matrix(coeffs: list[Fraction], m: Matrix) -> Matrix:
    d = m.rows
    acc = Matrix.zeros(d, d)
    for c in reversed(coeffs):
        acc = acc * m + Matrix.identity(d).scale(c)
    return acc


def _primary_components(c: Matrix) -> list[Subspace]:
    """Primary decomposition of the space under c, as far as rational roots go.

    The minimal polynomial is split into (t - a)^e factors for each rational
    root a plus a rootless leftover; the space is the direct sum of the
    kernels of the corresponding factors evaluated at c.
    """
    d = c.rows
    poly = list(minimal_polynomial(c))
    pieces = []
    for a in rational_roots(poly):
        e = 0
        while len(poly) >= 2 and _poly_eval(poly, a) == 0:
            poly = _poly_divide_out_root(poly, a)
            e += 1
        power = c - Matrix.identity(d).scale(a)
        acc = Matrix.identity(d)
        for _ in range(e):
            acc = acc * power
        pieces.append(nullspace(acc))
    if len(poly) > 1:  # leftover factor without rational roots
        pieces.append(nullspace(_poly_of_matrix(poly, c)))
    pieces = [p for p in pieces if p.dim > 0]
    total = sum(p.dim for p in pieces)
    if total != d:
        raise InternalCheckError("primary components do not fill the space")
    return pieces


def _try_split(rep: Representation) -> list[Subspace] | None:
    """One commutant splitting round in the module's own coordinates.

    Returns None when the commutant is trivial (certified indecomposable),
    an empty list when it is nontrivial but no candidate splits rationally,
    and otherwise at least two primary components.
    """
    basis = commutant(rep)
    if len(basis) == 1:
        return None
    d = rep.space_dim
    generic = Matrix.zeros(d, d)
    for i, p in enumerate(basis):
        generic = generic + p.scale(Fraction(i + 1))
    for cand in [generic] + basis:
        pieces = _primary_components(cand)
        if len(pieces) >= 2:
            return pieces
    return []


def _lift(sub: Subspace, piece: Subspace) -> Subspace:
    """Rewrite a subspace given in piece coordinates as an ambient subspace."""
    rows = []
    for r in sub.basis.data:
        v = [ZERO] * piece.ambient_dim
        for coeff, base in zip(r, piece.basis.data):
            if coeff != 0:
                v = [x + coeff * y for x, y in zip(v, base)]
        rows.append(tuple(v))
    return Subspace.from_vectors(piece.ambient_dim, rows)


def decompose(rep: Representation) -> DecompositionResult:
    """Split the module into invariant components as far as the commutant allows.

    The kernel-action condition rules out any decomposition into
    irreducible components outright when it fails. Otherwise pieces are
    refined through commutant primary splitting until every leaf has a
    trivial commutant; a direct-sum splitting of a leaf would put the
    projection onto a summand into its commutant, so such leaves are
    indecomposable. Leaves that resist rational splitting leave the
    verdict undetermined rather than guessed.
    """
    rep._require_valid()
    d = rep.space_dim
    full = Subspace.full(d)
    check = complete_reducibility_necessary(rep)
    if not check.ok:
        return DecompositionResult(
            "indecomposable", (full,), "kernel acts nontrivially")
    leaves: list[Subspace] = []
    stuck = False
    stack = [full]
    while stack:
        piece = stack.pop()
        sub = rep if piece.is_full() else module_restriction(rep, piece)
        split = _try_split(sub)
        if split is None:
            leaves.append(piece)
        elif not split:
            stuck = True
            leaves.append(piece)
        else:
            for s in split:
                stack.append(s if piece.is_full() else _lift(s, piece))
    leaves.sort(key=lambda p: (-p.dim, p.pivots))
    _verify_partition(rep, leaves)
    if stuck:
        return DecompositionResult(
            "undetermined", tuple(leaves),
            "commutant splitting found no rational idempotent")
    if len(leaves) == 1:
        return DecompositionResult(
            "indecomposable", tuple(leaves), "commutant dimension 1")
    return DecompositionResult("decomposed", tuple(leaves))


def _verify_partition(rep: Representation, leaves: list[Subspace]) -> None:
    d = rep.space_dim
    total = Subspace.zero(d)
    dims = 0
    for piece in leaves:
        if not is_invariant(rep, piece):
            raise InternalCheckError("component is not invariant")
        total = subspace_sum(total, piece)
        dims += piece.dim
    if dims != d or not total.is_full():
        raise InternalCheckError("components do not partition the module")
    for i in range(len(leaves)):
        for j in range(i + 1, len(leaves)):
            if not subspace_intersect(leaves[i], leaves[j]).is_zero():
                raise InternalCheckError("components overlap")


# -- benchmark five-dimensional cases --

def example_5_3() -> tuple[LeibnizAlgebra, Representation]:
    """The five-dimensional simple algebra whose adjoint module cannot be
    written as a direct sum of irreducible components, with that adjoint
    module. The kernel is spanned by the last two basis vectors and the
    left action on it is nonzero.
    """
    alg = algebra_from_brackets(
        ["e", "f", "h", "x", "y"],
        {
            ("e", "f"): {"h": 1}, ("f", "e"): {"h": -1},
            ("e", "h"): {"e": 2}, ("h", "e"): {"e": -2},
            ("f", "h"): {"f": -2}, ("h", "f"): {"f": 2},
            ("x", "h"): {"x": 1}, ("y", "e"): {"x": -1},
            ("x", "f"): {"y": 1}, ("y", "h"): {"y": -1},
        },
        name="example-5-3")
    return alg, adjoint_rep(alg)


def example_5_5(top_variant: str = "zero_lambda",
                bottom_variant: str = "zero_lambda") -> Representation:
    """A five-dimensional non-irreducible module over the (e, f, h) algebra:
    the size-3 ladder stacked over the size-2 ladder, each block carrying
    its own left-action flavor. It splits back into those blocks.
    """
    top = sl2_leibniz_irrep(2, top_variant)
    bottom = sl2_leibniz_irrep(1, bottom_variant)
    return direct_sum(
        top, bottom,
        name=f"ladder2[{top_variant}]+ladder1[{bottom_variant}]")


def h_gap_positions(rho_h: Matrix, gap: int = 2) -> list[tuple[int, int]]:
    """Positions (i, j) where the diagonal weight difference equals the gap.

    For a diagonal weight matrix, the lowering left-action entry (i, j) can
    be nonzero only where (rho_h)_jj - (rho_h)_ii equals 2; this helper
    enumerates those positions (0-based).
    """
    d = rho_h.rows
    return [(i, j) for i in range(d) for j in range(d)
            if rho_h.entry(j, j) - rho_h.entry(i, i) == gap]


def solve_lowering_left(rho_h: Matrix) -> Subspace:
    """All X with 2X = X rho_h - rho_h X, as flattened matrices.

    This is the linear constraint that pins the lowering left action; its
    solutions are supported exactly on the gap-2 positions when rho_h is
    diagonal with distinct weight differences.
    """
    d = rho_h.rows
    comm = commutator_equation_rows(rho_h, rho_h)
    rows = []
    for r in range(d * d):
        row = [-x for x in comm[r]]
        row[r] += 2
        rows.append(row)
    return nullspace(Matrix(rows))
