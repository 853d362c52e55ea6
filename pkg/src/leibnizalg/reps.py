"""Bimodule representations of Leibniz algebras.

A representation on a space M assigns to every algebra element x a right
action rho_x and a left action lambda_x on M, subject to three pairing
axioms (checked over the structure constants, basis pair by basis pair):

    (1) rho_[x,y]    = rho_y rho_x - rho_x rho_y
    (2) lambda_[x,y] = rho_y lambda_x - lambda_x rho_y
    (3) lambda_[x,y] = rho_y lambda_x + lambda_x lambda_y

Axiom (1) forces the right action of the algebra's kernel to vanish; the
left action of the kernel is genuinely extra data, which is what separates
this theory from Lie module theory.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import InternalCheckError, LeibnizAlgebra
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    char_poly,
    envelope_dimension,
    intertwiner_space,
    rational_roots,
    nullspace,
    vec,
)

ZERO = Fraction(0)
ONE = Fraction(1)


class AxiomViolationError(ValueError):
    """Raised when an operation needs a representation that failed its axioms."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        head = ", ".join(f"axiom {a} at pair ({i},{j})"
                         for a, i, j in self.violations[:3])
        super().__init__(f"representation axioms fail: {head}")


class Representation:
    """Pair of action tuples over a fixed algebra basis.

    right[j] is the matrix of the right action of basis element j, left[j]
    the matrix of its left action. Axioms are checked eagerly; the violating
    (axiom, i, j) triples are kept on the instance.
    """

    def __init__(
        self,
        algebra: LeibnizAlgebra,
        right: Sequence[Matrix],
        left: Sequence[Matrix],
        name: str = "",
    ):
        algebra._require_valid()
        if len(right) != algebra.dim or len(left) != algebra.dim:
            raise ValueError("need one action matrix per basis element on each side")
        if algebra.dim == 0:
            raise ValueError("representations of the zero algebra are not supported")
        d = right[0].rows
        for m in list(right) + list(left):
            if m.rows != d or m.cols != d:
                raise ValueError("action matrices must be square and of equal size")
        self.algebra = algebra
        self.right = tuple(right)
        self.left = tuple(left)
        self.space_dim = d
        self.name = name
        self.axiom_violations = self._check_axioms()

    def _check_axioms(self) -> tuple[tuple[int, int, int], ...]:
        alg = self.algebra
        bad = []
        for i in range(alg.dim):
            for j in range(alg.dim):
                rho_br = self.rho_of(alg.table[i][j])
                lam_br = self.lambda_of(alg.table[i][j])
                ri, rj = self.right[i], self.right[j]
                li, lj = self.left[i], self.left[j]
                if rho_br != rj * ri - ri * rj:
                    bad.append((1, i, j))
                if lam_br != rj * li - li * rj:
                    bad.append((2, i, j))
                if lam_br != rj * li + li * lj:
                    bad.append((3, i, j))
        return tuple(bad)

    @property
    def is_valid(self) -> bool:
        return not self.axiom_violations

    def check_axioms(self) -> tuple[tuple[int, int, int], ...]:
        return self.axiom_violations

    def _require_valid(self) -> None:
        if not self.is_valid:
            raise AxiomViolationError(self.axiom_violations)

    def rho_of(self, x: Sequence) -> Matrix:
        """Right action of an arbitrary algebra vector."""
        x = vec(x)
        out = Matrix.zeros(self.space_dim, self.space_dim)
        for j, c in enumerate(x):
            if c != 0:
                out = out + self.right[j].scale(c)
        return out

    def lambda_of(self, x: Sequence) -> Matrix:
        """Left action of an arbitrary algebra vector."""
        x = vec(x)
        out = Matrix.zeros(self.space_dim, self.space_dim)
        for j, c in enumerate(x):
            if c != 0:
                out = out + self.left[j].scale(c)
        return out

    def action_matrices(self) -> list[Matrix]:
        return list(self.right) + list(self.left)

    def __repr__(self) -> str:
        label = self.name or "Representation"
        return f"<{label} dim={self.space_dim} over {self.algebra!r}>"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    value: str  # "abs_irreducible", "reducible", "undetermined"
    witness: Subspace | None = None
    detail: str = ""


@dataclass(frozen=True)
class EquivalenceVerdict:
    value: str  # "equivalent", "not_equivalent", "undetermined"
    certificate: Matrix | None = None
    detail: str = ""


# -- constructions --

def from_lie_rep(
    algebra: LeibnizAlgebra, phi: Sequence[Matrix], variant: str
) -> Representation:
    """Turn a classical Lie representation phi into a two-sided one.

    phi must satisfy phi_[x,y] = phi_x phi_y - phi_y phi_x over a Lie table.
    variant "anti_symmetric" sets the left action to the negative of the
    right one; "zero_lambda" sets it to zero.
    """
    algebra._require_valid()
    if not algebra.is_lie():
        raise ValueError("from_lie_rep needs a Lie table")
    if len(phi) != algebra.dim:
        raise ValueError("need one matrix per basis element")
    d = phi[0].rows if phi else 0
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            br = algebra.table[i][j]
            combo = Matrix.zeros(d, d)
            for t, c in enumerate(br):
                if c != 0:
                    combo = combo + phi[t].scale(c)
            if combo != phi[i] * phi[j] - phi[j] * phi[i]:
                raise ValueError(f"phi is not a Lie homomorphism at pair ({i},{j})")
    right = tuple(-m for m in phi)
    if variant == "anti_symmetric":
        left = tuple(phi)
    elif variant == "zero_lambda":
        left = tuple(Matrix.zeros(d, d) for _ in phi)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return Representation(algebra, right, left, name=f"lie[{variant}]")


def adjoint_rep(algebra: LeibnizAlgebra) -> Representation:
    """The algebra acting on itself by right and left multiplications."""
    algebra._require_valid()
    right = [algebra.right_mult_matrix_basis(j) for j in range(algebra.dim)]
    left = [algebra.left_mult_matrix_basis(j) for j in range(algebra.dim)]
    return Representation(algebra, right, left, name="adjoint")


def direct_sum(a: Representation, b: Representation, name: str = "") -> Representation:
    """Block-diagonal sum of two representations of the same algebra."""
    if not a.algebra.same_table(b.algebra):
        raise ValueError("direct sum needs a common algebra")
    a._require_valid()
    b._require_valid()

    def block(x: Matrix, y: Matrix) -> Matrix:
        n, m = x.rows, y.rows
        rows = []
        for i in range(n):
            rows.append(list(x.row(i)) + [ZERO] * m)
        for i in range(m):
            rows.append([ZERO] * n + list(y.row(i)))
        return Matrix(rows)

    right = [block(a.right[j], b.right[j]) for j in range(a.algebra.dim)]
    left = [block(a.left[j], b.left[j]) for j in range(a.algebra.dim)]
    return Representation(a.algebra, right, left, name=name or "sum")


def restrict(rep: Representation, span: Subspace) -> Representation:
    """Same module, smaller algebra: restrict the actions to a subalgebra."""
    rep._require_valid()
    sub = rep.algebra.subalgebra_on(span)
    right = [rep.rho_of(span.basis.row(a)) for a in range(span.dim)]
    left = [rep.lambda_of(span.basis.row(a)) for a in range(span.dim)]
    return Representation(sub, right, left, name=rep.name)


def is_invariant(rep: Representation, w: Subspace) -> bool:
    """Both actions map the subspace into itself."""
    if w.ambient_dim != rep.space_dim:
        raise ValueError("subspace lives in the wrong ambient space")
    for m in rep.action_matrices():
        for v in w.basis.data:
            if not w.contains(m.apply(v)):
                return False
    return True


def module_restriction(rep: Representation, w: Subspace) -> Representation:
    """Same algebra, smaller module: actions induced on an invariant subspace."""
    rep._require_valid()
    if not is_invariant(rep, w):
        raise ValueError("subspace is not invariant under both actions")

    def cut(m: Matrix) -> Matrix:
        cols = []
        for v in w.basis.data:
            coords = w.coordinates_of(m.apply(v))
            if coords is None:
                raise InternalCheckError("invariant subspace lost a coordinate")
            cols.append(coords)
        return Matrix([[cols[a][t] for a in range(w.dim)] for t in range(w.dim)])

    right = [cut(m) for m in rep.right]
    left = [cut(m) for m in rep.left]
    return Representation(rep.algebra, right, left, name=rep.name)


# -- analysis --

def spin_submodule(rep: Representation, seeds: Sequence[Sequence]) -> Subspace:
    """Smallest subspace containing the seeds and invariant under both actions."""
    span = Subspace.from_vectors(rep.space_dim, [vec(s) for s in seeds])
    mats = rep.action_matrices()
    while True:
        grown = list(span.basis.data)
        for v in span.basis.data:
            for m in mats:
                grown.append(m.apply(v))
        bigger = Subspace.from_vectors(rep.space_dim, grown)
        if bigger.dim == span.dim:
            return span
        span = bigger


def irreducibility(rep: Representation) -> IrreducibilityVerdict:
    """Three-valued irreducibility test.

    The yes side is a full-matrix-algebra envelope check, which certifies
    absolute irreducibility. The no side searches for a proper invariant
    subspace by spinning coordinate vectors and rational eigenvectors of the
    action matrices. Neither firing leaves the question open.
    """
    rep._require_valid()
    d = rep.space_dim
    if d == 0:
        return IrreducibilityVerdict("reducible", Subspace.zero(0),
                                     "zero module")
    env = envelope_dimension(rep.action_matrices(), d)
    if env == d * d:
        return IrreducibilityVerdict("abs_irreducible", None,
                                     f"envelope dimension {env}")
    candidates: list[Vector] = [
        tuple(ONE if t == i else ZERO for t in range(d)) for i in range(d)]
    for m in rep.action_matrices():
        coeffs = char_poly(m)
        for root in rational_roots(coeffs):
            shifted = m - Matrix.identity(d).scale(root)
            candidates.extend(nullspace(shifted).basis.data)
    for v in candidates:
        sub = spin_submodule(rep, [v])
        if 0 < sub.dim < d:
            return IrreducibilityVerdict("reducible", sub,
                                         "proper invariant subspace found")
    return IrreducibilityVerdict(
        "undetermined", None,
        f"envelope dimension {env} below {d * d} but no witness found")


def sym_span(rep: Representation) -> Subspace:
    """Span of the images of all symmetrized actions (left plus right)."""
    rep._require_valid()
    vecs = []
    for j in range(rep.algebra.dim):
        s = rep.left[j] + rep.right[j]
        for c in range(rep.space_dim):
            vecs.append(s.col(c))
    return Subspace.from_vectors(rep.space_dim, vecs)


def dichotomy_classify(rep: Representation) -> str:
    """Classify an absolutely irreducible representation by its left action.

    Returns "anti_symmetric" when the left action is the negative of the
    right one and "zero_lambda" when the left action vanishes. For an
    absolutely irreducible module one of the two must hold; anything else is
    an internal error, as is calling this on a module that is not certified
    absolutely irreducible.
    """
    verdict = irreducibility(rep)
    if verdict.value != "abs_irreducible":
        raise ValueError("dichotomy needs an absolutely irreducible module")
    v = sym_span(rep)
    if v.is_zero():
        for j in range(rep.algebra.dim):
            if rep.left[j] != -rep.right[j]:
                raise InternalCheckError("zero symmetrized span without lambda = -rho")
        return "anti_symmetric"
    if v.is_full():
        for j in range(rep.algebra.dim):
            if not rep.left[j].is_zero():
                raise InternalCheckError("full symmetrized span without lambda = 0")
        return "zero_lambda"
    raise InternalCheckError("symmetrized span is a proper nonzero submodule")


_COMBO_COEFFS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(3))


def equivalence(a: Representation, b: Representation) -> EquivalenceVerdict:
    """Decide whether two representations are intertwined by an invertible map.

    The intertwiner space is computed exactly. An empty space settles the
    negative; an invertible element (searched over the basis and a bounded
    deterministic set of small combinations) settles the positive; a nonzero
    space with no invertible element found is reported as undetermined.
    """
    a._require_valid()
    b._require_valid()
    if not a.algebra.same_table(b.algebra):
        raise ValueError("equivalence needs a common algebra")
    if a.space_dim != b.space_dim:
        return EquivalenceVerdict("not_equivalent", None, "dimensions differ")
    pairs = [(a.right[j], b.right[j]) for j in range(a.algebra.dim)]
    pairs += [(a.left[j], b.left[j]) for j in range(a.algebra.dim)]
    basis = intertwiner_space(pairs, b.space_dim, a.space_dim)
    if not basis:
        return EquivalenceVerdict("not_equivalent", None,
                                  "no nonzero intertwiner exists")
    for t in basis:
        if t.is_invertible():
            return EquivalenceVerdict("equivalent", t)
    if len(basis) > 1:
        for coeffs in itertools.islice(
                itertools.product(_COMBO_COEFFS, repeat=len(basis)), 64):
            combo = Matrix.zeros(a.space_dim, a.space_dim)
            for c, t in zip(coeffs, basis):
                combo = combo + t.scale(c)
            if combo.is_invertible():
                return EquivalenceVerdict("equivalent", combo)
    return EquivalenceVerdict(
        "undetermined", None,
        "intertwiners exist but none of the sampled ones is invertible")
