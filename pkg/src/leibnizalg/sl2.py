"""The sl2 family: weight-ladder representations and simple extensions.

This module hosts the explicit catalogue: the 3-dimensional simple Lie
algebra on (e, f, h), its (m+1)-dimensional ladder representations in the
two left-action flavors, the twelve constraint identities the ladder
matrices satisfy, and the n-dimensional simple Leibniz extensions whose
tail representations are forced to zero. The forcing argument runs in two
stages: a linear stage pairing tail elements with e, f, h, and a quadratic
stage for the tail-tail pairs that peels equations of the perfect-square
form q*(linear)^2 = 0 into linear ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import InternalCheckError, LeibnizAlgebra, algebra_from_brackets
from .linalg import Matrix, Subspace, nullspace, rational_roots
from .reps import Representation

ZERO = Fraction(0)
ONE = Fraction(1)
TWO = Fraction(2)


@lru_cache(maxsize=None)
def sl2_algebra() -> LeibnizAlgebra:
    """The simple 3-dimensional Lie algebra on basis (e, f, h).

    Cached; treat the returned object as immutable.
    """
    return algebra_from_brackets(
        ["e", "f", "h"],
        {
            ("e", "h"): {"e": 2}, ("h", "e"): {"e": -2},
            ("h", "f"): {"f": 2}, ("f", "h"): {"f": -2},
            ("e", "f"): {"h": 1}, ("f", "e"): {"h": -1},
        },
        name="sl2",
    )


def sl2_irrep_rho(m: int) -> tuple[Matrix, Matrix, Matrix]:
    """Right-action matrices (for e, f, h) on the ladder of size m + 1.

    The defining formulas are 1-based; this is the single place where they
    are shifted to 0-based storage. Entry patterns: e raises along the
    superdiagonal with weight i(m+1-i), f lowers with constant -1, h is
    diagonal with m+2-2i.
    """
    if m < 0:
        raise ValueError("ladder size parameter must be nonnegative")
    d = m + 1
    e_rows = [[ZERO] * d for _ in range(d)]
    f_rows = [[ZERO] * d for _ in range(d)]
    h_rows = [[ZERO] * d for _ in range(d)]
    for i in range(1, d + 1):
        if i + 1 <= d:
            e_rows[i - 1][i] = Fraction(i * (m + 1 - i))
        if i - 1 >= 1:
            f_rows[i - 1][i - 2] = Fraction(-1)
        h_rows[i - 1][i - 1] = Fraction(m + 2 - 2 * i)
    return Matrix(e_rows), Matrix(f_rows), Matrix(h_rows)


def sl2_leibniz_irrep(m: int, variant: str) -> Representation:
    """The (m+1)-dimensional two-sided ladder representation.

    variant "zero_lambda" has vanishing left action; "anti_symmetric" has
    left action equal to the negative of the right one. At m = 0 the two
    coincide (everything is zero).
    """
    rho = sl2_irrep_rho(m)
    d = m + 1
    if variant == "anti_symmetric":
        left = tuple(-x for x in rho)
    elif variant == "zero_lambda":
        left = tuple(Matrix.zeros(d, d) for _ in rho)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    rep = Representation(sl2_algebra(), rho, left, name=f"ladder{m}[{variant}]")
    if not rep.is_valid:
        raise InternalCheckError("ladder construction failed its own axioms")
    return rep


# -- the twelve constraint identities --

@dataclass(frozen=True)
class Sl2ConstraintReport:
    identity_ok: tuple[bool, ...]  # twelve flags, index 0 is identity 1
    failing_identities: tuple[int, ...]  # 1-based indices


def _identity_chains(re, rf, rh, le, lf, lh, zero):
    """Each chain lists expressions that one identity requires to be equal."""
    return (
        (rh, rf * re - re * rf),
        (re.scale(TWO), rh * re - re * rh),
        (rf.scale(TWO), rf * rh - rh * rf),
        (lh, rf * le - le * rf, lf * re - re * lf),
        (lh, rf * le + le * lf, -(lf * le) - re * lf),
        (zero, rh * lh - lh * rh, rh * lh + lh * lh),
        (le.scale(TWO), rh * le - le * rh, lh * re - re * lh),
        (le.scale(TWO), rh * le + le * lh, -(lh * le) - re * lh),
        (zero, re * le - le * re, re * le + le * le),
        (lf.scale(TWO), rf * lh - lh * rf, lf * rh - rh * lf),
        (lf.scale(TWO), rf * lh + lh * lf, -(lf * lh) - rh * lf),
        (zero, rf * lf - lf * rf, rf * lf + lf * lf),
    )


def check_sl2_constraints(rep: Representation) -> Sl2ConstraintReport:
    """Evaluate the twelve identities on a representation of the (e, f, h) table.

    Identities 1-3 constrain the right action alone; 4-12 tie the left
    action to it, and each of those carries two printed forms which are
    checked jointly. Invalid input representations are allowed: the report
    simply shows which identities break.
    """
    if not rep.algebra.same_table(sl2_algebra()):
        raise ValueError("constraint check runs over the (e, f, h) table only")
    d = rep.space_dim
    chains = _identity_chains(
        rep.right[0], rep.right[1], rep.right[2],
        rep.left[0], rep.left[1], rep.left[2],
        Matrix.zeros(d, d))
    ok = tuple(all(x == chain[0] for x in chain[1:]) for chain in chains)
    failing = tuple(i + 1 for i, flag in enumerate(ok) if not flag)
    return Sl2ConstraintReport(ok, failing)


# -- the simple extension family --

@lru_cache(maxsize=None)
def simple_ext_algebra(n: int) -> LeibnizAlgebra:
    """The n-dimensional simple Leibniz algebra over the (e, f, h) quotient.

    Basis (e, f, h, x0, ..., x_{n-4}); the tail spans the kernel and carries
    the ladder action from the right: brackets [x_k, h] = (n-4-2k) x_k,
    [x_k, f] = x_{k+1}, [x_k, e] = k(k+3-n) x_{k-1}, everything else with a
    tail factor is zero. Cached; treat the returned object as immutable.
    """
    if n < 5:
        raise ValueError("the extension family starts at dimension 5")
    names = ["e", "f", "h"] + [f"x{k}" for k in range(n - 3)]
    brackets: dict = {
        ("e", "h"): {"e": 2}, ("h", "e"): {"e": -2},
        ("h", "f"): {"f": 2}, ("f", "h"): {"f": -2},
        ("e", "f"): {"h": 1}, ("f", "e"): {"h": -1},
    }
    for k in range(n - 3):
        w = n - 4 - 2 * k
        if w:
            brackets[(f"x{k}", "h")] = {f"x{k}": w}
        if k <= n - 5:
            brackets[(f"x{k}", "f")] = {f"x{k + 1}": 1}
        if k >= 1:
            brackets[(f"x{k}", "e")] = {f"x{k - 1}": k * (k + 3 - n)}
    alg = algebra_from_brackets(names, brackets, name=f"simple_ext{n}")
    if not alg.is_valid:
        raise InternalCheckError("extension table violates the bracket identity")
    return alg


@dataclass(frozen=True)
class ExtensionSolution:
    """Outcome of forcing the tail actions of a simple extension.

    forced_rho_I / forced_lambda_I hold the unique tail action matrices
    (expected all zero) when the solve pins everything; they are None when
    free parameters or an obstruction remain. stage1_free_parameters counts
    the solution dimension of the linear stage per tail block (the left
    block has the same dimension by symmetry of the equations).
    """
    n: int
    m: int
    forced_rho_I: tuple[Matrix, ...] | None
    forced_lambda_I: tuple[Matrix, ...] | None
    free_parameters: int
    stage1_free_parameters: int
    used_quadratic_stage: bool
    lambda_sl2_coefficients: tuple[Fraction, ...]
    obstruction: str | None = None


def _h_weight_positions(c: Fraction, d: int) -> list[tuple[int, int]]:
    """Entries (i, j) surviving the diagonal equation c*X = [rho_h, X]."""
    return [(i, j) for i in range(d) for j in range(d) if c == 2 * (j - i)]


def _tail_stage1_basis(n: int, m: int) -> list[list[Matrix]]:
    """Nullspace basis of the linear tail system, as lists of tail matrices.

    The unknown entries are first cut down by the bracket-with-h weight
    equations (each is a one-term equation, so an entry either dies or is
    unconstrained by it); the e and f pair equations are then assembled
    over the surviving entries only.
    """
    alg = simple_ext_algebra(n)
    rho = sl2_irrep_rho(m)
    d = m + 1
    nx = n - 3
    kept: list[tuple[int, int, int]] = []
    index: dict[tuple[int, int, int], int] = {}
    for k in range(nx):
        for (i, j) in _h_weight_positions(Fraction(n - 4 - 2 * k), d):
            index[(k, i, j)] = len(kept)
            kept.append((k, i, j))
    if not kept:
        return []
    rows = []
    for k in range(nx):
        xi = 3 + k
        for y in range(3):
            ry = rho[y]
            cvec = alg.table[xi][y]
            if any(cvec[t] != 0 for t in range(3)):
                raise InternalCheckError("tail bracket left the kernel span")
            for r in range(d):
                for s in range(d):
                    row = [ZERO] * len(kept)
                    for t in range(nx):
                        c = cvec[3 + t]
                        if c != 0 and (t, r, s) in index:
                            row[index[(t, r, s)]] += c
                    for a in range(d):
                        if ry.entry(a, s) != 0 and (k, r, a) in index:
                            row[index[(k, r, a)]] += ry.entry(a, s)
                        if ry.entry(r, a) != 0 and (k, a, s) in index:
                            row[index[(k, a, s)]] -= ry.entry(r, a)
                    if any(x != 0 for x in row):
                        rows.append(row)
    if rows:
        space = nullspace(Matrix(rows))
    else:
        space = Subspace.full(len(kept))
    out = []
    for v in space.basis.data:
        grids = [[[ZERO] * d for _ in range(d)] for _ in range(nx)]
        for val, (k, i, j) in zip(v, kept):
            grids[k][i][j] = val
        out.append([Matrix(g) for g in grids])
    return out


def _sl2_left_block_check(m: int) -> None:
    """Verify the linear left-action block over sl2 is exactly the rho line.

    The unknowns are the three left matrices; the equations come from the
    second axiom over all nine (e, f, h) pairs. For m >= 1 the solution
    space must be one-dimensional, spanned by the right-action triple.
    """
    rho = sl2_irrep_rho(m)
    d = m + 1
    sl2 = sl2_algebra()
    weights = (TWO, -TWO, ZERO)  # weight of the slot under bracketing with h
    kept: list[tuple[int, int, int]] = []
    index: dict[tuple[int, int, int], int] = {}
    for slot in range(3):
        for (i, j) in _h_weight_positions(weights[slot], d):
            index[(slot, i, j)] = len(kept)
            kept.append((slot, i, j))
    for slot in range(3):
        for i in range(d):
            for j in range(d):
                if rho[slot].entry(i, j) != 0 and (slot, i, j) not in index:
                    raise InternalCheckError("right action violates its own weights")
    rows = []
    for bi in range(3):
        for bj in range(3):
            rj = rho[bj]
            cvec = sl2.table[bi][bj]
            for r in range(d):
                for s in range(d):
                    row = [ZERO] * len(kept)
                    for t in range(3):
                        if cvec[t] != 0 and (t, r, s) in index:
                            row[index[(t, r, s)]] += cvec[t]
                    for a in range(d):
                        if rj.entry(a, s) != 0 and (bi, r, a) in index:
                            row[index[(bi, r, a)]] += rj.entry(a, s)
                        if rj.entry(r, a) != 0 and (bi, a, s) in index:
                            row[index[(bi, a, s)]] -= rj.entry(r, a)
                    if any(x != 0 for x in row):
                        rows.append(row)
    if rows:
        space = nullspace(Matrix(rows))
    else:
        space = Subspace.full(len(kept))
    expected_dim = 1 if m >= 1 else 0
    if space.dim != expected_dim:
        raise InternalCheckError(
            f"left sl2 block has dimension {space.dim}, expected {expected_dim}")
    if m >= 1:
        reduced_rho = [ZERO] * len(kept)
        for (slot, i, j), pos in index.items():
            reduced_rho[pos] = rho[slot].entry(i, j)
        if not space.contains(tuple(reduced_rho)):
            raise InternalCheckError("left sl2 block does not contain the rho line")


def _tail_quadratic_matrices(basis_mats: list[list[Matrix]],
                             nx: int, d: int) -> list[Matrix]:
    """Symmetric coefficient matrices of the tail-tail quadratic equations.

    Parameters are (t_1..t_p) for the right tail block and (u_1..u_p) for
    the left one, sharing the stage-1 basis. Equations come from the three
    axioms on every ordered tail pair; all are homogeneous quadratics.
    """
    p = len(basis_mats)
    dim = 2 * p
    half = Fraction(1, 2)
    out = []
    prod: dict[tuple[int, int, int, int], Matrix] = {}
    for i in range(p):
        for j in range(p):
            for k in range(nx):
                for l in range(nx):
                    prod[(i, k, j, l)] = basis_mats[i][k] * basis_mats[j][l]
    for k in range(nx):
        for l in range(nx):
            for r in range(d):
                for s in range(d):
                    s1 = [[ZERO] * dim for _ in range(dim)]
                    s2 = [[ZERO] * dim for _ in range(dim)]
                    s3 = [[ZERO] * dim for _ in range(dim)]
                    for i in range(p):
                        for j in range(p):
                            # commutator coefficient of t_i t_j (and of u_i t_j)
                            comm = (prod[(j, l, i, k)].entry(r, s)
                                    - prod[(i, k, j, l)].entry(r, s))
                            if comm != 0:
                                s1[i][j] += comm * half
                                s1[j][i] += comm * half
                                s2[p + i][j] += comm * half
                                s2[j][p + i] += comm * half
                            # left-times-left and right-times-left pieces
                            lr = prod[(j, l, i, k)].entry(r, s)
                            if lr != 0:
                                s3[p + i][j] += lr * half
                                s3[j][p + i] += lr * half
                            ll = prod[(i, k, j, l)].entry(r, s)
                            if ll != 0:
                                s3[p + i][p + j] += ll * half
                                s3[p + j][p + i] += ll * half
                    for grid in (s1, s2, s3):
                        mat = Matrix(grid)
                        if not mat.is_zero():
                            out.append(mat)
    return out


def _reduce_quadratics(mats: list[Matrix], dim: int) -> tuple[int, str | None]:
    """Peel rank-one homogeneous quadratics into linear constraints.

    A symmetric rank-one coefficient matrix means the equation reads
    q*(w.v)^2 = 0 with q nonzero, so w.v = 0 exactly. Each round collects
    every such w, projects the parameter space onto their common kernel and
    rewrites the remaining equations there. If nonzero equations survive
    with no rank-one among them, the pattern assumption failed and the
    caller must not conclude anything.
    """
    current = [m for m in mats if not m.is_zero()]
    free = dim
    while current:
        constraints = []
        for s in current:
            if s.rank() == 1:
                w = next(row for row in s.data if any(x != 0 for x in row))
                constraints.append(list(w))
        if not constraints:
            return free, ("a quadratic constraint of rank above one resisted "
                          "the square-pattern reduction")
        space = nullspace(Matrix(constraints))
        if space.dim == 0:
            return 0, None
        nb = space.basis
        fresh = []
        for s in current:
            t = nb * s * nb.transpose()
            if not t.is_zero():
                fresh.append(t)
        if space.dim == free and fresh:
            raise InternalCheckError("quadratic reduction made no progress")
        current = fresh
        free = space.dim
    return free, None


def _left_coefficient_roots(m: int) -> tuple[Fraction, ...]:
    """Roots pinning the left sl2 block coefficient a in lambda = a * rho.

    Substituting lambda = a*rho into the third-axiom identities leaves
    (a + a^2) times a product of right-action matrices; for m >= 1 at least
    one product is nonzero, so a + a^2 = 0.
    """
    rho = sl2_irrep_rho(m)
    if all((x * y).is_zero() for x in rho for y in rho):
        raise InternalCheckError("every action product vanished; nothing pins a")
    return rational_roots((ZERO, ONE, ONE))


def extension_rep_solve(n: int, m: int) -> ExtensionSolution:
    """Force the tail actions of the n-dimensional extension on a ladder.

    The right action restricted to (e, f, h) is fixed to the ladder
    matrices. Stage 1 solves the linear equations from pairing each tail
    element with e, f, h (on both action sides; the two blocks share one
    coefficient matrix). Stage 2 feeds the tail-tail pair equations, which
    are homogeneous quadratics in the surviving parameters, through the
    rank-one peeling loop. The left block over (e, f, h) is handled
    separately: it is verified to be the line through the right action, and
    its coefficient is pinned by the third-axiom identities. The final
    candidates are rebuilt as full representations and compared against the
    catalogue as an end-to-end check.
    """
    if n < 5:
        raise ValueError("the extension family starts at dimension 5")
    if m < 1:
        raise ValueError("the forcing argument needs a ladder of size at least 2")
    d = m + 1
    nx = n - 3
    basis_mats = _tail_stage1_basis(n, m)
    p = len(basis_mats)
    _sl2_left_block_check(m)
    used_quadratic = p > 0
    if p == 0:
        free, obstruction = 0, None
    else:
        quads = _tail_quadratic_matrices(basis_mats, nx, d)
        free, obstruction = _reduce_quadratics(quads, 2 * p)
    coeffs = _left_coefficient_roots(m)
    if obstruction is None and free == 0:
        zero = Matrix.zeros(d, d)
        forced_r: tuple[Matrix, ...] | None = tuple(zero for _ in range(nx))
        forced_l: tuple[Matrix, ...] | None = tuple(zero for _ in range(nx))
        _cross_check_against_catalog(n, m, coeffs)
    else:
        forced_r = forced_l = None
    return ExtensionSolution(
        n=n, m=m,
        forced_rho_I=forced_r,
        forced_lambda_I=forced_l,
        free_parameters=free,
        stage1_free_parameters=p,
        used_quadratic_stage=used_quadratic,
        lambda_sl2_coefficients=coeffs,
        obstruction=obstruction,
    )


def classify_extension_irreps(n: int, m: int) -> list[Representation]:
    """All irreducible two-sided representations of the extension on a ladder.

    Each is a ladder representation of the (e, f, h) part extended by zero
    on the tail; the left action is zero or the negative of the right one.
    At m = 0 the two coincide, so the list has a single entry.
    """
    if n < 5:
        raise ValueError("the extension family starts at dimension 5")
    if m < 0:
        raise ValueError("ladder size parameter must be nonnegative")
    alg = simple_ext_algebra(n)
    d = m + 1
    nx = n - 3
    zero = Matrix.zeros(d, d)
    variants = ("zero_lambda",) if m == 0 else ("zero_lambda", "anti_symmetric")
    out = []
    for variant in variants:
        base = sl2_leibniz_irrep(m, variant)
        right = list(base.right) + [zero] * nx
        left = list(base.left) + [zero] * nx
        rep = Representation(alg, right, left, name=f"ext{n}-ladder{m}[{variant}]")
        if not rep.is_valid:
            raise InternalCheckError("catalogue representation failed the axioms")
        out.append(rep)
    return out


def _cross_check_against_catalog(n: int, m: int,
                                 coeffs: tuple[Fraction, ...]) -> None:
    alg = simple_ext_algebra(n)
    rho = sl2_irrep_rho(m)
    d = m + 1
    nx = n - 3
    zero = Matrix.zeros(d, d)
    catalog = classify_extension_irreps(n, m)
    if len(catalog) != len(coeffs):
        raise InternalCheckError("catalogue size differs from the root count")
    by_coeff = {ZERO: catalog[0], Fraction(-1): catalog[1]}
    for a in coeffs:
        right = list(rho) + [zero] * nx
        left = [x.scale(a) for x in rho] + [zero] * nx
        rep = Representation(alg, right, left)
        if not rep.is_valid:
            raise InternalCheckError("forced solution fails the axioms")
        match = by_coeff[a]
        if rep.right != match.right or rep.left != match.left:
            raise InternalCheckError("forced solution differs from the catalogue")
