"""Finite-dimensional Leibniz algebras over QQ, given by structure constants.

The bracket convention is the right one: every right multiplication
v -> [v, x] is a derivation, which is the content of the defining identity

    [[x, y], z] = [[x, z], y] + [x, [y, z]].

A LeibnizAlgebra validates that identity eagerly on construction and stores
the violating triples; operations beyond the checks themselves refuse to
run on an invalid table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import (
    Matrix,
    Subspace,
    Vector,
    matrix_commutant,
    envelope_dimension,
    nullspace,
    solve,
    subspace_intersect,
    subspace_sum,
    vec,
    vzero,
    is_zero_vec,
)

ZERO = Fraction(0)
ONE = Fraction(1)


class InvalidAlgebraError(ValueError):
    """Raised when an operation is asked to run on a non-Leibniz table."""


class InternalCheckError(RuntimeError):
    """A result failed its own verification; this signals a bug, not bad input."""


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # "lower_central" or "derived"
    terms: tuple[Subspace, ...]
    stabilized: bool

    @property
    def terminal(self) -> Subspace:
        return self.terms[-1]


@dataclass(frozen=True)
class SimplicityVerdict:
    value: str  # "yes", "no", "undetermined"
    witness: Subspace | None = None
    reason: str = ""


@dataclass(frozen=True)
class StructureReport:
    is_lie: bool
    kernel: Subspace
    radical: Subspace
    solvable: bool
    nilpotent: bool
    semisimple: bool
    simple: SimplicityVerdict
    witnesses: tuple[tuple[str, Subspace], ...]


class LeibnizAlgebra:
    """Structure-constant model of a Leibniz algebra.

    table[i][j] holds the coordinates of [b_i, b_j] in the given basis.
    """

    def __init__(
        self,
        basis_names: Sequence[str],
        table: Sequence[Sequence[Sequence]],
        name: str = "",
    ):
        names = tuple(str(s) for s in basis_names)
        if len(set(names)) != len(names):
            raise ValueError("basis names must be distinct")
        n = len(names)
        if len(table) != n:
            raise ValueError(f"table has {len(table)} rows, expected {n}")
        rows = []
        for i, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"table row {i} has {len(row)} entries, expected {n}")
            rows.append(tuple(vec(v) for v in row))
            for v in rows[-1]:
                if len(v) != n:
                    raise ValueError("structure constant vector of wrong length")
        self.basis_names = names
        self.table = tuple(rows)
        self.name = name
        self.dim = n
        self.leibniz_violations = self._find_violations()

    # -- identity and validity --

    def _find_violations(self) -> tuple[tuple[int, int, int], ...]:
        n = self.dim
        rights = [self.right_mult_matrix_basis(j) for j in range(n)]
        bad: list[tuple[int, int, int]] = []
        for j in range(n):
            for k in range(n):
                inner = self._right_mult_of(self.table[j][k])
                residual = rights[k] * rights[j] - rights[j] * rights[k] - inner
                if not residual.is_zero():
                    for i in range(n):
                        if not is_zero_vec(residual.col(i)):
                            bad.append((i, j, k))
        return tuple(bad)

    @property
    def is_valid(self) -> bool:
        return not self.leibniz_violations

    def check_leibniz(self) -> tuple[tuple[int, int, int], ...]:
        """Triples (i, j, k) where [[b_i,b_j],b_k] != [[b_i,b_k],b_j] + [b_i,[b_j,b_k]]."""
        return self.leibniz_violations

    def _require_valid(self) -> None:
        if not self.is_valid:
            raise InvalidAlgebraError(
                f"table violates the Leibniz identity at triples {self.leibniz_violations[:3]}...")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return self.basis_names == other.basis_names and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.basis_names, self.table))

    def __repr__(self) -> str:
        label = self.name or "LeibnizAlgebra"
        return f"<{label} dim={self.dim} basis={','.join(self.basis_names)}>"

    def same_table(self, other: "LeibnizAlgebra") -> bool:
        """Equality of structure constants, ignoring basis labels and name."""
        return self.table == other.table

    # -- bracket and multiplication operators --

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        x = vec(x)
        y = vec(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("coordinate vectors must match the algebra dimension")
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                cij = row[j]
                f = xi * yj
                for t, c in enumerate(cij):
                    if c != 0:
                        out[t] += f * c
        return tuple(out)

    def right_mult_matrix_basis(self, j: int) -> Matrix:
        """Matrix of v -> [v, b_j]."""
        return Matrix([[self.table[i][j][t] for i in range(self.dim)]
                       for t in range(self.dim)])

    def left_mult_matrix_basis(self, j: int) -> Matrix:
        """Matrix of v -> [b_j, v]."""
        return Matrix([[self.table[j][i][t] for i in range(self.dim)]
                       for t in range(self.dim)])

    def _right_mult_of(self, y: Vector) -> Matrix:
        m = Matrix.zeros(self.dim, self.dim)
        for j, c in enumerate(y):
            if c != 0:
                m = m + self.right_mult_matrix_basis(j).scale(c)
        return m

    def _left_mult_of(self, x: Vector) -> Matrix:
        m = Matrix.zeros(self.dim, self.dim)
        for j, c in enumerate(x):
            if c != 0:
                m = m + self.left_mult_matrix_basis(j).scale(c)
        return m

    # -- basic structure --

    def is_lie(self) -> bool:
        """Antisymmetry of the whole table; with the Leibniz identity that is Lie."""
        for i in range(self.dim):
            for j in range(i, self.dim):
                s = vec(self.table[i][j])
                t = vec(self.table[j][i])
                if not is_zero_vec(tuple(a + b for a, b in zip(s, t))):
                    return False
        return True

    def leibniz_kernel(self) -> Subspace:
        """Span of all symmetrized basis brackets [b_i,b_j] + [b_j,b_i].

        Over QQ this is the smallest ideal with a Lie quotient; it is abelian
        and two-sided.
        """
        self._require_valid()
        gens = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                gens.append(tuple(a + b for a, b in
                                  zip(self.table[i][j], self.table[j][i])))
        return Subspace.from_vectors(self.dim, gens)

    def product_space(self, u: Subspace, w: Subspace) -> Subspace:
        """Span of [u', w'] over basis pairs of the two subspaces."""
        self._require_valid()
        vecs = []
        for a in u.basis.data:
            for b in w.basis.data:
                vecs.append(self.bracket(a, b))
        return Subspace.from_vectors(self.dim, vecs)

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def ideal_closure(self, seeds: Iterable[Sequence]) -> Subspace:
        """Smallest two-sided ideal containing the seed vectors."""
        self._require_valid()
        span = Subspace.from_vectors(self.dim, [vec(s) for s in seeds])
        while True:
            grown = list(span.basis.data)
            for v in span.basis.data:
                for j in range(self.dim):
                    ej = tuple(ONE if t == j else ZERO for t in range(self.dim))
                    grown.append(self.bracket(v, ej))
                    grown.append(self.bracket(ej, v))
            bigger = Subspace.from_vectors(self.dim, grown)
            if bigger.dim == span.dim:
                return span
            span = bigger

    def is_subalgebra(self, u: Subspace) -> bool:
        self._require_valid()
        return u.contains_subspace(self.product_space(u, u))

    def is_ideal(self, u: Subspace) -> bool:
        self._require_valid()
        full = self.full_space()
        return (u.contains_subspace(self.product_space(u, full))
                and u.contains_subspace(self.product_space(full, u)))

    # -- quotients and subalgebras --

    def quotient(self, ideal: Subspace) -> tuple["LeibnizAlgebra", Matrix]:
        """Quotient algebra and the projection matrix onto it.

        The quotient basis consists of the cosets of the unit vectors at the
        non-pivot coordinates of the ideal, so the construction is
        deterministic.
        """
        self._require_valid()
        if not self.is_ideal(ideal):
            raise ValueError("subspace is not an ideal")
        pivots = set(ideal.pivots)
        comp = [c for c in range(self.dim) if c not in pivots]
        q = len(comp)
        proj_cols = []
        for s in range(self.dim):
            e_s = tuple(ONE if t == s else ZERO for t in range(self.dim))
            reduced = ideal.reduce(e_s)
            proj_cols.append([reduced[c] for c in comp])
        proj = Matrix([[proj_cols[s][k] for s in range(self.dim)] for k in range(q)])
        table = []
        for a in range(q):
            row = []
            ea = tuple(ONE if t == comp[a] else ZERO for t in range(self.dim))
            for b in range(q):
                eb = tuple(ONE if t == comp[b] else ZERO for t in range(self.dim))
                row.append(proj.apply(self.bracket(ea, eb)))
            table.append(row)
        names = [self.basis_names[c] for c in comp]
        out = LeibnizAlgebra(names, table)
        if not out.is_valid:
            raise InternalCheckError("quotient by an ideal produced an invalid table")
        return out, proj

    def subalgebra_on(self, u: Subspace) -> "LeibnizAlgebra":
        """The induced table on a subspace closed under the bracket."""
        self._require_valid()
        if not self.is_subalgebra(u):
            raise ValueError("subspace is not closed under the bracket")
        k = u.dim
        table = []
        for a in range(k):
            row = []
            for b in range(k):
                prod = self.bracket(u.basis.row(a), u.basis.row(b))
                coords = u.coordinates_of(prod)
                if coords is None:
                    raise InternalCheckError("closed subspace failed coordinate extraction")
                row.append(coords)
            table.append(row)
        names = []
        for a in range(k):
            row = u.basis.row(a)
            unit_at = [t for t, x in enumerate(row) if x != 0]
            if len(unit_at) == 1 and row[unit_at[0]] == 1:
                names.append(self.basis_names[unit_at[0]])
            else:
                names.append(f"u{a}")
        return LeibnizAlgebra(names, table)

    # -- series --

    def lower_central_series(self) -> SeriesReport:
        self._require_valid()
        full = self.full_space()
        terms = [full]
        while True:
            nxt = self.product_space(terms[-1], full)
            if nxt == terms[-1]:
                return SeriesReport("lower_central", tuple(terms), True)
            terms.append(nxt)

    def derived_series(self) -> SeriesReport:
        self._require_valid()
        terms = [self.full_space()]
        while True:
            nxt = self.product_space(terms[-1], terms[-1])
            if nxt == terms[-1]:
                return SeriesReport("derived", tuple(terms), True)
            terms.append(nxt)

    def is_solvable(self) -> bool:
        return self.derived_series().terminal.is_zero()

    def is_nilpotent(self) -> bool:
        return self.lower_central_series().terminal.is_zero()

    # -- Killing form, radical, semisimplicity --

    def killing_form(self) -> Matrix:
        """Gram matrix of (x, y) -> trace(ad x . ad y). Lie algebras only."""
        self._require_valid()
        if not self.is_lie():
            raise ValueError("Killing form is only computed on Lie tables")
        ads = [self.left_mult_matrix_basis(j) for j in range(self.dim)]
        return Matrix([[(ads[i] * ads[j]).trace() for j in range(self.dim)]
                       for i in range(self.dim)])

    def radical(self) -> Subspace:
        """Largest solvable ideal, through the Lie quotient by the kernel.

        In characteristic zero the radical of the Lie quotient is the
        orthogonal complement of its derived algebra under the Killing form;
        the preimage under the projection is the Leibniz radical. The result
        is verified to be a solvable ideal before it is returned.
        """
        self._require_valid()
        kernel = self.leibniz_kernel()
        quo, proj = self.quotient(kernel)
        if not quo.is_lie():
            raise InternalCheckError("quotient by the kernel is not Lie")
        lifted = self._lift_through(proj, _lie_radical(quo), kernel)
        if not self.is_ideal(lifted):
            raise InternalCheckError("computed radical is not an ideal")
        if lifted.dim and not self.subalgebra_on(lifted).is_solvable():
            raise InternalCheckError("computed radical is not solvable")
        return lifted

    def _lift_through(self, proj: Matrix, target: Subspace, kernel: Subspace) -> Subspace:
        """Preimage of a quotient subspace under the projection."""
        if target.is_full():
            return self.full_space()
        if target.is_zero():
            return kernel
        ann = nullspace(target.basis)  # rows orthogonal to the target
        constraint = ann.basis * proj
        return nullspace(constraint)

    def is_semisimple(self) -> bool:
        """Radical equal to the kernel."""
        return self.radical() == self.leibniz_kernel()

    # -- simplicity --

    def is_simple(self) -> SimplicityVerdict:
        """Three-valued simplicity test.

        "no" comes with an explicit witness (a proper ideal other than the
        kernel, or the failing bracket/radical condition). "yes" is only
        reported when the Lie quotient is certifiably simple and the kernel
        module is absolutely irreducible. Anything else is "undetermined"
        with the blocking check named.
        """
        self._require_valid()
        kernel = self.leibniz_kernel()
        derived = self.product_space(self.full_space(), self.full_space())
        if derived == kernel:
            return SimplicityVerdict("no", derived, "[L,L] equals the kernel")
        rad = self.radical()
        if rad != kernel:
            return SimplicityVerdict("no", rad, "radical exceeds the kernel")
        full = self.full_space()
        for seed in self._ideal_seed_candidates():
            closure = self.ideal_closure([seed])
            if closure != kernel and not closure.is_zero() and closure != full:
                return SimplicityVerdict(
                    "no", closure, "closure of a sampled vector is a proper ideal")
        quo, _ = self.quotient(kernel)
        kappa = quo.killing_form()
        if kappa.rank() != quo.dim:
            return SimplicityVerdict(
                "no", rad, "Killing form of the quotient is degenerate")
        ads = [quo.right_mult_matrix_basis(j) for j in range(quo.dim)]
        if len(matrix_commutant(ads, quo.dim)) != 1:
            return SimplicityVerdict(
                "undetermined", None,
                "adjoint commutant of the Lie quotient has dimension above one")
        if kernel.dim:
            acting = self._kernel_action_matrices(kernel)
            if envelope_dimension(acting, kernel.dim) != kernel.dim ** 2:
                return SimplicityVerdict(
                    "undetermined", None,
                    "kernel module envelope is short of the full matrix algebra")
        return SimplicityVerdict("yes", None, "")

    def _ideal_seed_candidates(self) -> list[Vector]:
        seeds = []
        for i in range(self.dim):
            seeds.append(tuple(ONE if t == i else ZERO for t in range(self.dim)))
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                seeds.append(tuple(
                    (ONE if t == i else ZERO) + (ONE if t == j else ZERO)
                    for t in range(self.dim)))
        return seeds

    def _kernel_action_matrices(self, kernel: Subspace) -> list[Matrix]:
        """Left and right actions of every basis element on the kernel."""
        mats = []
        k = kernel.dim
        for j in range(self.dim):
            ej = tuple(ONE if t == j else ZERO for t in range(self.dim))
            for side in ("right", "left"):
                cols = []
                for a in range(k):
                    u = kernel.basis.row(a)
                    image = self.bracket(u, ej) if side == "right" else self.bracket(ej, u)
                    coords = kernel.coordinates_of(image)
                    if coords is None:
                        raise InternalCheckError("kernel is not acting into itself")
                    cols.append(coords)
                mats.append(Matrix([[cols[a][t] for a in range(k)] for t in range(k)]))
        return mats

    # -- derivations --

    def derivations(self) -> Subspace:
        """All d with d[x,y] = [dx,y] + [x,dy], flattened row-major into QQ^(n^2)."""
        self._require_valid()
        n = self.dim
        rows = []
        for p in range(n):
            for q in range(n):
                cpq = self.table[p][q]
                for r in range(n):
                    row = [ZERO] * (n * n)
                    for s in range(n):
                        row[r * n + s] += cpq[s]
                        row[s * n + p] -= self.table[s][q][r]
                        row[s * n + q] -= self.table[p][s][r]
                    rows.append(row)
        return nullspace(Matrix(rows))

    def inner_derivations(self) -> Subspace:
        """Span of the right multiplications, flattened row-major."""
        self._require_valid()
        return Subspace.from_vectors(
            self.dim ** 2,
            [self.right_mult_matrix_basis(j).flatten() for j in range(self.dim)])

    def check_inn_ideal(self) -> bool:
        """Inner derivations form an ideal of the derivation Lie algebra."""
        der = self.derivations()
        inn = self.inner_derivations()
        if not der.contains_subspace(inn):
            return False
        n = self.dim
        for dflat in der.basis.data:
            d = Matrix.from_flat(dflat, n, n)
            for j in range(n):
                r = self.right_mult_matrix_basis(j)
                if not inn.contains((d * r - r * d).flatten()):
                    return False
        return True

    # -- Levi complement --

    def levi_subalgebra(self) -> Subspace:
        """A Lie complement S to the kernel in a semisimple algebra.

        Starts from the non-pivot coordinate section of the quotient and
        corrects it by a linear map into the kernel; the correction exists in
        characteristic zero, so failure to solve is reported as an internal
        error. The result is verified: S is a subalgebra with a Lie table,
        intersects the kernel trivially, and together they span everything.
        """
        self._require_valid()
        if not self.is_semisimple():
            raise ValueError("Levi complement is computed on semisimple algebras only")
        kernel = self.leibniz_kernel()
        if kernel.is_zero():
            return self.full_space()
        quo, _ = self.quotient(kernel)
        pivots = set(kernel.pivots)
        comp = [c for c in range(self.dim) if c not in pivots]
        q, r = len(comp), kernel.dim
        section = [tuple(ONE if t == comp[a] else ZERO for t in range(self.dim))
                   for a in range(q)]
        kb = kernel.basis.data

        def kcoords(v: Vector) -> Vector:
            coords = kernel.coordinates_of(v)
            if coords is None:
                raise InternalCheckError("vector expected inside the kernel")
            return coords

        # unknowns w[a][l]: coefficient of kernel basis l in the correction of
        # section vector a; equation per ordered quotient pair and kernel coord
        rows = []
        rhs = []
        for a in range(q):
            for b in range(q):
                bracket_q = quo.bracket(
                    tuple(ONE if t == a else ZERO for t in range(q)),
                    tuple(ONE if t == b else ZERO for t in range(q)))
                gamma = self.bracket(section[a], section[b])
                lift = [ZERO] * self.dim
                for t, c in enumerate(bracket_q):
                    if c != 0:
                        for s in range(self.dim):
                            lift[s] += c * section[t][s]
                gamma = tuple(g - l for g, l in zip(gamma, lift))
                gamma_k = kcoords(gamma)
                base = [[ZERO] * (q * r) for _ in range(r)]
                for t, c in enumerate(bracket_q):
                    if c != 0:
                        for l in range(r):
                            base[l][t * r + l] += c
                for l in range(r):
                    for m in range(r):
                        right = kcoords(self.bracket(section[a], kb[l]))
                        base[m][b * r + l] -= right[m]
                        left = kcoords(self.bracket(kb[l], section[b]))
                        base[m][a * r + l] -= left[m]
                rows.extend(base)
                rhs.extend(gamma_k)
        particular, _ = solve(Matrix(rows), tuple(rhs))
        if particular is None:
            raise InternalCheckError("Levi correction system is unsolvable")
        basis = []
        for a in range(q):
            v = list(section[a])
            for l in range(r):
                c = particular[a * r + l]
                if c != 0:
                    for s in range(self.dim):
                        v[s] += c * kb[l][s]
            basis.append(v)
        levi = Subspace.from_vectors(self.dim, basis)
        if levi.dim != q:
            raise InternalCheckError("Levi complement has wrong dimension")
        if not subspace_intersect(levi, kernel).is_zero():
            raise InternalCheckError("Levi complement intersects the kernel")
        if subspace_sum(levi, kernel).dim != self.dim:
            raise InternalCheckError("Levi complement and kernel do not span")
        if not self.is_subalgebra(levi):
            raise InternalCheckError("Levi complement is not a subalgebra")
        if not self.subalgebra_on(levi).is_lie():
            raise InternalCheckError("Levi complement table is not Lie")
        return levi

    # -- aggregate report --

    def structure_report(self) -> StructureReport:
        self._require_valid()
        kernel = self.leibniz_kernel()
        rad = self.radical()
        simple = self.is_simple()
        witnesses: list[tuple[str, Subspace]] = [
            ("kernel", kernel), ("radical", rad)]
        if simple.witness is not None:
            witnesses.append(("simplicity", simple.witness))
        return StructureReport(
            is_lie=self.is_lie(),
            kernel=kernel,
            radical=rad,
            solvable=self.is_solvable(),
            nilpotent=self.is_nilpotent(),
            semisimple=rad == kernel,
            simple=simple,
            witnesses=tuple(witnesses),
        )


def _lie_radical(lie: LeibnizAlgebra) -> Subspace:
    """Killing-orthogonal complement of the derived algebra (Cartan criterion)."""
    derived = lie.product_space(lie.full_space(), lie.full_space())
    if derived.is_zero():
        return lie.full_space()
    kappa = lie.killing_form()
    rows = [kappa.apply(d) for d in derived.basis.data]
    return nullspace(Matrix(rows))


def algebra_from_brackets(
    basis_names: Sequence[str],
    brackets: dict[tuple[str, str], dict[str, Fraction | int | str]],
    name: str = "",
) -> LeibnizAlgebra:
    """Build an algebra from a sparse bracket dictionary; omitted pairs are zero."""
    names = list(basis_names)
    index = {s: i for i, s in enumerate(names)}
    n = len(names)
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for (left, right), result in brackets.items():
        if left not in index or right not in index:
            raise ValueError(f"unknown basis label in bracket ({left}, {right})")
        for label, coeff in result.items():
            if label not in index:
                raise ValueError(f"unknown basis label {label!r} in a bracket result")
            table[index[left]][index[right]][index[label]] = Fraction(coeff)
    return LeibnizAlgebra(names, table, name=name)


def abelian_algebra(n: int, name: str = "") -> LeibnizAlgebra:
    zero = [[vzero(n) for _ in range(n)] for _ in range(n)]
    return LeibnizAlgebra([f"a{i}" for i in range(n)], zero, name=name or f"abelian{n}")


def direct_sum_algebra(a: LeibnizAlgebra, b: LeibnizAlgebra, name: str = "") -> LeibnizAlgebra:
    """External direct sum; clashing labels get _1 and _2 suffixes."""
    clash = set(a.basis_names) & set(b.basis_names)
    names_a = [f"{s}_1" if clash else s for s in a.basis_names]
    names_b = [f"{s}_2" if clash else s for s in b.basis_names]
    n, m = a.dim, b.dim
    table = [[[ZERO] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            for t, c in enumerate(a.table[i][j]):
                table[i][j][t] = c
    for i in range(m):
        for j in range(m):
            for t, c in enumerate(b.table[i][j]):
                table[n + i][n + j][n + t] = c
    return LeibnizAlgebra(names_a + names_b, table, name=name)
