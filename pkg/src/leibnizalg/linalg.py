"""Dense exact linear algebra over the rationals.

Everything here works with fractions.Fraction entries, so results are exact:
no tolerances, no floating point. Matrices are immutable; subspaces are kept
in reduced row echelon form, which makes equality of subspaces structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

QQ = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

Vector = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


def vec(values: Iterable) -> Vector:
    return tuple(_frac(v) for v in values)


def vzero(n: int) -> Vector:
    return (ZERO,) * n


def vadd(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ValueError(f"vector length mismatch: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise ValueError(f"vector length mismatch: {len(a)} vs {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def vscale(c: Fraction, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def is_zero_vec(a: Vector) -> bool:
    return all(x == 0 for x in a)


class Matrix:
    """Immutable dense matrix over QQ."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        rows = tuple(tuple(_frac(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            for row in rows:
                if len(row) != width:
                    raise ValueError("ragged rows in matrix")
            if cols is not None and cols != width:
                raise ValueError("cols hint contradicts row length")
        else:
            # cols keeps the width of an empty matrix meaningful
            width = 0 if cols is None else cols
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "data", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix([[ZERO] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def from_flat(flat: Sequence, rows: int, cols: int) -> "Matrix":
        if len(flat) != rows * cols:
            raise ValueError("flat length does not match shape")
        return Matrix([flat[i * cols:(i + 1) * cols] for i in range(rows)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self._matmul(other)
        return self.scale(_frac(other))

    def __rmul__(self, other):
        return self.scale(_frac(other))

    def scale(self, c: Fraction) -> "Matrix":
        return Matrix([[c * a for a in row] for row in self.data])

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def _matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        odata = other.data
        for i, row in enumerate(self.data):
            acc = out[i]
            for k, a in enumerate(row):
                if a == 0:
                    continue
                orow = odata[k]
                for j, b in enumerate(orow):
                    if b != 0:
                        acc[j] += a * b
        return Matrix(out)

    def apply(self, v: Vector) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} does not match {self.cols} columns")
        out = []
        for row in self.data:
            s = ZERO
            for a, x in zip(row, v):
                if a != 0 and x != 0:
                    s += a * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix([[] for _ in range(self.cols)], cols=0)
        if self.cols == 0:
            return Matrix([], cols=self.rows)
        return Matrix(list(zip(*self.data)))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), ZERO)

    def row(self, i: int) -> Vector:
        return self.data[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def flatten(self) -> Vector:
        """Row-major flattening, the convention used everywhere in this package."""
        return tuple(x for row in self.data for x in row)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def rank(self) -> int:
        return len(rref(self)[1])

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(row) + [ONE if i == j else ZERO for j in range(n)]
               for i, row in enumerate(self.data)]
        reduced, pivots = _rref_rows(aug)
        if list(pivots) != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([row[n:] for row in reduced])


def stack(matrices: Sequence[Matrix]) -> Matrix:
    """Vertical concatenation."""
    if not matrices:
        raise ValueError("nothing to stack")
    width = matrices[0].cols
    rows: list[Sequence[Fraction]] = []
    for m in matrices:
        if m.cols != width:
            raise ValueError("column count mismatch in stack")
        rows.extend(m.data)
    return Matrix(rows)


def _rref_rows(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    """In-place reduced row echelon form. Returns (rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            inv = ONE / pv
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f != 0:
                ri = rows[i]
                rows[i] = [a - f * b for a, b in zip(ri, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, tuple(pivots)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form of m, with the pivot column indices.

    Zero rows sink to the bottom; the result has the same shape as m.
    """
    rows = [list(r) for r in m.data]
    reduced, pivots = _rref_rows(rows)
    return Matrix(reduced, cols=m.cols), pivots


def nullspace(m: Matrix) -> "Subspace":
    """Kernel of m acting on column vectors, as a canonical Subspace."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced.entry(r, f)
        basis.append(v)
    return Subspace.from_vectors(m.cols, basis)


def solve(a: Matrix, b: Vector) -> tuple[Vector | None, "Subspace"]:
    """Solve a x = b exactly.

    Returns (particular, homogeneous) where particular is None when the
    system is inconsistent, and otherwise the solution with all free
    variables set to zero. homogeneous is the kernel of a.
    """
    if len(b) != a.rows:
        raise ValueError("right hand side length does not match row count")
    aug = [list(row) + [bv] for row, bv in zip(a.data, b)]
    if not aug:
        return vzero(a.cols), Subspace.full(a.cols)
    reduced, pivots = _rref_rows(aug)
    if a.cols in pivots:
        return None, nullspace(a)
    x = [ZERO] * a.cols
    for r, p in enumerate(pivots):
        x[p] = reduced[r][a.cols]
    return tuple(x), nullspace(a)


@dataclass(frozen=True)
class Subspace:
    """Subspace of QQ^n, stored as an RREF basis with no zero rows.

    The stored form is canonical, so two Subspace objects are equal exactly
    when they describe the same subspace.
    """

    ambient_dim: int
    basis: Matrix

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [list(vec(v)) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if not rows:
            return Subspace(ambient_dim, Matrix.zeros(0, ambient_dim))
        reduced, pivots = _rref_rows(rows)
        return Subspace(ambient_dim, Matrix(reduced[:len(pivots)], cols=ambient_dim))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace.from_vectors(ambient_dim, [])

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    @property
    def pivots(self) -> tuple[int, ...]:
        out = []
        for row in self.basis.data:
            for c, x in enumerate(row):
                if x != 0:
                    out.append(c)
                    break
        return tuple(out)

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of v after elimination against the basis."""
        w = list(vec(v))
        if len(w) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        for row, p in zip(self.basis.data, self.pivots):
            f = w[p]
            if f != 0:
                for j, x in enumerate(row):
                    if x != 0:
                        w[j] -= f * x
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return is_zero_vec(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis.data)

    def coordinates_of(self, v: Sequence) -> Vector | None:
        """Coefficients of v in the RREF basis, None when v lies outside."""
        w = list(vec(v))
        coords = []
        for row, p in zip(self.basis.data, self.pivots):
            f = w[p]
            coords.append(f)
            if f != 0:
                for j, x in enumerate(row):
                    if x != 0:
                        w[j] -= f * x
        if not is_zero_vec(tuple(w)):
            return None
        return tuple(coords)

    def vectors(self) -> tuple[Vector, ...]:
        return self.basis.data


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.from_vectors(
        a.ambient_dim, list(a.basis.data) + list(b.basis.data))


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of [A^T | -B^T]."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    n = a.ambient_dim
    ra, rb = a.dim, b.dim
    if ra == 0 or rb == 0:
        return Subspace.zero(n)
    m = Matrix([[a.basis.entry(k, i) for k in range(ra)]
                + [-b.basis.entry(k, i) for k in range(rb)]
                for i in range(n)])
    ker = nullspace(m)
    vecs = []
    for u in ker.basis.data:
        w = [ZERO] * n
        for k in range(ra):
            c = u[k]
            if c != 0:
                row = a.basis.data[k]
                for j in range(n):
                    w[j] += c * row[j]
        vecs.append(w)
    return Subspace.from_vectors(n, vecs)


# ---- polynomials ----
# Polynomials are coefficient tuples in ascending degree order.

Poly = tuple[Fraction, ...]


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


def minimal_polynomial(m: Matrix) -> Poly:
    """Monic minimal polynomial of a square matrix, ascending coefficients.

    Found as the first linear dependency among I, m, m^2, ...
    """
    if not m.is_square():
        raise ValueError("minimal polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return (ZERO, ONE)
    power = Matrix.identity(n)
    flats = [power.flatten()]
    for k in range(1, n + 1):
        power = power * m
        target = power.flatten()
        a = Matrix([[flats[i][j] for i in range(k)] for j in range(n * n)])
        particular, _ = solve(a, target)
        if particular is not None:
            return tuple(-c for c in particular) + (ONE,)
        flats.append(target)
    raise AssertionError("no dependency up to degree n; impossible over a field")


def char_poly(m: Matrix) -> Poly:
    """Characteristic polynomial det(tI - m) by the Faddeev-LeVerrier scheme."""
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = Matrix.zeros(n, n)
    for k in range(1, n + 1):
        mk = m * mk + coeffs[n - k + 1] * Matrix.identity(n)
        coeffs[n - k] = -(m * mk).trace() / k
    return tuple(coeffs)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rational_roots(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """All rational roots of the polynomial, sorted, by the rational root theorem."""
    cs = [ _frac(c) for c in coeffs ]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("zero polynomial has every root")
    roots = set()
    # factor out powers of t
    v = 0
    while cs[v] == 0:
        v += 1
    if v > 0:
        roots.add(ZERO)
        cs = cs[v:]
    if len(cs) > 1:
        denom_lcm = 1
        for c in cs:
            denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in cs]
        g = 0
        for x in ints:
            g = _gcd(g, x)
        ints = [x // g for x in ints]
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if poly_eval(cs, cand) == 0:
                        roots.add(cand)
    return tuple(sorted(roots))


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


# ---- echelon accumulator ----


class Echelon:
    """Incremental row echelon accumulator for span growth."""

    def __init__(self, width: int):
        self.width = width
        self.rows: dict[int, Vector] = {}  # pivot column -> row with pivot 1

    def _reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        w = list(v)
        for p in sorted(self.rows):
            f = w[p]
            if f != 0:
                row = self.rows[p]
                for j in range(p, self.width):
                    x = row[j]
                    if x != 0:
                        w[j] -= f * x
        return w

    def contains(self, v: Sequence[Fraction]) -> bool:
        return all(x == 0 for x in self._reduce(v))

    def insert(self, v: Sequence[Fraction]) -> bool:
        """Add v to the span. Returns True when the span grew."""
        w = self._reduce(v)
        for p, x in enumerate(w):
            if x != 0:
                if x != 1:
                    inv = ONE / x
                    w = [y * inv for y in w]
                self.rows[p] = tuple(w)
                return True
        return False

    @property
    def dim(self) -> int:
        return len(self.rows)

    def subspace(self) -> Subspace:
        return Subspace.from_vectors(self.width, list(self.rows.values()))


def envelope_dimension(generators: Sequence[Matrix], dim: int) -> int:
    """Dimension of the unital associative algebra generated inside dim x dim matrices.

    Runs a breadth-first closure: every word in the generators is reached by
    right multiplication, starting from the identity.
    """
    for g in generators:
        if g.rows != dim or g.cols != dim:
            raise ValueError("generator shape does not match the ambient dimension")
    ech = Echelon(dim * dim)
    frontier: list[Matrix] = []
    seed = [Matrix.identity(dim)] + list(generators)
    for m in seed:
        if ech.insert(m.flatten()):
            frontier.append(m)
    while frontier and ech.dim < dim * dim:
        fresh: list[Matrix] = []
        for m in frontier:
            for g in generators:
                prod = m * g
                if ech.insert(prod.flatten()):
                    fresh.append(prod)
                    if ech.dim == dim * dim:
                        return ech.dim
        frontier = fresh
    return ech.dim


def commutator_equation_rows(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    """Rows of the linear map X -> X a - b X on flattened X.

    X has shape (b.rows x a.cols); rows come out in row-major entry order.
    """
    p, q = b.rows, a.cols
    if a.rows != a.cols or b.rows != b.cols:
        raise ValueError("commutator equations need square factors")
    rows = []
    for i in range(p):
        for j in range(q):
            row = [ZERO] * (p * q)
            for k in range(q):
                row[i * q + k] += a.entry(k, j)
            for k in range(p):
                row[k * q + j] -= b.entry(i, k)
            rows.append(row)
    return rows


def matrix_commutant(mats: Sequence[Matrix], dim: int) -> list[Matrix]:
    """Basis of {X : X m = m X for every m in mats}, in RREF order."""
    rows: list[list[Fraction]] = []
    for m in mats:
        if m.rows != dim or m.cols != dim:
            raise ValueError("matrix shape does not match the ambient dimension")
        rows.extend(commutator_equation_rows(m, m))
    if not rows:
        return [Matrix.from_flat(v, dim, dim)
                for v in Subspace.full(dim * dim).basis.data]
    ker = nullspace(Matrix(rows))
    return [Matrix.from_flat(v, dim, dim) for v in ker.basis.data]


def intertwiner_space(
    pairs: Sequence[tuple[Matrix, Matrix]], rows_dim: int, cols_dim: int
) -> list[Matrix]:
    """Basis of {X : X a = b X for every (a, b) pair}; X is rows_dim x cols_dim."""
    eq_rows: list[list[Fraction]] = []
    for a, b in pairs:
        if a.rows != cols_dim or b.rows != rows_dim:
            raise ValueError("intertwiner pair shapes are inconsistent")
        eq_rows.extend(commutator_equation_rows(a, b))
    if not eq_rows:
        return [Matrix.from_flat(v, rows_dim, cols_dim)
                for v in Subspace.full(rows_dim * cols_dim).basis.data]
    ker = nullspace(Matrix(eq_rows))
    return [Matrix.from_flat(v, rows_dim, cols_dim) for v in ker.basis.data]
