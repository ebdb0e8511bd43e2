"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples of
fractions. :class:`Matrix` is an immutable row-major grid and
:class:`Subspace` stores a basis in reduced row-echelon form, so two
subspaces are equal exactly when their basis matrices are equal.

Large homogeneous systems with integer coefficients (the Leibniz-derivation
constraint systems) go through :func:`kernel_from_row_blocks`, which
compresses the rows with a random integer combination, solves the small
system exactly and then verifies the candidate kernel against every
original row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .exceptions import DimensionError

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(x) -> Fraction:
    """Convert an int, Fraction, numpy integer or ``"p/q"`` string exactly."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def as_vector(v, dim: int | None = None) -> Vector:
    vec = tuple(to_fraction(x) for x in v)
    if dim is not None and len(vec) != dim:
        raise DimensionError(f"expected a vector of length {dim}, got {len(vec)}")
    return vec


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero_vector(v) -> bool:
    return not any(v)


def vec_add(u, v) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v) -> Vector:
    return tuple(c * a for a in v)


def lincomb(coeffs, vectors, dim: int) -> Vector:
    out = [ZERO] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Matrix:
    """Immutable matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(to_fraction(x) for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise DimensionError("ragged matrix rows")
        self._data = data
        self.rows = len(data)
        self.cols = cols
        self._hash = None

    @classmethod
    def _trusted(cls, data: tuple, cols: int) -> "Matrix":
        # rows are already tuples of Fractions of the right length
        obj = cls.__new__(cls)
        obj._data = data
        obj.rows = len(data)
        obj.cols = cols
        obj._hash = None
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._trusted(tuple((ZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._trusted(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def diag(cls, values) -> "Matrix":
        vals = [to_fraction(v) for v in values]
        n = len(vals)
        return cls._trusted(
            tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, columns, n: int | None = None) -> "Matrix":
        cols = [as_vector(c) for c in columns]
        n = len(cols[0]) if n is None else n
        return cls._trusted(tuple(tuple(c[i] for c in cols) for i in range(n)), len(cols))

    @classmethod
    def from_flat(cls, v, m: int) -> "Matrix":
        v = as_vector(v, m * m)
        return cls._trusted(tuple(v[i * m:(i + 1) * m] for i in range(m)), m)

    @property
    def entries(self) -> tuple:
        return self._data

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def flat(self) -> Vector:
        return tuple(x for row in self._data for x in row)

    def transpose(self) -> "Matrix":
        return Matrix._trusted(tuple(zip(*self._data)) if self.rows else (), self.rows)

    T = property(transpose)

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        return sum((self._data[i][i] for i in range(self.rows)), ZERO)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._data)

    def apply(self, v) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"matrix with {self.cols} columns applied to length {len(v)}")
        out = []
        for row in self._data:
            s = ZERO
            for a, b in zip(row, v):
                if a and b:
                    s += a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            ocols = other.columns()
            return Matrix._trusted(
                tuple(
                    tuple(sum((a * b for a, b in zip(row, col) if a and b), ZERO) for col in ocols)
                    for row in self._data
                ),
                other.cols,
            )
        return self.apply(other)

    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._trusted(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self.cols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._trusted(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self.cols
        )

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def scale(self, c) -> "Matrix":
        c = to_fraction(c)
        return Matrix._trusted(tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square or k < 0:
            raise DimensionError("only non-negative powers of square matrices")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.cols == other.cols and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_fraction(x) for x in row) for row in self._data)
        return f"Matrix([{body}])"

    def to_strings(self) -> list[list[str]]:
        return [[format_fraction(x) for x in row] for row in self._data]


def as_matrix(M) -> Matrix:
    return M if isinstance(M, Matrix) else Matrix(M)


# --------------------------------------------------------------------------
# Row reduction


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan on a list of mutable rows; returns nonzero rows and pivots."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow[c:] = [x * inv for x in prow[c:]]
        nz = [k for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for k in nz:
                    row[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(M) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank. The returned matrix keeps M's shape."""
    M = as_matrix(M)
    rows = [list(r) for r in M.entries]
    reduced, _ = _rref_rows(rows, M.cols)
    rank = len(reduced)
    data = tuple(tuple(r) for r in reduced) + tuple((ZERO,) * M.cols for _ in range(M.rows - rank))
    return Matrix._trusted(data, M.cols), rank


def rank(M) -> int:
    return rref(M)[1]


# --------------------------------------------------------------------------
# Subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored by its RREF basis (one basis vector per row)."""

    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, vectors: Iterable, ambient_dim: int) -> "Subspace":
        rows = []
        for v in vectors:
            v = as_vector(v)
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            if any(v):
                rows.append(list(v))
        reduced, _ = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in reduced))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(k for k, x in enumerate(row) if x) for row in self.basis]

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def basis_matrix(self) -> Matrix:
        return Matrix._trusted(self.basis, self.ambient_dim)

    def complement_indices(self) -> list[int]:
        """Coordinates whose unit vectors span a complement of this subspace."""
        piv = set(self.pivots)
        return [k for k in range(self.ambient_dim) if k not in piv]

    def residual(self, v) -> Vector:
        """Reduce ``v`` against the RREF basis; zero iff ``v`` lies in the subspace."""
        v = list(as_vector(v, self.ambient_dim))
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for k, x in enumerate(row):
                    if x:
                        v[k] -= c * x
        return tuple(v)

    def coordinates(self, v) -> Vector:
        """Coefficients of ``v`` in the RREF basis (``v`` must lie in the subspace)."""
        v = as_vector(v, self.ambient_dim)
        if any(self.residual(v)):
            raise DimensionError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def __contains__(self, v) -> bool:
        return not any(self.residual(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(v in self for v in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def __ge__(self, other: "Subspace") -> bool:
        return self.contains_subspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def image(self, M: Matrix) -> "Subspace":
        """The image of this subspace under the linear map ``M``."""
        return Subspace.span((M.apply(v) for v in self.basis), M.rows)

    def __repr__(self) -> str:
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def _check_ambient(U: Subspace, V: Subspace):
    if U.ambient_dim != V.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {U.ambient_dim} vs {V.ambient_dim}")


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _check_ambient(U, V)
    if V.is_zero():
        return U
    if U.is_zero():
        return V
    return Subspace.span(U.basis + V.basis, U.ambient_dim)


def subspace_intersect(U: Subspace, V: Subspace) -> Subspace:
    """Zassenhaus: reduce [[U, U], [V, 0]]; rows with a zero left half span U ∩ V."""
    _check_ambient(U, V)
    n = U.ambient_dim
    if U.is_zero() or V.is_zero():
        return Subspace.zero(n)
    if U.is_full():
        return V
    if V.is_full():
        return U
    zero = [ZERO] * n
    rows = [list(u) + list(u) for u in U.basis] + [list(v) + zero for v in V.basis]
    reduced, _ = _rref_rows(rows, 2 * n)
    inter = [r[n:] for r in reduced if not any(r[:n])]
    return Subspace.span(inter, n)


def subspace_contains(U: Subspace, v) -> bool:
    return v in U


def nullspace(M) -> Subspace:
    """Kernel of ``M`` as a subspace of Q^cols."""
    M = as_matrix(M)
    return _nullspace_rows([list(r) for r in M.entries], M.cols)


def _nullspace_rows(rows: list[list[Fraction]], ncols: int) -> Subspace:
    reduced, pivots = _rref_rows(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return Subspace.span(basis, ncols)


def _integer_nullspace(rows, ncols: int) -> Subspace:
    """Kernel of an integer matrix by gcd-reduced Gauss-Jordan elimination.

    Rows are kept primitive after every step, so entries stay small and no
    Fraction arithmetic is needed until the kernel basis is read off.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    pivots: list[tuple[int, list[int]]] = []
    for col in range(ncols):
        cands = [i for i, r in enumerate(work) if r[col]]
        if not cands:
            continue
        best = min(cands, key=lambda i: abs(work[i][col]))
        prow = work.pop(best)
        p = prow[col]
        updated = []
        for r in work:
            c = r[col]
            if c:
                r = [p * x - c * y for x, y in zip(r, prow)]
                g = math.gcd(*r)
                if g > 1:
                    r = [x // g for x in r]
                if not any(r):
                    continue
            updated.append(r)
        work = updated
        for k, (pc, r) in enumerate(pivots):
            c = r[col]
            if c:
                r = [p * x - c * y for x, y in zip(r, prow)]
                g = math.gcd(*r)
                pivots[k] = (pc, [x // g for x in r] if g > 1 else r)
        pivots.append((col, prow))
        if not work:
            break
    pivot_cols = {pc for pc, _ in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for pc, r in pivots:
            if r[f]:
                v[pc] = Fraction(-r[f], r[pc])
        basis.append(v)
    return Subspace.span(basis, ncols)


# --------------------------------------------------------------------------
# Determinants, characteristic polynomials, spectra


def det_and_inverse(M) -> tuple[Fraction, Matrix | None]:
    """Exact determinant and, when it is nonzero, the inverse."""
    M = as_matrix(M)
    if not M.is_square:
        raise DimensionError(f"determinant of a non-square {M.shape} matrix")
    n = M.rows
    rows = [list(r) + list(unit_vector(n, i)) for i, r in enumerate(M.entries)]
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return ZERO, None
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det *= piv
        inv = 1 / piv
        rows[c] = [x * inv for x in rows[c]]
        prow = rows[c]
        for i in range(n):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
    return det, Matrix._trusted(tuple(tuple(r[n:]) for r in rows), n)


def det(M) -> Fraction:
    return det_and_inverse(M)[0]


def char_poly(M) -> tuple[Fraction, ...]:
    """Coefficients ``(c0, c1, ..., 1)`` of det(tI - M), lowest degree first.

    Berkowitz's algorithm: division free, so entries only grow through
    products of matrix entries.
    """
    M = as_matrix(M)
    if not M.is_square:
        raise DimensionError(f"characteristic polynomial of a non-square {M.shape} matrix")
    n = M.rows
    A = M.entries
    p = [ONE]  # descending coefficients of the leading principal minor's polynomial
    for r in range(n):
        a_rr = A[r][r]
        R = A[r][:r]
        C = [A[i][r] for i in range(r)]
        # first column of the Toeplitz matrix: 1, -a_rr, -R C, -R A C, ...
        col = [ONE, -a_rr]
        v = C
        for _ in range(r):
            col.append(-sum((x * y for x, y in zip(R, v)), ZERO))
            v = [sum((A[i][k] * v[k] for k in range(r) if A[i][k] and v[k]), ZERO) for i in range(r)]
        # Toeplitz (r+2) x (r+1) times p (length r+1)
        p = [sum((col[i - j] * p[j] for j in range(min(i, r) + 1) if i - j < len(col)), ZERO)
             for i in range(r + 2)]
    return tuple(reversed(p))


def poly_eval(coeffs, x):
    """Evaluate ascending coefficients at a scalar or square Matrix."""
    if isinstance(x, Matrix):
        n = x.rows
        acc = Matrix.zeros(n)
        for c in reversed(coeffs):
            acc = acc @ x + Matrix.identity(n).scale(c)
        return acc
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    """Synthetic division of ascending coefficients by (t - root)."""
    desc = list(reversed(coeffs))
    out = [desc[0]]
    for c in desc[1:-1]:
        out.append(c + out[-1] * root)
    return list(reversed(out))


class Spectrum(NamedTuple):
    eigenvalues: list  # (Fraction, multiplicity) pairs, increasing eigenvalue
    complete: bool  # True when the rational roots account for the full degree


def rational_eigenvalues(M) -> Spectrum:
    """Rational roots of the characteristic polynomial with multiplicities."""
    coeffs = list(char_poly(M))
    degree = len(coeffs) - 1
    found: dict[Fraction, int] = {}
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs = coeffs[1:]
        found[ZERO] = found.get(ZERO, 0) + 1
    if len(coeffs) > 1:
        scale = math.lcm(*(c.denominator for c in coeffs))
        ints = [int(c * scale) for c in coeffs]
        g = math.gcd(*ints)
        ints = [x // g for x in ints]
        candidates = sorted(
            {Fraction(s * p, q) for p in _divisors(ints[0]) for q in _divisors(ints[-1]) for s in (1, -1)}
        )
        for cand in candidates:
            while len(coeffs) > 1 and poly_eval(coeffs, cand) == 0:
                coeffs = _deflate(coeffs, cand)
                found[cand] = found.get(cand, 0) + 1
    pairs = sorted(found.items())
    return Spectrum(pairs, sum(found.values()) == degree)


def generalized_eigenspace(M, lam) -> Subspace:
    """ker((M - lam I)^n) with n the size of M."""
    M = as_matrix(M)
    if not M.is_square:
        raise DimensionError("generalized eigenspace of a non-square matrix")
    n = M.rows
    shifted = M - Matrix.identity(n).scale(to_fraction(lam))
    return nullspace(shifted ** n)


# --------------------------------------------------------------------------
# Large integer systems

_FLOAT_EXACT = 2 ** 53
_INT64_SAFE = 2 ** 62


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(np.abs(a).max())


def exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer matrix product with no overflow and no rounding.

    Uses float64 BLAS when every partial sum is an integer below 2**53,
    int64 when below 2**62, and Python integers otherwise.
    """
    bound = _absmax(a) * _absmax(b) * max(a.shape[-1], 1)
    if bound < _FLOAT_EXACT:
        out = a.astype(np.float64) @ b.astype(np.float64)
        return np.rint(out).astype(np.int64)
    if bound < _INT64_SAFE and a.dtype != object and b.dtype != object:
        return a.astype(np.int64) @ b.astype(np.int64)
    return a.astype(object) @ b.astype(object)


def integer_rows(vectors: Sequence[Sequence[Fraction]]) -> np.ndarray:
    """Scale each rational vector to a primitive integer vector (object array)."""
    out = []
    for v in vectors:
        den = math.lcm(*(x.denominator for x in v)) if v else 1
        ints = [int(x * den) for x in v]
        g = math.gcd(*ints) or 1
        out.append([x // g for x in ints])
    return np.array(out, dtype=object).reshape(len(out), len(vectors[0]) if vectors else 0)


def _shrink_dtype(a: np.ndarray) -> np.ndarray:
    if a.dtype == object and _absmax(a) < _INT64_SAFE:
        return a.astype(np.int64)
    return a


def kernel_from_row_blocks(
    make_blocks: Callable[[], Iterable[np.ndarray]], ncols: int, *, seed: int = 0
) -> Subspace:
    """Exact kernel of a tall integer matrix delivered in row blocks.

    ``make_blocks`` is called once or twice and must yield the same blocks
    each time. Short systems are solved directly. Tall ones are compressed
    to ``ncols + 8`` random integer combinations of their rows; the kernel
    of the compressed system contains the true kernel, and every original
    row is then checked against it. Violated rows are appended and the
    solve repeated, so the result is exact regardless of the random draw.
    """
    direct_limit = 3 * ncols
    rng = np.random.default_rng(seed)
    k = ncols + 8
    compressed = np.zeros((k, ncols), dtype=object)
    raw: list[np.ndarray] | None = []
    raw_count = 0
    for block in make_blocks():
        if block.size == 0:
            continue
        block = block[np.any(block != 0, axis=1)]
        if block.shape[0] == 0:
            continue
        if raw is not None:
            raw.append(block)
            raw_count += block.shape[0]
            if raw_count > direct_limit:
                raw = None
        weights = rng.integers(-8, 9, size=(k, block.shape[0]))
        compressed += exact_matmul(weights, block).astype(object)
    if raw is not None:
        return _integer_nullspace([r for blk in raw for r in blk], ncols)

    system = [list(map(int, r)) for r in compressed]
    while True:
        kernel = _integer_nullspace(system, ncols)
        if kernel.is_zero():
            return kernel
        basis_cols = _shrink_dtype(integer_rows(kernel.basis).T)
        violated = []
        for block in make_blocks():
            if block.size == 0:
                continue
            prod = exact_matmul(block, basis_cols)
            bad = np.nonzero(np.any(prod != 0, axis=1))[0]
            if bad.size:
                violated.extend(block[bad[: ncols - len(violated)]])
            if len(violated) >= ncols:
                break
        if not violated:
            return kernel
        system.extend(list(map(int, r)) for r in violated)
