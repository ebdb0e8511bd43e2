"""Structure-constant algebras, power chains, operator algebras and radicals."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from . import _tensor
from .exceptions import DimensionError, InconsistencyError, RadicalCriterionError, VarietyError
from .linalg import (
    ZERO,
    Matrix,
    Subspace,
    as_vector,
    det,
    rank,
    nullspace,
    to_fraction,
    unit_vector,
    zero_vector,
)


@dataclass(frozen=True, eq=False)
class Algebra:
    """A finite-dimensional algebra given by structure constants.

    ``table[i][j]`` is the coordinate tuple of ``e_i * e_j``.
    """

    table: tuple
    basis_labels: tuple = ()
    name: str = "algebra"

    def __post_init__(self):
        m = len(self.table)
        if m < 1:
            raise DimensionError("an algebra needs dimension >= 1")
        table = []
        for row in self.table:
            if len(row) != m:
                raise DimensionError("structure table must be m x m")
            table.append(tuple(as_vector(v, m) for v in row))
        object.__setattr__(self, "table", tuple(table))
        labels = tuple(self.basis_labels) or tuple(f"e{i + 1}" for i in range(m))
        if len(labels) != m:
            raise DimensionError(f"{len(labels)} basis labels for dimension {m}")
        object.__setattr__(self, "basis_labels", labels)

    @classmethod
    def from_products(cls, dim: int, products: Mapping, labels=None, name: str = "algebra") -> "Algebra":
        """Build from a sparse map ``{(i, j): {k: c}}``; missing products are zero.

        Indices may be ints or basis labels.
        """
        labels = tuple(labels) if labels else tuple(f"e{i + 1}" for i in range(dim))
        pos = {lab: i for i, lab in enumerate(labels)}

        def index(x):
            return pos[x] if isinstance(x, str) else int(x)

        table = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), out in products.items():
            for k, c in out.items():
                table[index(i)][index(j)][index(k)] += to_fraction(c)
        return cls(tuple(tuple(tuple(v) for v in row) for row in table), labels, name)

    @classmethod
    def from_tensor(cls, tensor, labels=None, name: str = "algebra") -> "Algebra":
        m = len(tensor)
        return cls(
            tuple(tuple(tuple(to_fraction(tensor[i][j][k]) for k in range(m)) for j in range(m)) for i in range(m)),
            tuple(labels) if labels else (),
            name,
        )

    @property
    def dim(self) -> int:
        return len(self.table)

    def __eq__(self, other) -> bool:
        return isinstance(other, Algebra) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"Algebra(name={self.name!r}, dim={self.dim})"

    def renamed(self, name: str) -> "Algebra":
        return Algebra(self.table, self.basis_labels, name)

    @cached_property
    def _sparse(self) -> list:
        out = []
        m = self.dim
        for i in range(m):
            for j in range(m):
                nz = [(k, c) for k, c in enumerate(self.table[i][j]) if c]
                if nz:
                    out.append((i, j, nz))
        return out

    @cached_property
    def int_tensor(self) -> tuple:
        """``(scale * constants as an integer array, scale)``."""
        return _tensor.int_structure(self.table)

    def is_zero_algebra(self) -> bool:
        return not self._sparse

    def basis_vector(self, i: int):
        return unit_vector(self.dim, i)

    def element(self, coords: Mapping) -> tuple:
        """Vector from ``{label_or_index: coefficient}``."""
        pos = {lab: i for i, lab in enumerate(self.basis_labels)}
        v = [ZERO] * self.dim
        for key, c in coords.items():
            v[pos[key] if isinstance(key, str) else key] += to_fraction(c)
        return tuple(v)


def check_vector(A: Algebra, x) -> tuple:
    return as_vector(x, A.dim)


def check_subspace(A: Algebra, U: Subspace) -> Subspace:
    if U.ambient_dim != A.dim:
        raise DimensionError(f"subspace of ambient dimension {U.ambient_dim} in an algebra of dimension {A.dim}")
    return U


def full_space(A: Algebra) -> Subspace:
    return Subspace.full(A.dim)


# --------------------------------------------------------------------------
# Products and multiplication operators


def multiply(A: Algebra, x, y) -> tuple:
    x = check_vector(A, x)
    y = check_vector(A, y)
    out = [ZERO] * A.dim
    for i, j, nz in A._sparse:
        a = x[i]
        if a:
            b = y[j]
            if b:
                ab = a * b
                for k, c in nz:
                    out[k] += ab * c
    return tuple(out)


def left_op(A: Algebra, x) -> Matrix:
    """Matrix of a -> x a (column j is x e_j)."""
    x = check_vector(A, x)
    return Matrix.from_columns([multiply(A, x, A.basis_vector(j)) for j in range(A.dim)], A.dim)


def right_op(A: Algebra, x) -> Matrix:
    """Matrix of a -> a x (column j is e_j x)."""
    x = check_vector(A, x)
    return Matrix.from_columns([multiply(A, A.basis_vector(j), x) for j in range(A.dim)], A.dim)


def subspace_product(A: Algebra, U: Subspace, V: Subspace) -> Subspace:
    """span{u v : u in basis(U), v in basis(V)}."""
    check_subspace(A, U)
    check_subspace(A, V)
    return Subspace.span((multiply(A, u, v) for u in U.basis for v in V.basis), A.dim)


def is_commutative(A: Algebra) -> bool:
    m = A.dim
    return all(A.table[i][j] == A.table[j][i] for i in range(m) for j in range(i + 1, m))


def is_anticommutative(A: Algebra) -> bool:
    m = A.dim
    return all(
        A.table[i][j] == tuple(-c for c in A.table[j][i]) for i in range(m) for j in range(i, m)
    )


def is_ideal(A: Algebra, I: Subspace) -> bool:
    """Two-sided ideal test: A I and I A both inside I."""
    check_subspace(A, I)
    full = full_space(A)
    return I.contains_subspace(subspace_product(A, full, I)) and I.contains_subspace(
        subspace_product(A, I, full)
    )


def derived_series(A: Algebra, B: Subspace, limit: int | None = None) -> list[Subspace]:
    """B^(1) = B B, B^(k+1) = (B^(k))^2 until zero or stable."""
    check_subspace(A, B)
    terms = []
    cur = B
    for _ in range(limit or A.dim + 2):
        nxt = subspace_product(A, cur, cur)
        terms.append(nxt)
        if nxt.is_zero() or nxt == cur:
            break
        cur = nxt
    return terms


def is_solvable_subspace(A: Algebra, B: Subspace) -> bool:
    return derived_series(A, B)[-1].is_zero() if not B.is_zero() else True


def quotient_algebra(A: Algebra, I: Subspace) -> Algebra:
    """A / I on the coordinates complementary to the pivots of I."""
    if not is_ideal(A, I):
        raise DimensionError("quotient by a subspace that is not an ideal")
    keep = I.complement_indices()
    if not keep:
        return None
    table = []
    for a in keep:
        row = []
        for b in keep:
            r = I.residual(A.table[a][b])
            row.append(tuple(r[k] for k in keep))
        table.append(tuple(row))
    return Algebra(tuple(table), tuple(A.basis_labels[k] for k in keep), f"{A.name}/I")


def direct_sum(A: Algebra, B: Algebra, name: str | None = None) -> Algebra:
    m, n = A.dim, B.dim
    d = m + n
    table = [[zero_vector(d) for _ in range(d)] for _ in range(d)]
    for i in range(m):
        for j in range(m):
            table[i][j] = A.table[i][j] + zero_vector(n)
    for i in range(n):
        for j in range(n):
            table[m + i][m + j] = zero_vector(m) + B.table[i][j]
    return Algebra(
        tuple(tuple(r) for r in table),
        A.basis_labels + tuple(f"{lab}'" if lab in A.basis_labels else lab for lab in B.basis_labels),
        name or f"{A.name}+{B.name}",
    )


# --------------------------------------------------------------------------
# Power chains


@dataclass(frozen=True)
class ChainReport:
    """dims[i] is the dimension of the (i+1)-th term; index is 1-based."""

    kind: str
    dims: tuple
    stabilized_at: int
    terminal_dim: int
    index: int | None
    terms: tuple = field(default=(), repr=False, compare=False)


def _power_terms(A: Algebra) -> tuple[list[Subspace], int]:
    """A^1, A^2, ... with A^n = sum_i A^i A^(n-i).

    A repeated term does not by itself pin the chain, since A^n depends on
    all earlier terms; but if A^s = ... = A^(2s) then every later term
    equals A^s. The loop runs until that certificate (or zero) is reached.
    """
    terms = [full_space(A)]
    cap = 2 * (A.dim + 1) + 1
    while True:
        n = len(terms) + 1
        acc = Subspace.zero(A.dim)
        for i in range(1, n):
            acc = acc + subspace_product(A, terms[i - 1], terms[n - i - 1])
        terms.append(acc)
        if acc.is_zero():
            return terms, n
        s = n
        while s > 1 and terms[s - 2] == terms[n - 1]:
            s -= 1
        if s < n and n >= 2 * s:
            return terms, s
        if n > cap:
            raise InconsistencyError("power chain failed to stabilize within the cap")


def power_terms(A: Algebra, count: int) -> list[Subspace]:
    """A^1 .. A^count, extending past stabilization with the stable term."""
    terms, _ = _power_terms(A)
    out = list(terms[:count])
    while len(out) < count:
        out.append(terms[-1])
    return out


def right_power_terms(A: Algebra, count: int | None = None) -> list[Subspace]:
    terms = [full_space(A)]
    while True:
        nxt = subspace_product(A, terms[-1], full_space(A))
        if count is not None and len(terms) >= count:
            break
        terms.append(nxt)
        if nxt.is_zero() or nxt == terms[-2]:
            if count is None:
                break
            while len(terms) < count:
                terms.append(nxt)
            break
    return terms[:count] if count is not None else terms


def chain(A: Algebra, kind: str) -> ChainReport:
    """Power, right power or solvable chain of A."""
    if kind == "power":
        terms, stop = _power_terms(A)
        if terms[-1].is_zero():
            shown = terms
        else:
            shown = terms[: stop + 1]
    elif kind == "right_power":
        shown = right_power_terms(A)
        stop = len(shown) if shown[-1].is_zero() else len(shown) - 1
    elif kind == "solvable":
        shown = derived_series(A, full_space(A))
        stop = len(shown) if shown[-1].is_zero() else len(shown) - 1
    else:
        raise ValueError(f"unknown chain kind {kind!r}")
    dims = tuple(t.dim for t in shown)
    index = len(shown) if shown[-1].is_zero() else None
    return ChainReport(kind, dims, stop if index is None else index, dims[-1], index, tuple(shown))


def nilpotency_index(A: Algebra) -> int | None:
    return chain(A, "power").index


def right_nilpotency_index(A: Algebra) -> int | None:
    return chain(A, "right_power").index


def solvability_index(A: Algebra) -> int | None:
    return chain(A, "solvable").index


# --------------------------------------------------------------------------
# Multiplication algebra


def _flat_ops(mats: Iterable[Matrix]) -> list:
    return [M.flat() for M in mats]


def generators(A: Algebra) -> list[Matrix]:
    """L_{e_i} and R_{e_i} for every basis vector."""
    out = []
    for i in range(A.dim):
        e = A.basis_vector(i)
        out.append(left_op(A, e))
        out.append(right_op(A, e))
    return out


def operator_closure(gens: list[Matrix], m: int, unital: bool = False) -> Subspace:
    """Span of all nonempty words in ``gens`` (plus the identity if ``unital``)."""
    seed = list(gens) + ([Matrix.identity(m)] if unital else [])
    space = Subspace.span(_flat_ops(seed), m * m)
    while True:
        prods = [g @ Matrix.from_flat(v, m) for g in gens for v in space.basis]
        grown = space + Subspace.span(_flat_ops(prods), m * m)
        if grown.dim == space.dim:
            return space
        space = grown


def multiplication_algebra(A: Algebra, unital: bool = False) -> Subspace:
    """M(A): the associative operator algebra generated by all L_x, R_x."""
    return operator_closure(generators(A), A.dim, unital)


def operator_product(U: Subspace, V: Subspace, m: int) -> Subspace:
    """span{X Y : X in U, Y in V} for flattened m x m operators."""
    return Subspace.span(
        ((Matrix.from_flat(x, m) @ Matrix.from_flat(y, m)).flat() for x in U.basis for y in V.basis), m * m
    )


def operator_power_chain(M: Subspace, m: int) -> list[Subspace]:
    """M^1 = M, M^(k+1) = M^k M until zero or stable."""
    terms = [M]
    while not terms[-1].is_zero():
        nxt = operator_product(terms[-1], M, m)
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


def is_nilpotent(A: Algebra) -> bool:
    """Nilpotency by the power chain, cross-checked against M(A)."""
    by_chain = chain(A, "power").index is not None
    by_operators = operator_power_chain(multiplication_algebra(A), A.dim)[-1].is_zero()
    if by_chain != by_operators:
        raise InconsistencyError(
            f"power chain says nilpotent={by_chain} but M(A) says nilpotent={by_operators} for {A.name}"
        )
    return by_chain


# --------------------------------------------------------------------------
# Anticommutative machinery


def _require_anticommutative(A: Algebra):
    if not is_anticommutative(A):
        raise VarietyError(f"{A.name} is not anticommutative")


def jacobian(A: Algebra, x, y, z) -> tuple:
    """J(x,y,z) = [[x,y],z] + [[z,x],y] + [[y,z],x]."""
    _require_anticommutative(A)
    mul = lambda u, v: multiply(A, u, v)  # noqa: E731
    terms = (mul(mul(x, y), z), mul(mul(z, x), y), mul(mul(y, z), x))
    return tuple(sum(t) for t in zip(*terms))


def jacobian_tensor(A: Algebra) -> np.ndarray:
    """Integer array J[i, j, k, :] (scaled) over all basis triples."""
    T, _ = A.int_tensor
    terms = [(1, (("x", "y"), "z")), (1, (("z", "x"), "y")), (1, (("y", "z"), "x"))]
    return _tensor.multilinear_eval(terms, ["x", "y", "z"], T)


def lie_center(A: Algebra) -> Subspace:
    """Elements z with J(z, A, A) = J(A, z, A) = J(A, A, z) = 0."""
    _require_anticommutative(A)
    J = jacobian_tensor(A)
    m = A.dim
    rows = []
    # row (slot, i, j, r) over unknown coordinate k of z
    for arr in (J, np.moveaxis(J, 1, 0), np.moveaxis(J, 2, 0)):
        block = np.moveaxis(arr, 0, -1).reshape(-1, m)
        rows.extend(block.tolist())
    return nullspace(Matrix(rows, m))


# --------------------------------------------------------------------------
# Bilinear forms and radicals


@dataclass(frozen=True)
class BilinearForm:
    gram: Matrix
    label: str

    def __call__(self, x, y) -> Fraction:
        return sum((a * b for a, b in zip(x, self.gram.apply(y))), ZERO)

    @property
    def rank(self) -> int:
        return rank(self.gram)

    def is_nondegenerate(self) -> bool:
        return self.gram.rows == 0 or det(self.gram) != 0

    def is_symmetric(self) -> bool:
        return self.gram == self.gram.T

    def radical(self) -> Subspace:
        return nullspace(self.gram)


def killing_form(A: Algebra) -> BilinearForm:
    """chi(x, y) = Tr(R_x R_y)."""
    R = [right_op(A, A.basis_vector(i)) for i in range(A.dim)]
    gram = [[(R[i] @ R[j]).trace() for j in range(A.dim)] for i in range(A.dim)]
    return BilinearForm(Matrix(gram), "killing")


def trace_form(A: Algebra) -> BilinearForm:
    """tau(x, y) = Tr(L_{x y})."""
    tr = [left_op(A, A.basis_vector(k)).trace() for k in range(A.dim)]
    gram = [
        [sum((c * t for c, t in zip(A.table[i][j], tr)), ZERO) for j in range(A.dim)] for i in range(A.dim)
    ]
    return BilinearForm(Matrix(gram), "trace")


def _validate_radical(A: Algebra, R: Subspace, form) -> Subspace:
    if not is_ideal(A, R):
        raise RadicalCriterionError(f"radical-criterion-inapplicable: candidate is not an ideal of {A.name}")
    if not is_solvable_subspace(A, R):
        raise RadicalCriterionError(f"radical-criterion-inapplicable: candidate is not solvable in {A.name}")
    if not R.is_full():
        Q = quotient_algebra(A, R)
        if not form(Q).is_nondegenerate():
            raise RadicalCriterionError(
                f"radical-criterion-inapplicable: form on {A.name}/Rad is degenerate"
            )
    return R


def form_radical_malcev(A: Algebra) -> Subspace:
    """Killing-orthogonal complement of A^2, validated as the solvable radical."""
    from .varieties import satisfies

    if not satisfies(A, "malcev")[0]:
        raise VarietyError(f"{A.name} is not a Malcev algebra")
    chi = killing_form(A)
    square = subspace_product(A, full_space(A), full_space(A))
    rows = [chi.gram.apply(a) for a in square.basis]
    R = nullspace(Matrix(rows, A.dim)) if rows else full_space(A)
    return _validate_radical(A, R, killing_form)


def form_radical_jordan(A: Algebra) -> Subspace:
    """Radical of the trace form Tr(L_{xy}), validated as the solvable radical."""
    from .varieties import satisfies

    if not satisfies(A, "jordan")[0]:
        raise VarietyError(f"{A.name} is not a Jordan algebra")
    R = trace_form(A).radical()
    return _validate_radical(A, R, trace_form)


# --------------------------------------------------------------------------
# Operator spaces attached to Malcev algebras


def right_operator_space(A: Algebra) -> Subspace:
    return Subspace.span(
        (right_op(A, A.basis_vector(i)).flat() for i in range(A.dim)), A.dim * A.dim
    )


def lie_transformation_space(A: Algebra) -> Subspace:
    """R(A) + [R(A), R(A)] as flattened operators."""
    R = [right_op(A, A.basis_vector(i)) for i in range(A.dim)]
    comms = [R[i].commutator(R[j]).flat() for i in range(len(R)) for j in range(i + 1, len(R))]
    return Subspace.span([r.flat() for r in R] + comms, A.dim * A.dim)


def is_lie_closed(S: Subspace, m: int) -> bool:
    mats = [Matrix.from_flat(v, m) for v in S.basis]
    return all(
        mats[i].commutator(mats[j]).flat() in S for i in range(len(mats)) for j in range(i + 1, len(mats))
    )


def right_bracket(X: Matrix, Y: Matrix) -> Matrix:
    """[X, Y] for operators written on the right of their argument: YX - XY as matrices."""
    return Y @ X - X @ Y


def operator_identity_witness(A: Algebra):
    """First basis triple violating 2R_{(xy)z} = [[R_x,R_y],R_z] + [R_y,R_{zx}] + [R_x,R_{yz}], or None.

    Brackets are taken with operators acting on the right.
    """
    R = [right_op(A, A.basis_vector(i)) for i in range(A.dim)]
    for x, y, z in itertools.product(range(A.dim), repeat=3):
        ex, ey, ez = (A.basis_vector(i) for i in (x, y, z))
        lhs = right_op(A, multiply(A, multiply(A, ex, ey), ez)).scale(2)
        rhs = (right_bracket(right_bracket(R[x], R[y]), R[z])
               + right_bracket(R[y], right_op(A, multiply(A, ez, ex)))
               + right_bracket(R[x], right_op(A, multiply(A, ey, ez))))
        if lhs != rhs:
            return x, y, z
    return None


def killing_associativity_witness(A: Algebra):
    """First basis triple with chi(xy, z) != chi(x, yz), or None."""
    chi = killing_form(A)
    for x, y, z in itertools.product(range(A.dim), repeat=3):
        ex, ey, ez = (A.basis_vector(i) for i in (x, y, z))
        if chi(multiply(A, ex, ey), ez) != chi(ex, multiply(A, ey, ez)):
            return x, y, z
    return None


def sagle_map(A: Algebra, x, y) -> Matrix:
    """D(x, y) = [R_x, R_y] + R_{[x, y]} with operators acting on the right.

    Composition on the right reverses matrix order, so the bracket is
    R_y R_x - R_x R_y as matrices.
    """
    Rx, Ry = right_op(A, x), right_op(A, y)
    return right_bracket(Rx, Ry) + right_op(A, multiply(A, x, y))


def gcd_scale(values) -> int:
    return math.lcm(*(to_fraction(v).denominator for v in values)) if values else 1
