"""Explicit n-ary algebras: induced algebras, derivations, solvability, Filippov checks."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping

import numpy as np

from . import _tensor
from .bracketings import BracketTree, labelled, size
from .exceptions import CapExceededError, DimensionError, VarietyError
from .linalg import (
    ZERO,
    Matrix,
    Subspace,
    as_matrix,
    as_vector,
    integer_rows,
    kernel_from_row_blocks,
    nullspace,
    to_fraction,
)

MAX_ARITY = 7


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (0 if an entry repeats)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True, eq=False)
class NAryAlgebra:
    """An n-ary algebra on Q^m given by its nonzero basis products.

    With ``anticommutative`` set, only strictly increasing index tuples are
    stored and every other product follows by the sign of the sorting
    permutation.
    """

    arity: int
    dim: int
    entries: Mapping
    anticommutative: bool = False
    basis_labels: tuple = ()
    name: str = "nary"

    def __post_init__(self):
        if self.arity < 2:
            raise DimensionError("arity must be at least 2")
        if self.arity > MAX_ARITY:
            raise CapExceededError(f"arity {self.arity} exceeds the cap {MAX_ARITY}")
        if self.dim < 1:
            raise DimensionError("dimension must be at least 1")
        table: dict = {}
        for args, val in dict(self.entries).items():
            args = tuple(int(a) for a in args)
            if len(args) != self.arity or not all(0 <= a < self.dim for a in args):
                raise DimensionError(f"bad argument tuple {args}")
            val = as_vector(val, self.dim)
            if self.anticommutative:
                sign = permutation_sign(args)
                if sign == 0:
                    if any(val):
                        raise VarietyError(f"repeated arguments {args} with a nonzero product")
                    continue
                key = tuple(sorted(args))
                val = tuple(sign * c for c in val)
                if key in table and table[key] != val:
                    raise VarietyError(f"conflicting products for the permutations of {key}")
                args = key
            if any(val):
                table[args] = val
        object.__setattr__(self, "entries", dict(sorted(table.items())))
        labels = tuple(self.basis_labels) or tuple(f"e{i + 1}" for i in range(self.dim))
        if len(labels) != self.dim:
            raise DimensionError("basis label count does not match dimension")
        object.__setattr__(self, "basis_labels", labels)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NAryAlgebra)
            and (self.arity, self.dim) == (other.arity, other.dim)
            and self.full_table == other.full_table
        )

    def __hash__(self) -> int:
        return hash((self.arity, self.dim, len(self.entries)))

    def __repr__(self) -> str:
        return f"NAryAlgebra(name={self.name!r}, arity={self.arity}, dim={self.dim})"

    @cached_property
    def full_table(self) -> dict:
        """Every nonzero basis product, permutations included."""
        if not self.anticommutative:
            return dict(self.entries)
        out = {}
        for key, val in self.entries.items():
            for perm in itertools.permutations(key):
                s = permutation_sign(perm)
                out[perm] = val if s == 1 else tuple(-c for c in val)
        return dict(sorted(out.items()))

    def basis_product(self, args) -> tuple:
        return self.full_table.get(tuple(args), (ZERO,) * self.dim)

    @cached_property
    def dense(self) -> tuple[np.ndarray, int]:
        """Integer tensor of shape (m,)*n + (m,) scaled by a common denominator."""
        dens = [c.denominator for v in self.full_table.values() for c in v]
        scale = math.lcm(*dens) if dens else 1
        arr = np.zeros((self.dim,) * self.arity + (self.dim,), dtype=object)
        for args, val in self.full_table.items():
            arr[args] = np.array([int(c * scale) for c in val], dtype=object)
        return arr, scale


def from_bracketing(A, f: BracketTree) -> NAryAlgebra:
    """The n-ary algebra A_f with [a1, ..., an] = [a1, ..., an]_f."""
    n = size(f)
    if n > MAX_ARITY:
        raise CapExceededError(f"arrangement length {n} exceeds the cap {MAX_ARITY}")
    T, scale = A.int_tensor
    labels = [f"v{k}" for k in range(n)]
    values = _tensor.multilinear_eval([(1, labelled(f, labels))], labels, T)
    denom = scale ** (n - 1)
    entries = {}
    for idx in zip(*np.nonzero(np.any(values != 0, axis=-1))):
        idx = tuple(int(i) for i in idx)
        entries[idx] = tuple(Fraction(int(c), denom) for c in values[idx])
    return NAryAlgebra(n, A.dim, entries, False, A.basis_labels, f"{A.name}_f")


def _check_args(B: NAryAlgebra, args):
    if len(args) != B.arity:
        raise DimensionError(f"{B.arity}-ary product given {len(args)} arguments")
    return [as_vector(a, B.dim) for a in args]


def nary_product(B: NAryAlgebra, args) -> tuple:
    args = _check_args(B, args)
    out = [ZERO] * B.dim
    table = B.full_table
    supports = [[(k, c) for k, c in enumerate(a) if c] for a in args]
    if math.prod(len(s) for s in supports) <= len(table):
        pairs = ((tuple(k for k, _ in combo), math.prod(c for _, c in combo))
                 for combo in itertools.product(*supports))
        pairs = ((key, coef) for key, coef in pairs if key in table)
    else:
        pairs = ((key, math.prod(a[k] for a, k in zip(args, key))) for key in table)
    for key, coef in pairs:
        if coef:
            for r, c in enumerate(table[key]):
                if c:
                    out[r] += coef * c
    return tuple(out)


def _row_span(rows: np.ndarray, m: int) -> Subspace:
    """Span of the integer rows, as the annihilator of their common kernel."""
    rows = rows.reshape(-1, m)
    rows = rows[np.any(rows != 0, axis=1)]
    if rows.shape[0] == 0:
        return Subspace.zero(m)
    kernel = kernel_from_row_blocks(lambda: [rows], m)
    if kernel.is_zero():
        return Subspace.full(m)
    return nullspace(Matrix(kernel.basis, m))


def nary_subspace_product(B: NAryAlgebra, spaces) -> Subspace:
    """Span of products of basis vectors taken one from each subspace."""
    if len(spaces) != B.arity:
        raise DimensionError(f"{B.arity}-ary product given {len(spaces)} subspaces")
    for U in spaces:
        if U.ambient_dim != B.dim:
            raise DimensionError("subspace ambient dimension does not match")
    if any(U.is_zero() for U in spaces):
        return Subspace.zero(B.dim)
    X = B.dense[0]
    for slot, U in enumerate(spaces):
        V = integer_rows(U.basis)
        X = np.moveaxis(_tensor.exact_tensordot(X, V, ([slot], [1])), -1, slot)
    return _row_span(X, B.dim)


# --------------------------------------------------------------------------
# Derivations


_LETTERS = "ijklmnopq"


def _constraint_blocks(B: NAryAlgebra):
    """Dense rows of d([x1..xn]) - sum_j [..d(xj)..] = 0, one block per leading index.

    Row (t, r), column a*m + b: the unknown d[a][b] is the coefficient of
    e_a in d(e_b). Each block is written down by einsum against the identity.
    """
    m, n = B.dim, B.arity
    P = B.dense[0]
    bound = (n + 1) * max((abs(int(x)) for x in P.flat), default=0)
    P = P.astype(np.int64 if bound < (1 << 62) else object)
    eye = np.eye(m, dtype=P.dtype)
    rest = _LETTERS[1:n]
    for t0 in range(m):
        block = np.einsum(f"{rest}b,ra->{rest}rab", P[t0], eye)
        # slot 0 holds t0: -P[a, rest.., r] on unknown (a, t0)
        block[..., t0] -= np.moveaxis(P, 0, -1)
        for j in range(1, n):
            src = rest[: j - 1] + "a" + rest[j:]
            block -= np.einsum(f"{src}r,{rest[j - 1]}b->{rest}rab", P[t0], eye)
        yield block.reshape(-1, m * m)


def nary_derivation_space(B: NAryAlgebra) -> Subspace:
    """Derivations of B as flattened m x m matrices (row-major)."""
    return kernel_from_row_blocks(lambda: _constraint_blocks(B), B.dim * B.dim)


def nary_derivation_witness(B: NAryAlgebra, d):
    """First basis tuple on which d fails the derivation rule, or None."""
    D = as_matrix(d)
    m, n = B.dim, B.arity
    if D.shape != (m, m):
        raise DimensionError(f"expected a {m}x{m} matrix")
    Dint, _ = _tensor.int_matrix(D.entries)
    P = B.dense[0]
    diff = _tensor.exact_tensordot(P, Dint, ([n], [1])).astype(object)
    for j in range(n):
        diff = diff - np.moveaxis(_tensor.exact_tensordot(P, Dint, ([j], [0])), -1, j).astype(object)
    return _tensor.first_nonzero(diff)


def is_nary_derivation(B: NAryAlgebra, d) -> bool:
    """Direct check on every basis tuple that can give a nonzero term."""
    return nary_derivation_witness(B, d) is None


# --------------------------------------------------------------------------
# Chains, ideals, Filippov identity


@dataclass(frozen=True)
class NChainReport:
    dims: tuple
    stabilized_at: int
    n_solvable: bool


def n_solvable_chain(B: NAryAlgebra) -> NChainReport:
    """B^(1) = B, B^(t+1) = [B^(t), ..., B^(t)] until zero or stable."""
    cur = Subspace.full(B.dim)
    dims = [cur.dim]
    while True:
        nxt = nary_subspace_product(B, [cur] * B.arity)
        if nxt == cur:
            return NChainReport(tuple(dims), len(dims), cur.is_zero())
        dims.append(nxt.dim)
        cur = nxt
        if cur.is_zero():
            return NChainReport(tuple(dims), len(dims), True)


def is_nary_ideal(B: NAryAlgebra, I: Subspace) -> bool:
    """[B, .., I, .., B] inside I for every slot."""
    if I.ambient_dim != B.dim:
        raise DimensionError("subspace ambient dimension does not match")
    full = Subspace.full(B.dim)
    for slot in range(B.arity):
        spaces = [full] * B.arity
        spaces[slot] = I
        if not I.contains_subspace(nary_subspace_product(B, spaces)):
            return False
    return True


def filippov_witness(B: NAryAlgebra):
    """First (x, y) index pair violating the n-ary Jacobi identity, or None.

    [[x1..xn], y2..yn] = sum_i [x1, .., [xi, y2..yn], .., xn]. Both sides
    alternate in x and in y, so strictly increasing tuples suffice.
    """
    if not B.anticommutative:
        raise VarietyError("the Filippov identity needs an anticommutative n-ary algebra")
    n, m = B.arity, B.dim
    basis = [tuple(Fraction(int(i == k)) for i in range(m)) for k in range(m)]
    for xs in itertools.combinations(range(m), n):
        inner = B.basis_product(xs)
        for ys in itertools.combinations(range(m), n - 1):
            tail = [basis[y] for y in ys]
            lhs = nary_product(B, [inner] + tail)
            rhs = [ZERO] * m
            for i in range(n):
                args = [basis[x] for x in xs]
                args[i] = nary_product(B, [basis[xs[i]]] + tail)
                for r, c in enumerate(nary_product(B, args)):
                    rhs[r] += c
            if tuple(lhs) != tuple(rhs):
                return xs, ys
    return None


def filippov_check(B: NAryAlgebra) -> bool:
    return filippov_witness(B) is None


def flat_to_matrix(v, m: int) -> Matrix:
    return Matrix.from_flat(v, m)


def perturbed(B: NAryAlgebra, key, factor=-1) -> NAryAlgebra:
    """Copy of B with the stored product at ``key`` multiplied by ``factor``."""
    entries = dict(B.entries)
    entries[key] = tuple(to_fraction(factor) * c for c in entries[key])
    return NAryAlgebra(B.arity, B.dim, entries, B.anticommutative, B.basis_labels, f"{B.name}~")


def sheared(B: NAryAlgebra, key, target: int, c=1) -> NAryAlgebra:
    """Copy of B with ``c * e_target`` added to the stored product at ``key``."""
    entries = dict(B.entries)
    val = list(entries.get(key, (ZERO,) * B.dim))
    val[target] += to_fraction(c)
    entries[key] = tuple(val)
    return NAryAlgebra(B.arity, B.dim, entries, B.anticommutative, B.basis_labels, f"{B.name}+")
