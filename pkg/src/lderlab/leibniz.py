"""f-Leibniz-derivation spaces, invertible witnesses and the structural lemmas around them.

A linear map d is stored as an m x m matrix D whose column b is d(e_b);
flattened, the unknown D[a][b] sits at index a*m + b.

Spaces are computed by assembling the defining relation as an integer
linear system over all basis tuples and taking its exact kernel. Membership
of a single map is decided separately, by evaluating both sides of the
relation as product tensors; the two routes share no code beyond the
tensor contraction helper, which makes them a check on each other.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from . import _tensor
from .algebra import (
    Algebra,
    chain,
    is_anticommutative,
    is_ideal,
    killing_form,
    power_terms,
    subspace_product,
)
from .bracketings import (
    BracketTree,
    compact,
    enumerate_arrangements,
    labelled,
    left_comb,
    parse,
    size,
)
from .exceptions import CapExceededError, PreconditionError, SpectrumError, VarietyError
from .linalg import (
    Matrix,
    Subspace,
    as_matrix,
    det_and_inverse,
    generalized_eigenspace,
    integer_rows,
    _integer_nullspace,
    kernel_from_row_blocks,
    nullspace,
    rank,
    rational_eigenvalues,
)

MAX_ORDER = 6
MAX_DIM_HIGH_ORDER = 8
CHUNK_TUPLES = 16384


def check_order(A: Algebra, n: int):
    if n < 2:
        raise CapExceededError(f"order must be at least 2, got {n}")
    if n > MAX_ORDER:
        raise CapExceededError(f"order {n} exceeds the cap {MAX_ORDER}")
    if n > 3 and A.dim > MAX_DIM_HIGH_ORDER:
        raise CapExceededError(f"order {n} needs dimension <= {MAX_DIM_HIGH_ORDER}, got {A.dim}")


@dataclass(frozen=True)
class DerivationSpace:
    """A space of maps, flattened row-major into Q^(m*m)."""

    algebra_dim: int
    order: int
    arrangement: Union[BracketTree, str]
    space: Subspace
    algebra: Algebra = field(default=None, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_full(self) -> bool:
        return self.space.is_full()

    def matrices(self) -> list[Matrix]:
        return [Matrix.from_flat(v, self.algebra_dim) for v in self.space.basis]

    def __contains__(self, d) -> bool:
        return as_matrix(d).flat() in self.space

    def describe_arrangement(self) -> str:
        return self.arrangement if isinstance(self.arrangement, str) else compact(self.arrangement)


# --------------------------------------------------------------------------
# Assembly


def _product_tensor(A: Algebra, f: BracketTree) -> np.ndarray:
    """Integer array (m**n, m): row t is the scaled product of the basis tuple t."""
    T, _ = A.int_tensor
    n = size(f)
    names = [f"v{k}" for k in range(n)]
    values = _tensor.multilinear_eval([(1, labelled(f, names))], names, T)
    return values.reshape(A.dim ** n, A.dim)


def _constraint_blocks(P: np.ndarray, m: int, n: int):
    """Row blocks of d(P_t) - sum_j P_{t[j -> d]} = 0, one row per (tuple, output)."""
    total = m ** n
    bound = (n + 1) * _tensor.absmax(P)
    dtype = _tensor.choose_dtype(bound)
    P = P.astype(dtype)
    strides = [m ** (n - 1 - j) for j in range(n)]
    r = np.arange(m)
    for start in range(0, total, CHUNK_TUPLES):
        t = np.arange(start, min(start + CHUNK_TUPLES, total))
        c = t.size
        block = np.zeros((c * m, m * m), dtype=dtype)
        local = np.arange(c)
        # d applied to the product: coefficient P[t, a] on unknown (r, a).
        rows = (local[:, None, None] * m + r[None, :, None])
        cols = r[None, :, None] * m + r[None, None, :]
        block[np.broadcast_to(rows, (c, m, m)), np.broadcast_to(cols, (c, m, m))] = P[t][:, None, :]
        # d inserted in slot j: -P[t with slot j set to a, r] on unknown (a, t_j).
        rows2 = local[:, None] * m + r[None, :]
        for j, s in enumerate(strides):
            digit = (t // s) % m
            base = t - digit * s
            for a in range(m):
                cols2 = np.broadcast_to((a * m + digit)[:, None], (c, m))
                block[rows2, cols2] -= P[base + a * s]
        yield block


_BLOCK_LIMIT = 1 << 22
_FLOAT_EXACT = 1 << 53
_INT_SAFE = 1 << 62


def _explicit_row(Pt: np.ndarray, m: int, n: int, t: tuple, r: int) -> list[int]:
    """The constraint row for basis tuple ``t`` and output coordinate ``r``."""
    row = [0] * (m * m)
    for a in range(m):
        row[r * m + a] += int(Pt[t][a])
    for j in range(n):
        for a in range(m):
            row[a * m + t[j]] -= int(Pt[t[:j] + (a,) + t[j + 1:]][r])
    return row


def _contract(x: np.ndarray, y: np.ndarray, axes, bound: int) -> np.ndarray:
    """Exact tensordot of integer arrays: float64 BLAS when every partial sum fits."""
    if bound < _FLOAT_EXACT:
        out = np.tensordot(x.astype(np.float64), y.astype(np.float64), axes)
        return np.rint(out).astype(np.int64)
    if bound < _INT_SAFE:
        return np.tensordot(x.astype(np.int64), y.astype(np.int64), axes)
    return np.tensordot(x.astype(object), y.astype(object), axes)


def _prefix_length(m: int, n: int, width: int) -> int:
    """Number of leading tuple digits to loop over so each chunk stays small."""
    L = 0
    while L < n and width * m ** (n - L + 1) > _BLOCK_LIMIT:
        L += 1
    return L


def _structured_kernel(P: np.ndarray, m: int, n: int, seed: int) -> Subspace:
    """Exact kernel of the f-Leibniz system without materializing it.

    The system has one row per (tuple t, output r). A random integer
    combination of all rows is formed chunk by chunk with tensor
    contractions against the product tensor; its kernel contains the true
    kernel. Every original row is then checked against the candidate
    kernel (again by contraction) and violated rows are added explicitly,
    so the answer is exact for every seed.
    """
    ncols = m * m
    k = ncols + 8
    Pt = P.reshape((m,) * n + (m,))
    pmax = _tensor.absmax(P)
    L = _prefix_length(m, n, k)
    rest = n - L
    rest_axes = list(range(1, rest + 1))
    bound = 8 * pmax * m ** (n + 1) * (n + 1)
    rng = np.random.default_rng(seed)
    acc1 = np.zeros((k, m, m), dtype=object)  # [k, r, a]
    acc2 = np.zeros((k, m, m), dtype=object)  # [k, b, a]
    for prefix in itertools.product(range(m), repeat=L):
        W = rng.integers(-8, 9, size=(k,) + (m,) * rest + (m,))
        Pc = Pt[prefix]
        acc1 += _contract(W, Pc, (rest_axes, list(range(rest))), bound)
        for j in range(L):
            Pj = np.stack([Pt[prefix[:j] + (a,) + prefix[j + 1:]] for a in range(m)])
            got = _contract(W, Pj, (list(range(1, rest + 2)), list(range(1, rest + 2))), bound)
            acc2[:, prefix[j], :] += got
        for jj in range(rest):
            wa = [ax for ax in range(1, rest + 2) if ax != 1 + jj]
            pa = [ax for ax in range(rest + 1) if ax != jj]
            acc2 += _contract(W, Pc, (wa, pa), bound)
    system = np.zeros((k, ncols), dtype=object)
    system += acc1.reshape(k, ncols)
    system -= np.transpose(acc2, (0, 2, 1)).reshape(k, ncols)
    rows = [list(map(int, r)) for r in system]
    while True:
        kernel = _integer_nullspace(rows, ncols)
        if kernel.is_zero():
            return kernel
        violated = _violated_rows(Pt, m, n, L, integer_rows(kernel.basis).T, pmax)
        if not violated:
            return kernel
        rows.extend(violated)


def _violated_rows(Pt: np.ndarray, m: int, n: int, L: int, K: np.ndarray, pmax: int) -> list[list[int]]:
    """Explicit constraint rows not annihilated by the columns of K (at most m*m of them)."""
    s = K.shape[1]
    rest = n - L
    bound = pmax * _tensor.absmax(K) * m * (n + 1)
    K1 = K.reshape(m, m, s)  # [r, a, s] for term 1, [a, b, s] for term 2
    found: list[list[int]] = []
    for prefix in itertools.product(range(m), repeat=L):
        Pc = Pt[prefix]  # [rest..., out]
        # term 1: sum_a P[t, a] K[r*m + a] -> [rest..., r, s]
        res = np.moveaxis(_contract(Pc, K1, ([rest], [1]), bound), rest, rest)
        res = res.astype(object) if res.dtype == object else res
        for j in range(L):
            Pj = np.stack([Pt[prefix[:j] + (a,) + prefix[j + 1:]] for a in range(m)])  # [a, rest..., r]
            res = res - _contract(Pj, K1[:, prefix[j], :], ([0], [0]), bound)
        for jj in range(rest):
            # sum_a Pc[.., a (axis jj), .., r] K[a, b, s] -> put b back at axis jj
            got = _contract(Pc, K1, ([jj], [0]), bound)  # [rest without jj..., r, b, s]
            got = np.moveaxis(got, rest, jj)
            res = res - got
        bad = np.argwhere(np.any(res != 0, axis=-1))
        for idx in bad[: m * m - len(found)]:
            idx = tuple(int(i) for i in idx)
            t, r = prefix + idx[:-1], idx[-1]
            found.append(_explicit_row(Pt, m, n, t, r))
        if len(found) >= m * m:
            break
    return found


@lru_cache(maxsize=256)
def _f_space(A: Algebra, shape_key: str, seed: int) -> Subspace:
    f = parse(shape_key)
    n = size(f)
    P = _product_tensor(A, f)
    m = A.dim
    if not P.any():
        return Subspace.full(m * m)
    if P.shape[0] * m <= 3 * m * m:
        return kernel_from_row_blocks(lambda: _constraint_blocks(P, m, n), m * m, seed=seed)
    return _structured_kernel(P, m, n, seed)


def f_lder_space(A: Algebra, f: BracketTree, seed: int = 0) -> DerivationSpace:
    """All f-Leibniz-derivations of A."""
    n = size(f)
    check_order(A, n)
    return DerivationSpace(A.dim, n, f, _f_space(A, compact(f), seed), A)


def der_space(A: Algebra) -> DerivationSpace:
    return f_lder_space(A, left_comb(2))


def left_lder_space(A: Algebra, n: int, seed: int = 0) -> DerivationSpace:
    """Left Leibniz-derivations of order n (left-comb arrangement)."""
    check_order(A, n)
    S = f_lder_space(A, left_comb(n), seed)
    return DerivationSpace(A.dim, n, "left", S.space, A)


def _restrict(A: Algebra, f: BracketTree, space: Subspace) -> Subspace:
    """The part of ``space`` satisfying the f-rule.

    Only constraint rows violated by the current basis are ever formed, so
    when most of ``space`` already satisfies f this costs one residual pass.
    """
    P = _product_tensor(A, f)
    if not P.any() or space.is_zero():
        return space
    m, n = A.dim, size(f)
    Pt = P.reshape((m,) * n + (m,))
    pmax = _tensor.absmax(P)
    rows: list[list[int]] = []
    cur = space
    while not cur.is_zero():
        K = integer_rows(cur.basis).T
        L = _prefix_length(m, n, K.shape[1])
        violated = _violated_rows(Pt, m, n, L, K, pmax)
        if not violated:
            break
        rows.extend(violated)
        cur = space & _integer_nullspace(rows, m * m)
    return cur


def lder_space(A: Algebra, n: int, seed: int = 0) -> DerivationSpace:
    """Leibniz-derivations of order n: the intersection over every arrangement.

    The left-comb space is solved in full; each further arrangement only
    cuts down the running intersection.
    """
    check_order(A, n)
    return DerivationSpace(A.dim, n, "all", _all_space(A, n, seed), A)


@lru_cache(maxsize=128)
def _all_space(A: Algebra, n: int, seed: int) -> Subspace:
    first, *others = sorted(enumerate_arrangements(n), key=lambda f: f != left_comb(n))
    space = f_lder_space(A, first, seed).space
    for f in others:
        space = _restrict(A, f, space)
    return space


def space_for(A: Algebra, n: int, arrangement, seed: int = 0) -> DerivationSpace:
    """Dispatch on ``"left"``, ``"all"`` or a bracket tree / grammar string."""
    if arrangement == "left":
        return left_lder_space(A, n, seed)
    if arrangement == "all":
        return lder_space(A, n, seed)
    f = parse(arrangement) if isinstance(arrangement, str) else arrangement
    if size(f) != n:
        raise CapExceededError(f"arrangement has {size(f)} leaves but order {n} was requested")
    return f_lder_space(A, f, seed)


# --------------------------------------------------------------------------
# Direct membership check


def _int_map(d) -> tuple[np.ndarray, int]:
    """Scaled integer copy of D transposed: row i is the image of e_i."""
    D = as_matrix(d)
    arr, scale = _tensor.int_matrix([list(D.column(i)) for i in range(D.cols)])
    return arr, scale


def leibniz_witness(A: Algebra, f: BracketTree, d):
    """First basis tuple where d fails the f-Leibniz rule, or None."""
    D = as_matrix(d)
    if D.shape != (A.dim, A.dim):
        raise PreconditionError(f"expected a {A.dim}x{A.dim} map")
    n = size(f)
    T, _ = A.int_tensor
    images, _ = _int_map(D)
    names = [f"v{k}" for k in range(n)]
    tree = labelled(f, names)
    plain = _tensor.multilinear_eval([(1, tree)], names, T)
    lhs = np.tensordot(plain, images, axes=([n], [0]))
    rhs = None
    for j in range(n):
        term = _tensor.multilinear_eval([(1, tree)], names, T, {names[j]: images})
        rhs = term if rhs is None else rhs + term
    return _tensor.first_nonzero(lhs - rhs)


def is_f_leibniz_derivation(A: Algebra, f: BracketTree, d) -> bool:
    return leibniz_witness(A, f, d) is None


def is_leibniz_derivation(A: Algebra, n: int, d, arrangement="all") -> bool:
    """d satisfies the rule for the left comb (``"left"``) or every arrangement (``"all"``)."""
    trees = [left_comb(n)] if arrangement == "left" else enumerate_arrangements(n)
    return all(is_f_leibniz_derivation(A, f, d) for f in trees)


# --------------------------------------------------------------------------
# Invertible witnesses


@dataclass(frozen=True)
class InvertibleWitness:
    """Outcome of an invertibility search or construction.

    ``certificate`` is ``explicit-inverse``, ``none-found`` (probabilistic,
    ``trials`` samples) or ``certified-none`` (with ``reason``).
    """

    map: Matrix | None
    order: int
    certificate: str
    trials: int = 0
    reason: str = ""
    inverse: Matrix | None = None
    determinant: Fraction | None = None
    branch: str = ""

    @property
    def found(self) -> bool:
        return self.certificate == "explicit-inverse"


def skew_family(mats: list[Matrix], gram: Matrix) -> bool:
    """Every map is skew for the nondegenerate form ``gram`` on an odd-dimensional space.

    X^T G + G X = 0 with G invertible gives det X = det(-X) = -det X in odd
    dimension, so no element of the span can be invertible.
    """
    m = gram.rows
    if m % 2 == 0 or rank(gram) != m:
        return False
    return all((X.T @ gram + gram @ X).is_zero() for X in mats)


def skew_certificate(A: Algebra, mats: list[Matrix]) -> bool:
    """The skew-family certificate for the Killing form of an anticommutative algebra."""
    if not is_anticommutative(A):
        return False
    return skew_family(mats, killing_form(A).gram)


def common_kernel(A: Algebra, mats: list[Matrix]) -> Subspace:
    """Vectors killed by every map in the list (hence by their whole span)."""
    rows = [row for X in mats for row in X.entries]
    return nullspace(Matrix(rows, A.dim)) if rows else Subspace.full(A.dim)


def contains_invertible(S: DerivationSpace, seed: int = 0, trials: int = 64, coeff_bound: int = 5) -> InvertibleWitness:
    """Random search for an invertible element, then certificates of absence."""
    if S.space.is_zero():
        return InvertibleWitness(None, S.order, "none-found", trials=0)
    mats = S.matrices()
    rng = random.Random(seed)
    m = S.algebra_dim
    for _ in range(trials):
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in mats]
        if not any(coeffs):
            continue
        X = Matrix.zeros(m)
        for c, B in zip(coeffs, mats):
            if c:
                X = X + B.scale(c)
        det, inv = det_and_inverse(X)
        if inv is not None:
            return InvertibleWitness(X, S.order, "explicit-inverse", inverse=inv, determinant=det)
    A = S.algebra
    if A is not None:
        if skew_certificate(A, mats):
            return InvertibleWitness(None, S.order, "certified-none", trials, "odd-dimensional skew family")
        if not common_kernel(A, mats).is_zero():
            return InvertibleWitness(None, S.order, "certified-none", trials, "common kernel")
    return InvertibleWitness(None, S.order, "none-found", trials)


def construct_invertible_lder(A: Algebra) -> InvertibleWitness:
    """Invertible Leibniz-derivation of a nilpotent algebra, always verified.

    With A^n = 0 and q = ceil(n/2), the candidate acts by 1 on a complement
    of A^q and by q on A^q. It is checked against every arrangement of
    length q; if it fails (or q < 2) the identity, which is a Leibniz-
    derivation of order n whenever A^n = 0, is returned instead.
    """
    n = chain(A, "power").index
    if n is None:
        raise VarietyError(f"{A.name} is not nilpotent")
    q = -(-n // 2)
    if q >= 2:
        Aq = power_terms(A, q)[-1]
        m = A.dim
        cols = [tuple(Fraction(int(i == k)) for i in range(m)) for k in Aq.complement_indices()]
        eig = [Fraction(1)] * len(cols)
        cols += list(Aq.basis)
        eig += [Fraction(q)] * Aq.dim
        P = Matrix.from_columns(cols, m)
        _, Pinv = det_and_inverse(P)
        D = P @ Matrix.diag(eig) @ Pinv
        if is_leibniz_derivation(A, q, D):
            det, inv = det_and_inverse(D)
            return InvertibleWitness(D, q, "explicit-inverse", inverse=inv, determinant=det, branch="filtration")
    ident = Matrix.identity(A.dim)
    if not is_leibniz_derivation(A, n, ident):
        raise PreconditionError(f"identity is not a Leibniz-derivation of order {n} on {A.name}")
    return InvertibleWitness(ident, n, "explicit-inverse", inverse=ident, determinant=Fraction(1), branch="identity")


# --------------------------------------------------------------------------
# Structural checks


def _compositions(k: int, n: int):
    """All (i_1, ..., i_n) of non-negative integers summing to k."""
    for cut in itertools.combinations(range(k + n - 1), n - 1):
        prev = -1
        parts = []
        for c in cut + (k + n - 1,):
            parts.append(c - prev - 1)
            prev = c
        yield tuple(parts)


def verify_leibniz_rule(A: Algebra, d, n: int, k: int) -> bool:
    """d^k([x1..xn]) = sum over i1+..+in = k of k!/(i1!..in!) [d^i1 x1, .., d^in xn] (left comb)."""
    if not 1 <= k <= 4:
        raise CapExceededError(f"power k={k} outside 1..4")
    f = left_comb(n)
    if not is_f_leibniz_derivation(A, f, d):
        raise PreconditionError("map is not a left Leibniz-derivation of the requested order")
    D = as_matrix(d)
    T, _ = A.int_tensor
    images, _ = _int_map(D)
    powers = [np.eye(A.dim, dtype=object)]
    for _ in range(k):
        powers.append(powers[-1].dot(images))
    names = [f"v{j}" for j in range(n)]
    tree = labelled(f, names)
    plain = _tensor.multilinear_eval([(1, tree)], names, T)
    lhs = np.tensordot(plain, powers[k], axes=([n], [0]))
    rhs = 0
    for parts in _compositions(k, n):
        coef = math.factorial(k)
        for p in parts:
            coef //= math.factorial(p)
        term = _tensor.multilinear_eval([(coef, tree)], names, T, {names[j]: powers[p] for j, p in enumerate(parts)})
        rhs = rhs + term
    return _tensor.first_nonzero(lhs - rhs) is None


def check_order_monotonicity(A: Algebra, s: int, t: int, arrangement: str = "left") -> bool:
    """The order-(s+1) space lies in the order-(t+1) space when s divides t."""
    if s < 1 or t % s:
        raise PreconditionError(f"{s} does not divide {t}")
    small = space_for(A, s + 1, arrangement)
    big = space_for(A, t + 1, arrangement)
    return big.space.contains_subspace(small.space)


def check_commutator_closure(S: DerivationSpace) -> bool:
    mats = S.matrices()
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if mats[i].commutator(mats[j]).flat() not in S.space:
                return False
    return True


def radical_invariance_check(A: Algebra, R: Subspace, S: DerivationSpace) -> bool:
    """d(R) inside R for every basis element d of S."""
    if not is_ideal(A, R):
        raise PreconditionError("the supplied subspace is not an ideal")
    return all(D.apply(r) in R for D in S.matrices() for r in R.basis)


def eigenspace_product_check(A: Algebra, d, n: int) -> bool:
    """Left-comb products of generalized eigenspaces land in the eigenspace of the sum."""
    D = as_matrix(d)
    if not is_f_leibniz_derivation(A, left_comb(n), D):
        raise PreconditionError("map is not a left Leibniz-derivation of the requested order")
    spectrum = rational_eigenvalues(D)
    if not spectrum.complete:
        raise SpectrumError("irrational spectrum")
    spaces = {lam: generalized_eigenspace(D, lam) for lam, _ in spectrum.eigenvalues}
    zero = Subspace.zero(A.dim)
    for combo in itertools.product(spaces, repeat=n):
        prod = spaces[combo[0]]
        for lam in combo[1:]:
            prod = subspace_product(A, prod, spaces[lam])
        target = spaces.get(sum(combo), zero)
        if not target.contains_subspace(prod):
            return False
    return True

