"""Named algebras with their known facts, and seeded random nilpotent algebras."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from .algebra import Algebra
from .exceptions import CapExceededError, LderLabError, PreconditionError
from .linalg import ZERO, Matrix, Subspace, kernel_from_row_blocks, to_fraction
from .nary import NAryAlgebra
from .varieties import plus_algebra, satisfies


@dataclass(frozen=True)
class Fact:
    """A checkable claim about a catalog algebra.

    ``kind`` selects the check; ``source`` is ``published`` or ``derived``.
    A claim known to disagree with computation carries ``expected=False``
    and a ``note`` describing the discrepancy.
    """

    kind: str
    value: Any
    source: str = "derived"
    note: str = ""
    expected: bool = True


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: Any
    known_facts: tuple = ()
    extras: dict = field(default_factory=dict, compare=False)


def _anti(pairs: dict) -> dict:
    """Complete {(x, y): {z: c}} to an anticommutative product."""
    out = {}
    for (x, y), val in pairs.items():
        out[(x, y)] = dict(val)
        out[(y, x)] = {k: -to_fraction(c) for k, c in val.items()}
    return out


# --------------------------------------------------------------------------
# Right alternative example


DOROFEEV_LABELS = ("a", "b", "c", "d", "e")


def dorofeev_algebra() -> Algebra:
    """ab = -ba = ae = -ea = db = -bd = -c, ac = d, bc = e."""
    minus_c = {"c": -1}
    plus_c = {"c": 1}
    products = {
        ("a", "b"): minus_c, ("b", "a"): plus_c,
        ("a", "e"): minus_c, ("e", "a"): plus_c,
        ("d", "b"): minus_c, ("b", "d"): plus_c,
        ("a", "c"): {"d": 1}, ("b", "c"): {"e": 1},
    }
    return Algebra.from_products(5, products, DOROFEEV_LABELS, "dorofeev")


def dorofeev_derivation(aa, ab, ad, ae, ba, bd, be) -> Matrix:
    """The seven-parameter derivation family; column j is the image of basis vector j.

    The (e, e) entry is -aa + ad + be.
    """
    aa, ab, ad, ae, ba, bd, be = (to_fraction(x) for x in (aa, ab, ad, ae, ba, bd, be))
    cols = [
        (aa, ab, ZERO, ad, ae),
        (ba, -aa, ZERO, bd, be),
        (ZERO, ZERO, ad + be, ZERO, ZERO),
        (ZERO, ZERO, ZERO, aa + ad + be, ab),
        (ZERO, ZERO, ZERO, ba, -aa + ad + be),
    ]
    return Matrix.from_columns(cols, 5)


def dorofeev_phi() -> Matrix:
    """phi(a) = a + d, phi(b) = -b + e, phi(c) = 2c, phi(d) = 3d, phi(e) = e."""
    return dorofeev_derivation(1, 0, 1, 0, 0, 0, 1)


def dorofeev() -> CatalogEntry:
    A = dorofeev_algebra()
    facts = (
        Fact("variety", ("right_alternative", True), "published"),
        Fact("variety", ("minus_one_one", False)),
        Fact("nilpotent", False, "published"),
        Fact("chain", ("power", (5, 3, 3))),
        Fact("chain", ("right_power", (5, 3, 1, 0))),
        Fact(
            "right_nilpotency_index", 3, "published",
            "the right power chain first vanishes at step 4: (ac)b = db = -c", expected=False,
        ),
        Fact("right_nilpotency_index", 4),
        Fact("der_dim", 7, "published"),
        Fact("derivation", ("phi", dorofeev_phi()), "published"),
        Fact("determinant", ("phi", Fraction(-6))),
        Fact(
            "derivation_family", "dorofeev_derivation", "published",
            "the printed (e, e) entry names an undefined parameter; read as -aa + ad + be",
        ),
        Fact(
            "identity_left_order", 3, "published",
            "the identity is a left Leibniz-derivation of order 4, not 3", expected=False,
        ),
        Fact("identity_left_order", 4),
    )
    return CatalogEntry("dorofeev", A, facts, {"phi": dorofeev_phi(), "family": dorofeev_derivation})


# --------------------------------------------------------------------------
# Octonions and M7


OCTONION_LABELS = ("1", "i", "j", "k", "l", "il", "jl", "kl")


def _cd_mul(x, y, gammas):
    """Cayley-Dickson product (a,b)(c,d) = (ac + g conj(d) b, d a + b conj(c))."""
    if not gammas:
        return [x[0] * y[0]]
    h = len(x) // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    g, rest = gammas[-1], gammas[:-1]
    first = [p + g * q for p, q in zip(_cd_mul(a, c, rest), _cd_mul(_cd_conj(d), b, rest))]
    second = [p + q for p, q in zip(_cd_mul(d, a, rest), _cd_mul(b, _cd_conj(c), rest))]
    return first + second


def _cd_conj(x):
    if len(x) == 1:
        return list(x)
    h = len(x) // 2
    return _cd_conj(x[:h]) + [-v for v in x[h:]]


def cayley_dickson(gammas, labels=None, name: str = "cayley_dickson") -> Algebra:
    """Doubling of Q once per parameter; ``gammas[0]`` is used first."""
    m = 2 ** len(gammas)
    gs = [to_fraction(g) for g in gammas]
    basis = [[Fraction(int(i == k)) for i in range(m)] for k in range(m)]
    table = tuple(tuple(tuple(_cd_mul(basis[i], basis[j], gs)) for j in range(m)) for i in range(m))
    return Algebra(table, tuple(labels) if labels else (), name)


def cayley_dickson_split() -> Algebra:
    """Split octonions: doubling parameters (-1, -1, +1)."""
    return cayley_dickson((-1, -1, 1), OCTONION_LABELS, "split_octonions")


def octonions() -> Algebra:
    """Division octonions: doubling parameters (-1, -1, -1)."""
    return cayley_dickson((-1, -1, -1), OCTONION_LABELS, "octonions")


def m7() -> Algebra:
    """x * y = [x, y] / 2 on the trace-zero split octonions, scalar part dropped."""
    O = cayley_dickson_split()
    half = Fraction(1, 2)
    idx = range(1, 8)
    table = tuple(
        tuple(tuple(half * (O.table[i][j][k] - O.table[j][i][k]) for k in idx) for j in idx) for i in idx
    )
    return Algebra(table, OCTONION_LABELS[1:], "m7")


# --------------------------------------------------------------------------
# Small standard algebras


def sl2() -> Algebra:
    """[h, e] = 2e, [h, f] = -2f, [e, f] = h on the basis (e, h, f)."""
    return Algebra.from_products(
        3, _anti({("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}}), ("e", "h", "f"), "sl2"
    )


def heisenberg() -> Algebra:
    """[x, y] = z."""
    return Algebra.from_products(3, _anti({("x", "y"): {"z": 1}}), ("x", "y", "z"), "heisenberg")


def mat2() -> Algebra:
    """Full 2x2 matrix algebra on the matrix units (E11, E12, E21, E22)."""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    products = {}
    for p, (i, j) in enumerate(units):
        for q, (k, l) in enumerate(units):
            if j == k:
                products[(p, q)] = {units.index((i, l)): 1}
    return Algebra.from_products(4, products, ("E11", "E12", "E21", "E22"), "mat2")


def abelian(m: int) -> Algebra:
    """Zero product in dimension m, viewed as an abelian Lie algebra."""
    return Algebra.from_products(m, {}, None, f"abelian{m}")


def zero_algebra(m: int) -> Algebra:
    return Algebra.from_products(m, {}, None, f"zero{m}")


def sl2_semidirect_v2() -> Algebra:
    """sl2 acting on its 2-dimensional module V = span(v1, v2)."""
    pairs = {
        ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1},
        ("e", "v2"): {"v1": 1},
        ("h", "v1"): {"v1": 1}, ("h", "v2"): {"v2": -1},
        ("f", "v1"): {"v2": 1},
    }
    return Algebra.from_products(5, _anti(pairs), ("e", "h", "f", "v1", "v2"), "sl2_semidirect_v2")


def zinbiel2() -> Algebra:
    """e1 e1 = e2."""
    return Algebra.from_products(2, {(0, 0): {1: 1}}, None, "zinbiel2")


def zinbiel_chain(k: int) -> Algebra:
    """e_i e_j = C(i+j-1, j) e_{i+j} for i + j <= k: one-generator Zinbiel algebra truncated at degree k."""
    products = {}
    for i in range(1, k + 1):
        for j in range(1, k + 1 - i):
            products[(i - 1, j - 1)] = {i + j - 1: math.comb(i + j - 1, j)}
    return Algebra.from_products(k, products, None, f"zinbiel_chain{k}")


def nil_jordan() -> Algebra:
    """t Q[t]/(t^4): basis t, t^2, t^3, commutative and associative."""
    products = {(0, 0): {1: 1}, (0, 1): {2: 1}, (1, 0): {2: 1}}
    return Algebra.from_products(3, products, ("t", "t2", "t3"), "nil_jordan")


def plus_mat2() -> Algebra:
    return plus_algebra(mat2()).renamed("plus_mat2")


def _subspace(vectors, m) -> Subspace:
    return Subspace.span(vectors, m)


def _unit(m, i):
    return tuple(Fraction(int(k == i)) for k in range(m))


def standard_entries() -> list[CatalogEntry]:
    entries = [
        CatalogEntry("sl2", sl2(), (
            Fact("variety", ("lie", True)),
            Fact("nilpotent", False),
            Fact("der_dim", 3),
            Fact("killing", ("h", "h", Fraction(8))),
            Fact("radical_malcev", _subspace([], 3)),
        )),
        CatalogEntry("heisenberg", heisenberg(), (
            Fact("variety", ("lie", True)),
            Fact("nilpotency_index", 3),
        )),
        CatalogEntry("mat2", mat2(), (
            Fact("variety", ("associative", True)),
            Fact("nilpotent", False),
            Fact("unital", True),
            Fact("multiplication_algebra_dim", 16),
        )),
        CatalogEntry("abelian3", abelian(3), (
            Fact("variety", ("lie", True)),
            Fact("nilpotency_index", 2),
        )),
        CatalogEntry("zero4", zero_algebra(4), (Fact("nilpotency_index", 2),)),
        CatalogEntry("sl2_semidirect_v2", sl2_semidirect_v2(), (
            Fact("variety", ("lie", True)),
            Fact("radical_malcev", _subspace([_unit(5, 3), _unit(5, 4)], 5)),
        )),
        CatalogEntry("plus_mat2", plus_mat2(), (
            Fact("variety", ("jordan", True)),
            Fact("nilpotent", False),
            Fact("unital", True),
            Fact("radical_jordan", _subspace([], 4)),
        )),
        CatalogEntry("zinbiel2", zinbiel2(), (
            Fact("variety", ("zinbiel", True)),
            Fact("nilpotency_index", 3),
        )),
        CatalogEntry("zinbiel_chain4", zinbiel_chain(4), (
            Fact("variety", ("zinbiel", True)),
            Fact("nilpotency_index", 5),
        )),
        CatalogEntry("nil_jordan", nil_jordan(), (
            Fact("variety", ("jordan", True)),
            Fact("nilpotency_index", 4),
            Fact("radical_jordan", Subspace.full(3)),
        )),
    ]
    return entries


def m7_entry() -> CatalogEntry:
    return CatalogEntry("m7", m7(), (
        Fact("variety", ("malcev", True), "published"),
        Fact("variety", ("lie", False), "published"),
        Fact("lie_center_dim", 0, "published"),
        Fact("killing_nondegenerate", True),
        Fact("der_dim", 14),
    ))


def split_octonion_entry() -> CatalogEntry:
    return CatalogEntry("split_octonions", cayley_dickson_split(), (
        Fact("variety", ("associative", False)),
        Fact("variety", ("right_alternative", True)),
        Fact("variety", ("flexible", True)),
        Fact("unital", True),
    ))


# --------------------------------------------------------------------------
# n-ary examples


def _check_n(n: int):
    if not 3 <= n <= 6:
        raise CapExceededError(f"n must lie in 3..6, got {n}")


def filippov_simple_algebra(n: int) -> NAryAlgebra:
    """D_{n+1}: [e_1, .., e_i omitted, .., e_{n+1}] = (-1)^(n+i+1) e_i (1-based i)."""
    _check_n(n)
    m = n + 1
    entries = {}
    for i in range(1, m + 1):
        args = tuple(k for k in range(m) if k != i - 1)
        val = [ZERO] * m
        val[i - 1] = Fraction((-1) ** (n + i + 1))
        entries[args] = tuple(val)
    return NAryAlgebra(n, m, entries, True, tuple(f"e{k + 1}" for k in range(m)), f"D{m}")


def filippov_derivation(n: int) -> Matrix:
    """sum (e_{i,i+1} - e_{i+1,i}) over odd i; plus e_{1,n+1} - e_{n+1,1} when n is even."""
    _check_n(n)
    m = n + 1
    rows = [[ZERO] * m for _ in range(m)]
    for i in range(0, m - 1, 2):
        rows[i][i + 1] += 1
        rows[i + 1][i] -= 1
    if n % 2 == 0:
        rows[0][m - 1] += 1
        rows[m - 1][0] -= 1
    return Matrix(rows)


def filippov_simple(n: int) -> CatalogEntry:
    B = filippov_simple_algebra(n)
    D = filippov_derivation(n)
    facts = [
        Fact("filippov", True, "published"),
        Fact("nary_derivation", ("printed", D), "published"),
    ]
    if n % 2 == 0:
        facts.append(Fact(
            "invertible", ("printed", True), "published",
            "the printed matrix is skew-symmetric of odd order n+1, so its determinant vanishes",
            expected=False,
        ))
    else:
        facts.append(Fact("invertible", ("printed", True), "published"))
    return CatalogEntry(f"D{n + 1}", B, tuple(facts), {"derivation": D})


def williams_algebra(n: int) -> NAryAlgebra:
    """[x1, .., xn] = x2 on the basis tuple (1..n), anticommutative."""
    _check_n(n)
    val = tuple(Fraction(int(k == 1)) for k in range(n))
    return NAryAlgebra(n, n, {tuple(range(n)): val}, True, tuple(f"x{k + 1}" for k in range(n)), f"williams{n}")


def williams_corrected(n: int) -> Matrix:
    """D(x1) = x1, D(x2) = x2, D(x3) = D(x4) = -x/2, D(xj) = (-1)^j xj for j > 4."""
    _check_n(n)
    diag = [Fraction(1), Fraction(1), Fraction(-1, 2), Fraction(-1, 2)][:n]
    diag += [Fraction((-1) ** j) for j in range(5, n + 1)]
    return Matrix.diag(diag)


def williams_original(n: int) -> Matrix:
    """D(x1) = x1, D(x2) = x2, D(xj) = (-1)^j xj for j >= 3."""
    _check_n(n)
    return Matrix.diag([Fraction(1), Fraction(1)] + [Fraction((-1) ** j) for j in range(3, n + 1)])


def williams(n: int) -> CatalogEntry:
    B = williams_algebra(n)
    corrected = williams_corrected(n)
    original = williams_original(n)
    facts = (
        Fact("nary_derivation", ("corrected", corrected), "published",
             "" if n % 2 == 0 else "the corrected map fails for odd n: the eigenvalues of x1, x3, .., xn do not sum to zero",
             expected=n % 2 == 0),
        Fact("nary_derivation", ("original", original), "derived",
             "reconstructed diagonal assignment; a derivation exactly when n is odd",
             expected=n % 2 == 1),
        Fact("filippov", True),
    )
    return CatalogEntry(f"williams{n}", B, facts, {"corrected": corrected, "original": original})


# --------------------------------------------------------------------------
# Registry


BINARY_BUILDERS: dict[str, Callable[[], Algebra]] = {
    "dorofeev": dorofeev_algebra,
    "m7": m7,
    "split_octonions": cayley_dickson_split,
    "octonions": octonions,
    "sl2": sl2,
    "heisenberg": heisenberg,
    "mat2": mat2,
    "abelian3": lambda: abelian(3),
    "zero4": lambda: zero_algebra(4),
    "sl2_semidirect_v2": sl2_semidirect_v2,
    "plus_mat2": plus_mat2,
    "zinbiel2": zinbiel2,
    "zinbiel_chain4": lambda: zinbiel_chain(4),
    "nil_jordan": nil_jordan,
}


def binary_names() -> list[str]:
    return list(BINARY_BUILDERS)


def get_algebra(name: str):
    """Binary or n-ary catalog algebra by name (``D4``, ``williams5`` and so on included)."""
    if name in BINARY_BUILDERS:
        return BINARY_BUILDERS[name]()
    if name.startswith("D") and name[1:].isdigit():
        return filippov_simple_algebra(int(name[1:]) - 1)
    if name.startswith("williams") and name[8:].isdigit():
        return williams_algebra(int(name[8:]))
    raise KeyError(f"unknown catalog algebra {name!r}")


def all_entries() -> list[CatalogEntry]:
    out = [dorofeev(), m7_entry(), split_octonion_entry()] + standard_entries()
    out += [filippov_simple(n) for n in (3, 4)]
    out += [williams(n) for n in (3, 4, 5, 6)]
    return out


def binary_catalog() -> list[Algebra]:
    return [build() for build in BINARY_BUILDERS.values()]


# --------------------------------------------------------------------------
# Fact checking


def check_fact(algebra, fact: Fact) -> bool:
    """Whether the computed value agrees with the claim (before ``expected`` is applied)."""
    from . import algebra as core
    from .leibniz import der_space, is_f_leibniz_derivation, is_leibniz_derivation
    from .linalg import det
    from .nary import filippov_check, is_nary_derivation

    kind, value = fact.kind, fact.value
    if kind == "variety":
        tag, holds = value
        return satisfies(algebra, tag)[0] == holds
    if kind == "nilpotent":
        return core.is_nilpotent(algebra) == value
    if kind == "nilpotency_index":
        return core.chain(algebra, "power").index == value
    if kind == "right_nilpotency_index":
        return core.chain(algebra, "right_power").index == value
    if kind == "chain":
        which, dims = value
        return core.chain(algebra, which).dims == tuple(dims)
    if kind == "der_dim":
        return der_space(algebra).dim == value
    if kind == "derivation":
        from .bracketings import left_comb

        return is_f_leibniz_derivation(algebra, left_comb(2), value[1])
    if kind == "determinant":
        return det(dorofeev_phi()) == value[1]
    if kind == "derivation_family":
        space = der_space(algebra).space
        maps = [dorofeev_derivation(*(int(i == k) for i in range(7))) for k in range(7)]
        return Subspace.span([M.flat() for M in maps], 25) == space
    if kind == "identity_left_order":
        from .bracketings import left_comb

        ident = Matrix.identity(algebra.dim)
        ok = [n for n in range(2, 7) if is_f_leibniz_derivation(algebra, left_comb(n), ident)]
        return bool(ok) and ok[0] == value
    if kind == "killing":
        x, y, expected = value
        chi = core.killing_form(algebra)
        pos = algebra.basis_labels
        return chi.gram[pos.index(x), pos.index(y)] == expected
    if kind == "radical_malcev":
        return core.form_radical_malcev(algebra) == value
    if kind == "radical_jordan":
        return core.form_radical_jordan(algebra) == value
    if kind == "unital":
        return (find_unit(algebra) is not None) == value
    if kind == "multiplication_algebra_dim":
        return core.multiplication_algebra(algebra).dim == value
    if kind == "lie_center_dim":
        return core.lie_center(algebra).dim == value
    if kind == "killing_nondegenerate":
        return core.killing_form(algebra).is_nondegenerate() == value
    if kind == "filippov":
        return filippov_check(algebra) == value
    if kind == "nary_derivation":
        return is_nary_derivation(algebra, value[1])
    if kind == "invertible":
        return (det(filippov_derivation(algebra.arity)) != 0) == value[1]
    if kind == "leibniz_order":
        n, d = value
        return is_leibniz_derivation(algebra, n, d)
    raise ValueError(f"unknown fact kind {kind!r}")


def verify_entry(entry: CatalogEntry) -> list[tuple[Fact, bool]]:
    """Each fact with whether its outcome matches the ``expected`` flag."""
    return [(fact, check_fact(entry.algebra, fact) == fact.expected) for fact in entry.known_facts]


def find_unit(A: Algebra):
    """Two-sided unit of A, or None."""
    m = A.dim
    # u e_j = e_j and e_j u = e_j are linear in u.
    rows, rhs = [], []
    for j in range(m):
        for k in range(m):
            rows.append([A.table[i][j][k] for i in range(m)])
            rhs.append(Fraction(int(j == k)))
            rows.append([A.table[j][i][k] for i in range(m)])
            rhs.append(Fraction(int(j == k)))
    from .linalg import _rref_rows

    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = _rref_rows(aug, m + 1)
    if m in pivots:
        return None
    u = [ZERO] * m
    for row, p in zip(reduced, pivots):
        u[p] = row[m]
    return tuple(u)


# --------------------------------------------------------------------------
# Random algebras


NILPOTENT_CLASSES = ("anticommutative", "commutative_jordan", "associative")


def _levels(rng: random.Random, dim: int, index: int) -> list[int]:
    """Degree of each basis vector: a random composition of dim into index-1 positive parts."""
    parts = index - 1
    cuts = sorted(rng.sample(range(1, dim), parts - 1)) if parts > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [dim])]
    return [lvl + 1 for lvl, s in enumerate(sizes) for _ in range(s)]


def _solve_associative(rng, table, levels, dim):
    """Fill the degree (1,2) and (2,1) blocks so that (xy)z = x(yz) on degree-1 triples.

    With degree-1 products fixed, associativity is linear in the remaining
    blocks; a random integer point of the solution space is chosen.
    """
    ones = [i for i in range(dim) if levels[i] == 1]
    twos = [i for i in range(dim) if levels[i] == 2]
    threes = [i for i in range(dim) if levels[i] == 3]
    if not (twos and threes):
        return
    unknowns = {}
    for a in ones:
        for b in twos:
            for k in threes:
                unknowns[("R", b, a, k)] = len(unknowns)  # e_b e_a (degree 2 times degree 1)
                unknowns[("L", a, b, k)] = len(unknowns)  # e_a e_b
    rows = []
    for x in ones:
        for y in ones:
            for z in ones:
                for k in threes:
                    row = [0] * len(unknowns)
                    for b in twos:
                        c = table[x][y][b]
                        if c:
                            row[unknowns[("R", b, z, k)]] += c
                        c = table[y][z][b]
                        if c:
                            row[unknowns[("L", x, b, k)]] -= c
                    if any(row):
                        rows.append(row)
    n = len(unknowns)
    if rows:
        space = kernel_from_row_blocks(lambda: [np.array(rows, dtype=object)], n)
    else:
        space = Subspace.full(n)
    point = [ZERO] * n
    for v in space.basis:
        c = rng.randint(-2, 2)
        point = [p + c * x for p, x in zip(point, v)]
    for (kind, u, v, k), pos in unknowns.items():
        table[u][v][k] = point[pos]


def random_nilpotent(cls: str, dim: int, index: int, seed: int, retries: int = 50) -> Algebra:
    """Graded nilpotent algebra V1 + ... + V_{index-1}, filtered by the class identity.

    Products send V_i x V_j into V_{i+j} (zero once i + j reaches ``index``),
    so A^index = 0. For index <= 4 the degree-4 Jordan and Malcev identities
    vanish on degree grounds; the filter still checks them.
    """
    if cls not in NILPOTENT_CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    if not 1 <= dim <= 6 or not 2 <= index <= 4:
        raise CapExceededError("random_nilpotent needs dim <= 6 and 2 <= index <= 4")
    if dim < index - 1:
        raise PreconditionError(f"dimension {dim} too small for index {index}")
    rng = random.Random(f"{cls}:{dim}:{index}:{seed}")
    tag = {"anticommutative": "malcev", "commutative_jordan": "jordan", "associative": "associative"}[cls]
    for _ in range(retries):
        levels = _levels(rng, dim, index)
        by_level: dict[int, list[int]] = {}
        for i, lvl in enumerate(levels):
            by_level.setdefault(lvl, []).append(i)
        table = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        density = rng.choice((0.4, 0.6, 0.8))
        for i, j in itertools.product(range(dim), repeat=2):
            target = by_level.get(levels[i] + levels[j], [])
            if cls == "associative" and levels[i] + levels[j] > 2:
                continue
            for k in target:
                if cls in ("anticommutative", "commutative_jordan") and j < i:
                    continue
                if cls == "anticommutative" and i == j:
                    continue
                if rng.random() < density:
                    c = Fraction(rng.randint(-3, 3))
                    table[i][j][k] = c
                    if cls == "anticommutative":
                        table[j][i][k] = -c
                    elif cls == "commutative_jordan":
                        table[j][i][k] = c
        if cls == "associative":
            _solve_associative(rng, table, levels, dim)
        A = Algebra(tuple(tuple(tuple(v) for v in row) for row in table), (), f"{cls}_d{dim}_i{index}_s{seed}")
        if satisfies(A, tag)[0]:
            return A
    raise LderLabError(f"no {cls} algebra found after {retries} draws (seed {seed})")


def random_algebra(seed: int, dim: int = 3, profile: str = "generic") -> Algebra:
    """Seeded random algebra with small integer constants.

    ``generic`` fills about half the table; ``left_filtered`` only lets
    e_i e_j involve e_k with k > i, which makes the algebra right nilpotent
    without forcing nilpotency; ``commutative`` and ``anticommutative``
    draw the upper triangle and complete it by symmetry.
    """
    if profile not in ("generic", "left_filtered", "commutative", "anticommutative"):
        raise ValueError(f"unknown profile {profile!r}")
    rng = random.Random(f"{profile}:{dim}:{seed}")
    table = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    sign = {"commutative": 1, "anticommutative": -1}.get(profile)
    for i, j, k in itertools.product(range(dim), repeat=3):
        if profile == "left_filtered" and k <= i:
            continue
        if sign is not None and (j < i or (sign < 0 and i == j)):
            continue
        if rng.random() < 0.5:
            c = Fraction(rng.randint(-2, 2))
            table[i][j][k] = c
            if sign is not None:
                table[j][i][k] = sign * c
    return Algebra(tuple(tuple(tuple(v) for v in row) for row in table), (), f"{profile}_d{dim}_s{seed}")


def characterization_randoms() -> list[Algebra]:
    """The ten seeded random algebras used by the characterization checks."""
    out = [random_algebra(s, 3, "generic") for s in range(2)]
    out += [random_algebra(s, 3, "left_filtered") for s in range(3)]
    out += [random_algebra(s, 4, "left_filtered") for s in range(2)]
    out += [random_nilpotent(c, 4, 4, s) for s, c in enumerate(NILPOTENT_CLASSES)]
    return out
