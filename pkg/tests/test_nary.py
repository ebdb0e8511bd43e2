import itertools
from fractions import Fraction

import pytest
import sympy
from sympy.combinatorics import Permutation
from hypothesis import given
from hypothesis import strategies as st

from lderlab import catalog as cat
from lderlab.bracketings import enumerate_arrangements, evaluate
from lderlab.exceptions import DimensionError, VarietyError
from lderlab.leibniz import f_lder_space
from lderlab.linalg import Matrix, Subspace, det
from lderlab.nary import (
    NAryAlgebra,
    filippov_check,
    filippov_witness,
    from_bracketing,
    is_nary_derivation,
    is_nary_ideal,
    n_solvable_chain,
    nary_derivation_space,
    nary_product,
    nary_subspace_product,
    perturbed,
    permutation_sign,
    sheared,
)


@given(st.permutations(range(5)))
def test_permutation_sign_matches_sympy(perm):
    assert permutation_sign(perm) == Permutation(list(perm)).signature()


def test_permutation_sign_repeats():
    assert permutation_sign((0, 1, 1)) == 0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_simple_filippov_algebras(n):
    B = cat.filippov_simple_algebra(n)
    m = n + 1
    assert filippov_check(B)
    der = nary_derivation_space(B)
    assert der.dim == m * (m - 1) // 2
    for v in der.basis:
        X = Matrix.from_flat(v, m)
        assert (X + X.T).is_zero()
    assert not n_solvable_chain(B).n_solvable


def test_printed_derivations():
    for n in (3, 4):
        D = cat.filippov_derivation(n)
        assert is_nary_derivation(cat.filippov_simple_algebra(n), D)
    assert det(cat.filippov_derivation(3)) == 1
    assert det(cat.filippov_derivation(4)) == 0


def sympy_nary_derivations(B):
    m = B.dim
    syms = sympy.symbols(f"d0:{m * m}")
    D = sympy.Matrix(m, m, syms)
    basis = [sympy.eye(m)[:, i] for i in range(m)]

    def prod(args):
        out = sympy.zeros(m, 1)
        for idx in itertools.product(range(m), repeat=B.arity):
            coef = sympy.prod([args[k][idx[k]] for k in range(B.arity)])
            if coef != 0:
                val = B.basis_product(idx)
                out += coef * sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in val])
        return out

    eqs = []
    for t in itertools.product(range(m), repeat=B.arity):
        args = [basis[i] for i in t]
        lhs = D * prod(args)
        rhs = sympy.zeros(m, 1)
        for k in range(B.arity):
            rhs += prod(args[:k] + [D * args[k]] + args[k + 1:])
        eqs.extend(e for e in lhs - rhs if e != 0)
    M, _ = sympy.linear_eq_to_matrix(eqs, syms)
    return Subspace.span([[Fraction(str(x)) for x in v] for v in M.nullspace()], m * m)


def test_derivations_match_symbolic_oracle():
    for B in (cat.filippov_simple_algebra(3), cat.williams_algebra(3), cat.williams_algebra(4)):
        assert nary_derivation_space(B) == sympy_nary_derivations(B)


def test_sign_flip_stays_filippov_but_shear_breaks_it():
    B = cat.filippov_simple_algebra(3)
    key = tuple(range(3))
    assert filippov_check(perturbed(B, key, -1))
    assert filippov_witness(sheared(B, key, 0)) is not None


def test_williams_parity():
    for n in (3, 4, 5, 6):
        B = cat.williams_algebra(n)
        assert filippov_check(B)
        assert is_nary_derivation(B, cat.williams_corrected(n)) == (n % 2 == 0)
        assert is_nary_derivation(B, cat.williams_original(n)) == (n % 2 == 1)
        x2 = Subspace.span([tuple(Fraction(int(k == 1)) for k in range(n))], n)
        assert is_nary_ideal(B, x2)
        assert n_solvable_chain(B).n_solvable


def test_subspace_product_of_williams():
    B = cat.williams_algebra(3)
    full = Subspace.full(3)
    assert nary_subspace_product(B, [full] * 3) == Subspace.span([(0, 1, 0)], 3)
    e1 = Subspace.span([(1, 0, 0)], 3)
    assert nary_subspace_product(B, [e1, e1, full]).is_zero()


def test_anticommutative_storage():
    B = NAryAlgebra(3, 3, {(1, 0, 2): (0, 0, 1)}, True)
    assert B.basis_product((0, 1, 2)) == (0, 0, -1)
    assert B.basis_product((2, 1, 0)) == (0, 0, 1)
    with pytest.raises(VarietyError):
        NAryAlgebra(3, 3, {(0, 0, 1): (1, 0, 0)}, True)
    with pytest.raises(VarietyError):
        NAryAlgebra(3, 3, {(0, 1, 2): (1, 0, 0), (1, 0, 2): (1, 0, 0)}, True)
    with pytest.raises(DimensionError):
        NAryAlgebra(3, 3, {(0, 1): (1, 0, 0)})


@pytest.mark.parametrize("name", ["heisenberg", "dorofeev", "nil_jordan", "sl2"])
def test_induced_algebra_matches_arrangement_space(name):
    A = cat.get_algebra(name)
    for n in (2, 3):
        for f in enumerate_arrangements(n):
            B = from_bracketing(A, f)
            x = [A.basis_vector(i % A.dim) for i in range(n)]
            assert nary_product(B, x) == evaluate(A, f, x)
            assert f_lder_space(A, f).space == nary_derivation_space(B)


coeff = st.integers(-2, 2)


@st.composite
def ternary(draw):
    m = draw(st.integers(3, 4))
    entries = {}
    for key in itertools.combinations(range(m), 3):
        entries[key] = tuple(draw(st.one_of(st.just(0), coeff)) for _ in range(m))
    return NAryAlgebra(3, m, entries, True)


@given(ternary(), st.integers(0, 1000))
def test_derivation_members_satisfy_the_rule_at_random_points(B, seed):
    import random

    rng = random.Random(seed)
    der = nary_derivation_space(B)
    for v in der.basis:
        D = Matrix.from_flat(v, B.dim)
        assert is_nary_derivation(B, D)
        xs = [tuple(Fraction(rng.randint(-3, 3)) for _ in range(B.dim)) for _ in range(3)]
        lhs = D.apply(nary_product(B, xs))
        rhs = [Fraction(0)] * B.dim
        for k in range(3):
            term = nary_product(B, xs[:k] + [D.apply(xs[k])] + xs[k + 1:])
            rhs = [a + b for a, b in zip(rhs, term)]
        assert tuple(lhs) == tuple(rhs)
