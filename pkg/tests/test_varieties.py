import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lderlab import algebra as core
from lderlab import catalog as cat
from lderlab.varieties import associator, minus_algebra, mutation, opposite, plus_algebra, satisfies, variety_tags

EXPECTED = {
    "sl2": {"lie": True, "malcev": True, "associative": False, "jordan": False},
    "m7": {"lie": False, "malcev": True, "anticommutative": True, "flexible": True},
    "mat2": {"associative": True, "lie": False, "minus_one_one": True, "commutative": False},
    "plus_mat2": {"jordan": True, "commutative": True, "associative": False},
    "octonions": {"right_alternative": True, "associative": False, "flexible": True},
    "dorofeev": {"right_alternative": True, "minus_one_one": False, "flexible": False},
    "zinbiel_chain4": {"zinbiel": True, "associative": False, "commutative": False},
    "nil_jordan": {"jordan": True, "associative": True},
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_catalog_memberships(name):
    A = cat.get_algebra(name)
    for tag, holds in EXPECTED[name].items():
        ok, witness = satisfies(A, tag)
        assert ok == holds, tag
        assert (witness is None) == holds


def test_unknown_tag():
    with pytest.raises(ValueError):
        satisfies(cat.sl2(), "banana")


def test_functors_of_an_associative_algebra():
    A = cat.mat2()
    assert satisfies(minus_algebra(A), "lie")[0]
    assert satisfies(plus_algebra(A), "jordan")[0]
    assert satisfies(opposite(A), "associative")[0]
    U = mutation(A, 2)
    assert satisfies(U, "flexible")[0]
    assert satisfies(U, "noncommutative_jordan")[0]
    assert satisfies(U, "malcev_admissible")[0]
    assert not satisfies(U, "associative")[0]


def test_mutation_parameters():
    A = cat.mat2()
    assert mutation(A, 1).table == A.table
    assert mutation(A, 0).table == opposite(A).table
    assert mutation(A, Fraction(1, 2)).table == plus_algebra(A).table


coeff = st.integers(-2, 2)


@st.composite
def algebras(draw):
    m = draw(st.integers(1, 3))
    zero_bias = st.one_of(st.just(0), coeff)
    table = [[tuple(draw(zero_bias) for _ in range(m)) for _ in range(m)] for _ in range(m)]
    return core.Algebra(tuple(tuple(r) for r in table))


def brute_associative(A):
    basis = [A.basis_vector(i) for i in range(A.dim)]
    return all(not any(associator(A, x, y, z)) for x, y, z in itertools.product(basis, repeat=3))


def brute_commutative(A):
    basis = [A.basis_vector(i) for i in range(A.dim)]
    return all(core.multiply(A, x, y) == core.multiply(A, y, x) for x, y in itertools.product(basis, repeat=2))


def brute_right_alternative(A):
    # (x, y, y) = 0 at x = e_i, y = sum of two basis vectors with small weights
    vecs = [A.basis_vector(i) for i in range(A.dim)]
    combos = vecs + [tuple(a + 2 * b for a, b in zip(u, v)) for u in vecs for v in vecs]
    return all(not any(associator(A, x, y, y)) for x in vecs for y in combos)


@given(algebras())
def test_identity_checks_agree_with_brute_force(A):
    assert satisfies(A, "associative")[0] == brute_associative(A)
    assert satisfies(A, "commutative")[0] == brute_commutative(A)
    assert satisfies(A, "right_alternative")[0] == brute_right_alternative(A)


@given(algebras())
def test_tag_implications(A):
    tags = set(variety_tags(A))
    if "lie" in tags:
        assert "malcev" in tags
    if "associative" in tags:
        assert {"right_alternative", "flexible", "minus_one_one"} <= tags
    if "commutative" in tags:
        assert "flexible" in tags
    assert satisfies(minus_algebra(A), "anticommutative")[0]
    assert satisfies(plus_algebra(A), "commutative")[0]
