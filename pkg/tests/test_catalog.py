import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lderlab import algebra as core
from lderlab import catalog as cat
from lderlab.exceptions import CapExceededError
from lderlab.varieties import associator, satisfies


@pytest.mark.parametrize("entry", cat.all_entries(), ids=lambda e: e.name)
def test_catalog_facts(entry):
    for fact, matches in cat.verify_entry(entry):
        assert matches, (entry.name, fact.kind, fact.value)
        if not fact.expected:
            assert fact.note


def test_disagreeing_facts_are_the_known_ones():
    disagreeing = sorted((e.name, f.kind) for e in cat.all_entries() for f in e.known_facts if not f.expected)
    assert disagreeing == [
        ("D5", "invertible"),
        ("dorofeev", "identity_left_order"),
        ("dorofeev", "right_nilpotency_index"),
        ("williams3", "nary_derivation"),
        ("williams4", "nary_derivation"),
        ("williams5", "nary_derivation"),
        ("williams6", "nary_derivation"),
    ]


def quadratic_norm(x, signs):
    return sum(s * c * c for s, c in zip(signs, x))


@pytest.mark.parametrize("builder,signs", [
    (cat.octonions, (1,) * 8),
    (cat.cayley_dickson_split, (1, 1, 1, 1, -1, -1, -1, -1)),
])
def test_octonion_norm_is_multiplicative(builder, signs):
    O = builder()
    rows = [(1, 2, 0, -1, 3, 0, 1, 1), (0, 1, -2, 1, 1, 2, 0, -1), (2, 0, 1, 1, -1, 1, 3, 0)]
    vecs = [tuple(Fraction(c) for c in r) for r in rows]
    for x, y in itertools.product(vecs, repeat=2):
        xy = core.multiply(O, x, y)
        assert quadratic_norm(xy, signs) == quadratic_norm(x, signs) * quadratic_norm(y, signs)
    assert cat.find_unit(O) == tuple(Fraction(int(i == 0)) for i in range(8))


def test_m7_is_the_commutator_algebra_of_trace_zero_octonions():
    O, M = cat.cayley_dickson_split(), cat.m7()
    for i, j in itertools.product(range(1, 8), repeat=2):
        xy = core.multiply(O, O.basis_vector(i), O.basis_vector(j))
        yx = core.multiply(O, O.basis_vector(j), O.basis_vector(i))
        half = tuple((a - b) / 2 for a, b in zip(xy, yx))
        assert half[0] == 0
        assert core.multiply(M, M.basis_vector(i - 1), M.basis_vector(j - 1)) == half[1:]


def test_zinbiel_identity_by_hand():
    # (x y) z = x (y z) + x (z y)
    A = cat.zinbiel_chain(5)
    basis = [A.basis_vector(i) for i in range(A.dim)]
    mul = lambda u, v: core.multiply(A, u, v)
    for x, y, z in itertools.product(basis, repeat=3):
        rhs = tuple(a + b for a, b in zip(mul(x, mul(y, z)), mul(x, mul(z, y))))
        assert mul(mul(x, y), z) == rhs


def test_units():
    assert cat.find_unit(cat.mat2()) == (1, 0, 0, 1)
    assert cat.find_unit(cat.plus_mat2()) == (1, 0, 0, 1)
    assert cat.find_unit(cat.heisenberg()) is None


def test_lookup():
    assert cat.get_algebra("D5").dim == 5
    assert cat.get_algebra("williams4").arity == 4
    with pytest.raises(KeyError):
        cat.get_algebra("nope")
    assert len(cat.binary_catalog()) == len(cat.binary_names())


def test_random_generators_are_deterministic():
    assert cat.random_nilpotent("associative", 5, 4, 7).table == cat.random_nilpotent("associative", 5, 4, 7).table
    assert cat.random_algebra(3, 4, "generic").table == cat.random_algebra(3, 4, "generic").table
    with pytest.raises(CapExceededError):
        cat.random_nilpotent("associative", 7, 3, 0)
    with pytest.raises(ValueError):
        cat.random_nilpotent("lie", 4, 3, 0)


@given(st.sampled_from(cat.NILPOTENT_CLASSES), st.integers(3, 6), st.integers(2, 4), st.integers(0, 10 ** 6))
def test_random_nilpotent_lands_in_its_class(cls, dim, index, seed):
    A = cat.random_nilpotent(cls, dim, index, seed)
    idx = core.nilpotency_index(A)
    assert idx is not None and idx <= index
    tag = {"anticommutative": "malcev", "commutative_jordan": "jordan", "associative": "associative"}[cls]
    assert satisfies(A, tag)[0]
    if cls == "associative":
        basis = [A.basis_vector(i) for i in range(A.dim)]
        assert all(not any(associator(A, x, y, z)) for x, y, z in itertools.product(basis, repeat=3))
