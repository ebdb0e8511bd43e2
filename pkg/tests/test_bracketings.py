import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lderlab import catalog as cat
from lderlab.algebra import multiply
from lderlab.bracketings import (
    Leaf,
    Node,
    compact,
    enumerate_arrangements,
    evaluate,
    left_comb,
    parse,
    right_comb,
    serialize,
    size,
)
from lderlab.exceptions import CapExceededError, DimensionError, ParseError


@pytest.mark.parametrize("n", range(2, 8))
def test_counts_are_catalan(n):
    trees = enumerate_arrangements(n)
    assert len(trees) == math.comb(2 * n - 2, n - 1) // n
    assert len({compact(t) for t in trees}) == len(trees)
    assert all(size(t) == n for t in trees)


def test_small_arrangements():
    assert [compact(t) for t in enumerate_arrangements(3)] == ["(x(xx))", "((xx)x)"]
    assert compact(left_comb(4)) == "(((xx)x)x)"
    assert compact(right_comb(4)) == "(x(x(xx)))"
    assert serialize(left_comb(3)) == "((x1 x2) x3)"


@given(st.integers(2, 7).flatmap(lambda n: st.sampled_from(enumerate_arrangements(n))))
def test_round_trip(tree):
    assert parse(serialize(tree)) == tree
    assert parse(compact(tree)) == tree
    assert parse(" " + serialize(tree).replace(" ", "  ") + " ") == tree


@pytest.mark.parametrize("text", ["", "x x", "(x)", "((xx)", "(xy)", "(xx))", "x1x2"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_caps():
    with pytest.raises(DimensionError):
        left_comb(1)
    with pytest.raises(CapExceededError):
        enumerate_arrangements(9)


def test_evaluate_matches_nested_products():
    A = cat.mat2()
    x = [tuple(Fraction(v) for v in w) for w in ((1, 2, 0, 1), (0, 1, 3, 0), (2, 0, 1, 1))]
    assert evaluate(A, left_comb(3), x) == multiply(A, multiply(A, x[0], x[1]), x[2])
    assert evaluate(A, right_comb(3), x) == multiply(A, x[0], multiply(A, x[1], x[2]))
    tree = Node(Node(Leaf(1), Leaf(2)), Node(Leaf(3), Leaf(4)))
    y = x + [x[0]]
    assert evaluate(A, tree, y) == multiply(A, multiply(A, y[0], y[1]), multiply(A, y[2], y[3]))
