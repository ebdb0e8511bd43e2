"""Bracket arrangements as full binary trees.

A tree of length n has leaves numbered 1..n left to right. The text form
uses the grammar ``T ::= "x" | "(" T T ")"``; whitespace and digits after
an ``x`` are ignored, so ``((x1 x2) x3)`` and ``((xx)x)`` parse alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .exceptions import CapExceededError, DimensionError, ParseError

MAX_LENGTH = 8


@dataclass(frozen=True)
class Leaf:
    position: int


@dataclass(frozen=True)
class Node:
    left: "BracketTree"
    right: "BracketTree"


BracketTree = Union[Leaf, Node]


def size(tree: BracketTree) -> int:
    if isinstance(tree, Leaf):
        return 1
    return size(tree.left) + size(tree.right)


def _renumber(shape, start: int = 1) -> tuple[BracketTree, int]:
    """Tree from a nested-pair shape (leaves are None), numbering leaves from ``start``."""
    if shape is None:
        return Leaf(start), start + 1
    left, nxt = _renumber(shape[0], start)
    right, nxt = _renumber(shape[1], nxt)
    return Node(left, right), nxt


def shape_of(tree: BracketTree):
    """Nested pairs with ``None`` leaves."""
    if isinstance(tree, Leaf):
        return None
    return (shape_of(tree.left), shape_of(tree.right))


def labelled(tree: BracketTree, labels) -> object:
    """Nested pairs with ``labels[position - 1]`` at the leaves."""
    if isinstance(tree, Leaf):
        return labels[tree.position - 1]
    return (labelled(tree.left, labels), labelled(tree.right, labels))


def _check_length(n: int):
    if n < 2:
        raise DimensionError(f"an arrangement needs at least 2 leaves, got {n}")


def left_comb(n: int) -> BracketTree:
    """((...(x1 x2)...) x_{n-1}) x_n."""
    _check_length(n)
    tree: BracketTree = Leaf(1)
    for k in range(2, n + 1):
        tree = Node(tree, Leaf(k))
    return tree


def right_comb(n: int) -> BracketTree:
    """x1 (x2 (... (x_{n-1} x_n)...))."""
    _check_length(n)
    tree: BracketTree = Leaf(n)
    for k in range(n - 1, 0, -1):
        tree = Node(Leaf(k), tree)
    return tree


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    if n == 1:
        return (None,)
    out = []
    for k in range(1, n):
        for left in _shapes(k):
            for right in _shapes(n - k):
                out.append((left, right))
    return tuple(out)


def enumerate_arrangements(n: int) -> list[BracketTree]:
    """All full binary trees with n leaves, ordered by left-subtree size."""
    _check_length(n)
    if n > MAX_LENGTH:
        raise CapExceededError(f"arrangement length {n} exceeds the cap {MAX_LENGTH}")
    return [_renumber(shape)[0] for shape in _shapes(n)]


def serialize(tree: BracketTree) -> str:
    if isinstance(tree, Leaf):
        return f"x{tree.position}"
    return f"({serialize(tree.left)} {serialize(tree.right)})"


def compact(tree: BracketTree) -> str:
    """Text form without leaf numbers, e.g. ``((xx)x)``."""
    if isinstance(tree, Leaf):
        return "x"
    return f"({compact(tree.left)}{compact(tree.right)})"


def parse(text: str) -> BracketTree:
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def term():
        nonlocal pos
        skip()
        if pos >= len(text):
            raise ParseError("unexpected end of arrangement", pos)
        ch = text[pos]
        if ch == "x":
            pos += 1
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            return None
        if ch == "(":
            pos += 1
            left = term()
            right = term()
            skip()
            if pos >= len(text) or text[pos] != ")":
                raise ParseError("expected ')'", pos)
            pos += 1
            return (left, right)
        raise ParseError(f"unexpected character {ch!r}", pos)

    shape = term()
    skip()
    if pos != len(text):
        raise ParseError("trailing characters after arrangement", pos)
    if shape is None:
        raise ParseError("an arrangement needs at least 2 leaves", 0)
    return _renumber(shape)[0]


def evaluate(A, tree: BracketTree, args) -> tuple:
    """[x1, ..., xn]_f in the algebra A."""
    from .algebra import check_vector, multiply

    if len(args) != size(tree):
        raise DimensionError(f"arrangement has {size(tree)} leaves but {len(args)} arguments were given")
    args = [check_vector(A, a) for a in args]

    def go(t):
        if isinstance(t, Leaf):
            return args[t.position - 1]
        return multiply(A, go(t.left), go(t.right))

    return go(tree)
