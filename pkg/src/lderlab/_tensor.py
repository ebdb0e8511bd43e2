"""Vectorized evaluation of bracketed products on all basis tuples at once.

A *product tensor* for a bracketing with p leaves has shape ``(m,)*p + (m,)``:
entry ``[i1, ..., ip, k]`` is the k-th coordinate of the product of the
leaf inputs ``e_i1, ..., e_ip``. Leaves can be fed an arbitrary linear
image of the basis (row i of a leaf matrix = image of e_i), which is how
derivations get inserted into a slot.

Everything runs on integer arrays: structure constants are scaled by the
lcm of their denominators. All the relations we test are homogeneous in
the structure constants, so the scaling never changes a verdict.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

_INT64_SAFE = 2 ** 62


def int_structure(table) -> tuple[np.ndarray, int]:
    """Integer tensor ``scale * c[i][j][k]`` (object dtype) and the scale."""
    m = len(table)
    dens = [c.denominator for row in table for vec in row for c in vec]
    scale = math.lcm(*dens) if dens else 1
    arr = np.empty((m, m, m), dtype=object)
    for i in range(m):
        for j in range(m):
            for k in range(m):
                arr[i, j, k] = int(table[i][j][k] * scale)
    return arr, scale


def int_matrix(rows) -> tuple[np.ndarray, int]:
    """Integer copy ``scale * M`` (object dtype) of a rational matrix given by rows."""
    dens = [x.denominator for r in rows for x in r]
    scale = math.lcm(*dens) if dens else 1
    arr = np.array([[int(x * scale) for x in r] for r in rows], dtype=object)
    return arr.reshape(len(rows), len(rows[0]) if rows else 0), scale


def absmax(a: np.ndarray) -> int:
    return int(np.abs(a).max()) if a.size else 0


def tree_bound(tree, m: int, tmax: int, leaf_bounds) -> int:
    """Upper bound on the absolute value of any entry of the product tensor."""
    if not isinstance(tree, tuple):
        return leaf_bounds(tree)
    left = tree_bound(tree[0], m, tmax, leaf_bounds)
    right = tree_bound(tree[1], m, tmax, leaf_bounds)
    return m * m * tmax * left * right


def choose_dtype(bound: int):
    return np.int64 if bound < _INT64_SAFE else object


def exact_tensordot(x: np.ndarray, y: np.ndarray, axes) -> np.ndarray:
    """tensordot of integer arrays without rounding or overflow."""
    ax = axes[0] if isinstance(axes[0], (list, tuple)) else [axes[0]]
    width = int(np.prod([x.shape[a] for a in ax])) if ax else 1
    bound = absmax(x) * absmax(y) * max(width, 1)
    if bound < (1 << 53):
        out = np.tensordot(x.astype(np.float64), y.astype(np.float64), axes)
        return np.rint(out).astype(np.int64)
    dtype = choose_dtype(bound)
    return np.tensordot(x.astype(dtype), y.astype(dtype), axes)


def bracket(left: np.ndarray, right: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Product of two product tensors; leaf axes of ``left`` come first."""
    p = left.ndim - 1
    q = right.ndim - 1
    x = np.tensordot(left, T, axes=([p], [0]))  # (..., b, k)
    y = np.tensordot(x, right, axes=([p], [q]))  # (..., k, ...)
    return np.moveaxis(y, p, -1)


def leaves_of(tree) -> list:
    if not isinstance(tree, tuple):
        return [tree]
    return leaves_of(tree[0]) + leaves_of(tree[1])


def evaluate_tree(tree, T: np.ndarray, leaf_value) -> np.ndarray:
    """Product tensor of ``tree`` (nested pairs with labels at the leaves).

    ``leaf_value(label)`` returns the (m, m) array whose row i is the input
    fed to that leaf for basis index i. Axes follow left-to-right leaf order.
    """
    if not isinstance(tree, tuple):
        return leaf_value(tree)
    return bracket(evaluate_tree(tree[0], T, leaf_value), evaluate_tree(tree[1], T, leaf_value), T)


def multilinear_eval(terms, variables, T_obj: np.ndarray, leaf_override=None) -> np.ndarray:
    """Evaluate a multilinear expression on all basis tuples.

    ``terms`` is a list of ``(coefficient, tree)`` where each tree uses every
    variable exactly once. Returns an array of shape ``(m,)*len(variables) + (m,)``
    with variable axes in the order given by ``variables``.
    """
    m = T_obj.shape[0]
    tmax = absmax(T_obj)
    overrides = leaf_override or {}
    leaf_arrays = {}
    for v in variables:
        leaf_arrays[v] = overrides.get(v, np.eye(m, dtype=object).astype(object))
    bound = 0
    for coef, tree in terms:
        bound += abs(int(coef)) * tree_bound(tree, m, tmax, lambda lab: absmax(leaf_arrays[lab]))
    dtype = choose_dtype(bound)
    T = T_obj.astype(dtype)
    leaves = {v: a.astype(dtype) for v, a in leaf_arrays.items()}
    total = None
    for coef, tree in terms:
        order = leaves_of(tree)
        val = evaluate_tree(tree, T, leaves.__getitem__)
        perm = [order.index(v) for v in variables] + [len(order)]
        val = np.transpose(val, perm) * int(coef)
        total = val if total is None else total + val
    return total


def first_nonzero(values: np.ndarray):
    """Lexicographically first index tuple (excluding the output axis) with a nonzero vector."""
    mask = np.any(values != 0, axis=-1)
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(i) for i in hits[0])


def to_fraction_array(arr: np.ndarray, scale: int = 1) -> np.ndarray:
    out = np.empty(arr.shape, dtype=object)
    flat_in = arr.reshape(-1)
    flat_out = out.reshape(-1)
    for idx in range(flat_in.size):
        flat_out[idx] = Fraction(int(flat_in[idx]), scale)
    return out
