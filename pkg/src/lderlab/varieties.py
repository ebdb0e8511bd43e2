"""Variety membership by linearized identities, and the plus/minus/mutation functors.

Every identity is stored in fully multilinear form as a list of
``(coefficient, tree)`` terms over named variables; a tree is a variable
name or a pair of trees. In characteristic zero the multilinear form is
equivalent to the original identity, so checking it on all basis tuples
decides membership.
"""

from __future__ import annotations

from fractions import Fraction

from . import _tensor
from .algebra import Algebra, check_vector, multiply
from .linalg import to_fraction, vec_sub

VARIETY_TAGS = (
    "associative",
    "commutative",
    "anticommutative",
    "lie",
    "malcev",
    "jordan",
    "right_alternative",
    "minus_one_one",
    "flexible",
    "noncommutative_jordan",
    "zinbiel",
    "malcev_admissible",
)


def _assoc(a, b, c, sign=1):
    """Terms of sign * (a, b, c) = sign * ((ab)c - a(bc))."""
    return [(sign, ((a, b), c)), (-sign, (a, (b, c)))]


def _jacobi(a, b, c, sign=1):
    """Terms of sign * J(a, b, c) = sign * ([[a,b],c] + [[c,a],b] + [[b,c],a])."""
    return [(sign, ((a, b), c)), (sign, ((c, a), b)), (sign, ((b, c), a))]


def _times(terms, right, sign=1):
    """Multiply every term on the right by ``right``."""
    return [(sign * c, (t, right)) for c, t in terms]


# x^2 = 0 linearized at x -> x + y.
_ANTICOMM = [(1, ("x", "y")), (1, ("y", "x"))]
_COMM = [(1, ("x", "y")), (-1, ("y", "x"))]

# J(x, y, [x, z]) = [J(x, y, z), x], linearized at x -> x + w:
#   J(x, y, [w, z]) + J(w, y, [x, z]) - [J(x, y, z), w] - [J(w, y, z), x] = 0
_MALCEV = (
    _jacobi("x", "y", ("w", "z"))
    + _jacobi("w", "y", ("x", "z"))
    + _times(_jacobi("x", "y", "z"), "w", -1)
    + _times(_jacobi("w", "y", "z"), "x", -1)
)

# (x^2, y, x) = 0 in a commutative algebra, x -> x1 + x2 + x3. The terms
# carrying all three x's are sum_c (x_a x_b, y, x_c) with {a, b} the other
# two indices (x_a x_b = x_b x_a collapses the factor 2).
_JORDAN = (
    _assoc(("x1", "x2"), "y", "x3")
    + _assoc(("x1", "x3"), "y", "x2")
    + _assoc(("x2", "x3"), "y", "x1")
)

# (x, y, y) = 0 at y -> y + z.
_RIGHT_ALT = _assoc("x", "y", "z") + _assoc("x", "z", "y")

# Second (-1,1) identity, already multilinear.
_CYCLIC = _assoc("x", "y", "z") + _assoc("z", "x", "y") + _assoc("y", "z", "x")

# (x, y, x) = 0 at x -> x + z.
_FLEXIBLE = _assoc("x", "y", "z") + _assoc("z", "y", "x")

# (x^2 y) x = x^2 (y x), i.e. (x^2, y, x) = 0, with no commutativity:
# x -> x1 + x2 + x3 yields the sum over all orderings (a, b, c).
_NCJ = [
    term
    for a, b, c in (
        ("x1", "x2", "x3"),
        ("x2", "x1", "x3"),
        ("x1", "x3", "x2"),
        ("x3", "x1", "x2"),
        ("x2", "x3", "x1"),
        ("x3", "x2", "x1"),
    )
    for term in _assoc((a, b), "y", c)
]

# (ab)c = a(bc) + a(cb), multilinear as written.
_ZINBIEL = [(1, (("a", "b"), "c")), (-1, ("a", ("b", "c"))), (-1, ("a", ("c", "b")))]

IDENTITIES = {
    "associativity": (("x", "y", "z"), _assoc("x", "y", "z")),
    "commutativity": (("x", "y"), _COMM),
    "anticommutativity": (("x", "y"), _ANTICOMM),
    "jacobi": (("x", "y", "z"), _jacobi("x", "y", "z")),
    "malcev": (("x", "y", "z", "w"), _MALCEV),
    "jordan": (("x1", "x2", "x3", "y"), _JORDAN),
    "right_alternative": (("x", "y", "z"), _RIGHT_ALT),
    "cyclic_associator": (("x", "y", "z"), _CYCLIC),
    "flexible": (("x", "y", "z"), _FLEXIBLE),
    "ncj_power": (("x1", "x2", "x3", "y"), _NCJ),
    "zinbiel": (("a", "b", "c"), _ZINBIEL),
}

_TAG_IDENTITIES = {
    "associative": ("associativity",),
    "commutative": ("commutativity",),
    "anticommutative": ("anticommutativity",),
    "lie": ("anticommutativity", "jacobi"),
    "malcev": ("anticommutativity", "malcev"),
    "jordan": ("commutativity", "jordan"),
    "right_alternative": ("right_alternative",),
    "minus_one_one": ("right_alternative", "cyclic_associator"),
    "flexible": ("flexible",),
    "noncommutative_jordan": ("flexible", "ncj_power"),
    "zinbiel": ("zinbiel",),
}


def identity_witness(A: Algebra, identity: str):
    """First basis tuple (lexicographic) violating ``identity``, or None."""
    variables, terms = IDENTITIES[identity]
    T, _ = A.int_tensor
    values = _tensor.multilinear_eval(terms, list(variables), T)
    return _tensor.first_nonzero(values)


def satisfies(A: Algebra, tag: str):
    """(holds, witness); the witness is ``(identity, basis index tuple)`` or None."""
    if tag == "malcev_admissible":
        ok, witness = satisfies(minus_algebra(A), "malcev")
        return ok, (None if ok else ("minus-" + witness[0], witness[1]))
    try:
        identities = _TAG_IDENTITIES[tag]
    except KeyError:
        raise ValueError(f"unknown variety tag {tag!r}") from None
    for name in identities:
        hit = identity_witness(A, name)
        if hit is not None:
            return False, (name, hit)
    return True, None


def variety_tags(A: Algebra) -> list[str]:
    return [tag for tag in VARIETY_TAGS if satisfies(A, tag)[0]]


def associator(A: Algebra, x, y, z) -> tuple:
    """(x, y, z) = (xy)z - x(yz)."""
    x, y, z = (check_vector(A, v) for v in (x, y, z))
    return vec_sub(multiply(A, multiply(A, x, y), z), multiply(A, x, multiply(A, y, z)))


def _combine(A: Algebra, p, q, name: str) -> Algebra:
    """Algebra with product p*xy + q*yx."""
    m = A.dim
    table = tuple(
        tuple(tuple(p * A.table[i][j][k] + q * A.table[j][i][k] for k in range(m)) for j in range(m))
        for i in range(m)
    )
    return Algebra(table, A.basis_labels, name)


def plus_algebra(A: Algebra) -> Algebra:
    """x o y = (xy + yx) / 2."""
    half = Fraction(1, 2)
    return _combine(A, half, half, f"plus({A.name})")


def minus_algebra(A: Algebra) -> Algebra:
    """[x, y] = xy - yx."""
    return _combine(A, Fraction(1), Fraction(-1), f"minus({A.name})")


def mutation(A: Algebra, lam) -> Algebra:
    """x ._lam y = lam xy + (1 - lam) yx."""
    lam = to_fraction(lam)
    return _combine(A, lam, 1 - lam, f"mutation({A.name},{lam})")


def opposite(A: Algebra) -> Algebra:
    return _combine(A, Fraction(0), Fraction(1), f"op({A.name})")
