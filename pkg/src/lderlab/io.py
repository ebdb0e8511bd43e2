"""JSON algebra documents and rational-string serialization."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import Algebra
from .exceptions import DimensionError, ParseError
from .linalg import Matrix, format_fraction
from .nary import NAryAlgebra


def parse_rational(text, where: str = "") -> Fraction:
    """``"p/q"``, ``"p"`` or an int; floats are rejected."""
    if isinstance(text, bool) or isinstance(text, float):
        raise ParseError(f"expected a rational string{where}, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string{where}, got {text!r}")
    s = text.strip()
    num, _, den = s.partition("/")
    try:
        if "." in s or "e" in s.lower():
            raise ValueError
        return Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact rational{where}: {text!r}") from None


def rational_string(x) -> str:
    return format_fraction(Fraction(x))


def vector_strings(v) -> list[str]:
    return [rational_string(x) for x in v]


def matrix_strings(M: Matrix) -> list[list[str]]:
    return [vector_strings(row) for row in M.entries]


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})", exc.pos) from None


def document_to_algebra(doc: dict):
    """Build an :class:`Algebra` or :class:`NAryAlgebra` from a decoded document."""
    if not isinstance(doc, dict):
        raise ParseError("algebra document must be a JSON object")
    try:
        dim = int(doc["dim"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("algebra document needs an integer 'dim'") from None
    name = str(doc.get("name", "input"))
    basis = doc.get("basis") or None
    if basis is not None and len(basis) != dim:
        raise ParseError(f"'basis' has {len(basis)} labels for dimension {dim}")
    if "arity" in doc or "entries" in doc:
        return _nary_document(doc, dim, name, basis)
    table = doc.get("table")
    if not isinstance(table, list) or len(table) != dim:
        raise ParseError(f"'table' must be a {dim} x {dim} array of {dim}-vectors")
    rows = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"table row {i} must have {dim} entries")
        out = []
        for j, vec in enumerate(row):
            if not isinstance(vec, list) or len(vec) != dim:
                raise ParseError(f"table[{i}][{j}] must be a vector of length {dim}")
            out.append(tuple(parse_rational(x, f" at table[{i}][{j}]") for x in vec))
        rows.append(tuple(out))
    try:
        return Algebra(tuple(rows), tuple(basis) if basis else (), name)
    except DimensionError as exc:
        raise ParseError(str(exc)) from None


def _nary_document(doc: dict, dim: int, name: str, basis):
    try:
        arity = int(doc["arity"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("n-ary document needs an integer 'arity'") from None
    labels = list(basis) if basis else [f"e{i + 1}" for i in range(dim)]
    entries = {}
    for pos, item in enumerate(doc.get("entries", [])):
        try:
            args = tuple(int(a) for a in item["args"])
            val = [Fraction(0)] * dim
            for key, c in item["val"].items():
                k = labels.index(key) if key in labels else int(key)
                val[k] += parse_rational(c, f" in entries[{pos}]")
        except (KeyError, TypeError, ValueError, IndexError):
            raise ParseError(f"malformed entries[{pos}]") from None
        if args in entries:
            raise ParseError(f"duplicate argument tuple {list(args)} in entries[{pos}]")
        entries[args] = tuple(val)
    try:
        return NAryAlgebra(arity, dim, entries, bool(doc.get("anticommutative", False)), tuple(labels), name)
    except (DimensionError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def parse_document(text: str):
    return document_to_algebra(_loads(text))


def load_algebra(source: str):
    """``@name`` for a catalog algebra, otherwise a path to a JSON document."""
    if source.startswith("@"):
        from .catalog import get_algebra

        try:
            return get_algebra(source[1:])
        except KeyError as exc:
            raise ParseError(str(exc.args[0])) from None
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    return parse_document(text)


def algebra_to_document(A) -> dict:
    if isinstance(A, NAryAlgebra):
        return {
            "name": A.name,
            "arity": A.arity,
            "dim": A.dim,
            "basis": list(A.basis_labels),
            "anticommutative": A.anticommutative,
            "entries": [
                {"args": list(args), "val": {str(k): rational_string(c) for k, c in enumerate(val) if c}}
                for args, val in A.entries.items()
            ],
        }
    return {
        "name": A.name,
        "dim": A.dim,
        "basis": list(A.basis_labels),
        "table": [[vector_strings(v) for v in row] for row in A.table],
    }


def dump_algebra(A) -> str:
    return json.dumps(algebra_to_document(A), indent=2)
