"""Exact computations with finite-dimensional nonassociative algebras and their Leibniz-derivations."""

from .algebra import Algebra, chain, is_nilpotent, multiplication_algebra
from .bracketings import enumerate_arrangements, left_comb, parse, serialize
from .catalog import get_algebra
from .exceptions import (
    CapExceededError,
    DimensionError,
    InconsistencyError,
    LderLabError,
    ParseError,
    PreconditionError,
    RadicalCriterionError,
    SpectrumError,
    VarietyError,
)
from .leibniz import (
    construct_invertible_lder,
    contains_invertible,
    der_space,
    f_lder_space,
    is_f_leibniz_derivation,
    left_lder_space,
    lder_space,
)
from .linalg import Matrix, Subspace
from .moens import LeibnizAnalyzer, moens_verdict
from .nary import NAryAlgebra
from .varieties import satisfies, variety_tags

__version__ = "0.1.0"

__all__ = [
    "Algebra", "chain", "is_nilpotent", "multiplication_algebra",
    "enumerate_arrangements", "left_comb", "parse", "serialize",
    "get_algebra",
    "CapExceededError", "DimensionError", "InconsistencyError", "LderLabError", "ParseError",
    "PreconditionError", "RadicalCriterionError", "SpectrumError", "VarietyError",
    "construct_invertible_lder", "contains_invertible", "der_space", "f_lder_space",
    "is_f_leibniz_derivation", "left_lder_space", "lder_space",
    "Matrix", "Subspace",
    "LeibnizAnalyzer", "moens_verdict",
    "NAryAlgebra",
    "satisfies", "variety_tags",
]
