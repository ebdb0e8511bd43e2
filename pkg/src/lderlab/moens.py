"""Nilpotency versus invertible Leibniz-derivations: the verdict pipeline.

For each variety where a characterization is known, the pipeline states
what the theorem predicts from the computed facts and whether the facts
agree. A disagreement is reported as a red flag rather than hidden.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import algebra as core
from .exceptions import CapExceededError, LderLabError
from .leibniz import (
    InvertibleWitness,
    construct_invertible_lder,
    contains_invertible,
    left_lder_space,
    lder_space,
)
from .varieties import variety_tags

# (variety condition, space searched, one-directional?)
THEOREMS = {
    "malcev": ("malcev", "left", False),
    "jordan": ("jordan", "left", False),
    "minus_one_one": ("minus_one_one", "left", False),
    "zinbiel": ("zinbiel", "left", False),
    "ncj_malcev_admissible": ("noncommutative_jordan+malcev_admissible", "all", False),
    "right_alternative": ("right_alternative", "all", True),
}


@dataclass(frozen=True)
class OrderResult:
    order: int
    arrangement: str
    dim: int | None
    full: bool | None
    witness: InvertibleWitness | None
    skipped: str = ""


@dataclass(frozen=True)
class TheoremCheck:
    theorem: str
    status: str  # consistent | red-flag | inconclusive
    detail: str


@dataclass
class Verdict:
    name: str
    dim: int
    tags: list
    chains: dict
    nilpotent: bool
    right_nilpotent: bool
    orders: list = field(default_factory=list)
    construction: InvertibleWitness | None = None
    theorems: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def invertible_found(self, arrangement: str) -> bool:
        return any(o.arrangement == arrangement and o.witness is not None and o.witness.found for o in self.orders)

    def certified_absent(self, arrangement: str) -> bool:
        rel = [o for o in self.orders if o.arrangement == arrangement and o.witness is not None]
        return bool(rel) and all(o.witness.certificate == "certified-none" for o in rel)

    @property
    def red_flags(self) -> list:
        return [t for t in self.theorems if t.status == "red-flag"]


def _applies(tags: list, condition: str) -> bool:
    return all(part in tags for part in condition.split("+"))


def _search(A, n, arrangement, seed, trials, coeff_bound) -> OrderResult:
    try:
        S = left_lder_space(A, n, seed) if arrangement == "left" else lder_space(A, n, seed)
    except CapExceededError as exc:
        return OrderResult(n, arrangement, None, None, None, str(exc))
    return OrderResult(n, arrangement, S.dim, S.is_full(), contains_invertible(S, seed, trials, coeff_bound))


def moens_verdict(A, max_order: int = 5, seed: int = 0, trials: int = 64, coeff_bound: int = 5,
                  arrangements=("left", "all")) -> Verdict:
    tags = variety_tags(A)
    chains = {kind: core.chain(A, kind) for kind in ("power", "right_power", "solvable")}
    verdict = Verdict(
        A.name, A.dim, tags, chains,
        nilpotent=core.is_nilpotent(A),
        right_nilpotent=chains["right_power"].index is not None,
    )
    for n in range(2, max_order + 1):
        for arrangement in arrangements:
            verdict.orders.append(_search(A, n, arrangement, seed, trials, coeff_bound))
    if verdict.nilpotent:
        try:
            verdict.construction = construct_invertible_lder(A)
        except LderLabError as exc:
            verdict.errors.append(f"construction: {exc}")

    for theorem, (condition, arrangement, one_way) in THEOREMS.items():
        if not _applies(tags, condition):
            continue
        found = verdict.invertible_found(arrangement) or verdict.construction is not None
        if one_way:
            if not found:
                status, detail = "consistent", "no invertible Leibniz-derivation found; nothing to conclude"
            elif verdict.right_nilpotent:
                status, detail = "consistent", "invertible Leibniz-derivation found and the algebra is right nilpotent"
            else:
                status, detail = "red-flag", "invertible Leibniz-derivation found but the algebra is not right nilpotent"
        elif verdict.nilpotent:
            if verdict.construction is not None:
                status = "consistent"
                detail = f"nilpotent; invertible witness of order {verdict.construction.order}"
            else:
                status, detail = "red-flag", "nilpotent but no invertible witness could be built"
        elif verdict.invertible_found(arrangement):
            status, detail = "red-flag", "not nilpotent yet an invertible element was found"
        elif verdict.certified_absent(arrangement):
            status, detail = "consistent", "not nilpotent; absence of invertible elements certified at every order"
        else:
            status, detail = "consistent", "not nilpotent; no invertible element found (probabilistic search)"
        verdict.theorems.append(TheoremCheck(theorem, status, detail))
    return verdict


# --------------------------------------------------------------------------
# Estimator-style facade


class LeibnizAnalyzer:
    """Configurable analysis runner with a fit / get_params / set_params surface.

    >>> from lderlab.catalog import heisenberg
    >>> LeibnizAnalyzer(max_order=3).fit(heisenberg()).verdict_.nilpotent
    True
    """

    def __init__(self, max_order: int = 5, seed: int = 0, trials: int = 64, coeff_bound: int = 5):
        self.max_order = max_order
        self.seed = seed
        self.trials = trials
        self.coeff_bound = coeff_bound

    def get_params(self) -> dict:
        return {k: getattr(self, k) for k in ("max_order", "seed", "trials", "coeff_bound")}

    def set_params(self, **params) -> "LeibnizAnalyzer":
        for key, value in params.items():
            if key not in self.get_params():
                raise ValueError(f"unknown parameter {key!r}")
            setattr(self, key, value)
        return self

    def _validate(self):
        if not 2 <= self.max_order <= 6:
            raise CapExceededError(f"max_order must lie in 2..6, got {self.max_order}")
        if self.trials < 0 or self.coeff_bound < 1:
            raise ValueError("trials must be >= 0 and coeff_bound >= 1")

    def fit(self, A) -> "LeibnizAnalyzer":
        self._validate()
        self.verdict_ = moens_verdict(A, self.max_order, self.seed, self.trials, self.coeff_bound)
        self.tags_ = self.verdict_.tags
        self.chains_ = self.verdict_.chains
        return self

    def __repr__(self) -> str:
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"LeibnizAnalyzer({args})"
