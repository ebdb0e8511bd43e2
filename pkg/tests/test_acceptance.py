"""Acceptance gate: one test per criterion, each printing a single pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` or directly as a script.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction

import sympy

from lderlab import algebra as core
from lderlab import catalog as cat
from lderlab.bracketings import enumerate_arrangements, left_comb
from lderlab.cli import _catalog_checks
from lderlab.leibniz import (
    check_commutator_closure,
    check_order_monotonicity,
    construct_invertible_lder,
    contains_invertible,
    der_space,
    eigenspace_product_check,
    f_lder_space,
    is_f_leibniz_derivation,
    left_lder_space,
    lder_space,
    radical_invariance_check,
    space_for,
    verify_leibniz_rule,
)
from lderlab.linalg import Matrix, Subspace, det
from lderlab.nary import (
    filippov_check,
    from_bracketing,
    is_nary_derivation,
    nary_derivation_space,
)
from lderlab.report import Report
from lderlab.suites import Config, nilpotent_family
from lderlab.varieties import mutation, minus_algebra, plus_algebra, satisfies


def unit(m, i):
    return tuple(Fraction(int(k == i)) for k in range(m))


def sympy_det(M: Matrix):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in M.entries]).det()


def left_product(A, xs):
    out = xs[0]
    for x in xs[1:]:
        out = core.multiply(A, out, x)
    return out


def holds_at_random_points(A, d: Matrix, n: int, samples: int = 4, seed: int = 0) -> bool:
    """d(x1..xn) = sum_i (x1..d xi..xn) for the left-normed product, at random integer points."""
    rng = random.Random(seed)
    for _ in range(samples):
        xs = [tuple(Fraction(rng.randint(-4, 4)) for _ in range(A.dim)) for _ in range(n)]
        lhs = d.apply(left_product(A, xs))
        rhs = [Fraction(0)] * A.dim
        for i in range(n):
            term = left_product(A, xs[:i] + [d.apply(xs[i])] + xs[i + 1:])
            rhs = [a + b for a, b in zip(rhs, term)]
        if tuple(lhs) != tuple(rhs):
            return False
    return True


def test_criterion_01_right_alternative_example(acceptance_line):
    start = time.perf_counter()
    A = cat.dorofeev_algebra()
    phi = cat.dorofeev_phi()
    parts = {
        "right_alternative": satisfies(A, "right_alternative")[0],
        "power_chain": core.chain(A, "power").dims == (5, 3, 3),
        "right_power_chain": core.chain(A, "right_power").dims == (5, 3, 1, 0),
        "der_dim_7": der_space(A).dim == 7,
        "phi_derivation": is_f_leibniz_derivation(A, left_comb(2), phi) and holds_at_random_points(A, phi, 2),
        "phi_det": det(phi) == -6 and sympy_det(phi) == -6,
        "left4_full": left_lder_space(A, 4).dim == 25,
        "left3_proper": not left_lder_space(A, 3).is_full(),
    }
    report = Report(["test"], {})
    _catalog_checks(A, report)
    status = {c.id: c.status for c in report.checks}
    parts["index3_flagged"] = status.get("fact/dorofeev/05-right_nilpotency_index") == "flag"
    elapsed = time.perf_counter() - start
    parts["runtime"] = elapsed < 5
    ok = all(parts.values())
    acceptance_line(1, "right alternative example", ok,
                    f"{elapsed:.1f}s; failing: {[k for k, v in parts.items() if not v]}" if not ok else f"{elapsed:.1f}s")
    assert ok, parts


def test_criterion_02_seven_dimensional_malcev(acceptance_line):
    start = time.perf_counter()
    M = cat.m7()
    der = der_space(M)
    w = contains_invertible(der)
    parts = {
        "malcev": satisfies(M, "malcev")[0],
        "not_lie": not satisfies(M, "lie")[0],
        "operator_identity": core.operator_identity_witness(M) is None,
        "killing_associative": core.killing_associativity_witness(M) is None,
        "lie_center_zero": core.lie_center(M).is_zero(),
        "der_dim_14": der.dim == 14,
        "left3_equals_der": left_lder_space(M, 3).space == der.space,
        "certified_none": w.certificate == "certified-none" and w.reason == "odd-dimensional skew family",
    }
    elapsed = time.perf_counter() - start
    parts["runtime"] = elapsed < 30
    ok = all(parts.values())
    acceptance_line(2, "seven-dimensional Malcev algebra", ok, f"{elapsed:.1f}s")
    assert ok, parts


def test_criterion_03_unital_algebras(acceptance_line):
    rows = []
    for A in (cat.mat2(), cat.plus_mat2()):
        der = der_space(A).space
        for n in (3, 4):
            for f in enumerate_arrangements(n):
                rows.append(f_lder_space(A, f).space == der)
    ok = len(rows) == 14 and all(rows)
    acceptance_line(3, "unital algebras: every f-space equals Der", ok, f"{sum(rows)}/{len(rows)} arrangements")
    assert ok


def test_criterion_04_characterizations(acceptance_line):
    inputs = cat.binary_catalog() + cat.characterization_randoms()
    assert len(cat.characterization_randoms()) == 10
    bad = []
    for A in inputs:
        rn = core.right_nilpotency_index(A)
        nn = core.nilpotency_index(A)
        for n in range(2, 6):
            if left_lder_space(A, n).is_full() != (rn is not None and rn <= n):
                bad.append((A.name, "left", n))
            if lder_space(A, n).is_full() != (nn is not None and nn <= n):
                bad.append((A.name, "all", n))
    ok = not bad
    acceptance_line(4, "full Leibniz-derivation spaces characterize (right) nilpotency", ok,
                    f"{len(inputs)} algebras x orders 2..5" + (f"; mismatches {bad[:3]}" if bad else ""))
    assert ok, bad


def test_criterion_05_invertible_leibniz_derivations(acceptance_line):
    cfg = Config()
    failures = []
    count = 0
    for cls in cat.NILPOTENT_CLASSES:
        family = nilpotent_family(cls, cfg)
        assert len(family) == 20
        for A in family:
            count += 1
            if A.dim > 6 or not core.is_nilpotent(A) or core.nilpotency_index(A) > 4:
                failures.append((A.name, "family"))
                continue
            w = construct_invertible_lder(A)
            ok = (
                w.found
                and is_f_leibniz_derivation(A, left_comb(w.order), w.map)
                and holds_at_random_points(A, w.map, w.order)
                and sympy_det(w.map) != 0
            )
            if not ok:
                failures.append((A.name, "witness"))
    for A in (cat.sl2(), cat.mat2(), cat.plus_mat2(), cat.m7()):
        for n in range(2, 6):
            for arrangement in ("left", "all"):
                if contains_invertible(space_for(A, n, arrangement)).found:
                    failures.append((A.name, n, arrangement))
    ok = not failures
    acceptance_line(5, "invertible Leibniz-derivations exactly for nilpotent inputs", ok,
                    f"{count} nilpotent inputs, 4 non-nilpotent" + (f"; failures {failures[:3]}" if failures else ""))
    assert ok, failures


def test_criterion_06_structural_lemmas(acceptance_line):
    parts = {}
    ord_inputs = [cat.get_algebra(n) for n in ("dorofeev", "heisenberg", "sl2", "mat2", "zinbiel_chain4", "nil_jordan")]
    ord_inputs += cat.characterization_randoms()
    pairs = [(s, t) for t in range(1, 5) for s in range(1, t + 1) if t % s == 0]
    parts["ord"] = all(check_order_monotonicity(A, s, t) for A in ord_inputs for s, t in pairs)

    closed = True
    for A in cat.binary_catalog():
        for n in range(2, 6):
            for arrangement in ("left", "all"):
                S = space_for(A, n, arrangement)
                closed &= S.is_full() or check_commutator_closure(S)
        closed &= check_commutator_closure(der_space(A))
    parts["closure"] = closed

    rng = random.Random(6)
    rule = True
    for name in ("dorofeev", "heisenberg", "sl2", "zinbiel2", "nil_jordan"):
        A = cat.get_algebra(name)
        for n in (2, 3):
            S = left_lder_space(A, n)
            d = Matrix.zeros(A.dim)
            for B in S.matrices():
                d = d + B.scale(rng.randint(-3, 3))
            rule &= all(verify_leibniz_rule(A, d, n, k) for k in (1, 2, 3))
    parts["leibniz_rule"] = rule

    powers = True
    for profile in ("commutative", "anticommutative"):
        for s in range(4):
            A = cat.random_algebra(s, 3 + s % 2, profile)
            P = core.power_terms(A, 16)
            R = core.right_power_terms(A, 4)
            powers &= all(R[n - 1].contains_subspace(P[2 ** n - 1]) for n in range(1, 5))
    parts["powers"] = powers

    H = cat.heisenberg()
    parts["eigenspaces"] = (
        eigenspace_product_check(H, Matrix.diag([1, 1, 2]), 2)
        and eigenspace_product_check(cat.dorofeev_algebra(), cat.dorofeev_phi(), 2)
    )
    ok = all(parts.values())
    acceptance_line(6, "structural lemmas", ok, ", ".join(k for k, v in parts.items() if not v) or "")
    assert ok, parts


def test_criterion_07_radicals(acceptance_line):
    semi = cat.sl2_semidirect_v2()
    module = Subspace.span([unit(5, 3), unit(5, 4)], 5)
    R = core.form_radical_malcev(semi)
    parts = {
        "sl2": core.form_radical_malcev(cat.sl2()).is_zero(),
        "semidirect": R == module,
        "plus_mat2": core.form_radical_jordan(cat.plus_mat2()).is_zero(),
        "invariance": all(radical_invariance_check(semi, R, left_lder_space(semi, n)) for n in (2, 3, 4)),
    }
    ok = all(parts.values())
    acceptance_line(7, "form radicals and their invariance", ok)
    assert ok, parts


def test_criterion_08_nary(acceptance_line):
    start = time.perf_counter()
    parts = {}
    for n in (3, 4):
        B = cat.filippov_simple_algebra(n)
        D = cat.filippov_derivation(n)
        parts[f"{B.name}_filippov"] = filippov_check(B)
        parts[f"{B.name}_derivation"] = is_nary_derivation(B, D)
        parts[f"{B.name}_invertible"] = sympy_det(D) != 0
    parity = {}
    for n in (3, 4, 5, 6):
        B = cat.williams_algebra(n)
        corrected = is_nary_derivation(B, cat.williams_corrected(n))
        original = is_nary_derivation(B, cat.williams_original(n))
        parity[n] = (corrected, original)
        if n % 2 == 0:
            parts[f"williams{n}_corrected"] = corrected and det(cat.williams_corrected(n)) != 0
    recorded = {e.name: e for e in cat.all_entries()}
    parts["parity_recorded"] = all(
        not parity[n][0] and parity[n][1]
        and any(not f.expected and f.value[0] == "corrected" for f in recorded[f"williams{n}"].known_facts)
        for n in (3, 5)
    )
    oracle = True
    for A in cat.binary_catalog():
        for n in (2, 3, 4):
            for f in enumerate_arrangements(n):
                oracle &= f_lder_space(A, f).space == nary_derivation_space(from_bracketing(A, f))
    parts["oracle"] = oracle
    elapsed = time.perf_counter() - start
    parts["runtime"] = elapsed < 30
    ok = all(parts.values())
    failing = [k for k, v in parts.items() if not v]
    acceptance_line(8, "n-ary examples", ok, f"{elapsed:.1f}s" + (f"; failing: {failing}" if failing else ""))
    assert ok, failing


def test_criterion_09_multiplication_algebra_factorization(acceptance_line):
    results = []
    for U in (cat.mat2(), mutation(cat.mat2(), 2)):
        M = core.multiplication_algebra(U, unital=True)
        P = core.multiplication_algebra(plus_algebra(U), unital=True)
        N = core.multiplication_algebra(minus_algebra(U), unital=True)
        results.append(core.operator_product(P, N, U.dim) == M)
    ok = all(results)
    acceptance_line(9, "M(U) = M(U+) M(U-)", ok, "mat2 and its 2-mutation, unital multiplication algebras")
    assert ok


def test_criterion_10_end_to_end(acceptance_line, tmp_path):
    runs = []
    for _ in range(2):
        start = time.perf_counter()
        proc = subprocess.run([sys.executable, "-m", "lderlab.cli", "verify", "all", "--seed", "0"],
                              capture_output=True, timeout=300)
        runs.append((proc.returncode, time.perf_counter() - start, proc.stdout))
    ok = all(code == 0 and t < 120 for code, t, _ in runs) and runs[0][2] == runs[1][2]
    acceptance_line(10, "verify all --seed 0", ok,
                    f"exit codes {[r[0] for r in runs]}, {runs[0][1]:.0f}s and {runs[1][1]:.0f}s, "
                    f"{'identical' if runs[0][2] == runs[1][2] else 'different'} reports")
    assert ok


if __name__ == "__main__":
    import pytest

    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
