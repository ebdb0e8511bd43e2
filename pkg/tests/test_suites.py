import pytest

from lderlab.suites import SUITES, Config, run_suite, run_suites

FAST = ["powers-prop", "unital-prop", "ord-lemma", "leibniz-rule", "invert-construction",
        "radical-invariance", "moens-jordan", "moens-neg11", "ncj-thm"]


@pytest.mark.parametrize("name", FAST)
def test_fast_suites_have_no_failures(name):
    col = run_suite(name, Config())
    assert col.checks
    assert [c.id for c in col.checks if c.status == "fail"] == []
    assert all(c.id.startswith(name + "/") for c in col.checks)


def test_flags_carry_discrepancies():
    col = run_suite("rightalt-thm", Config(max_order=4))
    flagged = [c for c in col.checks if c.status == "flag"]
    assert [c.id for c in flagged] == ["rightalt-thm/dorofeev/right-nilpotency-index"]
    keys = {d["id"] for d in col.discrepancies}
    assert flagged[0].details["discrepancy"] in keys


def test_discrepancies_are_deduplicated():
    _, discrepancies = run_suites(["ord-lemma", "rightalt-thm", "rightalt-thm"], Config(max_order=3))
    ids = [d["id"] for d in discrepancies]
    assert len(ids) == len(set(ids))


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", Config())
    assert len(SUITES) == 18


def test_seed_changes_random_inputs():
    a = run_suite("moens-neg11", Config(seed=0))
    b = run_suite("moens-neg11", Config(seed=1))
    assert [c.id for c in a.checks] != [c.id for c in b.checks] or [c.details for c in a.checks] != [
        c.details for c in b.checks]
