import pytest

from lderlab import catalog as cat
from lderlab.exceptions import CapExceededError
from lderlab.moens import LeibnizAnalyzer, moens_verdict
from lderlab.varieties import mutation


def statuses(verdict):
    return {t.theorem: t.status for t in verdict.theorems}


def test_nilpotent_lie_algebra():
    v = moens_verdict(cat.heisenberg(), max_order=3)
    assert v.nilpotent and v.construction.found
    assert statuses(v)["malcev"] == "consistent"
    assert not v.red_flags


def test_simple_lie_algebra_is_certified():
    v = moens_verdict(cat.sl2(), max_order=3)
    assert not v.nilpotent and v.construction is None
    assert v.certified_absent("left")
    assert not v.invertible_found("all")
    assert statuses(v)["malcev"] == "consistent"


def test_right_alternative_example_is_one_directional():
    v = moens_verdict(cat.dorofeev_algebra(), max_order=4)
    assert not v.nilpotent and v.right_nilpotent
    assert v.invertible_found("all")
    assert statuses(v) == {"right_alternative": "consistent"}


def test_mutation_of_matrix_algebra():
    v = moens_verdict(mutation(cat.mat2(), 2), max_order=3)
    assert statuses(v)["ncj_malcev_admissible"] == "consistent"
    assert not v.invertible_found("all")


def test_analyzer_params():
    an = LeibnizAnalyzer()
    assert an.get_params() == {"max_order": 5, "seed": 0, "trials": 64, "coeff_bound": 5}
    assert an.set_params(max_order=3) is an and an.max_order == 3
    assert repr(an) == "LeibnizAnalyzer(max_order=3, seed=0, trials=64, coeff_bound=5)"
    with pytest.raises(ValueError):
        an.set_params(depth=2)
    with pytest.raises(CapExceededError):
        LeibnizAnalyzer(max_order=9).fit(cat.heisenberg())


def test_analyzer_fit():
    an = LeibnizAnalyzer(max_order=3).fit(cat.nil_jordan())
    assert "jordan" in an.tags_
    assert an.chains_["power"].dims == (3, 2, 1, 0)
    assert an.verdict_.construction.found
