import pytest

from oracles import mosse_radius
from sadic_lab import presets
from sadic_lab.errors import HorizonError
from sadic_lab.language import sadic_factors, substitutive_factors
from sadic_lab.mosse import Certificate, Counterexample, mosse_search, words_needed
from sadic_lab.recognizer import is_parse_of, point_parses

# frozen from the cut-forcing oracle; re-derived below
GOLDEN_ELL = {"fibonacci": 1, "thue-morse": 2}


@pytest.mark.parametrize("name,rounds", [("fibonacci", 14), ("thue-morse", 11)])
def test_golden_radius_matches_oracle(name, rounds):
    m = presets.morphism(name)
    assert mosse_radius(m.images, 0, rounds, 30) == GOLDEN_ELL[name]
    assert mosse_radius(m.images, 1, rounds, 30) == GOLDEN_ELL[name]


@pytest.mark.parametrize("name", sorted(GOLDEN_ELL))
def test_certificates(name):
    m = presets.morphism(name)
    out = mosse_search(m, substitutive_factors(m, 128), 30)
    assert out == Certificate(GOLDEN_ELL[name])


def test_theta1_radius_agrees_with_oracle():
    m = presets.theta1()
    out = mosse_search(m, substitutive_factors(m, 40), 10)
    assert isinstance(out, Certificate)
    assert out.ell == mosse_radius(m.images, 0, 6, 10)


def _check_counterexample(out, m):
    assert isinstance(out, Counterexample)
    assert out.point_parse_count >= 2
    parses = point_parses(out.point, m)
    assert len(parses) == out.point_parse_count
    for p in parses:
        assert is_parse_of(p, out.point)
    # both witnessed window parses read the clashing window
    for wp in (out.parse_a, out.parse_b):
        img = tuple(c for a in wp.preimage for c in m.images[a])
        assert img[wp.offset_k:wp.offset_k + len(out.window)] == out.window


def test_split_ones_counterexample():
    m = presets.split_ones()
    out = mosse_search(m, substitutive_factors(m, 128), 30)
    _check_counterexample(out, m)
    assert set(out.window) == {1} and out.point.is_periodic()


def test_level_one_coding_counterexample():
    D = presets.pair_coded()
    m = D.level_morphism(0)
    out = mosse_search(m, sadic_factors(D, 1, 128), 30)
    _check_counterexample(out, m)
    assert out.point.period() == 60


def test_horizon_too_short():
    m = presets.fibonacci()
    assert words_needed(m, 30) == 60
    with pytest.raises(HorizonError):
        mosse_search(m, substitutive_factors(m, 40), 30)


def test_identity_radius_one():
    from sadic_lab.morphism import Alphabet, identity
    m = identity(Alphabet(2))
    assert mosse_search(m, substitutive_factors(m, 64), 16) == Certificate(1)
