import random

import pytest
from hypothesis import given, settings

from oracles import expand, tilings
from sadic_lab import presets
from sadic_lab.errors import HorizonError, InfiniteParsesError, InputError
from sadic_lab.language import substitutive_factors
from sadic_lab.morphism import Alphabet, Morphism, identity, power
from sadic_lab.points import EventuallyPeriodicPoint
from sadic_lab.recognizer import (cutting_set, have_common_cut, image_point, infection_threshold,
                                  infection_verify, is_parse_of, parses_share_cut, point_parses,
                                  window_parses)
from strategies import morphisms, points, words


def _pairs(parses):
    return sorted((p.offset_k, tuple(p.preimage)) for p in parses)


def test_window_parses_small():
    m = presets.fibonacci()
    assert _pairs(window_parses((0, 0), m)) == [(0, (1, 0)), (0, (1, 1))]
    assert _pairs(window_parses((1, 1), m)) == []


def test_language_filter_and_horizon():
    m = presets.fibonacci()
    lang = substitutive_factors(m, 8)
    assert _pairs(window_parses((0, 0), m, lang)) == [(0, (1, 0))]
    with pytest.raises(HorizonError):
        window_parses((0,) * 20, m, substitutive_factors(m, 4))
    with pytest.raises(InputError):
        window_parses((), m)


@settings(max_examples=400, deadline=None)
@given(morphisms(k=3, codomain=3, hi=3), words(3, 1, 9))
def test_window_parses_match_backtracking(m, w):
    assert _pairs(window_parses(w, m)) == tilings(w, m.images)


def test_all_ones_has_two_parses():
    y = EventuallyPeriodicPoint.periodic((1,))
    parses = point_parses(y, presets.split_ones())
    assert len(parses) == 2
    assert sorted(p.offset_k for p in parses) == [0, 1]
    for p in parses:
        assert is_parse_of(p, y)


def _fixed_point_window(radius):
    # the two-sided fixed point through the seed 0.0 of 0 -> 0010, 1 -> 11
    m = presets.split_ones()
    img = power(m, 5).images[0]
    assert img[:1] == (0,) and img[-1:] == (0,)
    return EventuallyPeriodicPoint((1,), img[-radius:] + img[:radius], (1,), -radius)


def test_fixed_point_window_has_one_parse():
    y = _fixed_point_window(64)
    parses = point_parses(y, presets.split_ones())
    assert len(parses) == 1
    assert is_parse_of(parses[0], y)


def test_non_injective_point_raises():
    m = Morphism.from_strings({"a": "0", "b": "0"}, codomain=Alphabet.of("0"))
    with pytest.raises(InfiniteParsesError):
        point_parses(EventuallyPeriodicPoint.periodic((0,)), m)


@settings(max_examples=300, deadline=None)
@given(morphisms(k=2, codomain=2, hi=3), points(2))
def test_point_parses_are_valid_and_complete_on_windows(m, x):
    y = image_point(m, x, 0)
    try:
        parses = point_parses(y, m)
    except InfiniteParsesError:
        return
    keys = {p.key() for p in parses}
    # the defining representation is always found
    target = [p for p in parses if p.offset_k == 0 and p.preimage.same_point(x)]
    assert target, (m, x)
    assert len(keys) == len(parses)
    for p in parses:
        assert is_parse_of(p, y)


def test_common_cut_widens_to_exact_window():
    y = EventuallyPeriodicPoint.periodic((1,))
    a, b = point_parses(y, presets.split_ones())
    # no shared cut in a tiny window, none anywhere either: 11 blocks at opposite parities
    assert not have_common_cut(cutting_set(a, (0, 0)), cutting_set(b, (0, 0)))
    assert have_common_cut(cutting_set(a, (0, 0)), cutting_set(a, (5, 5)))


def test_infection_bookkeeping():
    assert infection_threshold(2) == 4 and infection_threshold(3) == 10
    y = EventuallyPeriodicPoint.periodic((1,))
    out = infection_verify(y, point_parses(y, presets.split_ones()))
    assert out["cut_disjoint"] == 2 and out["periodic"] and out["consistent"]
    with pytest.raises(InputError):
        infection_threshold(0)


def test_image_point_matches_expansion():
    rng = random.Random(7)
    m = presets.split_ones()
    for _ in range(50):
        x = EventuallyPeriodicPoint(tuple(rng.randrange(2) for _ in range(2)),
                                    tuple(rng.randrange(2) for _ in range(4)),
                                    tuple(rng.randrange(2) for _ in range(2)), rng.randint(-3, 3))
        k = rng.randint(0, 3)
        y = image_point(m, x, k)
        block = expand(m.images, x.slice(0, 6))
        assert y.slice(-k, -k + len(block)) == block


def test_worked_window_parses():
    m = presets.split_ones()
    assert _pairs(window_parses((1,) * 6, m)) == [(0, (1, 1, 1)), (1, (1, 1, 1, 1))]
    ident = identity(Alphabet(2))
    assert _pairs(window_parses((1,), ident)) == [(0, (1,))]
    f = presets.fibonacci()
    assert _pairs(window_parses((0, 1, 0, 0, 1), f)) == tilings((0, 1, 0, 0, 1), f.images) \
        == [(0, (0, 1, 0))]


def test_identity_point_has_one_parse():
    y = EventuallyPeriodicPoint.periodic((0, 1, 1))
    (p,) = point_parses(y, identity(Alphabet(2)))
    assert p.offset_k == 0 and p.preimage.same_point(y)


def test_worked_cutting_sets():
    y = EventuallyPeriodicPoint.periodic((1,))
    a, b = point_parses(y, presets.split_ones())
    assert cutting_set(a, (-6, 6)).cuts == (-6, -4, -2, 0, 2, 4, 6)
    assert cutting_set(b, (-6, 6)).cuts == (-5, -3, -1, 1, 3, 5)
    assert not parses_share_cut(a, b) and parses_share_cut(a, a)
    (q,) = point_parses(EventuallyPeriodicPoint.periodic((0, 1)), identity(Alphabet(2)))
    assert cutting_set(q, (-3, 3)).cuts == tuple(range(-3, 4))
    assert parses_share_cut(q, q)


def test_worked_infection_reports():
    assert infection_threshold(1) == 2
    y = EventuallyPeriodicPoint.periodic((1,))
    a, b = point_parses(y, presets.split_ones())
    assert infection_verify(y, [a])["cut_disjoint"] == 1
    assert infection_verify(y, [a, a])["cut_disjoint"] == 1
