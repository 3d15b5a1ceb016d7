import pytest
from hypothesis import given, settings

from oracles import expand, factors_by_iteration
from sadic_lab import presets
from sadic_lab.errors import HorizonError, InputError
from sadic_lab.directive import DirectiveSequence
from sadic_lab.language import (FactorSet, contains, prune_to_biextendable, sadic_factors,
                                substitutive_factors)
from sadic_lab.morphism import Alphabet, Morphism, identity
from strategies import substitutions


def test_fibonacci_counts():
    fs = substitutive_factors(presets.fibonacci(), 10)
    # Sturmian complexity n + 1
    assert [len(fs.of_length(n)) for n in range(1, 11)] == list(range(2, 12))
    assert (1, 1) not in fs


def test_thue_morse_against_iteration():
    fs = substitutive_factors(presets.thue_morse(), 12)
    assert set(fs.words) == factors_by_iteration(presets.thue_morse().images, 12)
    assert len(fs.of_length(3)) == 6


@settings(max_examples=150, deadline=None)
@given(substitutions(k=2, hi=3))
def test_factors_match_iteration(m):
    fs = substitutive_factors(m, 6)
    assert set(fs.words) == factors_by_iteration(m.images, 6, rounds=14)


def test_horizon_guard():
    fs = substitutive_factors(presets.fibonacci(), 4)
    assert contains(fs, (0, 1, 0))
    with pytest.raises(HorizonError):
        contains(fs, (0,) * 5)
    with pytest.raises(InputError):
        substitutive_factors(presets.sigma0(), 4)


def test_pruning_keeps_subword_closure():
    m = presets.split_ones()
    fs = prune_to_biextendable(substitutive_factors(m, 8))
    for w in fs.words:
        if w:
            assert w[1:] in fs.words and w[:-1] in fs.words
    assert fs.extendability_pruned


def _deep_factors(D, level, n, depth):
    out = set()
    for a in D.alphabet(depth).letters():
        w = (a,)
        for k in range(depth - 1, level - 1, -1):
            w = expand(D.level_morphism(k).images, w)
        out |= {w[i:j] for i in range(len(w)) for j in range(i, min(len(w), i + n) + 1)}
    return out


def test_sadic_languages_against_expansion():
    D = presets.pair_coded()
    assert set(sadic_factors(D, 1, 10).words) == _deep_factors(D, 1, 10, 6)
    assert set(sadic_factors(D, 0, 12).words) == _deep_factors(D, 0, 12, 6)
    A = presets.arnoux_rauzy_123()
    assert set(sadic_factors(A, 0, 9).words) == _deep_factors(A, 0, 9, 12)


def test_sadic_levels_match_substitutive():
    D = presets.pair_coded()
    assert sadic_factors(D, 1, 40).words == substitutive_factors(presets.theta1(), 40).words
    assert sadic_factors(D, 0, 20).words == substitutive_factors(presets.theta(), 20).words


def test_worked_languages():
    fib = substitutive_factors(presets.fibonacci(), 3)
    want = {(), (0,), (1,), (0, 0), (0, 1), (1, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 0, 1)}
    assert set(fib.words) == want
    assert contains(fib, ()) and contains(fib, (0, 1, 0)) and not contains(fib, (1, 1))
    ident = substitutive_factors(identity(Alphabet(2)), 2)
    assert set(ident.words) == {(), (0,), (1,)}
    r = substitutive_factors(presets.split_ones(), 2)
    assert {(1, 1), (0, 0), (0, 1), (1, 0)} <= set(r.words)
    D = DirectiveSequence.stationary(presets.fibonacci())
    assert sadic_factors(D, 3, 9).words == substitutive_factors(presets.fibonacci(), 9).words


def test_pruning_examples():
    A = Alphabet.of("ab")
    words = {(), (0,), (1,), (0, 1), (1, 0), (1, 0, 1), (0, 1, 0)}
    fs = FactorSet(3, frozenset(words), A)
    pruned = prune_to_biextendable(fs)
    assert {(0,), (1,), (0, 1), (1, 0)} <= set(pruned.words)
    assert prune_to_biextendable(pruned).words == pruned.words
    # a letter seen only at the left edge of the images has no left extension
    m = Morphism.from_strings({"a": "ab", "b": "bb"})
    pruned = prune_to_biextendable(substitutive_factors(m, 6))
    assert (0,) not in pruned.words and (1, 1) in pruned.words
