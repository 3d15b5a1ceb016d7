"""Randomized checks of the structural facts about centered representations.

Each suite is a hypothesis test that also counts the cases it actually
exercised, so callers can insist on a minimum.
"""

from collections import Counter
from itertools import combinations

from hypothesis import HealthCheck, assume, given, settings, strategies as st

from sadic_lab.errors import InfiniteParsesError
from sadic_lab.injectivity import injective_on_two_sided
from sadic_lab.morphism import Alphabet, Morphism, compose, permutativity
from sadic_lab.points import EventuallyPeriodicPoint
from sadic_lab.recognizer import (compose_parses, image_point, is_parse_of, parses_share_cut,
                                  point_parses)
from strategies import morphisms, points, words

CASES = 600
exercised = Counter()
SETTINGS = settings(max_examples=CASES, deadline=None, database=None,
                    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])


def _parses(y, m):
    try:
        return point_parses(y, m)
    except InfiniteParsesError:
        return None


@st.composite
def image_points(draw, m, aperiodic=False):
    """Either T^k m(x) for an eventually periodic x, or a short periodic word."""
    k = m.codomain.size
    if draw(st.booleans()):
        x = draw(points(m.domain.size, aperiodic))
        return image_point(m, x, draw(st.integers(0, 6)))
    return EventuallyPeriodicPoint.periodic(draw(words(k, 1, 4)))


def _orbit_key(x):
    c = x.canonical()
    if c.is_periodic():
        u = c.left_period
        return min(u[i:] + u[:i] for i in range(len(u)))
    return c.left_period, c.center, c.right_period


@SETTINGS
@given(st.data())
def uniqueness_along_orbits(data):
    m = data.draw(morphisms(k=2, codomain=2, hi=3))
    y = data.draw(image_points(m, aperiodic=True))
    assume(not y.is_periodic())
    parses = _parses(y, m)
    assume(parses is not None)
    seen = Counter(_orbit_key(p.preimage) for p in parses)
    assert all(n == 1 for n in seen.values()), (m, y)
    exercised["uniqueorbit"] += 1


@st.composite
def permutative_morphisms(draw):
    k = draw(st.integers(2, 3))
    firsts = draw(st.permutations(range(k)))
    side = draw(st.sampled_from(["left", "right"]))
    imgs = []
    for a in range(k):
        tail = draw(words(k, 0, 3))
        imgs.append((firsts[a],) + tail if side == "left" else tail + (firsts[a],))
    return Morphism(Alphabet(k), Alphabet(k), tuple(imgs))


@SETTINGS
@given(st.data())
def permutative_at_most_one(data):
    m = data.draw(permutative_morphisms())
    assert permutativity(m) != "neither"
    y = data.draw(image_points(m, aperiodic=True))
    assume(not y.is_periodic())
    assert len(point_parses(y, m)) <= 1, (m, y)
    exercised["permutative"] += 1


@st.composite
def conjugate_pairs(draw):
    """(m, w, s) with w s(a) = m(a) w: m(a) = w r_a, s(a) = r_a w."""
    k = draw(st.integers(2, 3))
    w = draw(words(2, 1, 3))
    rests = [draw(words(2, 0, 3)) for _ in range(k)]
    m = Morphism(Alphabet(k), Alphabet(2), tuple(w + r for r in rests))
    s = Morphism(Alphabet(k), Alphabet(2), tuple(r + w for r in rests))
    return m, w, s


@SETTINGS
@given(conjugate_pairs(), st.data())
def conjugacy_preserves_counts(pair, data):
    m, w, s = pair
    y = data.draw(image_points(m if data.draw(st.booleans()) else s))
    a, b = _parses(y, m), _parses(y, s)
    if a is None or b is None:
        assert a is None and b is None, (m, s, y)
    else:
        assert len(a) == len(b), (m, s, y)
        # representations correspond along the same preimage orbits
        assert Counter(_orbit_key(p.preimage) for p in a) == \
            Counter(_orbit_key(p.preimage) for p in b)
    exercised["conjugacy"] += 1


@SETTINGS
@given(st.data())
def composition_parse_counts(data):
    sigma = data.draw(morphisms(k=2, codomain=2, hi=3))
    tau = data.draw(morphisms(k=2, codomain=2, hi=3))
    ts = compose(tau, sigma)
    z = data.draw(image_points(ts))
    whole = _parses(z, ts)
    outer = _parses(z, tau)
    assume(whole is not None and outer is not None)
    inner = [_parses(p.preimage, sigma) for p in outer]
    assume(all(q is not None for q in inner))
    assert len(whole) == sum(len(q) for q in inner), (tau, sigma, z)
    built = {compose_parses(o, i).key() for o, q in zip(outer, inner) for i in q}
    assert built == {p.key() for p in whole}
    exercised["tele"] += 1


@st.composite
def injective_morphisms(draw):
    m = draw(morphisms(k=draw(st.integers(2, 3)), codomain=2, hi=4))
    assume(injective_on_two_sided(m))
    return m


@SETTINGS
@given(injective_morphisms(), st.data())
def injective_parses_cut_disjoint(m, data):
    y = data.draw(image_points(m))
    parses = _parses(y, m)
    assert parses is not None
    for a, b in combinations(parses, 2):
        assert not parses_share_cut(a, b), (m, y)
    exercised["injectivecut"] += 1


@SETTINGS
@given(st.data())
def cut_disjointness_propagates(data):
    sigma = data.draw(morphisms(k=2, codomain=2, hi=3))
    tau = data.draw(morphisms(k=2, codomain=2, hi=3))
    z = data.draw(image_points(tau))
    outer = _parses(z, tau)
    assume(outer is not None)
    for p, q in combinations(outer, 2):
        if parses_share_cut(p, q):
            continue
        ip, iq = _parses(p.preimage, sigma), _parses(q.preimage, sigma)
        if ip is None or iq is None:
            continue
        for a in ip:
            for b in iq:
                ca, cb = compose_parses(p, a), compose_parses(q, b)
                assert is_parse_of(ca, z) and is_parse_of(cb, z)
                assert not parses_share_cut(ca, cb), (tau, sigma, z)
    exercised["cutpropagation"] += 1


SUITES = {
    "uniqueorbit": uniqueness_along_orbits,
    "permutative": permutative_at_most_one,
    "conjugacy": conjugacy_preserves_counts,
    "tele": composition_parse_counts,
    "injectivecut": injective_parses_cut_disjoint,
    "cutpropagation": cut_disjointness_propagates,
}
