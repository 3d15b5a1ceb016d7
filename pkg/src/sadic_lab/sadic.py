"""Level-by-level analysis of directive sequences, quantitative bounds, limit
words, fixed points of substitutions and return words."""

from dataclasses import dataclass, field
from math import gcd

from .directive import DirectiveSequence
from .errors import HorizonError, InfiniteParsesError, InputError
from .injectivity import full_recognizability_check
from .language import sadic_factors, substitutive_factors
from .morphism import Alphabet, Morphism, apply, conjugate_by_coding, power
from .mosse import mosse_search
from .parallel import ordered_map
from .points import EventuallyPeriodicPoint, primitive_root
from .recognizer import point_parses


def level_morphism(D, n):
    return D.level_morphism(n)


def telescope(D, breakpoints, stride=None):
    """Block compositions sigma_[n_k, n_{k+1}).

    `breakpoints` lists the first blocks explicitly; after the last breakpoint
    blocks have length `stride`, which requires a cycle.
    """
    bps = list(breakpoints)
    if not bps or bps[0] != 0 or any(b >= c for b, c in zip(bps, bps[1:])):
        raise InputError("breakpoints must be strictly increasing and start at 0")
    if D.cycle is None:
        if stride is not None:
            raise InputError("a stride needs a cycle")
        if bps[-1] != D.p:
            raise InputError("breakpoints of a cycle-less sequence must end at its length")
        return DirectiveSequence(tuple(D.composition(a, b) for a, b in zip(bps, bps[1:])))
    if stride is None or stride < 1:
        raise InputError("a cyclic sequence needs a positive stride")
    prefix = [D.composition(a, b) for a, b in zip(bps, bps[1:])]
    start = bps[-1]
    while start < D.p:
        prefix.append(D.composition(start, start + stride))
        start += stride
    blocks = D.c // gcd(D.c, stride)
    cycle = [D.composition(start + t * stride, start + (t + 1) * stride) for t in range(blocks)]
    return DirectiveSequence(tuple(prefix), tuple(cycle))


def _growing_letters(m):
    """Letters a with |m^k(a)| unbounded: a reaches a letter on a cycle of the
    letter graph whose image has length >= 2."""
    n = m.domain.size
    adj = [set(w) for w in m.images]
    reach = []
    for a in range(n):
        seen, stack = {a}, [a]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        reach.append(seen)
    # u lies on a cycle iff u is reachable from one of its successors
    cyclic = {u for u in range(n) if any(u in reach[v] for v in adj[u])}
    branching = {u for u in cyclic if len(m.images[u]) >= 2}
    return {a for a in range(n) if reach[a] & branching}


def is_everywhere_growing(D):
    """True/False for sequences with a cycle, None when undetermined at finite depth."""
    if D.cycle is None:
        return None
    C = D.cycle_composition(D.p)
    return len(_growing_letters(C)) == C.domain.size


# ---------------------------------------------------------------- levels

@dataclass(frozen=True)
class LevelReport:
    level: int
    verdict: str
    method: str
    detail: dict = field(default_factory=dict)
    periodic: bool = False
    represents: str = ""

    def to_json(self):
        return {"level": self.level, "verdict": self.verdict, "method": self.method,
                "periodic": self.periodic, "represents": self.represents,
                "detail": self.detail}


def _periodic_points_in(lang):
    """Primitive periods u with the length-h window of u^inf in the language."""
    h = lang.max_len
    found = set()
    for w in lang.of_length(h):
        for p in range(1, h // 2 + 1):
            if all(w[i] == w[i + p] for i in range(h - p)):
                u = primitive_root(w[:p])
                # rotate to a canonical representative
                found.add(min(u[i:] + u[:i] for i in range(len(u))))
                break
    return sorted(found, key=lambda u: (len(u), u))


def _analyze_level(D, n, lang_horizon, ell_max):
    m = D.level_morphism(n)
    represents = ""
    if D.cycle is not None and n >= D.p:
        represents = f"levels {n} + {D.c}k"
    try:
        upper = sadic_factors(D, n + 1, lang_horizon)
    except HorizonError as e:
        raise HorizonError(f"level {n}: {e}", needed=e.needed) from None
    cert = full_recognizability_check(m)
    if cert.verdict == "fully_recognizable_aperiodic":
        # the certificate covers aperiodic points; periodic points of the
        # upper shift are checked separately
        bad = _periodic_counterexample(m, upper)
        if bad is None:
            return LevelReport(n, "recognizable_certified", "full_recognizability",
                               {"certificate": cert.to_json(), "lang_exact": upper.exact},
                               represents=represents)
        y, parses = bad
        return LevelReport(n, "not_recognizable", "parse_counterexample",
                           {"certificate": cert.to_json(), "point": y.to_json(),
                            "parses": [p.to_json() for p in parses]},
                           periodic=True, represents=represents)
    try:
        out = mosse_search(m, upper, ell_max)
    except HorizonError as e:
        raise HorizonError(f"level {n}: {e}", needed=e.needed) from None
    detail = {"certificate": cert.to_json(), "mosse": out.to_json(), "lang_exact": upper.exact}
    if out.kind == "certificate":
        return LevelReport(n, "recognizable_certified", "mosse", detail, represents=represents)
    if out.kind == "counterexample":
        periodic = out.point is not None and out.point.is_periodic()
        return LevelReport(n, "not_recognizable", "mosse", detail, periodic=periodic,
                           represents=represents)
    return LevelReport(n, "unknown", "mosse", detail, represents=represents)


def _periodic_counterexample(m, upper):
    """A periodic x of the upper language whose image has two or more parses."""
    for u in _periodic_points_in(upper):
        y = EventuallyPeriodicPoint.periodic(apply(m, u))
        try:
            parses = point_parses(y, m, upper)
        except InfiniteParsesError:
            return y, []
        if len(parses) >= 2:
            return y, parses
    return None


def analyze_levels(D, max_level, lang_horizon=64, ell_max=16):
    """One report per level 0..max_level; cycle positions are reported once."""
    last = max_level
    if D.cycle is not None:
        last = min(max_level, D.p + D.c - 1)
    elif max_level >= D.p:
        last = D.p - 1
    levels = list(range(last + 1))
    return ordered_map(lambda n: _analyze_level(D, n, lang_horizon, ell_max), levels)


# ---------------------------------------------------------------- bounds

def eventual_bound(K, L):
    if K < 2:
        raise InputError("K must be at least 2")
    if L < 1:
        raise InputError("L must be positive")
    return (K - 1) * ((K - 1 + (K - 1).bit_length() - 1) * L + 1)


def language_count_bound(K):
    if K < 1:
        raise InputError("K must be positive")
    num = (K * K - 3 * K + 5) * K
    assert num % 3 == 0
    return num // 3


# ---------------------------------------------------------------- limit words

def _pair_map(m):
    def f(pair):
        a, b = pair
        return m.images[a][-1], m.images[b][0]
    return f


def _expand_pair(D, level, chain, radius):
    """Two-sided window around the origin of the limit word given by a chain of
    pairs at levels level, level + c, ...; chain[j] is the pair at depth j."""
    j = 0
    while True:
        a, b = chain(j)
        top = level + j * (D.c or 0)
        M = D.composition(0, top)
        left, right = M.images[a], M.images[b]
        if (len(left) >= radius and len(right) >= radius) or j > 64 + radius:
            return left[len(left) - min(radius, len(left)):], right[:radius]
        j += 1


@dataclass(frozen=True)
class LimitWord:
    level: int
    pair: tuple
    cycle: tuple
    in_shift: bool
    sequence: DirectiveSequence = field(repr=False, compare=False, default=None)

    def window(self, radius):
        """(left, right) halves: x[-radius:0] and x[0:radius]."""
        L = len(self.cycle)

        def chain(j):
            return self.cycle[(-j) % L]
        return _expand_pair(self.sequence, self.level, chain, radius)

    def to_json(self):
        return {"level": self.level, "pair": list(self.pair),
                "cycle": [list(p) for p in self.cycle], "in_shift": self.in_shift}


def enumerate_limit_words(D, lang_horizon=8):
    """Limit words as periodic points of the pair map of the cycle composition."""
    if D.cycle is None:
        raise InputError("limit-word enumeration needs a cycle")
    if not is_everywhere_growing(D):
        raise InputError("limit-word enumeration needs an everywhere growing sequence")
    p = D.p
    C = D.cycle_composition(p)
    f = _pair_map(C)
    K = C.domain.size
    pairs = [(a, b) for a in range(K) for b in range(K)]
    lang = sadic_factors(D, p, max(2, lang_horizon))
    out = []
    seen = set()
    for z in pairs:
        if z in seen:
            continue
        orbit, w = [z], f(z)
        while w != z and len(orbit) <= len(pairs):
            orbit.append(w)
            w = f(w)
        if w != z:
            continue
        seen.update(orbit)
        # chain(j) must satisfy f(chain(j+1)) = chain(j): walk the orbit backwards
        for i, start in enumerate(orbit):
            cyc = tuple(orbit[i:] + orbit[:i])
            in_shift = all(pair in lang for pair in cyc)
            out.append(LimitWord(p, start, cyc, in_shift, D))
    out.sort(key=lambda lw: lw.pair)
    assert len(out) <= K * K
    return out


# ---------------------------------------------------------------- fixed points

def normalizing_power(m):
    """Least q with sigma^q(a) and sigma^{2q}(a) sharing first and last letters."""
    n = m.domain.size
    first = [w[0] for w in m.images]
    last = [w[-1] for w in m.images]
    for q in range(1, n * n + 2):
        fq, lq = list(range(n)), list(range(n))
        for _ in range(q):
            fq = [first[x] for x in fq]
            lq = [last[x] for x in lq]
        if all(fq[fq[a]] == fq[a] and lq[lq[a]] == lq[a] for a in range(n)):
            return q
    raise AssertionError("idempotent power not found")


@dataclass(frozen=True)
class FixedPoint:
    power: int
    seed: tuple
    growing: tuple
    morphism: Morphism = field(repr=False, compare=False, default=None)
    kind: str = "expanding"

    def window(self, radius):
        m = power(self.morphism, self.power)
        b, a = self.seed
        left, right = (b,), (a,)
        gb, ga = self.growing
        for _ in range(4 * radius + 8):
            if len(left) >= radius or not gb:
                break
            left = apply(m, left)
        for _ in range(4 * radius + 8):
            if len(right) >= radius or not ga:
                break
            right = apply(m, right)
        if not gb:
            left = (b,) * radius
        if not ga:
            right = (a,) * radius
        return left[-radius:], right[:radius]

    def as_point(self):
        """The point when both halves are visibly periodic, else None."""
        m = power(self.morphism, self.power)
        b, a = self.seed
        lb, ra = m.images[b], m.images[a]
        if set(lb) == {b} and set(ra) == {a}:
            return EventuallyPeriodicPoint((b,), (), (a,), 0).canonical()
        return None

    def to_json(self):
        pt = self.as_point()
        return {"power": self.power, "seed": list(self.seed), "growing": list(self.growing),
                "kind": self.kind, "point": pt.to_json() if pt else None}


def enumerate_fixed_points(m):
    if not m.is_substitution():
        raise InputError("fixed points need a substitution")
    q = normalizing_power(m)
    mq = power(m, q)
    grow = _growing_letters(mq)
    lang = substitutive_factors(m, 2)
    right = [a for a in m.domain.letters() if mq.images[a][0] == a]
    left = [b for b in m.domain.letters() if mq.images[b][-1] == b]
    out = []
    for b in left:
        for a in right:
            if (b, a) not in lang:
                continue
            gb, ga = b in grow, a in grow
            if gb and ga:
                kind = "expanding"
            elif not gb and not ga:
                kind = "bounded" if a == b else "unclassified"
            else:
                kind = "unclassified"
            out.append(FixedPoint(q, (b, a), (gb, ga), m, kind))
    if not grow:
        # nothing expands: every letter fixed by the power gives a constant point
        have = {fp.seed for fp in out}
        for a in m.domain.letters():
            if mq.images[a] == (a,) and (a, a) not in have:
                out.append(FixedPoint(q, (a, a), (False, False), m, "bounded"))
    out.sort(key=lambda fp: fp.seed)
    return out


# ---------------------------------------------------------------- return words

def _occurrences(u, w):
    k = len(w)
    return [i for i in range(len(u) - k + 1) if u[i:i + k] == w]


def return_words(fs, w):
    w = tuple(w)
    if w not in fs or not w:
        raise InputError("w must be a nonempty word of the language")
    k = len(w)
    out = set()
    for u in fs.words:
        if len(u) <= k or u[:k] != w or u[-k:] != w:
            continue
        if len(_occurrences(u, w)) == 2:
            out.add(u[:-k])
    # a word of maximal length starting with w and holding no second occurrence
    # means some return word may be longer than the horizon
    for u in fs.of_length(fs.max_len):
        if u[:k] == w and _occurrences(u, w) == [0]:
            raise HorizonError(f"return words of {fs.alphabet.show(w)} may exceed horizon "
                               f"{fs.max_len}", needed=fs.max_len + 1)
    return sorted(out, key=lambda v: (len(v), v))


def derived_coding_morphism(fs, w):
    words = return_words(fs, w)
    names = [chr(ord("A") + i) if i < 26 else f"R{i}" for i in range(len(words))]
    return Morphism(Alphabet.of(names), fs.alphabet, tuple(words))


# ---------------------------------------------------------------- constructions

def pair_coding(theta, lang=None):
    """The morphism sending fresh letters to the length-two words of the language."""
    lang = lang or substitutive_factors(theta, 2)
    pairs = lang.of_length(2)
    A = theta.domain
    if all(len(A.name(a)) == 1 for a in A.letters()):
        names = [A.show(p) for p in pairs]
    else:
        names = [f"{A.name(p[0])}.{A.name(p[1])}" for p in pairs]
    return Morphism(Alphabet.of(names), A, tuple(pairs))


def iterated_pair_codings(theta, stages):
    """Codings s_0..s_{stages-1} and conjugates theta_1..theta_stages."""
    codes, thetas = [], [theta]
    for _ in range(stages):
        s = pair_coding(thetas[-1])
        codes.append(s)
        thetas.append(conjugate_by_coding(thetas[-1], s))
    return codes, thetas


def iterated_pair_coding_sequence(theta=None, stages=2):
    """Directive sequence with prefix of iterated pair codings and the last conjugate as cycle."""
    if theta is None:
        theta = Morphism.from_strings({"0": "00100", "1": "00000"})
    codes, thetas = iterated_pair_codings(theta, stages)
    return DirectiveSequence(tuple(codes), (thetas[-1],))
