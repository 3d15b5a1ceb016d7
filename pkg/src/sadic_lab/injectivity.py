"""Injectivity of morphisms on infinite words, decompositions of non-injective
morphisms, and sufficient conditions for full recognizability."""

from dataclasses import dataclass, field

from .errors import PreconditionError
from .morphism import (Alphabet, Morphism, compose, identity, incidence_matrix,
                       permutativity, rotational_conjugacy_search)
from .matrix import integer_rank


@dataclass(frozen=True)
class InjectivityWitness:
    """x = prefix_a + cycle_a^inf and x' = prefix_b + cycle_b^inf have equal images.

    Empty cycles mean the finite images already coincide (any common tail works).
    """
    prefix_a: tuple
    prefix_b: tuple
    cycle_a: tuple = ()
    cycle_b: tuple = ()

    def finite_pair(self):
        return self.prefix_a + self.cycle_a, self.prefix_b + self.cycle_b

    def to_json(self):
        return {"prefix_a": list(self.prefix_a), "prefix_b": list(self.prefix_b),
                "cycle_a": list(self.cycle_a), "cycle_b": list(self.cycle_b)}


@dataclass(frozen=True)
class InjectivityResult:
    injective: bool
    witness: InjectivityWitness = None

    def __bool__(self):
        return self.injective


def _moves(m, state):
    """Successors of a dangling-suffix state (ahead, s): side `ahead` leads by s."""
    ahead, s = state
    behind = 1 - ahead
    for c, img in enumerate(m.images):
        n = len(img)
        if n <= len(s):
            if s[:n] == img:
                yield behind, c, ((ahead, s[n:]) if n < len(s) else None)
        elif img[:len(s)] == s:
            yield behind, c, (behind, img[len(s):])


def _initial_states(m):
    for a, ia in enumerate(m.images):
        for b, ib in enumerate(m.images):
            if a == b:
                continue
            if ia == ib:
                if a < b:
                    yield a, b, None
            elif len(ia) < len(ib) and ib[:len(ia)] == ia:
                yield a, b, (1, ib[len(ia):])


def injective_on_right_infinite(m):
    """Decide injectivity on right-infinite words via the dangling-suffix graph."""
    for a, b, start in _initial_states(m):
        words = ([a], [b])
        if start is None:
            return InjectivityResult(False, InjectivityWitness((a,), (b,)))
        found = _search_from(m, start, words)
        if found is not None:
            return InjectivityResult(False, found)
    return InjectivityResult(True)


def _search_from(m, start, words):
    # iterative DFS; letters ascending; gray states on the stack detect cycles
    path = [(start, None, None)]  # (state, side, letter that led here)
    on_stack = {start: 0}
    done = set()
    iters = [iter(_moves(m, start))]
    while iters:
        try:
            side, c, nxt = next(iters[-1])
        except StopIteration:
            st = path.pop()[0]
            del on_stack[st]
            done.add(st)
            iters.pop()
            continue
        if nxt is None:
            steps = [(s, l) for _, s, l in path[1:]] + [(side, c)]
            return _witness(words, steps, [])
        if nxt in on_stack:
            i = on_stack[nxt]
            steps = [(s, l) for _, s, l in path[1:]] + [(side, c)]
            return _witness(words, steps[:i], steps[i:])
        if nxt in done:
            continue
        on_stack[nxt] = len(path)
        path.append((nxt, side, c))
        iters.append(iter(_moves(m, nxt)))
    return None


def _witness(words, pre_steps, cyc_steps):
    pa, pb = list(words[0]), list(words[1])
    for side, c in pre_steps:
        (pa if side == 0 else pb).append(c)
    ca, cb = [], []
    for side, c in cyc_steps:
        (ca if side == 0 else cb).append(c)
    return InjectivityWitness(tuple(pa), tuple(pb), tuple(ca), tuple(cb))


def injective_on_left_infinite(m):
    res = injective_on_right_infinite(m.reversed())
    if res.injective:
        return res
    w = res.witness
    # letters are read right to left for the reversed morphism
    return InjectivityResult(False, InjectivityWitness(
        w.prefix_a[::-1], w.prefix_b[::-1], w.cycle_a[::-1], w.cycle_b[::-1]))


def injective_on_two_sided(m):
    return bool(injective_on_right_infinite(m)) and bool(injective_on_left_infinite(m))


@dataclass(frozen=True)
class Decomposition:
    """original = sigma_tilde o tau."""
    tau: Morphism
    sigma_tilde: Morphism
    witness: tuple

    def check(self, original):
        return compose(self.sigma_tilde, self.tau).images == original.images


def _split_from_witness(m, w):
    """Return (x_[0,l), x'_0, v) with m(x'_0) = m(x_[0,l)) v, v a proper prefix of m(x_l).

    The witness starts with the shorter image on side a.
    """
    b = w.prefix_b[0]
    target = m.images[b]

    def x_letters():
        yield from w.prefix_a
        while w.cycle_a:
            yield from w.cycle_a

    run = []
    consumed = 0
    for c in x_letters():
        img = m.images[c]
        if consumed + len(img) > len(target):
            return tuple(run), b, target[consumed:]
        run.append(c)
        consumed += len(img)
        if consumed == len(target):
            return tuple(run), b, ()
    raise AssertionError("witness does not cover the longer image")


def decompose_non_injective(m, witness=None):
    """One length-reducing step from a non-injectivity witness on right-infinite words."""
    if witness is None:
        res = injective_on_right_infinite(m)
        if res.injective:
            raise PreconditionError("morphism is injective on right-infinite words")
        witness = res.witness
    run, bp, v = _split_from_witness(m, witness)
    n = m.domain.size
    if not v:
        keep = [c for c in range(n) if c != bp]
        new_index = {c: i for i, c in enumerate(keep)}
        names = None if m.domain.names is None else tuple(m.domain.names[c] for c in keep)
        small = Alphabet(n - 1, names)
        tau_imgs = []
        for c in range(n):
            if c == bp:
                tau_imgs.append(tuple(new_index[d] for d in run))
            else:
                tau_imgs.append((new_index[c],))
        sigma_tilde = Morphism(small, m.codomain, tuple(m.images[c] for c in keep))
        tau = Morphism(m.domain, small, tuple(tau_imgs))
    else:
        imgs = list(m.images)
        imgs[bp] = tuple(v)
        sigma_tilde = Morphism(m.domain, m.codomain, tuple(imgs))
        tau_imgs = [(c,) for c in range(n)]
        tau_imgs[bp] = tuple(run) + (bp,)
        tau = Morphism(m.domain, m.domain, tuple(tau_imgs))
    return Decomposition(tau, sigma_tilde, witness.finite_pair())


def _reverse_decomposition(d):
    return Decomposition(d.tau.reversed(), d.sigma_tilde.reversed(),
                         tuple(u[::-1] for u in d.witness))


def decompose_reduce_alphabet(m):
    """Iterate single steps until the alphabet shrinks; needs two-sided non-injectivity."""
    right = injective_on_right_infinite(m)
    mirrored = False
    work = m
    if right.injective:
        if injective_on_left_infinite(m).injective:
            raise PreconditionError("morphism is injective on two-sided words")
        work = m.reversed()
        mirrored = True
    tau = identity(work.domain)
    sigma = work
    first_witness = None
    steps = []
    while True:
        d = decompose_non_injective(sigma)
        if first_witness is None:
            first_witness = d.witness
        steps.append(d)
        tau = compose(d.tau, tau)
        sigma = d.sigma_tilde
        if sigma.domain.size < work.domain.size:
            break
    out = Decomposition(tau, sigma, first_witness)
    if mirrored:
        out = _reverse_decomposition(out)
    return out


@dataclass(frozen=True)
class RecognizabilityCertificate:
    verdict: str
    reasons: tuple = field(default_factory=tuple)

    def to_json(self):
        reasons = []
        witness = {}
        for r in self.reasons:
            if isinstance(r, tuple):
                reasons.append(r[0])
                witness = {"word": list(r[1]), "side": r[2]}
            else:
                reasons.append(r)
        return {"verdict": self.verdict, "reasons": reasons, "witness": witness}

    def reason_names(self):
        return [r[0] if isinstance(r, tuple) else r for r in self.reasons]


def full_recognizability_check(m, conj_bound=None):
    reasons = []
    if m.domain.size == 2:
        reasons.append("two_letter_domain")
    if integer_rank(incidence_matrix(m)) == m.domain.size:
        reasons.append("full_rank")
    p = permutativity(m)
    if p in ("left", "both"):
        reasons.append("left_permutative")
    if p in ("right", "both"):
        reasons.append("right_permutative")
    if p == "neither":
        found = rotational_conjugacy_search(m, conj_bound)
        if found is not None:
            w, side, _ = found
            reasons.append(("rotational_conjugate", w, side))
    verdict = "fully_recognizable_aperiodic" if reasons else "inconclusive"
    return RecognizabilityCertificate(verdict, tuple(reasons))
