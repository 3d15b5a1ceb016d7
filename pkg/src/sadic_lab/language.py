"""Finite-horizon factor languages of substitutions and directive sequences."""

from dataclasses import dataclass

from .errors import HorizonError, InputError
from .morphism import Alphabet, apply


@dataclass(frozen=True)
class FactorSet:
    max_len: int
    words: frozenset
    alphabet: Alphabet
    extendability_pruned: bool = False
    exact: bool = True

    def __contains__(self, w):
        return tuple(w) in self.words

    def __len__(self):
        return len(self.words)

    def of_length(self, n):
        return sorted(w for w in self.words if len(w) == n)

    def restrict(self, n):
        return FactorSet(n, frozenset(w for w in self.words if len(w) <= n), self.alphabet,
                         self.extendability_pruned, self.exact)

    def to_json(self):
        return {
            "max_len": self.max_len,
            "pruned": self.extendability_pruned,
            "exact": self.exact,
            "alphabet": list(self.alphabet.names) if self.alphabet.names else self.alphabet.size,
            "words": [self.alphabet.show(w) for w in sorted(self.words, key=lambda u: (len(u), u))],
        }


def factors_upto(w, n, out=None):
    out = set() if out is None else out
    w = tuple(w)
    size = len(w)
    for i in range(size + 1):
        for j in range(i, min(size, i + n) + 1):
            out.add(w[i:j])
    return out


def _image_factors(m, words, n):
    """Factors of length <= n of m(u) for u in words."""
    out = set()
    for u in words:
        factors_upto(apply(m, u), n, out)
    return out


def _spanning_factors(m, u, n, out):
    """Factors of length <= n of m(u) that start in the first block and end in the last.

    When u[1:] and u[:-1] are already known, these are the only new ones.
    """
    if len(u) < 2:
        return factors_upto(apply(m, u), n, out)
    img = apply(m, u)
    first = len(m.images[u[0]])
    last = len(img) - len(m.images[u[-1]])
    for i in range(first):
        for j in range(max(last + 1, i), min(len(img), i + n) + 1):
            out.add(img[i:j])
    return out


def _close(m, seed, n):
    """Least S containing seed with factors<=n(m(S)) contained in S.

    The seed must be closed under taking subwords.
    """
    current = set(seed)
    frontier = set(seed)
    while frontier:
        new = set()
        for u in frontier:
            _spanning_factors(m, u, n, new)
        new -= current
        current |= new
        frontier = new
    return current


def substitutive_factors(m, max_len):
    if not m.is_substitution():
        raise InputError("substitutive language needs a substitution")
    if max_len < 1:
        raise InputError("max_len must be positive")
    seed = {()} | {(a,) for a in m.domain.letters()}
    return FactorSet(max_len, frozenset(_close(m, seed, max_len)), m.domain)


def contains(fs, w):
    w = tuple(w)
    if len(w) > fs.max_len:
        raise HorizonError(f"word of length {len(w)} exceeds horizon {fs.max_len}", needed=len(w))
    return w in fs.words


def prune_to_biextendable(fs):
    """Keep words that extend on both sides inside the set, iterated to a fixed point.

    Longest words are kept while all their proper subwords survive, so the
    result stays closed under subwords.
    """
    n = fs.max_len
    words = set(fs.words)
    letters = range(fs.alphabet.size)
    while True:
        keep = set()
        for w in words:
            if len(w) < n:
                left = any((b,) + w in words for b in letters)
                right = any(w + (c,) in words for c in letters)
                if left and right:
                    keep.add(w)
            elif w[1:] in words and w[:-1] in words:
                keep.add(w)
        keep = {w for w in keep if not w or (w[1:] in keep and w[:-1] in keep)}
        if keep == words:
            break
        words = keep
    return FactorSet(n, frozenset(words), fs.alphabet, True, fs.exact)


def sadic_factors(D, level, max_len):
    """Factors up to max_len of the level-`level` language of a directive sequence.

    Exact when D has a cycle; otherwise a lower approximation flagged exact=False.
    """
    if level < 0:
        raise InputError("level must be nonnegative")
    if max_len < 1:
        raise InputError("max_len must be positive")
    if D.cycle is None:
        if level > D.p:
            raise InputError(f"level {level} beyond a cycle-less sequence")
        words = {()}
        top = D.p
        exact = False
    else:
        top = max(level, D.p)
        C = D.cycle_composition(top)
        base = {()}
        for r in range(1, D.c + 1):
            part = D.composition(top, top + r)
            base |= _image_factors(part, [(a,) for a in part.domain.letters()], max_len)
        words = _close(C, base, max_len)
        exact = True
    for n in range(top - 1, level - 1, -1):
        m = D.level_morphism(n)
        src = set(words) | {(a,) for a in m.domain.letters()}
        words = {()}
        for u in src:
            _spanning_factors(m, u, max_len, words)
    return FactorSet(max_len, frozenset(words), D.alphabet(level), False, exact)
