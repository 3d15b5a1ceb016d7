"""Alphabets, words and non-erasing morphisms.

Letters are the integers 0..size-1; display names are cosmetic.  Words are
plain tuples of letter indices.
"""

from dataclasses import dataclass
from math import gcd

from .errors import AmbiguityError, InputError, WellDefinednessError
from .matrix import IntegerMatrix, boolean_power_positive, integer_rank


@dataclass(frozen=True)
class Alphabet:
    size: int
    names: tuple = None

    def __post_init__(self):
        if self.size < 1:
            raise InputError("alphabet size must be positive")
        if self.names is not None:
            names = tuple(str(n) for n in self.names)
            object.__setattr__(self, "names", names)
            if len(names) != self.size or len(set(names)) != self.size:
                raise InputError("alphabet names must be distinct, one per letter")
            # the default names are stored as None so both spellings compare equal
            if names == tuple(str(i) for i in range(self.size)):
                object.__setattr__(self, "names", None)

    @classmethod
    def of(cls, names):
        names = list(names)
        return cls(len(names), tuple(names))

    def name(self, letter):
        return self.names[letter] if self.names is not None else str(letter)

    def index(self, name):
        if self.names is None:
            try:
                i = int(name)
            except ValueError:
                raise InputError(f"unknown letter {name!r}") from None
            if not 0 <= i < self.size:
                raise InputError(f"letter {name!r} out of range")
            return i
        try:
            return self.names.index(str(name))
        except ValueError:
            raise InputError(f"unknown letter {name!r}") from None

    def word(self, text):
        """Parse a word from a string of single-character names or a list of names."""
        if isinstance(text, str):
            text = text.split() if " " in text.strip() else list(text)
        return tuple(self.index(t) for t in text)

    def show(self, w):
        parts = [self.name(a) for a in w]
        if all(len(p) == 1 for p in parts):
            return "".join(parts)
        return " ".join(parts)

    def letters(self):
        return range(self.size)

    def compatible(self, other):
        return self.size == other.size


def _check_word(w, alphabet):
    for a in w:
        if not (isinstance(a, int) and 0 <= a < alphabet.size):
            raise InputError(f"letter {a!r} outside alphabet of size {alphabet.size}")


@dataclass(frozen=True)
class Morphism:
    domain: Alphabet
    codomain: Alphabet
    images: tuple

    def __post_init__(self):
        imgs = tuple(tuple(w) for w in self.images)
        object.__setattr__(self, "images", imgs)
        if len(imgs) != self.domain.size:
            raise InputError("one image per domain letter is required")
        for w in imgs:
            if not w:
                raise InputError("morphisms must be non-erasing")
            _check_word(w, self.codomain)

    @classmethod
    def from_strings(cls, images, domain=None, codomain=None):
        """Build from a dict or list of image strings, e.g. {'0': '01', '1': '0'}."""
        if isinstance(images, dict):
            keys = list(images)
            domain = domain or Alphabet.of(keys)
            vals = [images[k] for k in keys]
        else:
            vals = list(images)
            domain = domain or Alphabet(len(vals))
        if codomain is None:
            codomain = domain
        return cls(domain, codomain, tuple(codomain.word(v) for v in vals))

    def __call__(self, w):
        return apply(self, w)

    def __len__(self):
        return self.domain.size

    def is_substitution(self):
        return self.domain.compatible(self.codomain)

    def lengths(self):
        return [len(w) for w in self.images]

    def show(self):
        return ", ".join(f"{self.domain.name(a)}->{self.codomain.show(w)}"
                         for a, w in enumerate(self.images))

    def __repr__(self):
        return f"Morphism({self.show()})"

    def reversed(self):
        return Morphism(self.domain, self.codomain, tuple(w[::-1] for w in self.images))

    def to_json(self):
        return {
            "domain": list(self.domain.names) if self.domain.names else list(range(self.domain.size)),
            "codomain": list(self.codomain.names) if self.codomain.names else list(range(self.codomain.size)),
            "images": [list(w) for w in self.images],
        }

    @classmethod
    def from_json(cls, data):
        try:
            dom, cod, imgs = data["domain"], data["codomain"], data["images"]
        except (KeyError, TypeError):
            raise InputError("morphism JSON needs domain, codomain and images") from None
        return cls(Alphabet.of(dom), Alphabet.of(cod), tuple(tuple(w) for w in imgs))


def identity(alphabet):
    if isinstance(alphabet, int):
        alphabet = Alphabet(alphabet)
    return Morphism(alphabet, alphabet, tuple((a,) for a in range(alphabet.size)))


def apply(m, w):
    out = []
    imgs = m.images
    n = len(imgs)
    for a in w:
        if not (isinstance(a, int) and 0 <= a < n):
            raise InputError(f"letter {a!r} outside the domain")
        out.extend(imgs[a])
    return tuple(out)


def compose(outer, inner):
    """outer o inner: letters of inner's domain to words over outer's codomain."""
    if not inner.codomain.compatible(outer.domain):
        raise InputError("alphabet mismatch in composition")
    return Morphism(inner.domain, outer.codomain, tuple(apply(outer, w) for w in inner.images))


def power(m, n):
    if not m.is_substitution():
        raise InputError("powers need a substitution")
    out = identity(m.domain)
    for _ in range(n):
        out = compose(m, out)
    return out


def incidence_matrix(m):
    """Rows indexed by codomain letters, columns by domain letters."""
    rows, cols = m.codomain.size, m.domain.size
    entries = [0] * (rows * cols)
    for j, w in enumerate(m.images):
        for b in w:
            entries[b * cols + j] += 1
    return IntegerMatrix(rows, cols, tuple(entries))


def total_length(m):
    return sum(len(w) for w in m.images)


def permutativity(m):
    firsts = [w[0] for w in m.images]
    lasts = [w[-1] for w in m.images]
    left = len(set(firsts)) == len(firsts)
    right = len(set(lasts)) == len(lasts)
    if left and right:
        return "both"
    if left:
        return "left"
    if right:
        return "right"
    return "neither"


def is_left_or_right_permutative(m):
    return permutativity(m) != "neither"


def _conjugate(m, w, side):
    """The morphism s with w.s(a) = m(a).w (left) or s(a).w = w.m(a) (right), or None."""
    k = len(w)
    out = []
    for img in m.images:
        if side == "left":
            t = img + w
            if t[:k] != w:
                return None
            out.append(t[k:])
        else:
            t = w + img
            if k and t[-k:] != w:
                return None
            out.append(t[:len(t) - k])
    return Morphism(m.domain, m.codomain, tuple(out))


def _power_prefix(u, n):
    reps = n // len(u) + 1
    return (u * reps)[:n]


def _power_suffix(u, n):
    reps = n // len(u) + 1
    t = u * reps
    return t[len(t) - n:]


def rotational_conjugacy_search(m, max_w_len=None, predicate=is_left_or_right_permutative):
    """Shortest w (left side first) giving a rotational conjugate that satisfies predicate.

    Returns (w, side, conjugate) or None when nothing is found within the bound.
    With predicate=None every conjugate qualifies, so the empty word wins.
    """
    if max_w_len is None:
        max_w_len = 2 * total_length(m)
    first = m.images[0]
    for n in range(max_w_len + 1):
        # a witness of length n is forced: prefix (suffix) of a power of any image
        for side, w in (("left", _power_prefix(first, n)), ("right", _power_suffix(first, n))):
            conj = _conjugate(m, w, side)
            if conj is not None and (predicate is None or predicate(conj)):
                return w, side, conj
    return None


def is_proper(m):
    return len({w[0] for w in m.images}) == 1 and len({w[-1] for w in m.images}) == 1


def _letter_graph(m):
    return [sorted(set(w)) for w in m.images]


def _strongly_connected(adj):
    n = len(adj)

    def reach(graph):
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in graph[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == n

    rev = [[] for _ in range(n)]
    for u in range(n):
        for v in adj[u]:
            rev[v].append(u)
    return reach(adj) and reach(rev)


def _period(adj):
    level = {0: 0}
    queue = [0]
    for u in queue:
        for v in adj[u]:
            if v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    g = 0
    for u in range(len(adj)):
        for v in adj[u]:
            g = gcd(g, level[u] + 1 - level[v])
    return g


def is_primitive(m, max_power=None):
    """('primitive', n) with n least, ('not_primitive', None) or ('unknown', None)."""
    if not m.is_substitution():
        raise InputError("primitivity needs a square incidence matrix")
    size = m.domain.size
    if max_power is None:
        max_power = (size - 1) ** 2 + 1
    adj = _letter_graph(m)
    if not _strongly_connected(adj) or _period(adj) != 1:
        return ("not_primitive", None)
    n = boolean_power_positive(incidence_matrix(m), max_power)
    if n is None:
        return ("unknown", None)
    return ("primitive", n)


def factorizations(target, code, limit=2):
    """Up to `limit` factorizations of target into images of code (tuples of letters)."""
    images = code.images
    n = len(target)
    # ways[i]: can target[i:] be factorized (memoized reachability)
    ok = [False] * (n + 1)
    ok[n] = True
    for i in range(n - 1, -1, -1):
        for img in images:
            j = i + len(img)
            if j <= n and ok[j] and target[i:j] == img:
                ok[i] = True
                break
    if not ok[0]:
        return []
    found = []

    def walk(i, acc):
        if len(found) >= limit:
            return
        if i == n:
            found.append(tuple(acc))
            return
        for a, img in enumerate(images):
            j = i + len(img)
            if j <= n and ok[j] and target[i:j] == img:
                acc.append(a)
                walk(j, acc)
                acc.pop()

    walk(0, [])
    return found


def _greedy_factor(target, code):
    out = []
    i = 0
    while i < len(target):
        for a, img in enumerate(code.images):
            if target[i:i + len(img)] == img:
                out.append(a)
                i += len(img)
                break
        else:
            return None
    return tuple(out)


def conjugate_by_coding(theta, code):
    """theta1 with code o theta1 = theta o code, when the factorization is unique."""
    if not theta.is_substitution() or not theta.domain.compatible(code.codomain):
        raise InputError("theta must be a substitution on the codomain of code")
    if len(set(code.images)) != len(code.images):
        raise InputError("code must be injective on letters")
    out = []
    for a in code.domain.letters():
        target = apply(theta, code.images[a])
        greedy = _greedy_factor(target, code)
        facts = factorizations(target, code, limit=2)
        if not facts:
            raise WellDefinednessError(
                f"image of {code.domain.name(a)} has no factorization into code words")
        if len(facts) > 1:
            raise AmbiguityError(
                f"image of {code.domain.name(a)} factorizes in more than one way")
        if greedy is not None and greedy != facts[0]:
            raise AmbiguityError("greedy and exhaustive factorizations disagree")
        out.append(facts[0])
    return Morphism(code.domain, code.domain, tuple(out))


def rank(m):
    return integer_rank(incidence_matrix(m))
