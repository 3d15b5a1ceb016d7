"""Desubstitution: parses of finite windows and of eventually periodic points,
cutting points, and the pairwise cut relation between parses."""

from dataclasses import dataclass
from itertools import combinations
from math import ceil

from .errors import HorizonError, InfiniteParsesError, InputError
from .morphism import apply, compose
from .points import EventuallyPeriodicPoint, lcm


@dataclass(frozen=True)
class CenteredParse:
    """A centered representation (k, x).

    In window mode `preimage` is a finite word v and offset_k is the offset of
    the window start inside the image of v[0]; cut positions are relative to
    the window start.  In point mode `preimage` is an EventuallyPeriodicPoint.
    """
    offset_k: int
    preimage: object
    window_span: tuple
    morphism: object = None

    @property
    def is_point(self):
        return isinstance(self.preimage, EventuallyPeriodicPoint)

    def key(self):
        if self.is_point:
            p = self.preimage
            return (self.offset_k, p.start, p.left_period, p.center, p.right_period)
        return (self.offset_k, tuple(self.preimage))

    def to_json(self):
        pre = self.preimage.to_json() if self.is_point else list(self.preimage)
        return {"offset_k": self.offset_k, "preimage": pre, "window_span": list(self.window_span)}


@dataclass(frozen=True)
class CutSet:
    cuts: tuple
    window: tuple
    anchored_parse: CenteredParse


def _required_horizon(n, m):
    return ceil(n / min(len(w) for w in m.images)) + 2


def window_parses(w, m, lang=None):
    """All tilings of w by images of m, partial images allowed at both ends."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise InputError("window must be nonempty")
    if lang is not None:
        need = _required_horizon(n, m)
        if lang.max_len < need:
            raise HorizonError(f"language horizon {lang.max_len} < {need}", needed=need)
    imgs = m.images
    by_first = {}
    for a, img in enumerate(imgs):
        by_first.setdefault(img[0], []).append(a)

    # finish[p]: letters b completing the window from inner cut p; nxt[p]: (b, p') moves
    nxt = [[] for _ in range(n)]
    fin = [[] for _ in range(n)]
    for p in range(1, n):
        for b in by_first.get(w[p], ()):
            img = imgs[b]
            q = p + len(img)
            if q >= n:
                if img[:n - p] == w[p:]:
                    fin[p].append(b)
            elif w[p:q] == img:
                nxt[p].append((b, q))
    alive = [False] * (n + 1)
    for p in range(n - 1, 0, -1):
        alive[p] = bool(fin[p]) or any(alive[q] for _, q in nxt[p])

    words = lang.words if lang is not None else None
    out = []

    def walk(p, acc, ell):
        for b in fin[p]:
            v = tuple(acc) + (b,)
            if words is None or v in words:
                out.append((ell, v))
        for b, q in nxt[p]:
            if alive[q]:
                acc.append(b)
                if words is None or tuple(acc) in words:
                    walk(q, acc, ell)
                acc.pop()

    for a, img in enumerate(imgs):
        L = len(img)
        for ell in range(L):
            rest = L - ell
            if rest >= n:
                if img[ell:ell + n] == w and (words is None or (a,) in words):
                    out.append((ell, (a,)))
            elif img[ell:] == w[:rest] and alive[rest]:
                if words is None or (a,) in words:
                    walk(rest, [a], ell)
    out.sort()
    return [CenteredParse(ell, v, (0, n), m) for ell, v in out]


def brute_window_parses(w, m):
    """Reference enumeration over all preimage words of length <= |w| and all offsets."""
    from itertools import product
    w = tuple(w)
    n = len(w)
    found = []
    for size in range(1, n + 1):
        for v in product(range(m.domain.size), repeat=size):
            img = apply(m, v)
            first = len(m.images[v[0]])
            last_start = len(img) - len(m.images[v[-1]])
            for ell in range(first):
                if len(img) - ell < n:
                    continue
                if last_start - ell >= n:
                    continue
                if img[ell:ell + n] == w:
                    found.append((ell, v))
    return sorted(found)


# ---------------------------------------------------------------- points

def _graph(m, period, forward):
    """Edges of the tiling graph on a periodic ray, nodes are offsets mod the period."""
    p = len(period)
    edges = []
    for r in range(p):
        out = []
        for a, img in enumerate(m.images):
            L = len(img)
            if forward:
                ok = all(img[t] == period[(r + t) % p] for t in range(L))
                tgt = (r + L) % p
            else:
                ok = all(img[t] == period[(r - L + t) % p] for t in range(L))
                tgt = (r - L) % p
            if ok:
                out.append((a, tgt))
        edges.append(out)
    return edges


def _live(edges):
    live = set(range(len(edges)))
    changed = True
    while changed:
        changed = False
        for u in list(live):
            if not any(t in live for _, t in edges[u]):
                live.discard(u)
                changed = True
    return live


def _on_cycle(edges, live, u):
    seen = set()
    stack = [t for _, t in edges[u] if t in live]
    while stack:
        v = stack.pop()
        if v == u:
            return True
        if v in seen:
            continue
        seen.add(v)
        stack.extend(t for _, t in edges[v] if t in live)
    return False


def _infinite_paths(edges, live, start):
    """All infinite paths from start as (prefix letters, cycle letters)."""
    results = []
    cyc_cache = {}

    def on_cycle(u):
        if u not in cyc_cache:
            cyc_cache[u] = _on_cycle(edges, live, u)
        return cyc_cache[u]

    def follow_cycle(u):
        letters = []
        v = u
        while True:
            outs = [(a, t) for a, t in edges[v] if t in live]
            if len(outs) != 1:
                raise InfiniteParsesError("a periodic ray admits infinitely many tilings")
            a, v = outs[0]
            letters.append(a)
            if v == u:
                return tuple(letters)

    def walk(u, acc):
        if on_cycle(u):
            results.append((tuple(acc), follow_cycle(u)))
            return
        for a, t in edges[u]:
            if t in live:
                acc.append(a)
                walk(t, acc)
                acc.pop()

    walk(start, [])
    return results


def _image_len(m, w):
    return sum(len(m.images[a]) for a in w)


def point_parses(y, m, lang=None):
    """All centered representations (k, x) of an eventually periodic point y."""
    y = y.canonical()
    L, R = y.left_period, y.right_period
    s0, s1 = y.start, y.end
    maxlen = max(len(w) for w in m.images)
    right = _graph(m, R, True)
    left = _graph(m, L, False)
    rlive, llive = _live(right), _live(left)
    imgs = m.images
    at = y.at

    def matches(img, pos):
        return all(img[t] == at(pos + t) for t in range(len(img)))

    middles = []
    for cl in range(s0 - maxlen + 1, s0 + 1):
        if (cl - s0) % len(L) not in llive:
            continue
        stack = [(cl, ())]
        while stack:
            pos, acc = stack.pop()
            if pos >= s1 and pos == cl:
                middles.append((cl, acc, pos))
                continue
            for a, img in enumerate(imgs):
                q = pos + len(img)
                if q <= s0 or not matches(img, pos):
                    continue
                if q >= s1:
                    middles.append((cl, acc + (a,), q))
                else:
                    stack.append((q, acc + (a,)))

    found = {}
    rcache, lcache = {}, {}
    for cl, mid, cr in middles:
        rnode = (cr - s1) % len(R)
        if rnode not in rlive:
            continue
        lnode = (cl - s0) % len(L)
        if lnode not in lcache:
            lcache[lnode] = _infinite_paths(left, llive, lnode)
        if rnode not in rcache:
            rcache[rnode] = _infinite_paths(right, rlive, rnode)
        for lp, lc in lcache[lnode]:
            for rp, rc in rcache[rnode]:
                parse = _assemble(m, cl, lp, lc, mid, rp, rc, (s0, s1))
                if lang is not None and not _preimage_in_language(parse.preimage, lang):
                    continue
                found[parse.key()] = parse
    return [found[k] for k in sorted(found)]


def _assemble(m, cl, lp, lc, mid, rp, rc, span):
    left_period = tuple(reversed(lc))
    right_period = tuple(rc)
    center = tuple(reversed(lp)) + tuple(mid) + tuple(rp)
    pos = cl - _image_len(m, lp)
    while pos > 0:
        center = left_period + center
        pos -= _image_len(m, left_period)
    while pos + _image_len(m, center) <= 0:
        center = center + right_period
    j = 0
    while pos + len(m.images[center[j]]) <= 0:
        pos += len(m.images[center[j]])
        j += 1
    x = EventuallyPeriodicPoint(left_period, center, right_period, -j).canonical()
    return CenteredParse(-pos, x, span, m)


def _preimage_in_language(x, lang):
    h = lang.max_len
    lo = x.start - h - len(x.left_period)
    hi = x.end + len(x.right_period) + 1
    for i in range(lo, hi):
        if x.slice(i, i + h) not in lang.words:
            return False
    return True


# ---------------------------------------------------------------- cuts

def cut_at_index(parse, t):
    """Position of the t-th cutting point of a point parse."""
    m, x = parse.morphism, parse.preimage
    pos = -parse.offset_k
    if t >= 0:
        for i in range(t):
            pos += len(m.images[x.at(i)])
    else:
        for i in range(-1, t - 1, -1):
            pos -= len(m.images[x.at(i)])
    return pos


def cutting_set(parse, window):
    a, b = window
    m = parse.morphism
    cuts = []
    if parse.is_point:
        x = parse.preimage
        pos, t = -parse.offset_k, 0
        while pos <= b:
            if pos >= a:
                cuts.append(pos)
            pos += len(m.images[x.at(t)])
            t += 1
        pos, t = -parse.offset_k, -1
        while True:
            pos -= len(m.images[x.at(t)])
            if pos < a:
                break
            if pos <= b:
                cuts.append(pos)
            t -= 1
    else:
        pos = -parse.offset_k
        if a <= pos <= b:
            cuts.append(pos)
        for c in parse.preimage:
            pos += len(m.images[c])
            if a <= pos <= b:
                cuts.append(pos)
    return CutSet(tuple(sorted(cuts)), (a, b), parse)


def exact_window(pa, pb):
    """A window on which two point parses share a cut iff they share one anywhere."""
    lows, highs, lper, rper = [], [], 1, 1
    for p in (pa, pb):
        x, m = p.preimage, p.morphism
        lows.append(cut_at_index(p, x.start))
        highs.append(cut_at_index(p, x.end))
        lper = lcm(lper, _image_len(m, x.left_period))
        rper = lcm(rper, _image_len(m, x.right_period))
    return min(lows) - lper - 1, max(highs) + rper + 1


def have_common_cut(a, b):
    pa, pb = a.anchored_parse, b.anchored_parse
    if pa.is_point and pb.is_point:
        lo, hi = exact_window(pa, pb)
        lo, hi = min(lo, a.window[0], b.window[0]), max(hi, a.window[1], b.window[1])
        a, b = cutting_set(pa, (lo, hi)), cutting_set(pb, (lo, hi))
    return bool(set(a.cuts) & set(b.cuts))


def parses_share_cut(pa, pb):
    return have_common_cut(cutting_set(pa, (0, 0)), cutting_set(pb, (0, 0)))


def reproduce(parse, i, j):
    """Letters of T^k m(x) on [i, j) for a point parse."""
    m, x = parse.morphism, parse.preimage
    out = []
    pos, t = -parse.offset_k, 0
    # move to the image covering i
    while pos > i:
        t -= 1
        pos -= len(m.images[x.at(t)])
    while pos + len(m.images[x.at(t)]) <= i:
        pos += len(m.images[x.at(t)])
        t += 1
    while pos < j:
        img = m.images[x.at(t)]
        for q, c in enumerate(img):
            if i <= pos + q < j:
                out.append(c)
        pos += len(img)
        t += 1
    return tuple(out)


def is_parse_of(parse, y):
    m, x = parse.morphism, parse.preimage
    lo, hi = exact_window(parse, parse)
    span = lcm(len(y.left_period), _image_len(m, x.left_period)) + \
        lcm(len(y.right_period), _image_len(m, x.right_period))
    lo = min(lo, y.start) - span
    hi = max(hi, y.end) + span
    return reproduce(parse, lo, hi) == y.slice(lo, hi)


def image_point(m, x, k=0):
    """T^k m(x) as an eventually periodic point; index 0 of m(x) is the cut before x_0."""
    x = EventuallyPeriodicPoint(x.left_period, x.center, x.right_period, x.start)
    s = x.start
    if s <= 0:
        origin = -_image_len(m, x.slice(s, 0))
    else:
        origin = _image_len(m, x.slice(0, s))
    y = EventuallyPeriodicPoint(apply(m, x.left_period), apply(m, x.center),
                                apply(m, x.right_period), origin)
    return y.shift(k).canonical()


def compose_parses(outer, inner):
    """The (outer o inner)-parse made of an outer parse (l, y) of z and an inner parse (k, x) of y."""
    tau, sigma = outer.morphism, inner.morphism
    y = outer.preimage
    m = compose(tau, sigma)
    offset = outer.offset_k + _image_len(tau, y.slice(-inner.offset_k, 0))
    return CenteredParse(offset, inner.preimage, outer.window_span, m)


# ---------------------------------------------------------------- infection

def infection_threshold(K):
    if K < 1:
        raise InputError("K must be positive")
    return 2 ** (K - 1) * (K - 1) + 2


def infection_verify(y, parses):
    for p in parses:
        if not p.is_point or not is_parse_of(p, y):
            raise InputError("parse does not represent the given point")
    n = len(parses)
    matrix = [[True] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        shared = parses_share_cut(parses[i], parses[j])
        matrix[i][j] = matrix[j][i] = shared
    best = 0
    for size in range(n, 0, -1):
        if any(all(not matrix[i][j] for i, j in combinations(group, 2))
               for group in combinations(range(n), size)):
            best = size
            break
    K = parses[0].morphism.domain.size if parses else 1
    threshold = infection_threshold(K)
    periodic = y.is_periodic()
    return {
        "threshold": threshold,
        "cut_disjoint": best,
        "above_threshold": best >= threshold,
        "periodic": periodic,
        "consistent": periodic or best < threshold,
        "common_cut_matrix": matrix,
    }
