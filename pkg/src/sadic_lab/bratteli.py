"""Natural ordered Bratteli diagrams of directive sequences, the Vershik
successor on finite paths, the path-to-word map and level addresses.

Vertex level V_0 is the root; V_{n+1} is a copy of the alphabet A_n.  Edges
into a vertex a of V_{n+2} come from the letters of sigma_n(a), in image
order, with 0-based order labels.  Every vertex of V_1 has one edge from the
root.

A path prefix of depth d is stored by letters a_0..a_d (a_n in A_n, a vertex
of V_{n+1}) and edge orders k_0..k_{d-1}, with a_n = sigma_n(a_{n+1})[k_n].
It lives in any diagram of depth at least d + 1.
"""

from dataclasses import dataclass

from .errors import HorizonError, InputError
from .language import sadic_factors
from .matrix import IntegerMatrix
from .recognizer import window_parses


@dataclass(frozen=True)
class OrderedBratteliDiagram:
    depth: int
    levels: tuple
    edges: tuple
    names: tuple = None

    def in_degree(self, level, v):
        return len(self.edges[level - 1][v])

    def incidence(self, n):
        """F_n: rows indexed by V_{n+1}, columns by V_n."""
        rows, cols = self.levels[n + 1], self.levels[n]
        out = [[0] * cols for _ in range(rows)]
        for v, srcs in enumerate(self.edges[n]):
            for s in srcs:
                out[v][s] += 1
        return IntegerMatrix.from_rows(out)

    def to_json(self):
        return {"depth": self.depth, "levels": list(self.levels),
                "edges": [[list(srcs) for srcs in level] for level in self.edges]}


def build_diagram(D, depth):
    if depth < 1:
        raise InputError("depth must be positive")
    if depth >= 2 and not D.addressable(depth - 2):
        raise InputError(f"depth {depth} needs levels beyond the directive sequence")
    levels = [1, D.alphabet(0).size]
    edges = [tuple((0,) for _ in range(levels[1]))]
    names = [("root",), tuple(D.alphabet(0).name(a) for a in D.alphabet(0).letters())]
    for n in range(depth - 1):
        m = D.level_morphism(n)
        levels.append(m.domain.size)
        edges.append(tuple(tuple(img) for img in m.images))
        names.append(tuple(m.domain.name(a) for a in m.domain.letters()))
    return OrderedBratteliDiagram(depth, tuple(levels), tuple(edges), tuple(names))


@dataclass(frozen=True)
class PathPrefix:
    depth: int
    edge_orders: tuple
    vertices: tuple

    def truncate(self, d):
        return PathPrefix(d, self.edge_orders[:d], self.vertices[:d + 1])

    def to_json(self):
        return {"depth": self.depth, "edge_orders": list(self.edge_orders),
                "vertices": list(self.vertices)}


@dataclass(frozen=True)
class MaximalAtDepth:
    depth: int
    kind: str = "maximal_at_depth"


def _check_path(B, p):
    if len(p.edge_orders) != p.depth or len(p.vertices) != p.depth + 1:
        raise InputError("path prefix has inconsistent lengths")
    if p.depth + 1 > B.depth:
        raise InputError("path is deeper than the diagram")
    for n in range(p.depth):
        srcs = B.edges[n + 1][p.vertices[n + 1]]
        k = p.edge_orders[n]
        if not 0 <= k < len(srcs) or srcs[k] != p.vertices[n]:
            raise InputError(f"path prefix inconsistent at level {n}")


def minimal_path(B, top, depth=None):
    """All-minimal path prefix ending at letter `top` of A_depth."""
    depth = B.depth - 1 if depth is None else depth
    vs = [top]
    for n in range(depth - 1, -1, -1):
        vs.append(B.edges[n + 1][vs[-1]][0])
    return PathPrefix(depth, (0,) * depth, tuple(reversed(vs)))


def vershik_successor(B, p):
    _check_path(B, p)
    ks, vs = list(p.edge_orders), list(p.vertices)
    for n in range(p.depth):
        srcs = B.edges[n + 1][vs[n + 1]]
        if ks[n] + 1 < len(srcs):
            ks[n] += 1
            vs[n] = srcs[ks[n]]
            for j in range(n - 1, -1, -1):
                ks[j] = 0
                vs[j] = B.edges[j + 1][vs[j + 1]][0]
            return PathPrefix(p.depth, tuple(ks), tuple(vs))
    return MaximalAtDepth(p.depth)


def paths_into(B, top, depth):
    """Every path prefix of the given depth ending at `top`, by exhaustive descent."""
    out = []

    def walk(n, ks, vs):
        if n < 0:
            out.append(PathPrefix(depth, tuple(reversed(ks)), tuple(reversed(vs))))
            return
        for k, s in enumerate(B.edges[n + 1][vs[-1]]):
            walk(n - 1, ks + [k], vs + [s])
    walk(depth - 1, [], [top])
    out.sort(key=lambda q: tuple(reversed(q.edge_orders)))
    return out


# ---------------------------------------------------------------- words

class ComposedWord:
    """sigma_[0,n)(a) with random access, never materialized unless asked."""

    def __init__(self, D, n, letter, lengths=None):
        self.D, self.n, self.letter = D, n, letter
        self.lengths = lengths or length_tables(D, n)
        self.size = self.lengths[n][letter]

    def __len__(self):
        return self.size

    def at(self, t):
        if not 0 <= t < self.size:
            raise IndexError(t)
        a = self.letter
        for j in range(self.n, 0, -1):
            for b in self.D.level_morphism(j - 1).images[a]:
                size = self.lengths[j - 1][b]
                if t < size:
                    a = b
                    break
                t -= size
        return a

    def slice(self, i, j):
        return tuple(self.at(t) for t in range(max(0, i), min(self.size, j)))

    def materialize(self):
        out = (self.letter,)
        for j in range(self.n, 0, -1):
            m = self.D.level_morphism(j - 1)
            out = tuple(c for b in out for c in m.images[b])
        return out


def length_tables(D, n):
    """lengths[j][a] = |sigma_[0,j)(a)| for j <= n."""
    tables = [[1] * D.alphabet(0).size]
    for j in range(n):
        m = D.level_morphism(j)
        prev = tables[-1]
        tables.append([sum(prev[b] for b in img) for img in m.images])
    return tables


@dataclass
class WindowOfPoint:
    """The slice y[-left_len, right_len) of a point."""
    left_len: int
    right_len: int
    letters: object

    def __post_init__(self):
        if len(self.letters) != self.left_len + self.right_len:
            raise InputError("window lengths do not match its letters")

    def at(self, i):
        """y_i for -left_len <= i < right_len."""
        t = i + self.left_len
        if isinstance(self.letters, ComposedWord):
            return self.letters.at(t)
        return self.letters[t]

    def span(self):
        return -self.left_len, self.right_len

    def word(self):
        if isinstance(self.letters, ComposedWord):
            return self.letters.materialize()
        return tuple(self.letters)

    def to_json(self):
        return {"left_len": self.left_len, "right_len": self.right_len,
                "letters": list(self.word())}


def psi_window(D, p, lengths=None):
    """Window of the point attached to the path prefix p."""
    d = p.depth
    lengths = lengths or length_tables(D, d)
    q = 0
    for n in range(d):
        img = D.level_morphism(n).images[p.vertices[n + 1]]
        if img[p.edge_orders[n]] != p.vertices[n]:
            raise InputError(f"path prefix inconsistent at level {n}")
        q += sum(lengths[n][b] for b in img[:p.edge_orders[n]])
    word = ComposedWord(D, d, p.vertices[d], lengths)
    return WindowOfPoint(q, len(word) - q, word)


def equivariance_check(D, p, steps, band=32, full_limit=200_000):
    """Check that the window of the successor is the shifted window, step by step.

    Windows with the same top letter share their letters, so agreement on the
    overlap reduces to the left lengths differing by one; a band of letters
    around the origin is also compared explicitly, and the whole overlap when
    the window is short enough.
    """
    B = build_diagram(D, p.depth + 1)
    lengths = length_tables(D, p.depth)
    base = psi_window(D, p, lengths)
    full = len(base.letters) <= full_limit
    flat = base.word() if full else None
    words = {p.vertices[-1]: flat}
    cur = p
    checked = 0
    for i in range(1, steps + 1):
        nxt = vershik_successor(B, cur)
        if isinstance(nxt, MaximalAtDepth):
            return {"ok": True, "steps": checked, "requested": steps,
                    "needs_deeper": True, "stopped_at": i, "full_overlap": full}
        w = psi_window(D, nxt, lengths)
        lo = max(-w.left_len, -base.left_len - i)
        hi = min(w.right_len, base.right_len - i)
        if hi <= lo:
            return {"ok": False, "steps": checked, "failure": i, "reason": "empty overlap"}
        structural = nxt.vertices[-1] == p.vertices[-1] and w.left_len == base.left_len + i
        if not structural:
            return {"ok": False, "steps": checked, "failure": i, "reason": "offset mismatch"}
        for t in range(max(lo, -band), min(hi, band)):
            if w.at(t) != base.at(t + i):
                return {"ok": False, "steps": checked, "failure": i, "reason": f"letter at {t}"}
        if full:
            top = nxt.vertices[-1]
            if top not in words:
                words[top] = w.word()
            a = words[top][lo + w.left_len:hi + w.left_len]
            b = flat[lo + i + base.left_len:hi + i + base.left_len]
            if a != b:
                return {"ok": False, "steps": checked, "failure": i, "reason": "overlap differs"}
        cur = nxt
        checked = i
    return {"ok": True, "steps": checked, "requested": steps, "needs_deeper": False,
            "full_overlap": full}


# ---------------------------------------------------------------- addresses

def level_addresses(D, window, n, lang_horizon):
    """Pairs (k, a): the origin sits at offset k inside a block sigma_[0,n)(a)."""
    word = window.word()
    if n == 0:
        return [(0, window.at(0))]
    M = D.composition(0, n)
    if lang_horizon is None:
        lang_horizon = -(-len(word) // min(len(w) for w in M.images)) + 2
    lang = sadic_factors(D, n, lang_horizon)
    out = set()
    for parse in window_parses(word, M, lang):
        pos = parse.offset_k + window.left_len
        for a in parse.preimage:
            size = len(M.images[a])
            if pos < size:
                out.add((pos, a))
                break
            pos -= size
    return sorted(out)


def address_of(D, window, depth, lang_horizon=None):
    """Path prefixes of the given depth consistent with the window at every level.

    Without an explicit horizon the language is computed just long enough for
    the window at each level.
    """
    if window.left_len < 0 or window.right_len < 1:
        raise InputError("window must contain the origin")
    per_level = [level_addresses(D, window, n, lang_horizon) for n in range(depth + 1)]
    if any(not level for level in per_level):
        raise HorizonError("window admits no address at some level", needed=None)
    lengths = length_tables(D, depth)
    out = []

    def extend(n, ks, vs, q):
        if n == depth:
            out.append(PathPrefix(depth, tuple(ks), tuple(vs)))
            return
        img = D.level_morphism(n).images
        for K, b in per_level[n + 1]:
            off = 0
            for j, c in enumerate(img[b]):
                if c == vs[-1] and off + q == K:
                    extend(n + 1, ks + [j], vs + [b], K)
                off += lengths[n][c]
    for k, a in per_level[0]:
        extend(0, [], [a], k)
    out.sort(key=lambda p: (p.edge_orders, p.vertices))
    return out


# ---------------------------------------------------------------- export

def export_dot(B):
    lines = ["digraph bratteli {", "  rankdir=TB;"]
    for n, size in enumerate(B.levels):
        for i in range(size):
            label = B.names[n][i] if B.names else str(i)
            lines.append(f'  L{n}_{i} [label="{label}"];')
    for n, level in enumerate(B.edges):
        for v, srcs in enumerate(level):
            for k, s in enumerate(srcs):
                lines.append(f'  L{n}_{s} -> L{n + 1}_{v} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
