"""Search for a local recognizability radius: every 2l-context seen around a
cut must force a cut wherever it occurs in the image language."""

from dataclasses import dataclass, field
from math import ceil

from .errors import HorizonError, InfiniteParsesError
from .morphism import apply
from .parallel import chunks, ordered_map, thread_count
from .points import EventuallyPeriodicPoint
from .recognizer import CenteredParse, point_parses


@dataclass(frozen=True)
class Certificate:
    ell: int
    kind: str = "certificate"

    def to_json(self):
        return {"kind": self.kind, "ell": self.ell}


@dataclass(frozen=True)
class Counterexample:
    window: tuple
    parse_a: CenteredParse
    parse_b: CenteredParse
    ell: int
    point: EventuallyPeriodicPoint = None
    point_parse_count: int = 0
    kind: str = "counterexample"

    def to_json(self):
        return {"kind": self.kind, "ell": self.ell, "window": list(self.window),
                "parse_a": self.parse_a.to_json(), "parse_b": self.parse_b.to_json(),
                "point": self.point.to_json() if self.point else None,
                "point_parse_count": self.point_parse_count}


@dataclass(frozen=True)
class Unknown:
    ell_tried: int
    kind: str = "unknown"
    note: str = field(default="")

    def to_json(self):
        return {"kind": self.kind, "ell_tried": self.ell_tried, "note": self.note}


def words_needed(m, ell):
    """Preimage length that covers any 2*ell window of an image."""
    return ceil((2 * ell - 1) / min(len(w) for w in m.images)) + 1


def _cuts(m, u):
    pos = [0]
    for a in u:
        pos.append(pos[-1] + len(m.images[a]))
    return pos


def scan_contexts(m, words, ell):
    """Contexts of length 2*ell at cuts and at non-cuts of the images of `words`.

    Returns (cut_ctx, noncut_ctx) mapping each context to its first (u, position)
    sample in the order of `words`.  Work is split over threads; merging keeps
    the first sample, so the result does not depend on the thread count.
    """
    parts = ordered_map(lambda part: _scan(m, part, ell), chunks(words, thread_count()))
    cut_ctx, noncut_ctx = {}, {}
    for c, nc in parts:
        for k, v in c.items():
            cut_ctx.setdefault(k, v)
        for k, v in nc.items():
            noncut_ctx.setdefault(k, v)
    return cut_ctx, noncut_ctx


def _scan(m, words, ell):
    cut_ctx, noncut_ctx = {}, {}
    for u in words:
        img = apply(m, u)
        cuts = set(_cuts(m, u))
        for p in range(ell, len(img) - ell + 1):
            ctx = img[p - ell:p + ell]
            target = cut_ctx if p in cuts else noncut_ctx
            if ctx not in target:
                target[ctx] = (u, p)
    return cut_ctx, noncut_ctx


def _window_parse(m, u, p, ell):
    """The parse of img[p-ell : p+ell) induced by the tiling of m(u)."""
    cuts = _cuts(m, u)
    lo, hi = p - ell, p + ell
    first = max(i for i in range(len(u)) if cuts[i] <= lo)
    last = min(i for i in range(len(u)) if cuts[i + 1] >= hi)
    return CenteredParse(lo - cuts[first], tuple(u[first:last + 1]), (0, hi - lo), m)


def periodizations(window, m):
    yield EventuallyPeriodicPoint.periodic(window)
    for b in range(m.codomain.size):
        yield EventuallyPeriodicPoint((b,), window, (b,), 0).canonical()


def periodize(window, m):
    """First periodization of the window with at least two centered parses."""
    for y in periodizations(window, m):
        try:
            count = len(point_parses(y, m))
        except InfiniteParsesError:
            count = float("inf")
        if count >= 2:
            return y, count
    return None, 0


def mosse_search(m, lang, ell_max):
    need = words_needed(m, ell_max)
    if lang.max_len < need:
        raise HorizonError(f"language horizon {lang.max_len} < {need} for ell_max={ell_max}",
                           needed=need)
    last = None
    for ell in range(1, ell_max + 1):
        words = lang.of_length(words_needed(m, ell))
        cut_ctx, noncut_ctx = scan_contexts(m, words, ell)
        clash = sorted(set(cut_ctx) & set(noncut_ctx))
        if not clash:
            return Certificate(ell)
        last = (ell, clash[0], cut_ctx[clash[0]], noncut_ctx[clash[0]])
    ell, ctx, (ua, pa), (ub, pb) = last
    y, count = periodize(ctx, m)
    if y is None:
        return Unknown(ell_max, note="context clash persists but no periodization has two parses")
    return Counterexample(ctx, _window_parse(m, ua, pa, ell), _window_parse(m, ub, pb, ell),
                          ell, y, count)
