"""Eventually periodic bi-infinite words.

A point is (left_period)^inf . center . (right_period)^inf with the center
occupying indices [start, start + len(center)).  `start` defaults to 0, which
puts index 0 on the first letter of the center.
"""

from dataclasses import dataclass
from math import gcd

from .errors import InputError


def primitive_root(w):
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True)
class EventuallyPeriodicPoint:
    left_period: tuple
    center: tuple
    right_period: tuple
    start: int = 0

    def __post_init__(self):
        for name in ("left_period", "center", "right_period"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not self.left_period or not self.right_period:
            raise InputError("periods must be nonempty")

    @classmethod
    def periodic(cls, period, start=0):
        return cls(tuple(period), (), tuple(period), start).canonical()

    def at(self, i):
        s, c = self.start, self.center
        if i < s:
            L = self.left_period
            return L[(i - s) % len(L)]
        if i >= s + len(c):
            R = self.right_period
            return R[(i - s - len(c)) % len(R)]
        return c[i - s]

    def slice(self, i, j):
        return tuple(self.at(k) for k in range(i, j))

    def shift(self, k=1):
        """T^k: index i of the result reads index i + k of self."""
        return EventuallyPeriodicPoint(self.left_period, self.center, self.right_period,
                                       self.start - k)

    @property
    def end(self):
        return self.start + len(self.center)

    def canonical(self):
        L = primitive_root(self.left_period)
        R = primitive_root(self.right_period)
        pl, pr = len(L), len(R)
        s, e = self.start, self.end
        at = self.at
        horizon = pl * pr + pl + pr
        # whole point periodic?
        lo, hi = s - pl - pr, e + horizon
        if all(at(i) == at(i - pl) for i in range(lo, hi)) and pl == pr:
            return EventuallyPeriodicPoint(self.slice(0, pl), (), self.slice(0, pl), 0)
        # maximal left-periodic region (-inf, a)
        a = s
        while a < hi and at(a) == at(a - pl):
            a += 1
        # maximal right-periodic region [b, inf)
        b = e
        while b > a and at(b - 1) == at(b - 1 + pr):
            b -= 1
        b = max(a, b)
        return EventuallyPeriodicPoint(self.slice(a - pl, a), self.slice(a, b),
                                       self.slice(b, b + pr), a)

    def is_periodic(self):
        return self.period() is not None

    def period(self):
        """Least period if the point is periodic, else None."""
        c = self.canonical()
        if c.center or c.left_period != c.right_period:
            return None
        return len(c.left_period)

    def same_point(self, other):
        return self.canonical() == other.canonical()

    def window_span(self):
        return self.start, self.end

    def to_json(self):
        return {"left_period": list(self.left_period), "center": list(self.center),
                "right_period": list(self.right_period), "start": self.start}

    def show(self, alphabet=None):
        f = alphabet.show if alphabet is not None else (lambda w: "".join(map(str, w)))
        return f"({f(self.left_period)})^ {f(self.center)} ({f(self.right_period)})^ @{self.start}"


def lcm(a, b):
    return a * b // gcd(a, b)
