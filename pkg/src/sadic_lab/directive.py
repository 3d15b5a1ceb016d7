"""Directive sequences: a finite prefix of chained morphisms plus an optional cycle."""

from dataclasses import dataclass

from .errors import InputError
from .morphism import compose, identity


@dataclass(frozen=True)
class DirectiveSequence:
    prefix: tuple
    cycle: tuple = None

    def __post_init__(self):
        prefix = tuple(self.prefix or ())
        cycle = tuple(self.cycle) if self.cycle else None
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)
        if not prefix and not cycle:
            raise InputError("directive sequence needs at least one morphism")
        chain = list(prefix) + list(cycle or ())
        for i in range(len(chain) - 1):
            if not chain[i].domain.compatible(chain[i + 1].codomain):
                raise InputError(f"alphabet chaining fails between levels {i} and {i + 1}")
        if cycle and not cycle[-1].domain.compatible(cycle[0].codomain):
            raise InputError("cycle does not close up")

    @classmethod
    def stationary(cls, m):
        if not m.is_substitution():
            raise InputError("stationary sequences need a substitution")
        return cls((), (m,))

    @property
    def p(self):
        return len(self.prefix)

    @property
    def c(self):
        return len(self.cycle) if self.cycle else 0

    def addressable(self, n):
        return n < self.p or self.cycle is not None

    def level_morphism(self, n):
        if n < 0:
            raise InputError("levels are nonnegative")
        if n < self.p:
            return self.prefix[n]
        if self.cycle is None:
            raise InputError(f"level {n} beyond a cycle-less sequence of length {self.p}")
        return self.cycle[(n - self.p) % self.c]

    def alphabet(self, n):
        """The alphabet A_n (codomain of sigma_n)."""
        if n < self.p or self.cycle is not None:
            return self.level_morphism(n).codomain
        if n == self.p:
            return self.prefix[-1].domain
        raise InputError(f"alphabet {n} beyond the sequence")

    def composition(self, n, N):
        """sigma_[n,N) = sigma_n o ... o sigma_{N-1}."""
        if N < n:
            raise InputError("empty range reversed")
        out = identity(self.alphabet(N))
        for k in range(N - 1, n - 1, -1):
            out = compose(self.level_morphism(k), out)
        return out

    def cycle_composition(self, n):
        """sigma_[n,n+c) for a level n inside the periodic part."""
        if self.cycle is None or n < self.p:
            raise InputError("cycle composition needs a level inside the cycle")
        return self.composition(n, n + self.c)

    def max_alphabet(self):
        sizes = [m.codomain.size for m in self.prefix + (self.cycle or ())]
        sizes += [m.domain.size for m in self.prefix + (self.cycle or ())]
        return max(sizes)

    def to_json(self):
        return {"prefix": [m.to_json() for m in self.prefix],
                "cycle": [m.to_json() for m in self.cycle] if self.cycle else None}
