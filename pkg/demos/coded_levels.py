"""Level analysis of the pair coding of 0 -> 00100, 1 -> 00000 followed by its
conjugate substitution: the coding level fails, the substitution levels pass."""

import time

from sadic_lab import presets
from sadic_lab.sadic import analyze_levels, enumerate_limit_words

D = presets.pair_coded()
t1 = D.cycle[0]
print("conjugate:", t1.show())

t = time.perf_counter()
for r in analyze_levels(D, 3, lang_horizon=128, ell_max=30):
    note = " (periodic point)" if r.periodic else ""
    print(f"level {r.level}: {r.verdict} via {r.method}{note}")
print(f"limit words: {len(enumerate_limit_words(D))}, {time.perf_counter() - t:.2f} s")
