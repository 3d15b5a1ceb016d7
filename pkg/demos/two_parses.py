"""The all-ones point under 0 -> 0010, 1 -> 11 splits into 11-blocks in two ways,
while a window of the fixed point through 0.0 has a single parse."""

from sadic_lab import presets
from sadic_lab.morphism import power
from sadic_lab.points import EventuallyPeriodicPoint
from sadic_lab.recognizer import cutting_set, point_parses

m = presets.split_ones()
print("morphism:", m.show())

ones = EventuallyPeriodicPoint.periodic((1,))
for p in point_parses(ones, m):
    cuts = cutting_set(p, (-6, 6)).cuts
    print(f"  ...111... offset {p.offset_k}: cuts in [-6, 6] = {cuts}")

img = power(m, 5).images[0]
y = EventuallyPeriodicPoint((1,), img[-64:] + img[:64], (1,), -64)
print("fixed-point window, radius 64:", len(point_parses(y, m)), "parse")
