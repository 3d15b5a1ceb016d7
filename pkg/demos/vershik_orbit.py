"""Walk the Vershik successor on the Fibonacci diagram; each step moves the
origin of the attached point one letter to the right."""

from sadic_lab import presets
from sadic_lab.bratteli import build_diagram, minimal_path, psi_window, vershik_successor
from sadic_lab.directive import DirectiveSequence

D = DirectiveSequence.stationary(presets.fibonacci())
B = build_diagram(D, 7)
p = minimal_path(B, 0, 6)
for step in range(6):
    w = psi_window(D, p)
    left = "".join(str(w.at(i)) for i in range(max(-w.left_len, -4), 0))
    right = "".join(str(w.at(i)) for i in range(min(w.right_len, 8)))
    print(f"step {step}: k = {p.edge_orders}  {left:>4}.{right}")
    p = vershik_successor(B, p)
