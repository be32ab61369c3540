"""The integers S and T along the fundamental line ``r + s = -1``.

S and T are cheap integer shadows of the quantum dimension of H^1.  On the
line they satisfy ``T - S = 1``, and a p-adic digit step adds the same
increment theta to both.  This script prints the table and the SVG figure.
"""
import sys
from pathlib import Path

from sl3coh.figure import render_svg
from sl3coh.identities import st_values, theta

p = 5

print(f"S^1 and T^1 at (r, -r-1), p = {p}")
print("   r    S    T  T-S")
for r in range(1, 3 * p + 1):
    rec = st_values(1, (r, -r - 1), p)
    print(f"{r:4d} {rec.S:4d} {rec.T:4d} {rec.T - rec.S:4d}")

print("\nA digit a on top of the tail (x, -x-1) shifts S and T by theta:")
x = 1
tail = st_values(1, (x, -x - 1), p)
for a in range(p):
    lam = (a + p * x, p - 1 - a - p * (x + 1))
    cur = st_values(1, lam, p)
    t = theta(1, (x, -x - 1), a, p)
    print(f"   a={a}  weight {lam}: S {tail.S} + {t} = {cur.S},  T {tail.T} + {t} = {cur.T}")

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("fundamental_line.svg")
out.write_text(render_svg(p, 5))
print(f"\nFigure written to {out}")
