"""A short tour of line bundle cohomology for SL3 in characteristic p.

Run with ``python3 demos/01_cohomology_tour.py``.  Each step prints what it
computes, so the output reads top to bottom as a walkthrough.
"""
from sl3coh import cohomology, dims, dual, support_variety, tau
from sl3coh.cohomology import andersen_criterion

p = 5

print(f"Characteristic p = {p}\n")

print("1. Dominant weights only have H^0, and the Steinberg weight gives p^3.")
for lam in [(0, 0), (1, 0), (2, 1), (p - 1, p - 1)]:
    print(f"   dims H^*{lam} = {list(dims(lam, 'Plain', p))}")

print("\n2. Some weights carry cohomology in two degrees at once.")
lam = (5, -10)
table = cohomology(lam, "Plain", p)
print(f"   dims H^*{lam} = {list(table.dims)}")
print(f"   two-degree criterion predicts: {andersen_criterion(lam, p)}")
print(f"   Euler characteristic equals the Weyl character: "
      f"{table.euler() == table.expected_euler()}")

print("\n3. Serre duality and the diagram swap act on characters as expected.")
mirror = cohomology((-lam[0] - 2, -lam[1] - 2), "Plain", p).chars
swapped = cohomology((lam[1], lam[0]), "Plain", p).chars
print(f"   H^1 = dual of mirrored H^2: {table.chars[1] == dual(mirror[2])}")
print(f"   H^i(s, r) = tau H^i(r, s):   "
      f"{all(swapped[i] == tau(table.chars[i]) for i in range(4))}")

print("\n4. Support varieties over the Frobenius kernel.")
for weight, i in [((5, -10), 1), ((5, -10), 2), ((0, p - 1), 0), ((p - 1, p - 1), 0)]:
    res = support_variety(weight, i, p)
    if res is None:
        print(f"   H^{i}{weight} = 0")
        continue
    ev = res.evidence
    print(f"   H^{i}{weight}: {res.support.label:<20} dim {res.support.dim}, "
          f"psi-order {ev.psi_order}")
