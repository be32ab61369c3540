"""Where Q3^1 vanishes, and the character identity used at p = 2.

Zeros of Q3^1 away from the dominant and antidominant cones only occur when
the quadratic ``a^2 + (1-2p)a + p^2 - p`` has an integer root; the first such
prime is 7.  At every zero the second-order invariant R3^1 is nonzero.
"""
from sl3coh.identities import (
    p2_method_check,
    p2_method_eligible,
    predicted_q3_zeros,
    q3_zero_parameters,
    q3_zero_set,
    qr_values,
)

for p in (3, 5, 7):
    zeros = q3_zero_set(p, 40)
    print(f"p={p}: integer roots {q3_zero_parameters(p)}, "
          f"{len(zeros)} zeros in the box, matches prediction: "
          f"{zeros == predicted_q3_zeros(p, 40)}")

p = 7
for lam in sorted(q3_zero_set(p, 40))[:4]:
    print(f"   Q3^1{tuple(lam)} = 0, R3^1 = {qr_values(3, 1, lam, p).R}")

print("\nCharacter identity from the two short exact sequences at p = 2:")
p, n = 2, 1
eligible = [(r, s) for r in range(-8, 9) for s in range(-8, 9) if p2_method_eligible((r, s), n, p)]
failed = [lam for lam in eligible if not p2_method_check(lam, n, p).passed]
print(f"   {len(eligible)} eligible weights, {len(failed)} failures")
