"""Run every recursive identity check over a small box for a few primes.

Each check computes both sides independently: the left from cohomology
dimensions, the right from the recursive formula.  One identity, the
monotonicity of |R1| under a digit step, fails; its witness is printed.
"""
from sl3coh.identities import CHECKS, verify_many

primes = [3, 5]
box = 4

reports = verify_many(list(CHECKS), primes, box=box, jobs=2)
for rep in reports:
    status = "PASS" if rep.passed else "FAIL"
    print(f"{status}  p={rep.p}  {rep.prop:<28} tested {rep.tested}")
    if not rep.passed:
        print(f"      first counterexample: {rep.counterexamples[0]}")
