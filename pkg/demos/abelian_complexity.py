"""Abelian complexity profiles of the four words.

The abelian complexity at n counts distinct letter-count vectors among the
length-n factors.  The four words were chosen to spread across the scale:
constant 2 (fib), constant 3 (t), unbounded but log-small with dips back to
3 (pf), and polynomial growth n^log5(2) (phi).

Run:  python demos/abelian_complexity.py
"""

import math

import numpy as np

from frobwords import (
    MorphicCover,
    StabilizedDoubling,
    WORDS,
    abelian_complexity,
    phi_envelope_table,
    zero_envelope,
)

print("n:                ", "".join(f"{n:>5}" for n in (1, 2, 4, 8, 16, 32, 64)))
for name in ("fib", "t", "pf"):
    word = WORDS[name]
    row = [abelian_complexity(word, n, StabilizedDoubling(max_length=2**22))
           for n in (1, 2, 4, 8, 16, 32, 64)]
    print(f"{name:>3} complexity:   ", "".join(f"{r:>5}" for r in row))

# The paperfolding word keeps returning to complexity 3 at powers of two,
# which is exactly what blocks it from hitting all large integers.
print("\npf complexity at 2^k, k = 1..12:")
print("  ", [abelian_complexity(WORDS["pf"], 2**k,
                                 StabilizedDoubling(max_length=2**22))
              for k in range(1, 13)])

# For the morphic word the complexity equals the width of the zero-count
# envelope; its growth exponent hugs log5(2) = 0.4307.
print("\nmorphic word: zero envelopes and growth exponent")
for n in (2, 5, 25, 125):
    env = zero_envelope(WORDS["phi"], n, MorphicCover(4))
    print(f"  n={n:>4}: zero counts fill [{env.z_min}, {env.z_max}]")

z_min, z_max = phi_envelope_table(5**6)
ns = [5**k for k in range(2, 7)]
rho = [int(z_max[n - 1]) - int(z_min[n - 1]) + 1 for n in ns]
slope = float(np.polyfit(np.log(ns), np.log(rho), 1)[0])
print(f"  complexity at 5^2..5^6: {rho}")
print(f"  log-log slope {slope:.4f} vs log5(2) = {math.log(2)/math.log(5):.4f}")
