"""Which integers are weights of factors?

Give each letter a positive weight and ask which integers arise as the
weight of some factor.  With maximal abelian complexity this is the
classical two-coin problem; restricted factor languages can miss more, or
miss infinitely many.

Run:  python demos/representability.py
"""

from frobwords import (
    Weights,
    ab_bound,
    complement_below,
    pf_witnesses,
    sylvester_number,
    table1,
)
from frobwords.verify import MaxComplexityWord, classical_nonrepresentable

# Classical baseline: a synthetic word containing every binary block.  Its
# complement below the Sylvester bound is the classical non-representable set.
stair = MaxComplexityWord()
for a, b in [(3, 5), (4, 7)]:
    bound = sylvester_number(a, b) + 1
    rep = complement_below(stair, Weights((a, b)), bound)
    print(f"all-blocks word, weights ({a},{b}): misses {rep.complement} "
          f"(classical: {classical_nonrepresentable(a, b)})")

# The paperfolding word misses infinitely many integers once both weights
# are at least 4: targets a(2^(n-1)-2) + b(2^(n-1)+2) are never factor
# weights, verified against the zero envelope at every feasible length.
print("\npaperfolding witnesses, weights (4,5):")
for r in pf_witnesses(4, 5, range(4, 9)):
    print(f"  n={r.n}: {r.target} non-representable = "
          f"{r.verified_nonrepresentable}")

# The morphic word instead hits everything eventually, for every coprime
# pair; the bound and the exact finite complement are computable.
print("\nmorphic word, selected weight pairs:")
for pair in [(1, 4), (2, 5), (3, 5)]:
    bd = ab_bound(*pair)
    (row,) = table1([pair])
    print(f"  weights {pair}: bound {bd.ceil_M} "
          f"(scan to length {bd.r}), misses {row.complement}")
