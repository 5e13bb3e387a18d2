"""Tour of the four built-in infinite words.

Run:  python demos/words_tour.py
"""

from frobwords import (
    PHI_MORPHISM,
    WORDS,
    fibonacci_prefix,
    floor_alpha,
    floor_phi,
    incidence_matrix,
    paperfolding_prefix,
    replace_alternate_zeros,
)

# Every word is 1-indexed and generated exactly: no floating point is
# involved anywhere, so prefixes are reproducible at any length.
print("The four words, first 40 letters:")
for name in ("pf", "fib", "phi", "t"):
    print(f"  {name:>3}: {WORDS[name].prefix(40)}")

# The paperfolding word has three equivalent constructions; they are
# required to agree letter for letter.
print("\nPaperfolding constructions at length 24:")
for construction in ("direct", "recursive", "toeplitz"):
    print(f"  {construction:>9}: {paperfolding_prefix(24, construction)}")

# The Fibonacci word is the difference sequence of a Beatty sequence.
# Floors of n*phi come from integer square roots, so they stay exact at
# sizes where float arithmetic would already be lying.
n = 10**15
print(f"\nfloor({n} * phi) = {floor_phi(n)}")
print("fib letter n = floor((n+1)a) - floor(na), a = 2 - phi:")
print("  first 20:", "".join(str(floor_alpha(i + 1) - floor_alpha(i)) for i in range(2, 22)))

# The morphic word is the fixed point of 0 -> 00101, 1 -> 11011; its
# incidence matrix records the letter counts of both images.
print("\nIncidence matrix of the quintic morphism:")
print(incidence_matrix(PHI_MORPHISM))

# The ternary word rides on the Fibonacci word: every second zero becomes
# a two.  Erasing the twos recovers the Fibonacci word.
fib20 = fibonacci_prefix(20)
t20 = replace_alternate_zeros(fib20, "second")
print(f"\nfib[1,20]      = {fib20}")
print(f"t[1,20]        = {t20}")
print(f"twos erased    = {''.join('0' if s == 2 else str(s) for s in t20)}")
