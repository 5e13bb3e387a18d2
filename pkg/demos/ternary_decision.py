"""Deciding cofiniteness for the balanced ternary word, step by step.

For a weight triple the factor weights at each length n are three numbers:
a half-integer main term plus small offsets.  Whether the full value set
misses infinitely many integers reduces to sliding a fixed-length window
over the difference sequence F and checking that each window's interval is
covered by its semi-images at both parities.

Run:  python demos/ternary_decision.py
"""

from frobwords import (
    WORDS,
    decide_cofinite,
    decision_window_length,
    f_sequence,
    g_values,
    interval_I,
    main_term,
    offsets,
    semi_complement,
    semi_image,
    table2,
)

s = (1, 1, 2)
tab = offsets(s)
print(f"weights {s}")
print(f"  odd offsets  {[str(x) for x in tab.odd()]}")
print(f"  even offsets {[str(x) for x in tab.even()]}")
print(f"  k = {tab.k}, window length l = {decision_window_length(s)}")

print("  main terms m(1..11):",
      ", ".join(str(main_term(n, s)) for n in range(1, 12)))
print("  differences F[1..10]:",
      ", ".join(str(x) for x in f_sequence(1, 10, s)))

# The worked window: F[1,4] with the following term feeding the interval.
bits4 = tuple(WORDS["fib"].prefix_array(4))
bits5 = tuple(WORDS["fib"].prefix_array(5))
lo, hi = interval_I(f_sequence(1, 4, s), f_sequence(5, 5, s)[0], tab.k)
print(f"  window F[1,4]: interval [{lo}, {hi}]")
print(f"  even semi-image {sorted(str(x) for x in semi_image(bits4, s, 0))}")
print(f"  odd  semi-image {sorted(str(x) for x in semi_image(bits4, s, 1))}")
print(f"  semi-complements: even {set(semi_complement(bits5, s, 0)) or '{}'} "
      f"odd {set(semi_complement(bits5, s, 1)) or '{}'}")

# Value sets per length come from three closed formulas.
print("  value sets n=1..8:",
      [sorted(g_values(n, s)) for n in range(1, 9)])

decision = decide_cofinite(s)
print(f"  decision: cofinite={decision.cofinite}, misses {decision.complement}")

# A large weight forces an infinite complement, with an explicit witness.
d = decide_cofinite((8, 1, 1))
w = d.witness
print(f"\nweights (8,1,1): cofinite={d.cofinite}; window starting at "
      f"position {w.factor_start_index} (parity {w.parity}) misses "
      f"{w.missed_value}, and that window recurs forever")

# The full sweep over weights 1..7 finds exactly the cofinite triples.
print("\nall cofinite triples with entries up to 7:")
for row in table2():
    print(f"  {tuple(row.weights)} misses {set(row.complement) or '{}'}")
