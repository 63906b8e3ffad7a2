"""A tour of the folding operation.

Folding reads a string left to right and builds a stack: an 'u' step puts
the next symbol on top (prepend), a 'd' step tucks it underneath (append).
The result is the stack read top to bottom.
"""

from foldlang import fold, fold_permutation, fold_trace, split_updown

w, v = "abcde", "dduud"

print(f"fold({w!r}, {v!r}) = {fold(w, v)!r}\n")

print("step by step:")
for t, step in enumerate(fold_trace(w, v).steps, 1):
    arrow = "on top" if str(step.direction) == "u" else "underneath"
    print(f"  {t}. {step.symbol!r} goes {arrow:10s} -> stack {step.stack!r}")

# The two-way identity: up-positions of w, reversed, then the down-positions.
up, down = split_updown(w, v)
print(f"\nup symbols {up!r} reversed + down symbols {down!r} "
      f"= {up[::-1] + down!r}")

# Folding only permutes positions; the permutation depends on v alone.
perm = fold_permutation(v)
print(f"position permutation of {v!r}: {perm}")
print("so fold(w, v)[k] == w[perm[k]] for every k:",
      all(fold(w, v)[k] == w[perm[k]] for k in range(len(w))))

# Extremes: all-down copies, all-up reverses.
print(f"\nfold({w!r}, 'ddddd') = {fold(w, 'ddddd')!r}   (identity)")
print(f"fold({w!r}, 'uuuuu') = {fold(w, 'uuuuu')!r}   (reversal)")
