"""Sweeping a permutation into a Schröder word, and back.

A permutation is *separable* when it avoids the patterns 2413 and 3142,
or equivalently when it can be assembled from singletons by direct sums
(stack the second block above-right) and skew sums (above-left).  The
sweep reads the one-line word as blocks of consecutive values and merges
the leftmost adjacent pair until a single block remains.
"""

from descpoly import (
    NotSeparableError,
    parse_permutation,
    sweep,
    word_to_perm,
)

perm = parse_permutation("9 8 4 1 3 2 7 5 6")
word = sweep(perm)
print(f"{perm}  sweeps to  {word}")

print("operators:", "".join(word.operators()))
print("'-' positions:", sorted(word.minus_positions()))
print("descent set:  ", sorted(perm.descent_set()))

back = word_to_perm(word)
print(f"rebuilding the word gives {back} (round trip: {back == perm})")

print()
for text in ("2413", "3142", "52341"):
    p = parse_permutation(text)
    try:
        w = sweep(p)
        print(f"{p} is separable: {w}")
    except NotSeparableError as exc:
        print(f"{p} is not separable: {exc.pattern} at positions {list(exc.positions)}")
