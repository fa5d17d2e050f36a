"""
Generator words and the word problem for theta matrices
=======================================================

Every matrix in the group is a finite product of the quarter-turn S, the
inversion P and the double shear T2 (and their inverses).  This script
decomposes matrices into such words, reduces words, and confirms that
the propagator of a word equals the product of the generator
propagators.
"""

import numpy as np

from qcatmap import (Mat2, IDENTITY, build, decompose, evaluate, format_word,
                     parse_word, random_theta, reduce_word)

# --------------------------------------------------------------------------
# Decomposition by Euclidean descent on the top row.
# --------------------------------------------------------------------------

A = Mat2(2, 1, 3, 2)
word = decompose(A)
print("A =", A)
print("word:", format_word(word))
print("round trip:", evaluate(word) == A)

# longer example
B = Mat2(9, 40, 2, 9)
wb = decompose(B)
print("B =", B, "->", format_word(wb), "(length %d)" % len(wb))
print("round trip:", evaluate(wb) == B)

# the identity decomposes into the empty word
print("identity ->", decompose(IDENTITY))

# --------------------------------------------------------------------------
# Word reduction: adjacent inverses cancel, S S collapses to P, and P is
# central so all parity factors collect at the end.
# --------------------------------------------------------------------------

noisy = parse_word("T2 S S- P S S P T2-")
slim = reduce_word(noisy)
print("reduced:", format_word(noisy), "->", format_word(slim) or "(empty)")
print("same matrix:", evaluate(noisy) == evaluate(slim))

# --------------------------------------------------------------------------
# Random round trips.
# --------------------------------------------------------------------------

failures = 0
longest = 0
for seed in range(300):
    m = random_theta(seed, max_word_len=12)
    w = decompose(m)
    longest = max(longest, len(w))
    if evaluate(w) != m:
        failures += 1
print("300 random matrices: %d failures, longest word %d" % (failures, longest))

# --------------------------------------------------------------------------
# The operator side: building the propagator from the word, one generator
# at a time, lands on the directly built propagator.
# --------------------------------------------------------------------------

N = 8
direct = build(A, N)
stepped = np.eye(N, dtype=complex)
for token in word:
    stepped = stepped @ build(evaluate([token]), N)
print("word product vs direct build, max diff:",
      np.abs(stepped - direct).max())
