"""
Quadratic exponential sums and their closed form
================================================

The propagator entries in the generic case reduce to finite sums of the
shape sum_k e((alpha k^2 + gamma k) / (2 beta)).  Averaged over a full
period these have unit modulus whenever they do not vanish, and the
nonvanishing values come from a closed form built out of Jacobi symbols
and eighth roots of unity.
"""

import numpy as np

from qcatmap import GaussParams, gauss_closed, gauss_direct, is_nonvanishing

# --------------------------------------------------------------------------
# Direct evaluation: average e((alpha k^2 + gamma k)/(2 beta)) over a full
# period of length 2|beta|.
# --------------------------------------------------------------------------

p = GaussParams(2, 3, 0)
print("direct   G(2, 3, 0) =", gauss_direct(p))     # exactly i
print("closed   G(2, 3, 0) =", gauss_closed(p))

# a few more sample points against their closed form
for alpha, beta, gamma in [(1, 2, 2), (3, 5, 1), (1, 3, 1),
                           (2, -3, 0), (-2, 3, 0), (1, -2, 2)]:
    g = GaussParams(alpha, beta, gamma)
    d = gauss_direct(g)
    c = gauss_closed(g)
    print("G(%2d,%2d,%2d) = %s   |direct - closed| = %.1e"
          % (alpha, beta, gamma, np.round(c, 6), abs(d - c)))

# --------------------------------------------------------------------------
# Vanishing: when alpha beta + gamma is odd the sum cancels in pairs and
# is exactly zero.  The closed form only applies on the complementary
# parity class with gcd(alpha, beta) = 1, where |G| = 1.
# --------------------------------------------------------------------------

odd = GaussParams(1, 1, 0)
print("parity-odd sum:", abs(gauss_direct(odd)))
print("nonvanishing predicate:", is_nonvanishing(odd))

# shared factors do not force vanishing on their own
shared = GaussParams(2, 4, 0)
print("G(2, 4, 0) =", gauss_direct(shared), "(shared factor, nonzero)")
print("G(2, 4, 2) =", gauss_direct(GaussParams(2, 4, 2)), "(shared factor, zero)")

# --------------------------------------------------------------------------
# The linear coefficient only matters modulo 2|beta|.
# --------------------------------------------------------------------------

base = gauss_direct(GaussParams(3, 5, 1))
for shift in (0, 1, 2, 5):
    moved = gauss_direct(GaussParams(3, 5, 1 + 10 * shift))
    print("gamma + %2d * period: diff %.2e" % (shift, abs(moved - base)))

# --------------------------------------------------------------------------
# Unit modulus on the whole coprime even-parity domain.
# --------------------------------------------------------------------------

worst = 0.0
count = 0
for alpha in range(-12, 13):
    for beta in range(-12, 13):
        if beta == 0 or np.gcd(alpha, beta) != 1:
            continue
        for gamma in range(-12, 13):
            if (alpha * beta + gamma) % 2:
                continue
            count += 1
            worst = max(worst, abs(abs(gauss_closed(GaussParams(alpha, beta, gamma))) - 1.0))
print("checked %d closed-form values, max | |G| - 1 | = %.2e" % (count, worst))
