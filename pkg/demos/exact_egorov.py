"""
Exact conjugation of phase-space translations
=============================================

On the N-dimensional torus Hilbert space the Weyl translations T_N(n)
quantize plane waves.  Conjugating by a cat map propagator transports
the mode index by the transposed matrix -- exactly, with no error term
in 1/N.
"""

import numpy as np

from qcatmap import (Mat2, bracket_deviation, build, compose_classical,
                     egorov_mode_errors, quantize, verify_egorov, weyl_op)

N = 12
A = Mat2(2, 1, 3, 2)

# --------------------------------------------------------------------------
# A single mode pushed through the propagator.
# --------------------------------------------------------------------------

n = (1, 2)
U = build(A, N)
left = np.conj(U.T) @ weyl_op(n, N) @ U
right = weyl_op((A.a * n[0] + A.c * n[1], A.b * n[0] + A.d * n[1]), N)
print("mode", n, "transported to", (A.a * n[0] + A.c * n[1],
                                    A.b * n[0] + A.d * n[1]))
print("max entry diff:", np.abs(left - right).max())

# all N^2 modes at once
errors = egorov_mode_errors(A, N)
print("all %d modes, max error %.2e" % (errors.size, errors.max()))

# --------------------------------------------------------------------------
# General observables: a trigonometric polynomial transported classically
# matches the conjugated quantization.
# --------------------------------------------------------------------------

f = {(1, 0): 0.5, (-1, 0): 0.5, (0, 1): -0.25j, (0, -1): 0.25j}
print("observable modes:", sorted(f))
print("transported modes:", sorted(compose_classical(f, A)))

report = verify_egorov(A, N, f)
print("conjugation error %.2e (tol %.1e), passed = %s"
      % (report.max_error, report.tol, report.passed))

# the quantization of a real observable is Hermitian
Op = quantize(f, N)
print("hermiticity defect:", np.abs(Op - np.conj(Op.T)).max())

# --------------------------------------------------------------------------
# The commutator of two translations is again a translation times an
# exact sine factor.  Against the Poisson bracket normalization the
# relative deviation decreases with N but tends to a nonzero limit: the
# quantum bracket and the classical bracket scale differently.
# --------------------------------------------------------------------------

m1, m2 = (1, 0), (0, 1)
print("bracket deviation, modes", m1, m2)
for n_dim in (4, 8, 16, 32, 64, 128):
    dev = bracket_deviation(m1, m2, n_dim)
    print("  N = %3d   relative %.6f" % (n_dim, dev.relative))
limit = np.sqrt(1.0 + 16.0 * np.pi ** 4)
print("limiting value sqrt(1 + 16 pi^4) =", limit)
