"""Weyl-Heisenberg translations, quantized observables, and exact conjugation.

States live on Z/NZ; the basis vector delta_nu takes the value sqrt(N) at nu
so that the inner product (1/N) * sum conj(phi) psi makes them orthonormal.
The elementary translations are

    [t1 f](Q) = f(Q) e(Q/N)          (momentum kick)
    [t2 f](Q) = f(Q + 1)             (position shift)

and the Weyl operator of an integer mode n = (n1, n2) is

    T_N(n) = e(-n1*n2/(2N)) t2^n2 t1^n1,

which satisfies T_N(m) T_N(n) = e(-omega(m, n)/(2N)) T_N(m + n) with the
symplectic form omega(m, n) = m1*n2 - m2*n1.  An observable is a finite
Fourier series f = sum_m fhat(m) e(q*m1 + p*m2); its quantization is
Op_N(f) = sum_m fhat(m) T_N(m).

Conjugation by a cat-map propagator transports modes exactly through the
transpose action n -> (a*n1 + c*n2, b*n1 + d*n2): for every theta matrix A,

    U_N(A)^-1 T_N(n) U_N(A) = T_N(A^t n)

holds to rounding error, with no extra phase.  (The convention was fixed by
checking the shear A = T2 at N = 4 over all modes and is used throughout.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .phases import e_frac_array
from .propagator import build
from .sl2 import Mat2

Mode = tuple[int, int]
Observable = Mapping[Mode, complex]

EGOROV_TOL = 1e-8  # times N


def delta_basis(nu: int, n: int) -> np.ndarray:
    """Basis vector with value sqrt(N) at position nu, 0 elsewhere."""
    if not 0 <= nu < n:
        raise IndexError(f"position {nu} outside 0..{n - 1}")
    v = np.zeros(n, dtype=np.complex128)
    v[nu] = math.sqrt(n)
    return v


def inner_product(phi: np.ndarray, psi: np.ndarray) -> complex:
    """(1/N) * sum conj(phi) * psi, antilinear in the first argument."""
    return complex(np.vdot(phi, psi) / len(phi))


def translation_t1(n: int) -> np.ndarray:
    """Diagonal phase translation: multiplies f(Q) by e(Q/N)."""
    q = np.arange(n, dtype=np.int64)
    return np.diag(e_frac_array(q, n))


def translation_t2(n: int) -> np.ndarray:
    """Cyclic position shift: maps f(Q) to f(Q + 1)."""
    q = np.arange(n)
    m = np.zeros((n, n), dtype=np.complex128)
    m[q, (q + 1) % n] = 1.0
    return m


def symplectic_form(m: Mode, n: Mode) -> int:
    return m[0] * n[1] - m[1] * n[0]


def weyl_op(mode: Mode, n: int) -> np.ndarray:
    """Weyl operator T_N(mode) as an (N, N) matrix.

    Entry (Q, Q') is e((2*n1*Q + n1*n2)/(2N)) at Q' = Q + n2 mod N and zero
    elsewhere.  Accepts arbitrary integer modes; T_N(n + N*m) equals T_N(n)
    up to the sign (-1)^(n1*m2 + n2*m1 + N*m1*m2).
    """
    n1, n2 = mode
    q = np.arange(n, dtype=np.int64)
    num = 2 * (n1 % n) * q + (n1 * n2) % (2 * n)
    u = np.zeros((n, n), dtype=np.complex128)
    u[q, (q + n2) % n] = e_frac_array(num, 2 * n)
    return u


def quantize(f: Observable, n: int) -> np.ndarray:
    """Op_N(f) = sum of fhat(m) T_N(m) over the support of f."""
    op = np.zeros((n, n), dtype=np.complex128)
    for mode, coeff in f.items():
        op += coeff * weyl_op(mode, n)
    return op


def compose_classical(f: Observable, m: Mat2) -> dict[Mode, complex]:
    """Fourier coefficients of f composed with the torus map of m.

    Each mode is carried to its image under the transpose action, so the
    support size is preserved.
    """
    return {
        (m.a * n1 + m.c * n2, m.b * n1 + m.d * n2): coeff
        for (n1, n2), coeff in f.items()
    }


def is_real_observable(f: Observable, tol: float = 1e-12) -> bool:
    """True iff fhat(-m) = conj(fhat(m)) throughout, so Op_N(f) is Hermitian."""
    for (n1, n2), coeff in f.items():
        other = f.get((-n1, -n2), 0.0)
        if abs(other - coeff.conjugate()) > tol:
            return False
    return True


@dataclass(frozen=True)
class EgorovReport:
    """Outcome of an exact-conjugation check."""

    max_error: float
    tol: float
    passed: bool


def verify_egorov(m: Mat2, n: int, f: Observable, tol_scale: float = 1.0) -> EgorovReport:
    """Check U^-1 Op_N(f) U = Op_N(f o A) for the propagator U of m."""
    u = build(m, n)
    lhs = u.conj().T @ quantize(f, n) @ u
    rhs = quantize(compose_classical(f, m), n)
    err = float(np.abs(lhs - rhs).max())
    tol = EGOROV_TOL * n * tol_scale
    return EgorovReport(err, tol, err < tol)


def egorov_mode_errors(m: Mat2, n: int) -> np.ndarray:
    """Conjugation error of every single mode (n1, n2) in [0, N)^2."""
    u = build(m, n)
    uh = u.conj().T
    errs = np.empty((n, n))
    for n1 in range(n):
        for n2 in range(n):
            conj = uh @ weyl_op((n1, n2), n) @ u
            image = (m.a * n1 + m.c * n2, m.b * n1 + m.d * n2)
            errs[n1, n2] = np.abs(conj - weyl_op(image, n)).max()
    return errs


@dataclass(frozen=True)
class BracketDeviation:
    """Distance of the scaled commutator from the quantized Poisson bracket."""

    absolute: float
    relative: float


def bracket_deviation(mode1: Mode, mode2: Mode, n: int) -> BracketDeviation:
    """Compare (N/2pi) [T(m), T(n)] with Op of the Poisson bracket.

    For single modes the bracket is {e_m, e_n} = 4 pi^2 omega(m, n) e_{m+n}.
    The two sides differ by a fixed normalization, so the absolute deviation
    does not shrink with N; the deviation relative to the commutator norm is
    the quantity that decreases toward its limit and is what trend tests
    should assert on.  Requires omega(mode1, mode2) != 0 mod N.
    """
    comm = weyl_op(mode1, n) @ weyl_op(mode2, n) - weyl_op(mode2, n) @ weyl_op(mode1, n)
    scaled = (n / (2 * math.pi)) * comm
    omega = symplectic_form(mode1, mode2)
    summed = (mode1[0] + mode2[0], mode1[1] + mode2[1])
    bracket_op = 4 * math.pi**2 * omega * weyl_op(summed, n)
    dev = float(np.abs(scaled - bracket_op).max())
    base = float(np.abs(scaled).max())
    rel = dev / base if base > 0 else math.inf
    return BracketDeviation(dev, rel)
