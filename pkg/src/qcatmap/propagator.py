"""Unitary propagators of theta-group cat maps on the discrete torus.

A matrix A = (a, b; c, d) in the theta group acts on the N-dimensional state
space of the quantized torus (wavefunctions on Z/NZ, with 2*pi*hbar = 1/N).
Its propagator U_N(A) is assembled case by case from the entries of A:

  b = 0 (shear):       [U f](Q) = e(s*m*Q^2/(2N)) f(s*Q),  A = (s, 0; m, s)
  a = 0 (anti-shear):  [U f](Q) = N^(-1/2) * sum_Q' e(s*(w*Q^2 - 2*Q*Q')/(2N)) f(Q'),
                       A = (0, s; -s, w)
  general a, b != 0:   [U f](Q) = h(a,b)/sqrt(N_b) * sum_Q' G(N_b*a, b', g(Q,Q'))
                       * e((d*Q^2 - 2*Q*Q' + a*Q'^2)/(2*N*b)) f(Q')

with N_b = N/gcd(b,N), b' = b/gcd(b,N), g(Q,Q') = 2*(a*Q' - Q)/gcd(b,N), and
G the normalized Gauss sum of the gauss module.  Entries vanish when g is not
an integer or the Gauss sum parity condition fails.  The map A -> U_N(A) is
exactly multiplicative and depends on A only through its residue mod 4N.

The special matrices S (Fourier transform) and P (parity) are the w = 0
anti-shear and m = 0 negative shear respectively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gauss
from .numtheory import NotCoprimeError, jacobi, sign
from .phases import e8, e_frac, e_frac_array
from .sl2 import Mat2, require_theta

# Entry-grid reductions use int64; beyond these sizes fall back to exact
# Python-int arithmetic entry by entry.
_INT64_LIMIT = 2**62

# Contractual tolerance coefficients
UNITARITY_TOL = 1e-9          # times sqrt(N)
MULT_TOL = 1e-8               # times N


class InvalidParityError(ValueError):
    """Raised when h(a, b) is requested with a and b of equal parity."""


@dataclass(frozen=True)
class CaseTag:
    """Structural case of a theta matrix: which propagator formula applies."""

    kind: str  # "fourier" | "parity" | "shear" | "antishear" | "general"
    sign: int = 0
    param: int = 0

    def __str__(self) -> str:
        pm = "+" if self.sign > 0 else "-"
        if self.kind == "fourier":
            return f"fourier({pm})"
        if self.kind == "parity":
            return "parity"
        if self.kind == "shear":
            return f"shear(m={self.param},{pm})"
        if self.kind == "antishear":
            return f"antishear(w={self.param},{pm})"
        return "general"


def classify(m: Mat2) -> CaseTag:
    """Most specific case tag for a theta matrix.

    Precedence: b = 0 gives a shear (parity when it is the point reflection),
    a = 0 gives an anti-shear (fourier when w = 0), anything else is general.
    """
    require_theta(m)
    if m.b == 0:
        if m.c == 0 and m.a == -1:
            return CaseTag("parity")
        return CaseTag("shear", sign=m.a, param=m.c)
    if m.a == 0:
        if m.d == 0:
            return CaseTag("fourier", sign=m.c)
        return CaseTag("antishear", sign=m.b, param=m.d)
    return CaseTag("general")


def h_phase(a: int, b: int) -> complex:
    """Unit-modulus normalization factor h(a, b) of the general case.

    For a even: jacobi(|a|, |b|) * e(+sgn(ab)(|b| - 1)/8).
    For a odd:  jacobi(|b|, |a|) * e(-sgn(ab)|a|/8).

    Requires a, b nonzero and coprime with exactly one of them even.  The
    identity h(a, b) = h(d, b) holds whenever (a, b; c, d) is a theta-group
    matrix, since then d has the same parity as a.
    """
    if a == 0 or b == 0:
        raise ValueError("h(a, b) requires nonzero arguments")
    if (a + b) % 2 == 0:
        raise InvalidParityError(f"h({a}, {b}) needs exactly one even argument")
    if math.gcd(a, b) != 1:
        raise NotCoprimeError(f"h({a}, {b}) requires coprime arguments")
    if a % 2 == 0:
        return jacobi(abs(a), abs(b)) * e8(sign(a * b) * (abs(b) - 1))
    return jacobi(abs(b), abs(a)) * e8(-sign(a * b) * abs(a))


def unitarity_defect(u: np.ndarray) -> float:
    """Max-entry deviation of u^dagger u from the identity."""
    n = u.shape[0]
    return float(np.abs(u.conj().T @ u - np.eye(n)).max())


def _build_shear(a: int, c: int, n: int) -> np.ndarray:
    q = np.arange(n, dtype=np.int64)
    two_n = 2 * n
    num = ((a * c) % two_n) * q * q
    u = np.zeros((n, n), dtype=np.complex128)
    u[q, (a * q) % n] = e_frac_array(num, two_n)
    return u


def _build_antishear(b: int, d: int, n: int) -> np.ndarray:
    q = np.arange(n, dtype=np.int64)
    two_n = 2 * n
    num = ((b * d) % two_n) * (q * q)[:, None] + ((-2 * b) % two_n) * np.outer(q, q)
    return e_frac_array(num, two_n) / math.sqrt(n)


def _build_general(m: Mat2, n: int) -> np.ndarray:
    a, b, d = m.a, m.b, m.d
    g = math.gcd(b, n)
    n_b = n // g
    bp = b // g
    beta_abs = abs(bp)
    alpha = n_b * a
    hval = h_phase(a, b)
    s = 1 if b > 0 else -1
    den = 2 * n * abs(b)
    if 6 * den * n * n < _INT64_LIMIT and beta_abs <= 10**6:
        q = np.arange(n, dtype=np.int64)
        qq = q * q
        quad = (
            ((s * d) % den) * qq[:, None]
            + ((-2 * s) % den) * np.outer(q, q)
            + ((s * a) % den) * qq[None, :]
        )
        phases = e_frac_array(quad, den)
        # gamma = 2(aQ' - Q)/g, needed only mod 2|b'| and mod g for the mask
        span = 2 * beta_abs * g
        t = 2 * ((a % span) * q[None, :] - q[:, None])
        mask = (t % g) == 0
        gam = np.where(mask, t, 0) // g % (2 * beta_abs)
        uniq, inv_idx = np.unique(gam, return_inverse=True)
        gvals = gauss.gauss_closed_many(alpha, bp, uniq)
        ggrid = gvals[inv_idx].reshape(n, n)
        return (hval / math.sqrt(n_b)) * np.where(mask, ggrid, 0.0) * phases
    # exact fallback for enormous entries
    u = np.zeros((n, n), dtype=np.complex128)
    cache: dict[int, complex] = {}
    scale = hval / math.sqrt(n_b)
    for qr in range(n):
        for qc in range(n):
            t = 2 * (a * qc - qr)
            if t % g:
                continue
            gam = (t // g) % (2 * beta_abs)
            if gam not in cache:
                p = gauss.GaussParams(alpha, bp, gam)
                cache[gam] = gauss.gauss_closed(p) if gauss.is_nonvanishing(p) else 0.0
            if cache[gam] == 0.0:
                continue
            quad = d * qr * qr - 2 * qr * qc + a * qc * qc
            u[qr, qc] = scale * cache[gam] * e_frac(quad, 2 * n * b)
    return u


def build(m: Mat2, n: int, check: bool = True) -> np.ndarray:
    """Propagator U_N(A) of the theta matrix A at dimension N.

    Parameters
    ----------
    m : Mat2
        Theta-group matrix; raises NotThetaError otherwise.
    n : int
        Hilbert-space dimension N >= 1.
    check : bool
        Assert unitarity of the result (max defect below 1e-9 * sqrt(N)).

    Returns
    -------
    numpy.ndarray
        Complex (N, N) matrix indexed by position, rows = output index.
    """
    require_theta(m)
    if n < 1:
        raise ValueError("dimension must be a positive integer")
    if m.b == 0:
        u = _build_shear(m.a, m.c, n)
    elif m.a == 0:
        u = _build_antishear(m.b, m.d, n)
    else:
        u = _build_general(m, n)
    if check:
        assert unitarity_defect(u) < UNITARITY_TOL * math.sqrt(n), (
            f"propagator of {m} at N={n} is not unitary"
        )
    return u


@dataclass(frozen=True)
class MultReport:
    """Outcome of a multiplicativity check U(AB) = U(A) U(B)."""

    max_entry_error: float
    tol: float
    passed: bool


def verify_mult(a: Mat2, b: Mat2, n: int, tol_scale: float = 1.0) -> MultReport:
    """Compare build(A @ B) against build(A) @ build(B) entrywise."""
    lhs = build(a @ b, n)
    rhs = build(a, n) @ build(b, n)
    err = float(np.abs(lhs - rhs).max())
    tol = MULT_TOL * n * tol_scale
    return MultReport(err, tol, err < tol)


def _hb_h(m: Mat2) -> complex:
    # diagnostic extension of h to the shear/anti-shear cases, where the
    # defining formula degenerates to 1 (jacobi with top entry 0 and |bottom| 1)
    if m.a == 0 or m.b == 0:
        return 1.0
    return h_phase(m.a, m.b)


def projective_phase(a: Mat2, b: Mat2, n: int, variant: str = "paper") -> complex:
    """Scalar lambda with U(AB) = lambda * U(A) U(B) under a normalization.

    variant "paper" uses build() directly, whose normalization is exactly
    multiplicative, so lambda = 1 up to rounding.  variant "hannay_berry"
    rescales each propagator to sqrt(i) * U / h(a, b) (with h extended as 1
    on the shear and anti-shear cases, flagged as a diagnostic convention);
    the resulting lambda is a nontrivial eighth root of unity in general.
    """
    if variant not in ("paper", "hannay_berry"):
        raise ValueError(f"unknown variant {variant!r}")
    u_ab = build(a @ b, n)
    u_a = build(a, n)
    u_b = build(b, n)
    if variant == "hannay_berry":
        root_i = e8(1)
        u_ab = root_i * u_ab / _hb_h(a @ b)
        u_a = root_i * u_a / _hb_h(a)
        u_b = root_i * u_b / _hb_h(b)
    prod = u_a @ u_b
    idx = int(np.abs(prod).argmax())
    lam = complex(u_ab.flat[idx] / prod.flat[idx])
    return lam


def propagator_json(m: Mat2, n: int) -> dict:
    """JSON-ready payload: dimension, complex matrix as [re, im] pairs
    (row-major, rows = output index), case string, and input matrix."""
    u = build(m, n)
    return {
        "N": n,
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in u],
        "case": str(classify(m)),
        "A": list(m.entries()),
    }
