"""Normalized quadratic Gauss sums and their closed-form evaluation.

The sum studied here is

    G(alpha, beta, gamma) = |beta|^(-1/2) * sum_k e((alpha*k^2 + gamma*k) / (2*beta))

with e(x) = exp(2*pi*i*x) and integer parameters, beta != 0.  The summand has
period 2|beta| in k, and period |beta| exactly when alpha*beta + gamma is
even; gauss_direct averages over the full 2|beta| period, which reproduces
the |beta|-term sum whenever that one is well defined and vanishes
identically when alpha*beta + gamma is odd.

For coprime alpha, beta the nonzero values have unit modulus and a closed
form per parity branch, evaluated by gauss_closed through Jacobi symbols,
eighth roots of unity and one modular inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numtheory import NotCoprimeError, jacobi, sign
from .phases import e8, e_frac, e_frac_array

# Above these sizes the vectorized int64 reductions could overflow; fall back
# to exact Python-int arithmetic.
_DIRECT_VECTOR_MAX_BETA = 500_000
_CLOSED_VECTOR_MAX_BETA = 1_000_000


class VanishingError(ValueError):
    """Raised when the closed form is requested for a vanishing sum."""


class UnsupportedParityError(ValueError):
    """Raised when the parameter parities match no closed-form branch."""


@dataclass(frozen=True)
class GaussParams:
    """Integer parameters (alpha, beta, gamma) with beta != 0."""

    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if self.beta == 0:
            raise ValueError("beta must be nonzero")


def is_nonvanishing(p: GaussParams) -> bool:
    """True iff gcd(alpha, beta) = 1 and alpha*beta + gamma is even.

    These are the conditions under which the period-averaged sum is nonzero
    for parameters arising from propagators (where alpha and beta are
    coprime by construction).
    """
    return math.gcd(p.alpha, p.beta) == 1 and (p.alpha * p.beta + p.gamma) % 2 == 0


def gauss_direct(p: GaussParams) -> complex:
    """Direct summation oracle, averaged over the full period 2|beta|.

    Equals the |beta|-term sum |beta|^(-1/2) * sum_{k=0}^{|beta|-1} whenever
    alpha*beta + gamma is even (the summand then has period |beta|), and is
    exactly zero when alpha*beta + gamma is odd.
    """
    beta_abs = abs(p.beta)
    n = 2 * beta_abs
    s = 1 if p.beta > 0 else -1
    if beta_abs <= _DIRECT_VECTOR_MAX_BETA:
        a_r = (s * p.alpha) % n
        g_r = (s * p.gamma) % n
        k = np.arange(n, dtype=np.int64)
        total = e_frac_array(a_r * k * k + g_r * k, n).sum()
    else:
        total = sum(e_frac(s * (p.alpha * k * k + p.gamma * k), n) for k in range(n))
    return complex(total) / (2.0 * math.sqrt(beta_abs))


def _branch(alpha: int, beta: int) -> tuple[complex, int, int]:
    """Leading constant, modular inverse and required gamma parity for the
    closed-form branch selected by the parities of alpha and beta."""
    beta_abs = abs(beta)
    if alpha % 2 == 0:
        # alpha even, beta odd, gamma even
        lead = jacobi(abs(alpha), beta_abs) * e8(-sign(alpha * beta) * (beta_abs - 1))
        inv = pow(alpha, -1, beta_abs) if beta_abs > 1 else 0
        return lead, inv, 0
    if beta % 2 == 0:
        # alpha odd, beta even, gamma even
        lead = jacobi(beta_abs, abs(alpha)) * e8(sign(alpha * beta) * abs(alpha))
        inv = pow(alpha, -1, beta_abs) if beta_abs > 1 else 0
        return lead, inv, 0
    # alpha odd, beta odd, gamma odd
    lead = jacobi(abs(alpha), beta_abs) * e8(-sign(alpha * beta) * (beta_abs - 1))
    inv4 = pow(4 * alpha, -1, beta_abs) if beta_abs > 1 else 0
    return lead, inv4, 1


def gauss_closed(p: GaussParams) -> complex:
    """Closed-form value of a nonvanishing sum.

    Dispatches on the parities of (alpha, beta, gamma):

      alpha even, beta odd, gamma even:
          jacobi(|a|,|b|) e(-sgn(ab)(|b|-1)/8) e(-(a*ainv^2/(2b))*(g/2)^2)
      alpha odd, beta even, gamma even:
          jacobi(|b|,|a|) e(+sgn(ab)|a|/8)     e(-(a*ainv^2/(2b))*(g/2)^2)
      alpha odd, beta odd, gamma odd:
          jacobi(|a|,|b|) e(-sgn(ab)(|b|-1)/8) e(-2a*w^2*g^2/b),  w = (4a)^-1 mod |b|

    with all inverses taken mod |beta|; the resulting value does not depend
    on the representative chosen.  Raises VanishingError if is_nonvanishing
    fails, UnsupportedParityError if no branch matches (unreachable for
    nonvanishing parameters, kept as a guard).
    """
    if not is_nonvanishing(p):
        raise VanishingError(f"sum vanishes for {p}")
    lead, inv, gamma_parity = _branch(p.alpha, p.beta)
    if p.gamma % 2 != gamma_parity:
        raise UnsupportedParityError(f"parities of {p} match no branch")
    beta_abs = abs(p.beta)
    if gamma_parity == 0:
        x = (inv * (p.gamma // 2)) % beta_abs
        return lead * e_frac(-p.alpha * x * x, 2 * p.beta)
    x = (inv * p.gamma) % beta_abs
    return lead * e_frac(-2 * p.alpha * x * x, p.beta)


def gauss_closed_many(alpha: int, beta: int, gammas) -> np.ndarray:
    """Closed-form values for an array of gamma values at fixed alpha, beta.

    Requires gcd(alpha, beta) = 1.  Entries whose gamma has the wrong parity
    for the branch (so alpha*beta + gamma is odd) are returned as 0, matching
    the period-averaged direct sum.
    """
    if math.gcd(alpha, beta) != 1:
        raise NotCoprimeError(f"alpha={alpha} and beta={beta} share a factor")
    beta_abs = abs(beta)
    s = 1 if beta > 0 else -1
    lead, inv, gamma_parity = _branch(alpha, beta)
    gam = np.asarray(gammas, dtype=object if beta_abs > _CLOSED_VECTOR_MAX_BETA else np.int64)
    gam = gam % (2 * beta_abs)  # the value has period 2|beta| in gamma
    if beta_abs > _CLOSED_VECTOR_MAX_BETA:
        out = np.empty(gam.shape, dtype=np.complex128)
        flat = out.reshape(-1)
        for i, g in enumerate(int(v) for v in gam.reshape(-1)):
            if g % 2 != gamma_parity:
                flat[i] = 0.0
            else:
                flat[i] = gauss_closed(GaussParams(alpha, beta, g))
        return out
    valid = (gam % 2) == gamma_parity
    if gamma_parity == 0:
        x = (inv * (gam // 2)) % beta_abs
        num = -((alpha % (2 * beta_abs)) * x * x) * s
        vals = lead * e_frac_array(num, 2 * beta_abs)
    else:
        x = (inv * gam) % beta_abs
        num = -(2 * (alpha % beta_abs) * x * x) * s
        vals = lead * e_frac_array(num, beta_abs)
    return np.where(valid, vals, 0.0)
