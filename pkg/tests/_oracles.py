"""Independent reference implementations used to cross-check the library.

Everything here is deliberately written the slow, obvious way (trial
factorization, term-by-term summation) so that agreement with the fast
library code is meaningful.
"""

import cmath
import math


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def legendre(q: int, p: int) -> int:
    """Legendre symbol by Euler's criterion; p an odd prime."""
    q %= p
    if q == 0:
        return 0
    e = pow(q, (p - 1) // 2, p)
    return 1 if e == 1 else -1


def jacobi_reference(q: int, r: int) -> int:
    """Jacobi symbol via factorization of the odd bottom entry r >= 1."""
    if r < 1 or r % 2 == 0:
        raise ValueError("bottom entry must be odd and positive")
    result = 1
    for p, e in factorize(r).items():
        result *= legendre(q, p) ** e
    return result


def gauss_reference(alpha: int, beta: int, gamma: int) -> complex:
    """Average of e((alpha k^2 + gamma k)/(2 beta)) over a full period.

    Numerators are reduced mod the period before exponentiating so the
    result is accurate to roundoff even where the sum cancels exactly.
    """
    if beta == 0:
        raise ValueError("beta must be nonzero")
    period = 2 * abs(beta)
    s = 1 if beta > 0 else -1
    total = 0j
    for k in range(period):
        num = (s * (alpha * k * k + gamma * k)) % period
        total += cmath.exp(2j * cmath.pi * num / period)
    return total / (2.0 * math.sqrt(abs(beta)))
