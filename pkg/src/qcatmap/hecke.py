"""Congruence structure of propagators and commuting (Hecke-type) families.

The propagator at dimension N depends on the theta matrix only through its
residue mod 4N.  For matrices congruent mod 2N the two propagators agree up
to the sign jacobi(N, |a|), where a is the top-left entry of the connecting
matrix C = B^-1 A (congruent to the identity mod 2N); both signs occur.

For a fixed A, the matrices B with AB = BA mod 4N form a family whose lifted
propagators commute with U_N(A).  The family is enumerated by brute force
over SL(2, Z/4NZ) with the theta parity filter, and members are lifted back
to genuine theta-group matrices by a bounded search.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .numtheory import jacobi
from .propagator import MULT_TOL, build
from .sl2 import Mat2, require_theta


class NotCongruentError(ValueError):
    """Raised when two matrices fail the required congruence."""


class CapExceededError(ValueError):
    """Raised when a commutant enumeration would exceed the modulus cap."""


class LiftError(ValueError):
    """Raised when no theta-group lift is found within the search bound."""


@dataclass(frozen=True)
class ModMatrix:
    """2x2 matrix of residues mod a fixed modulus."""

    a: int
    b: int
    c: int
    d: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be a positive integer")
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.modulus)

    def __matmul__(self, other: "ModMatrix") -> "ModMatrix":
        if self.modulus != other.modulus:
            raise ValueError("moduli differ")
        m = self.modulus
        return ModMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            m,
        )


def reduce_mod(m: Mat2, modulus: int) -> ModMatrix:
    """Entrywise reduction of an integer matrix mod modulus >= 1."""
    return ModMatrix(m.a, m.b, m.c, m.d, modulus)


def _congruent(a: Mat2, b: Mat2, modulus: int) -> bool:
    return all((x - y) % modulus == 0 for x, y in zip(a.entries(), b.entries()))


@dataclass(frozen=True)
class CongruenceReport:
    max_entry_error: float
    tol: float
    passed: bool


def verify_mod4N(a: Mat2, b: Mat2, n: int, tol_scale: float = 1.0) -> CongruenceReport:
    """Check build(A) = build(B) for A = B mod 4N."""
    if not _congruent(a, b, 4 * n):
        raise NotCongruentError(f"{a} and {b} differ mod {4 * n}")
    err = float(np.abs(build(a, n) - build(b, n)).max())
    tol = MULT_TOL * n * tol_scale
    return CongruenceReport(err, tol, err < tol)


@dataclass(frozen=True)
class ModFactorReport:
    factor: int
    max_entry_error: float
    tol: float
    verified: bool


def mod2N_factor(a: Mat2, b: Mat2, n: int, tol_scale: float = 1.0) -> ModFactorReport:
    """Sign relating propagators of matrices congruent mod 2N.

    Returns jacobi(N, |c_a|) for the top-left entry c_a of C = B^-1 A and
    verifies build(A) = factor * build(B).  The factor is +1 whenever the
    congruence actually holds mod 4N, but genuinely -1 for some pairs that
    agree only mod 2N.
    """
    if not _congruent(a, b, 2 * n):
        raise NotCongruentError(f"{a} and {b} differ mod {2 * n}")
    c = b.inverse() @ a
    factor = jacobi(n, abs(c.a))
    err = float(np.abs(build(a, n) - factor * build(b, n)).max())
    tol = MULT_TOL * n * tol_scale
    return ModFactorReport(factor, err, tol, err < tol)


def commutant_mod(a: Mat2, n: int, cap: int = 64) -> list[ModMatrix]:
    """All theta matrices mod 4N commuting with A mod 4N.

    Brute-force enumeration over SL(2, Z/4NZ) with the parity filter
    ab = cd = 0 mod 2; refuses to run when 4N exceeds the cap.  The result
    is sorted by entries and closed under multiplication mod 4N.
    """
    m = 4 * n
    if m > cap:
        raise CapExceededError(f"4N = {m} exceeds enumeration cap {cap}")
    aa, ab, ac, ad = (x % m for x in a.entries())
    grid = np.arange(m, dtype=np.int64)
    cg, dg = np.meshgrid(grid, grid, indexing="ij")
    members = []
    for ba in range(m):
        for bb in range(m):
            if (ba * bb) % 2:
                continue
            ok = (ba * dg - bb * cg) % m == 1
            ok &= (cg * dg) % 2 == 0
            ok &= (ab * cg - bb * ac) % m == 0
            ok &= (bb * (aa - ad) - ab * (ba - dg)) % m == 0
            ok &= (ac * (ba - dg) - cg * (aa - ad)) % m == 0
            for bc, bd in zip(cg[ok], dg[ok]):
                members.append(ModMatrix(ba, bb, int(bc), int(bd), m))
    return members


def _offsets(bound: int):
    yield 0
    for k in range(1, bound + 1):
        yield -k
        yield k


def _solve_linear(a: int, b: int, k: int):
    """One solution (v, u) of a*v - b*u = k, or None."""
    if a == 0 and b == 0:
        return None
    g = math.gcd(a, b)
    if k % g:
        return None
    # extended gcd: x*a + y*b = g
    x0, x1, y0, y1, r0, r1 = 1, 0, 0, 1, a, b
    while r1:
        q, (r0, r1) = r0 // r1, (r1, r0 - (r0 // r1) * r1)
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    scale = k // g
    return x0 * scale, -y0 * scale


def lift_theta(bm: ModMatrix, search_bound: int = 4) -> Mat2:
    """Integer theta-group matrix congruent to bm mod its modulus.

    Searches top-row representatives within search_bound moduli of the
    residues and solves the determinant exactly for the bottom row; the
    parity conditions hold automatically because the modulus is even.
    Raises LiftError when the bound is exhausted.
    """
    m = bm.modulus
    if m % 2:
        raise ValueError("lifting requires an even modulus")
    if (bm.a * bm.d - bm.b * bm.c) % m != 1:
        raise LiftError(f"{bm} has determinant != 1 mod {m}")
    if (bm.a * bm.b) % 2 or (bm.c * bm.d) % 2:
        # m even, so a lift has the same entry parities as the residues
        raise LiftError(f"{bm} violates the parity conditions")
    for s in _offsets(search_bound):
        av = bm.a + m * s
        for t in _offsets(search_bound):
            bv = bm.b + m * t
            k = 1 - av * bm.d + bv * bm.c
            sol = _solve_linear(av, bv, k // m)
            if sol is None:
                continue
            v0, u0 = sol
            # general solution: v = v0 + (bv/g) j, u = u0 + (av/g) j;
            # pick j to keep the free bottom-row entry small
            g = math.gcd(av, bv)
            if bv != 0:
                step = bv // g
                j = round(-(bm.d / m + v0) / step)
            else:
                step = av // g
                j = round(-(bm.c / m + u0) / step)
            v = v0 + (bv // g) * j
            u = u0 + (av // g) * j
            cand = Mat2(av, bv, bm.c + m * u, bm.d + m * v)
            if cand.det() != 1:
                continue
            require_theta(cand)
            return cand
    raise LiftError(f"no theta lift of {bm} within bound {search_bound}")


@dataclass(frozen=True)
class HeckeReport:
    commutant_size: int
    checked: int
    max_error_vs_a: float
    max_pairwise_error: float
    tol: float
    passed: bool


def verify_hecke(a: Mat2, n: int, samples: int | None = None, cap: int = 64,
                 seed: int = 0, pairwise_cap: int = 40,
                 tol_scale: float = 1.0) -> HeckeReport:
    """Lift commutant members and check operator commutation.

    Every lifted member must commute with U_N(A).  With samples=None all
    members are lifted; otherwise a seeded random subset.  Pairs of lifted
    members (up to pairwise_cap of them) are checked against each other
    whenever their reductions already commute mod 4N.
    """
    members = commutant_mod(a, n, cap=cap)
    if samples is None or samples >= len(members):
        picked = members
    else:
        picked = random.Random(seed).sample(members, samples)
    u_a = build(a, n)
    tol = MULT_TOL * n * tol_scale
    lifts = [(bm, build(lift_theta(bm), n)) for bm in picked]
    max_err = 0.0
    for _, u_b in lifts:
        max_err = max(max_err, float(np.abs(u_a @ u_b - u_b @ u_a).max()))
    max_pair = 0.0
    head = lifts[:pairwise_cap]
    for i in range(len(head)):
        for j in range(i + 1, len(head)):
            bi, ui = head[i]
            bj, uj = head[j]
            if bi @ bj != bj @ bi:
                continue
            max_pair = max(max_pair, float(np.abs(ui @ uj - uj @ ui).max()))
    passed = max_err < tol and max_pair < tol
    return HeckeReport(len(members), len(lifts), max_err, max_pair, tol, passed)


def congruent_companion(a: Mat2, modulus: int, rng: random.Random) -> Mat2:
    """Random theta matrix congruent to A mod an even modulus.

    Multiplies A on the right by a matrix C = 1 mod modulus.  C is drawn
    either as an elementary shear (top-left entry 1) or with top-left entry
    1 + modulus*t, which is what makes the mod-2N sign nontrivial.
    """
    m = modulus
    kind = rng.randrange(3)
    if kind == 0:
        return a @ Mat2(1, m * rng.randint(-3, 3), 0, 1)
    if kind == 1:
        return a @ Mat2(1, 0, m * rng.randint(-3, 3), 1)
    for _ in range(64):
        t = rng.choice([-2, -1, 1, 2])
        s = rng.choice([-2, -1, 1, 2])
        ca = 1 + m * t
        cb = m * s
        if math.gcd(ca, m * abs(cb)) != 1:
            continue
        cd = pow(ca, -1, m * abs(cb))
        if (ca * cd - 1) % cb:
            continue
        cc = (ca * cd - 1) // cb
        c = Mat2(ca, cb, cc, cd)
        if c.det() == 1 and cc % m == 0:
            return a @ c
    return a @ Mat2(1, m * rng.randint(-3, 3), 0, 1)
