"""Integer 2x2 matrices, the theta group, and generator words.

The theta group consists of the matrices (a, b; c, d) in SL(2, Z) with
a*b and c*d both even.  It is generated by

    S  = (0, -1; 1, 0)       quarter turn
    P  = (-1, 0; 0, -1)      central point reflection, P = S^2
    T2 = (1, 0; 2, 1)        lower shear by 2

together with their inverses S- = S^-1 and T2- = T2^-1.  Words are ordered
lists of the tokens "S", "S-", "P", "T2", "T2-" and evaluate left to right.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


class NotThetaError(ValueError):
    """Raised when a matrix is outside the theta group."""


@dataclass(frozen=True)
class Mat2:
    """Integer 2x2 matrix (a, b; c, d) with arbitrary-precision entries."""

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mat2":
        """Inverse in SL(2, Z); requires det = 1."""
        if self.det() != 1:
            raise ValueError("inverse is only defined for determinant 1")
        return Mat2(self.d, -self.b, -self.c, self.a)

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c},{self.d}"

    @classmethod
    def from_string(cls, text: str) -> "Mat2":
        """Parse 'a,b,c,d' into a matrix."""
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts))


IDENTITY = Mat2(1, 0, 0, 1)
S_PLUS = Mat2(0, -1, 1, 0)
S_MINUS = Mat2(0, 1, -1, 0)
P_MAT = Mat2(-1, 0, 0, -1)
T2_PLUS = Mat2(1, 0, 2, 1)
T2_MINUS = Mat2(1, 0, -2, 1)

TOKENS = ("S", "S-", "P", "T2", "T2-")
TOKEN_MATRIX = {
    "S": S_PLUS,
    "S-": S_MINUS,
    "P": P_MAT,
    "T2": T2_PLUS,
    "T2-": T2_MINUS,
}
TOKEN_INVERSE = {"S": "S-", "S-": "S", "P": "P", "T2": "T2-", "T2-": "T2"}


def is_theta(m: Mat2) -> bool:
    """True iff m is in SL(2, Z) with a*b and c*d even."""
    return m.det() == 1 and (m.a * m.b) % 2 == 0 and (m.c * m.d) % 2 == 0


def require_theta(m: Mat2) -> Mat2:
    if m.det() != 1:
        raise NotThetaError(f"determinant of {m} is {m.det()}, not 1")
    if (m.a * m.b) % 2 or (m.c * m.d) % 2:
        raise NotThetaError(f"{m} fails the parity conditions ab, cd = 0 mod 2")
    return m


def evaluate(word: list[str]) -> Mat2:
    """Product of generator matrices, left to right; [] gives the identity."""
    m = IDENTITY
    for tok in word:
        m = m @ TOKEN_MATRIX[tok]
    return m


def parse_word(text: str) -> list[str]:
    """Parse a space-separated, case-insensitive token string."""
    word = []
    for raw in text.split():
        tok = raw.upper()
        if tok not in TOKEN_MATRIX:
            raise ValueError(f"unknown generator token {raw!r}")
        word.append(tok)
    return word


def format_word(word: list[str]) -> str:
    return " ".join(word)


def decompose(m: Mat2) -> list[str]:
    """Write a theta-group matrix as a generator word with evaluate(word) = m.

    Euclidean-style descent on the top row: while b != 0, either swap the
    top-row entries with an S, or shrink a with a power of T2.  The T2 power
    is chosen to minimize the resulting |a|, breaking ties toward the
    nonnegative representative, so the output word is deterministic.
    """
    require_theta(m)
    work = m
    applied: list[str] = []
    guard = 0
    while work.b != 0:
        guard += 1
        if guard > 8 * (abs(m.a) + abs(m.b)).bit_length() + 64:
            raise RuntimeError(f"descent failed to terminate for {m}")
        if work.a == 0:
            # (0, +-1; -+1, w): one S multiplication clears b
            tok = "S" if work.b == 1 else "S-"
            work = work @ TOKEN_MATRIX[tok]
            applied.append(tok)
        elif abs(work.a) < abs(work.b):
            work = work @ S_PLUS
            applied.append("S")
        else:
            twob = 2 * abs(work.b)
            r = work.a % twob
            new_a = r if r <= abs(work.b) else r - twob
            k = (new_a - work.a) // (2 * work.b)
            # k = 0 would mean |a| <= |b|; equality is excluded by parity
            tok = "T2" if k > 0 else "T2-"
            work = work @ Mat2(1, 0, 2 * k, 1)
            applied.extend([tok] * abs(k))
    # work is now (s, 0; m, s) with s = +-1 and m even
    sgn, shear = work.a, work.c
    mm = shear if sgn == 1 else -shear
    tail = ["T2"] * (mm // 2) if mm >= 0 else ["T2-"] * ((-mm) // 2)
    if sgn == -1:
        tail.append("P")
    return tail + [TOKEN_INVERSE[t] for t in reversed(applied)]


def reduce_word(word: list[str]) -> list[str]:
    """Shorten a word without changing its evaluation.

    Uses that P is central with P^2 = 1, that S S = P (and S- S- = P), and
    cancels adjacent inverse pairs.  The result carries at most one trailing
    P and no adjacent inverse pairs.
    """
    p_parity = 0
    stack: list[str] = []
    for tok in word:
        if tok == "P":
            p_parity ^= 1
            continue
        if stack and stack[-1] == TOKEN_INVERSE[tok]:
            stack.pop()
            continue
        if tok in ("S", "S-") and stack and stack[-1] == tok:
            stack.pop()
            p_parity ^= 1
            continue
        stack.append(tok)
    if p_parity:
        stack.append("P")
    return stack


def random_word(rng: random.Random, max_word_len: int) -> list[str]:
    """Uniformly random word of length 0..max_word_len from a seeded stream."""
    length = rng.randint(0, max_word_len)
    return [rng.choice(TOKENS) for _ in range(length)]


def random_theta(seed: int, max_word_len: int) -> Mat2:
    """Deterministic random theta-group element from a seed."""
    return evaluate(random_word(random.Random(seed), max_word_len))


def random_theta_general(rng: random.Random, max_word_len: int) -> Mat2:
    """Random theta-group element with a != 0 and b != 0."""
    while True:
        m = evaluate(random_word(rng, max_word_len))
        if m.a != 0 and m.b != 0:
            return m
