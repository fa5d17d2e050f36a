import cmath
import math
import random

import numpy as np
import pytest

from qcatmap import gauss
from qcatmap.gauss import GaussParams, UnsupportedParityError, VanishingError
from qcatmap.numtheory import NotCoprimeError
from _oracles import gauss_reference


def e(t):
    return cmath.exp(2j * cmath.pi * t)


# hand-evaluated sums, |value| = 1 on the coprime even-parity domain
KNOWN_VALUES = [
    ((2, 3, 0), 1j),
    ((1, 2, 2), e(-1 / 8)),
    ((3, 5, 1), e(1 / 5)),
    ((1, 3, 1), e(1 / 12)),
    ((2, -3, 0), -1j),
    ((-2, 3, 0), -1j),
    ((1, -2, 2), e(1 / 8)),
]


@pytest.mark.parametrize("params,value", KNOWN_VALUES)
def test_known_values(params, value):
    p = GaussParams(*params)
    assert gauss.is_nonvanishing(p)
    assert abs(gauss.gauss_closed(p) - value) < 1e-12
    assert abs(gauss.gauss_direct(p) - value) < 1e-9


def test_direct_matches_reference():
    rng = random.Random(5)
    for _ in range(200):
        alpha = rng.randint(-30, 30)
        beta = rng.choice([b for b in range(-20, 21) if b])
        gamma = rng.randint(-30, 30)
        p = GaussParams(alpha, beta, gamma)
        assert abs(gauss.gauss_direct(p) - gauss_reference(alpha, beta, gamma)) < 1e-12


def test_closed_matches_direct_coprime():
    rng = random.Random(6)
    done = 0
    while done < 300:
        alpha = rng.randint(-60, 60)
        beta = rng.choice([b for b in range(-40, 41) if b])
        gamma = rng.randint(-80, 80)
        if math.gcd(alpha, beta) != 1:
            continue
        p = GaussParams(alpha, beta, gamma)
        if not gauss.is_nonvanishing(p):
            continue
        closed = gauss.gauss_closed(p)
        assert abs(abs(closed) - 1.0) < 1e-12
        assert abs(closed - gauss.gauss_direct(p)) < 1e-9
        done += 1


def test_odd_parity_vanishes_exactly():
    rng = random.Random(7)
    done = 0
    while done < 300:
        alpha = rng.randint(-60, 60)
        beta = rng.choice([b for b in range(-40, 41) if b])
        gamma = rng.randint(-80, 80)
        if (alpha * beta + gamma) % 2 == 0:
            continue
        assert abs(gauss.gauss_direct(GaussParams(alpha, beta, gamma))) < 1e-12
        done += 1


def test_shared_factor_does_not_imply_vanishing():
    # gcd(alpha, beta) > 1 with even parity can still give a nonzero sum
    p = GaussParams(2, 4, 0)
    assert not gauss.is_nonvanishing(p)
    val = gauss.gauss_direct(p)
    assert abs(val - (1 + 1j)) < 1e-12
    # ... and can also vanish; both happen, so no closed form is offered
    assert abs(gauss.gauss_direct(GaussParams(2, 4, 2))) < 1e-12
    with pytest.raises(VanishingError):
        gauss.gauss_closed(p)


def test_gamma_periodicity():
    rng = random.Random(8)
    for _ in range(200):
        alpha = rng.randint(-40, 40)
        beta = rng.choice([b for b in range(-25, 26) if b])
        gamma = rng.randint(-50, 50)
        k = rng.randint(-3, 3)
        a = gauss.gauss_direct(GaussParams(alpha, beta, gamma))
        b = gauss.gauss_direct(GaussParams(alpha, beta, gamma + 2 * beta * k))
        assert abs(a - b) < 1e-12


def test_closed_representative_independence():
    # shifting gamma by full periods must not move the closed form at all
    rng = random.Random(9)
    done = 0
    while done < 200:
        alpha = rng.randint(-40, 40)
        beta = rng.choice([b for b in range(-25, 26) if b])
        gamma = rng.randint(-50, 50)
        if math.gcd(alpha, beta) != 1 or (alpha * beta + gamma) % 2:
            continue
        k = rng.randint(-4, 4)
        a = gauss.gauss_closed(GaussParams(alpha, beta, gamma))
        b = gauss.gauss_closed(GaussParams(alpha, beta, gamma + 2 * beta * k))
        assert abs(a - b) < 1e-14
        done += 1


def test_conjugation_symmetry():
    rng = random.Random(10)
    for _ in range(150):
        alpha = rng.randint(-30, 30)
        beta = rng.choice([b for b in range(-20, 21) if b])
        gamma = rng.randint(-30, 30)
        a = gauss.gauss_direct(GaussParams(alpha, beta, gamma))
        b = gauss.gauss_direct(GaussParams(-alpha, beta, -gamma))
        assert abs(a.conjugate() - b) < 1e-12


def test_closed_many_matches_scalar():
    gammas = np.arange(-25, 26)
    for alpha, beta in [(3, 5), (2, 7), (-3, 8), (5, -6), (1, 1), (7, 2)]:
        many = gauss.gauss_closed_many(alpha, beta, gammas)
        for g, v in zip(gammas, many):
            p = GaussParams(alpha, beta, int(g))
            want = gauss.gauss_closed(p) if gauss.is_nonvanishing(p) else 0.0
            assert abs(v - want) < 1e-13, (alpha, beta, g)


def test_closed_many_rejects_shared_factor():
    with pytest.raises(NotCoprimeError):
        gauss.gauss_closed_many(2, 4, np.arange(4))


def test_closed_rejects_vanishing_parity():
    with pytest.raises((VanishingError, UnsupportedParityError)):
        gauss.gauss_closed(GaussParams(1, 1, 0))


def test_params_validation():
    with pytest.raises(ValueError):
        GaussParams(1, 0, 0)


def test_huge_beta_scalar_path():
    # closed form stays exact far beyond the vectorized-grid cutoff
    p = GaussParams(3, 10**7 + 1, 1)
    closed = gauss.gauss_closed(p)
    assert abs(abs(closed) - 1.0) < 1e-12
