import random

import numpy as np
import pytest

from qcatmap import hecke
from qcatmap.hecke import (CapExceededError, LiftError, ModMatrix,
                           NotCongruentError, commutant_mod,
                           congruent_companion, lift_theta, mod2N_factor,
                           reduce_mod, verify_hecke, verify_mod4N)
from qcatmap.propagator import build
from qcatmap.sl2 import IDENTITY, Mat2, evaluate, is_theta, random_word


def test_reduce_mod_normalizes():
    m = reduce_mod(Mat2(7, 6, 36, 31), 6)
    assert (m.a, m.b, m.c, m.d, m.modulus) == (1, 0, 0, 1, 6)
    assert reduce_mod(Mat2(-1, 0, 0, -1), 4) == ModMatrix(3, 0, 0, 3, 4)
    with pytest.raises(ValueError):
        ModMatrix(1, 0, 0, 1, 0)


def test_mod_matrix_product():
    a = ModMatrix(1, 2, 3, 4, 5)
    b = ModMatrix(2, 0, 1, 3, 5)
    c = a @ b
    assert (c.a, c.b, c.c, c.d) == ((2 + 2) % 5, 6 % 5, (6 + 4) % 5, 12 % 5)
    with pytest.raises(ValueError):
        a @ ModMatrix(1, 0, 0, 1, 7)


def test_verify_mod4N_equal_pair():
    a = Mat2(2, 1, 3, 2)
    b = a @ Mat2(1, 24, 0, 1)  # right factor congruent to 1 mod 4N at N = 6
    rep = verify_mod4N(a, b, 6)
    assert rep.passed and rep.max_entry_error < rep.tol


def test_verify_mod4N_rejects_incongruent():
    with pytest.raises(NotCongruentError):
        verify_mod4N(Mat2(2, 1, 3, 2), IDENTITY, 2)


def test_shear_parameter_periodic_mod_4N():
    # shifting the shear power by 4N leaves the propagator unchanged,
    # in both shear orientations
    for n in (1, 2, 3, 5):
        for m in (0, 2, 6):
            lower = build(Mat2(1, 0, m, 1), n)
            lower_shift = build(Mat2(1, 0, m + 4 * n, 1), n)
            assert np.abs(lower - lower_shift).max() < 1e-15
            upper = build(Mat2(1, m, 0, 1), n)
            upper_shift = build(Mat2(1, m + 4 * n, 0, 1), n)
            assert np.abs(upper - upper_shift).max() < 1e-12


def test_mod2N_sign_minus_one():
    # (7, 6; 36, 31) = 1 mod 6 but its propagator at N = 3 is -1 times
    # the identity; the connecting factor is the Jacobi symbol (3|7) = -1
    a = Mat2(7, 6, 36, 31)
    assert is_theta(a)
    rep = mod2N_factor(a, IDENTITY, 3)
    assert rep.factor == -1
    assert rep.verified and rep.max_entry_error < rep.tol
    u = build(a, 3)
    assert np.abs(u + np.eye(3)).max() < 1e-12


def test_mod2N_sign_plus_one_for_mod4N_pairs():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(1, 8)
        a = evaluate(random_word(rng, 6))
        b = congruent_companion(a, 4 * n, rng)
        rep = mod2N_factor(a, b, n)
        assert rep.factor == 1 and rep.verified


def test_congruent_companion_is_congruent_theta():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 10)
        modulus = 2 * n * rng.choice([1, 2])
        a = evaluate(random_word(rng, 6))
        b = congruent_companion(a, modulus, rng)
        assert is_theta(b)
        assert all((x - y) % modulus == 0
                   for x, y in zip(a.entries(), b.entries()))


def test_commutant_contains_expected_members():
    a = Mat2(2, 1, 3, 2)
    n = 3
    members = commutant_mod(a, n)
    m = 4 * n
    assert reduce_mod(IDENTITY, m) in members
    assert reduce_mod(Mat2(-1, 0, 0, -1), m) in members
    assert reduce_mod(a, m) in members
    assert reduce_mod(a @ a, m) in members
    # every member commutes with a and is unimodular with theta parity
    am = reduce_mod(a, m)
    for bm in members:
        assert am @ bm == bm @ am
        assert (bm.a * bm.d - bm.b * bm.c) % m == 1
        assert (bm.a * bm.b) % 2 == 0 and (bm.c * bm.d) % 2 == 0


def test_commutant_closed_under_product():
    a = Mat2(2, 1, 3, 2)
    members = commutant_mod(a, 2)
    index = set(members)
    rng = random.Random(7)
    for _ in range(60):
        x = rng.choice(members)
        y = rng.choice(members)
        assert x @ y in index


def test_commutant_sorted_and_deterministic():
    a = Mat2(2, 1, 3, 2)
    members = commutant_mod(a, 2)
    keys = [(m.a, m.b, m.c, m.d) for m in members]
    assert keys == sorted(keys)
    assert members == commutant_mod(a, 2)


def test_commutant_cap():
    with pytest.raises(CapExceededError):
        commutant_mod(IDENTITY, 17, cap=64)


def test_lift_theta_roundtrip():
    rng = random.Random(9)
    for n in (1, 2, 3, 4, 6, 8):
        a = evaluate(random_word(rng, 5))
        members = commutant_mod(a, n)
        sample = members if len(members) <= 20 else rng.sample(members, 20)
        for bm in sample:
            lifted = lift_theta(bm)
            assert is_theta(lifted)
            assert reduce_mod(lifted, bm.modulus) == bm


def test_lift_theta_rejects_bad_residues():
    with pytest.raises(LiftError):
        lift_theta(ModMatrix(0, 2, 2, 0, 4))  # determinant 0 mod 4
    with pytest.raises(ValueError):
        lift_theta(ModMatrix(1, 0, 0, 1, 3))  # odd modulus


def test_verify_hecke_family():
    rep = verify_hecke(Mat2(2, 1, 3, 2), 3)
    assert rep.passed
    assert rep.commutant_size == rep.checked > 0
    assert rep.max_error_vs_a < rep.tol
    assert rep.max_pairwise_error < rep.tol


def test_verify_hecke_sampled():
    rep = verify_hecke(Mat2(2, 1, 3, 2), 4, samples=6, seed=1)
    assert rep.checked == 6
    assert rep.passed
