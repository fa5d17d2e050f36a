import cmath
import math
import random

import numpy as np
import pytest

from qcatmap import gauss, propagator
from qcatmap.propagator import (InvalidParityError, build, classify, h_phase,
                                projective_phase, propagator_json,
                                unitarity_defect, verify_mult)
from qcatmap.sl2 import (IDENTITY, P_MAT, S_MINUS, S_PLUS, T2_MINUS, T2_PLUS,
                         Mat2, NotThetaError, evaluate, random_word)
from _oracles import gauss_reference


def e(t):
    return cmath.exp(2j * cmath.pi * t)


def test_fourier_case_matches_dft():
    # (0, 1; -1, 0) acts as the normalized discrete Fourier transform
    for n in (1, 2, 3, 5, 8):
        f = np.fft.fft(np.eye(n)) / math.sqrt(n)
        assert np.abs(build(S_MINUS, n) - f).max() < 1e-12
        assert np.abs(build(S_PLUS, n) - f.conj()).max() < 1e-12


def test_fourier_hand_value():
    want = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    assert np.abs(build(S_PLUS, 2) - want).max() < 1e-12


def test_parity_case_is_reflection():
    for n in (1, 2, 3, 6):
        u = build(P_MAT, n)
        want = np.zeros((n, n))
        for q in range(n):
            want[q, (-q) % n] = 1.0
        assert np.abs(u - want).max() < 1e-12


def test_shear_case_is_diagonal_phase():
    for n in (1, 2, 3, 4, 7):
        u = build(T2_PLUS, n)
        q = np.arange(n)
        want = np.diag(np.exp(2j * np.pi * (q * q % n) / n))
        assert np.abs(u - want).max() < 1e-12


def test_general_case_hand_value():
    # the nonzero entries sit where a*Q' - Q is odd, not where it is even
    want = np.array([[0, 1], [1, 0]], dtype=complex)
    assert np.abs(build(Mat2(1, 2, 0, 1), 2) - want).max() < 1e-12


def test_antishear_from_generator_product():
    m = Mat2(0, 1, -1, 2)
    assert m == T2_PLUS @ S_MINUS
    for n in (2, 3, 5, 8):
        prod = build(T2_PLUS, n) @ build(S_MINUS, n)
        assert np.abs(build(m, n) - prod).max() < 1e-10


def test_dimension_one_is_trivial():
    rng = random.Random(2)
    for _ in range(50):
        m = evaluate(random_word(rng, 10))
        u = build(m, 1)
        assert u.shape == (1, 1)
        assert abs(u[0, 0] - 1.0) < 1e-12


def test_classify_cases():
    assert str(classify(S_PLUS)) == "fourier(+)"
    assert str(classify(S_MINUS)) == "fourier(-)"
    assert str(classify(P_MAT)) == "parity"
    assert str(classify(T2_PLUS)) == "shear(m=2,+)"
    assert str(classify(Mat2(-1, 0, 2, -1))) == "shear(m=2,-)"
    assert str(classify(Mat2(0, 1, -1, 2))) == "antishear(w=2,+)"
    assert str(classify(Mat2(2, 1, 3, 2))) == "general"
    with pytest.raises(NotThetaError):
        classify(Mat2(1, 1, 0, 1))


def test_h_phase_values():
    assert abs(h_phase(1, 2) - e(-1 / 8)) < 1e-12
    assert abs(h_phase(-1, 2) - e(1 / 8)) < 1e-12
    assert abs(h_phase(3, 2) - e(1 / 8)) < 1e-12
    assert abs(h_phase(2, 1) - 1.0) < 1e-12
    assert abs(h_phase(2, 3) - (-1j)) < 1e-12


def test_h_phase_rejects():
    with pytest.raises(InvalidParityError):
        h_phase(1, 3)
    with pytest.raises(InvalidParityError):
        h_phase(2, 4)
    with pytest.raises(ValueError):
        h_phase(0, 1)


def test_entries_against_reference_formula():
    # independent scalar reconstruction: entry (Q, Q') is
    # h(a,b)/sqrt(N_b) * G(N_b a, b', 2(aQ'-Q)/g) * e((dQ^2-2QQ'+aQ'^2)/(2Nb))
    # with the sum evaluated by the slow reference average
    rng = random.Random(13)
    checked = 0
    while checked < 25:
        word = random_word(rng, 8)
        m = evaluate(word)
        if m.a == 0 or m.b == 0:
            continue
        n = rng.randint(1, 10)
        u = build(m, n)
        g = math.gcd(abs(m.b), n)
        n_b = n // g
        bp = m.b // g
        h = h_phase(m.a, m.b)
        for _ in range(6):
            q = rng.randrange(n)
            qp = rng.randrange(n)
            t = 2 * (m.a * qp - q)
            if t % g:
                want = 0.0
            else:
                quad = m.d * q * q - 2 * q * qp + m.a * qp * qp
                den = 2 * n * m.b
                # reduce before exponentiating to keep the argument small
                frac = ((quad if den > 0 else -quad) % abs(den)) / abs(den)
                want = (h / math.sqrt(n_b)
                        * gauss_reference(n_b * m.a, bp, t // g)
                        * cmath.exp(2j * math.pi * frac))
            assert abs(u[q, qp] - want) < 1e-10, (m, n, q, qp)
        checked += 1


def test_delta_probe_value():
    # applying U to the basis vector concentrated at 0 probes the (0, 0)
    # entry: component 0 must equal sqrt((b,N)) * h(a,b) * G(N_b a, b', 0)
    from qcatmap.weyl import delta_basis

    rng = random.Random(23)
    checked = 0
    while checked < 30:
        shear = T2_PLUS if rng.random() < 0.5 else T2_MINUS
        m = shear @ evaluate(random_word(rng, 8))
        if m.a == 0 or m.b == 0:
            continue
        n = rng.randint(1, 12)
        g = math.gcd(abs(m.b), n)
        probe = (build(m, n) @ delta_basis(0, n))[0]
        want = (math.sqrt(g) * h_phase(m.a, m.b)
                * gauss_reference((n // g) * m.a, m.b // g, 0))
        assert abs(probe - want) < 1e-10, (m, n)
        checked += 1


def test_inverse_gives_adjoint():
    rng = random.Random(17)
    for _ in range(60):
        m = evaluate(random_word(rng, 10))
        n = rng.randint(1, 16)
        u = build(m, n)
        v = build(m.inverse(), n)
        assert np.abs(v - u.conj().T).max() < 1e-10 * n


def test_unitarity_random():
    rng = random.Random(19)
    for _ in range(60):
        m = evaluate(random_word(rng, 10))
        n = rng.randint(1, 32)
        assert unitarity_defect(build(m, n, check=False)) < 1e-9 * math.sqrt(n)


def test_build_validates_input():
    with pytest.raises(NotThetaError):
        build(Mat2(1, 1, 0, 1), 4)
    with pytest.raises(ValueError):
        build(S_PLUS, 0)


def test_verify_mult_report():
    rep = verify_mult(Mat2(2, 1, 3, 2), T2_PLUS, 6)
    assert rep.passed and rep.max_entry_error < rep.tol
    assert rep.tol == propagator.MULT_TOL * 6


def test_huge_entries_use_exact_fallback():
    # b = 2000002 shares only its residue mod 8 with b = 2; at N = 2 the
    # propagator depends on the matrix mod 8 only, so the two must agree
    big = Mat2(1, 2000002, 0, 1)
    small = Mat2(1, 2, 0, 1)
    assert np.abs(build(big, 2) - build(small, 2)).max() < 1e-10


def test_projective_phase_paper_is_trivial():
    rng = random.Random(23)
    for _ in range(40):
        a = evaluate(random_word(rng, 8))
        b = evaluate(random_word(rng, 8))
        n = rng.randint(1, 12)
        lam = projective_phase(a, b, n, variant="paper")
        assert abs(lam - 1.0) < 1e-9


def test_projective_phase_rescaled_cocycle():
    # rescaling to sqrt(i) U / h makes the multiplier an eighth root of
    # unity; at the identity pair it is exactly 1/sqrt(i)
    lam = projective_phase(IDENTITY, IDENTITY, 5, variant="hannay_berry")
    assert abs(lam - e(-1 / 8)) < 1e-9
    rng = random.Random(29)
    for _ in range(25):
        a = evaluate(random_word(rng, 6))
        b = evaluate(random_word(rng, 6))
        n = rng.randint(1, 8)
        lam = projective_phase(a, b, n, variant="hannay_berry")
        assert abs(lam**8 - 1.0) < 1e-8
    with pytest.raises(ValueError):
        projective_phase(IDENTITY, IDENTITY, 2, variant="weird")


def test_propagator_json_schema():
    payload = propagator_json(S_PLUS, 3)
    assert payload["N"] == 3
    assert payload["A"] == [0, -1, 1, 0]
    assert payload["case"] == "fourier(+)"
    mat = payload["matrix"]
    assert len(mat) == 3 and all(len(row) == 3 for row in mat)
    z = mat[1][2]
    assert isinstance(z, list) and len(z) == 2
    u = build(S_PLUS, 3)
    assert abs(complex(z[0], z[1]) - u[1, 2]) < 1e-12
