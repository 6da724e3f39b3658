import random

import pytest

from witnessgate.quartic import (GBundle, Quartic, build_chi, build_g_bundle,
                                 build_g_delta, build_lambda,
                                 normalized_conditions, quartic_discriminant,
                                 quartic_nonneg, quartic_nonneg_symmetric,
                                 reverse_quartic)
from witnessgate.scalars import Q, GaussRational, QuadSurd, Sign, sign_of
from witnessgate.unipoly import Interval, UniPoly, nonneg
from witnessgate.witness2x2 import CCoefficients

G = GaussRational


def rand_q(rng, lo=-10, hi=10):
    return Q(rng.randint(lo, hi), rng.randint(1, 10))


def test_discriminant_matches_root_product():
    # disc = a4^6 prod_{i<j} (r_i - r_j)^2 for quartics with known roots
    rng = random.Random(31)
    for _ in range(40):
        roots = [rand_q(rng, -6, 6) for _ in range(4)]
        lead = Q(rng.randint(1, 5))
        f = UniPoly.from_roots(roots, lead=lead)
        q = Quartic.from_unipoly(f)
        prod = Q(1)
        for i in range(4):
            for j in range(i + 1, 4):
                prod *= (roots[i] - roots[j]) ** 2
        assert quartic_discriminant(q) == lead ** 6 * prod


def test_quartic_nonneg_examples():
    assert quartic_nonneg(Quartic(1, 0, 0, 0, 1))           # t^4 + 1
    assert quartic_nonneg(Quartic(1, 0, -2, 0, 1))          # (t^2-1)^2
    assert not quartic_nonneg(Quartic(1, 0, -3, 0, 1))      # negative at 5/4
    with pytest.raises(ValueError):
        quartic_nonneg(Quartic(-1, 0, 0, 0, 1))


def test_normalized_conditions_fields():
    cond = normalized_conditions(Quartic(1, 0, -2, 0, 1))
    assert cond.disc_sign >= 0 and cond.beta_range_ok
    assert cond.cond_diff_ok and cond.cond_sum_ok


def test_symmetric_examples():
    assert quartic_nonneg_symmetric(Quartic(1, 1, 0, -1, 1))
    assert quartic_nonneg_symmetric(Quartic(1, 0, -2, 0, 1))
    assert not quartic_nonneg_symmetric(Quartic(1, 4, 0, -4, 1))
    with pytest.raises(ValueError):
        quartic_nonneg_symmetric(Quartic(1, 1, 0, 1, 1))


def test_symmetric_agrees_with_general():
    rng = random.Random(17)
    for _ in range(300):
        a0 = abs(rand_q(rng)) + Q(1, 11)
        a3 = rand_q(rng)
        q = Quartic(a0, a3, rand_q(rng), -a3, a0)
        assert quartic_nonneg_symmetric(q) == quartic_nonneg(q)


def test_reverse_quartic():
    q = Quartic(1, 2, 3, 4, 5)
    assert reverse_quartic(q) == Quartic(5, 4, 3, 2, 1)
    p = Quartic(1, 2, 3, 2, 1)
    assert reverse_quartic(p) == p
    assert reverse_quartic(reverse_quartic(q)) == q


def test_reversal_invariance():
    rng = random.Random(53)
    for _ in range(300):
        q = Quartic(abs(rand_q(rng)) + Q(1, 9), rand_q(rng), rand_q(rng),
                    rand_q(rng), abs(rand_q(rng)) + Q(1, 9))
        assert quartic_nonneg(q) == quartic_nonneg(reverse_quartic(q))


def test_cross_validation_with_multiplicity_path():
    # two independent decision procedures must agree
    rng = random.Random(71)
    for _ in range(400):
        q = Quartic(abs(rand_q(rng)) + Q(1, 9), rand_q(rng), rand_q(rng),
                    rand_q(rng), abs(rand_q(rng)) + Q(1, 9))
        assert quartic_nonneg(q) == nonneg(q.as_unipoly())


def test_discriminant_scale_covariance():
    rng = random.Random(5)
    for _ in range(60):
        q = Quartic(abs(rand_q(rng)) + 1, rand_q(rng), rand_q(rng),
                    rand_q(rng), abs(rand_q(rng)) + 1)
        s = abs(rand_q(rng)) + Q(1, 3)
        c = abs(rand_q(rng)) + Q(1, 3)
        # q(s*t)*c has coefficients a_i s^i c
        scaled = Quartic(q.a4 * s ** 4 * c, q.a3 * s ** 3 * c, q.a2 * s ** 2 * c,
                         q.a1 * s * c, q.a0 * c)
        assert sign_of(quartic_discriminant(scaled)) == sign_of(quartic_discriminant(q))


def test_build_lambda_examples():
    assert build_lambda(G(0, 1)) == UniPoly((0, 2))          # 2t
    assert build_lambda(G(1)) == UniPoly((-1, 0, 1))          # t^2 - 1
    assert build_lambda(G(0)).is_zero()


def test_build_chi_examples():
    two_sq = UniPoly((1, 0, 1)) * UniPoly((1, 0, 1))
    assert build_chi(G(0), Q(2)) == two_sq.scale(2)           # 2 (t^2+1)^2
    assert build_chi(G(1), Q(0)) == UniPoly((2, 0, -12, 0, 2))
    assert build_chi(G(0, 1), Q(0)) == UniPoly((0, -8, 0, 8))


def identity_c():
    return CCoefficients(Q(1), G(0), G(0), Q(2), G(0), Q(1))


def test_bundle_identity_example():
    b = build_g_bundle(identity_c())
    u2 = UniPoly((1, 0, 1)) ** 2
    assert b.g2 == u2.scale(4)
    assert b.g1 == u2.scale(16)
    assert b.g3 == u2.scale(4)
    assert b.g_delta.is_zero()


def test_bundle_no_cross_terms():
    # c2 = c5 = 0: g1 = g4 = 4 c1 c6 g2 and g_delta is the closed square form
    rng = random.Random(13)
    for _ in range(25):
        c1 = abs(rand_q(rng)) + Q(1, 7)
        c6 = abs(rand_q(rng)) + Q(1, 7)
        c = CCoefficients(c1, G(0), G(rand_q(rng), rand_q(rng)), rand_q(rng), G(0), c6)
        b = build_g_bundle(c)
        assert b.g1 == b.g2.scale(4 * c1 * c6)
        assert b.g4 == (build_chi(c.c3, c.c4) - (UniPoly((1, 0, 1)) ** 2).scale(
            2 * QuadSurd.sqrt(c1 * c6))).scale(4 * c1 * c6)
        chi = build_chi(c.c3, c.c4)
        u4 = UniPoly((1, 0, 1)) ** 4
        closed = (chi * chi - u4.scale(4 * c1 * c6)) ** 2
        assert b.g_delta == closed.scale(c1 * c6)
        assert nonneg(b.g_delta)


def test_bundle_simple_c():
    c = CCoefficients(Q(1), G(0), G(0), Q(0), G(0), Q(1))
    b = build_g_bundle(c)
    assert b.g2 == (UniPoly((1, 0, 1)) ** 2).scale(2)


def test_bundle_matches_pointwise_quartic_conditions():
    # at rational t0, the signs of g1, g2, g3|g4, g_delta decide exactly the
    # nonnegativity of the quartic slice r -> W(r, t0)
    from witnessgate.witness2x2 import build_W, eval_r_slice
    rng = random.Random(41)
    for _ in range(40):
        c = CCoefficients(abs(rand_q(rng)) + Q(1, 5),
                          G(rand_q(rng), rand_q(rng)),
                          G(rand_q(rng), rand_q(rng)),
                          rand_q(rng),
                          G(rand_q(rng), rand_q(rng)),
                          abs(rand_q(rng)) + Q(1, 5))
        b = build_g_bundle(c)
        W = build_W(c)
        t0 = rand_q(rng, -4, 4)
        slice_ok = quartic_nonneg(Quartic.from_unipoly(eval_r_slice(W, t0)))
        conds_ok = (sign_of(b.g_delta(t0)) >= 0
                    and sign_of(b.g1(t0)) >= 0
                    and sign_of(b.g2(t0)) >= 0
                    and (sign_of(b.g3(t0)) >= 0 or sign_of(b.g4(t0)) >= 0))
        assert slice_ok == conds_ok


def test_g_delta_radicand_free():
    rng = random.Random(61)
    for _ in range(10):
        c = CCoefficients(abs(rand_q(rng)) + Q(1, 5),
                          G(rand_q(rng), rand_q(rng)),
                          G(rand_q(rng), rand_q(rng)),
                          rand_q(rng),
                          G(rand_q(rng), rand_q(rng)),
                          abs(rand_q(rng)) + Q(1, 5))
        gd = build_g_delta(c)
        assert gd.degree() <= 16
        assert all(not isinstance(x, QuadSurd) for x in gd.coeffs)
