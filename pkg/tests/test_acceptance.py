"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
summary lines and timings.
"""
import random
import time

import numpy as np

from witnessgate.bipartite import BipartiteHermitian
from witnessgate.families import family_E, family_F
from witnessgate.groebner import (GREVLEX, LEX, GroebnerOptions, MultiPoly,
                                  buchberger, minimal_polynomial_of_var,
                                  normal_form, order_key, s_polynomial,
                                  sufficient_block_positive,
                                  univariate_members, multipoly_to_unipoly)
from witnessgate.oracle import estimate_mu
from witnessgate.quartic import Quartic, quartic_nonneg, reverse_quartic
from witnessgate.quditqubit import necessary_block_positive
from witnessgate.scalars import Q, GaussRational, sign_of
from witnessgate.unipoly import Interval, UniPoly, count_roots, eval_alternative, nonneg
from witnessgate.witness2x2 import VerdictKind, classify

G = GaussRational


def _passline(num, text, t0):
    print(f"[PASS] criterion {num}: {text} ({time.monotonic() - t0:.2f}s)")


def _rand_hermitian(rng, dA=2, dB=2, bound=10, positive_diag=False):
    n = dA * dB
    rows = [[None] * n for _ in range(n)]
    def rq():
        return Q(rng.randint(-bound, bound), rng.randint(1, bound))
    for i in range(n):
        d = rq()
        rows[i][i] = G(abs(d) if positive_diag else d)
        for j in range(i + 1, n):
            z = G(rq(), rq())
            rows[i][j] = z
            rows[j][i] = z.conjugate()
    return BipartiteHermitian(rows, dA, dB)


def test_criterion_1_canonical_verdicts():
    t0 = time.monotonic()
    swap = BipartiteHermitian([[G(1), G(0), G(0), G(0)], [G(0), G(0), G(1), G(0)],
                               [G(0), G(1), G(0), G(0)], [G(0), G(0), G(0), G(1)]],
                              2, 2)
    ident = BipartiteHermitian([[G(1 if i == j else 0) for j in range(4)]
                                for i in range(4)], 2, 2)
    diag = BipartiteHermitian([[G(1), G(0), G(0), G(0)], [G(0), G(1), G(0), G(0)],
                               [G(0), G(0), G(1), G(0)], [G(0), G(0), G(0), G(-1)]],
                              2, 2)
    for X, expected in ((swap, VerdictKind.ENTANGLEMENT_WITNESS),
                        (ident, VerdictKind.POSITIVE_SEMIDEFINITE),
                        (diag, VerdictKind.NOT_BLOCK_POSITIVE)):
        t1 = time.monotonic()
        verdict = classify(X)
        assert time.monotonic() - t1 < 1.0
        assert verdict.kind is expected
    cert = classify(diag).certificate
    assert cert.value == -1
    _passline(1, "SWAP/identity/diag verdicts exact, < 1 s each", t0)


def test_criterion_2_certificate_soundness():
    t0 = time.monotonic()
    rng = random.Random(20240809)
    negatives = 0
    for k in range(500):
        # half the sample has nonnegative diagonals so that the
        # single-negative-eigenvalue path is exercised often
        X = _rand_hermitian(rng, bound=10, positive_diag=(k % 2 == 0))
        verdict = classify(X)
        if verdict.kind is VerdictKind.NOT_BLOCK_POSITIVE:
            negatives += 1
            cert = verdict.certificate
            value = X.product_expectation(cert.v, cert.w)
            assert value == cert.value
            assert sign_of(value) < 0
            assert any(bool(z) for z in cert.v) and any(bool(z) for z in cert.w)
    assert negatives > 100
    _passline(2, f"{negatives} certificates re-evaluated strictly negative, "
                 "0 failures out of 500 matrices", t0)


def test_criterion_3_oracle_consistency_on_E():
    t0 = time.monotonic()
    witness_count = bp_count = 0
    for i in range(-50, 51):
        a = Q(i, 50)
        X = family_E(a)
        verdict = classify(X)
        est = estimate_mu(X, restarts=32, seed=0)
        lam_min = float(np.linalg.eigvalsh(np.array(X.to_complex_rows())).min())
        if verdict.kind in (VerdictKind.POSITIVE_SEMIDEFINITE,
                            VerdictKind.ENTANGLEMENT_WITNESS):
            bp_count += 1
        if verdict.kind is VerdictKind.ENTANGLEMENT_WITNESS:
            witness_count += 1
            assert lam_min < -1e-6, (a, lam_min)
        if abs(est.mu_hat) > 1e-4:
            exact_bp = verdict.kind in (VerdictKind.POSITIVE_SEMIDEFINITE,
                                        VerdictKind.ENTANGLEMENT_WITNESS)
            assert exact_bp == (est.mu_hat > 0), (a, est.mu_hat, verdict.kind)
    assert witness_count > 0
    assert bp_count > witness_count
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    _passline(3, f"101-point sweep consistent; {witness_count} witness points, "
                 f"{bp_count} block-positive", t0)


def test_criterion_4_decision_procedure_cross_validation():
    t0 = time.monotonic()
    rng = random.Random(424242)
    def rq():
        return Q(rng.randint(-12, 12), rng.randint(1, 12))
    for _ in range(1000):
        q = Quartic(abs(rq()) + Q(1, 13), rq(), rq(), rq(), abs(rq()) + Q(1, 13))
        via_conditions = quartic_nonneg(q)
        via_multiplicities = nonneg(q.as_unipoly())
        assert via_conditions == via_multiplicities, q
        assert quartic_nonneg(reverse_quartic(q)) == via_conditions, q
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0
    _passline(4, "1000 quartics: both procedures agree, reversal invariant", t0)


def test_criterion_5_sturm_exactness():
    t0 = time.monotonic()
    rng = random.Random(5050)
    for _ in range(500):
        n_lin = rng.randint(1, 6)
        roots = [Q(rng.randint(-10, 10), rng.randint(1, 6)) for _ in range(n_lin)]
        f = UniPoly.from_roots(roots, lead=Q(rng.choice([1, -1, 2])))
        for _ in range(rng.randint(0, 3)):
            a, b = Q(rng.randint(-4, 4), rng.randint(1, 4)), Q(rng.randint(1, 4))
            f = f * UniPoly((a * a + b * b, -2 * a, 1))      # (t-a)^2 + b^2
        assert f.degree() <= 12
        distinct = sorted(set(roots))
        for _ in range(20):
            lo = Q(rng.randint(-25, 24), rng.randint(1, 7))
            hi = lo + Q(rng.randint(1, 30), rng.randint(1, 7))
            if any(r == lo or r == hi for r in distinct):
                lo = lo - Q(1, 97)
                hi = hi + Q(1, 101)
            expected = sum(1 for r in distinct if lo < r < hi)
            got = count_roots(f, Interval(lo, hi))
            assert got == expected, (roots, lo, hi, got, expected)
    _passline(5, "500 constructed polynomials x 20 intervals, exact counts", t0)


def test_criterion_6_alternative_logic():
    t0 = time.monotonic()
    rng = random.Random(606060)
    false_count = 0
    for _ in range(200):
        def mkpoly():
            roots = sorted(set(Q(rng.randint(-8, 8), rng.randint(1, 3))
                               for _ in range(rng.randint(1, 3))))
            lead = rng.choice([1, -1])
            p = UniPoly.from_roots(roots, lead=lead)
            if rng.random() < 0.3:
                p = p * UniPoly((1, 0, 1))
            return p, roots
        g1, r1 = mkpoly()
        g2, r2 = mkpoly()
        allr = sorted(set(r1) | set(r2))
        lo = allr[0] - Q(rng.randint(1, 3), 2)
        hi = allr[-1] + Q(rng.randint(1, 3), 2)
        cuts = [lo] + allr + [hi]
        expected = True
        for a, b in zip(cuts, cuts[1:]):
            m = (a + b) / 2
            if sign_of(g1(m)) < 0 and sign_of(g2(m)) < 0:
                expected = False
                break
        res = eval_alternative(g1, g2, lo, hi)
        assert res.holds == expected, (list(g1.coeffs), list(g2.coeffs), lo, hi)
        if not res.holds:
            false_count += 1
            assert lo < res.witness < hi
            assert sign_of(g1(res.witness)) < 0
            assert sign_of(g2(res.witness)) < 0
    assert false_count > 30
    _passline(6, f"200 sign charts matched; {false_count} false verdicts "
                 "carried exact witnesses", t0)


def _oracle_grid_F():
    grid = []
    for i in range(-20, 21):
        a = Q(i, 10)
        est = estimate_mu(family_F(a), restarts=32, seed=0)
        grid.append((a, est.mu_hat))
    return grid


def test_criterion_7_necessary_criterion_on_F():
    t0 = time.monotonic()
    grid = _oracle_grid_F()
    negatives = sorted((p for p in grid if p[1] < -1e-3), key=lambda p: p[1])
    assert len(negatives) >= 10
    for a, mu in negatives[:10]:
        res = necessary_block_positive(family_F(a))
        assert res.fails, (a, mu)
    for a, mu in grid:
        if mu > 1e-3:
            assert not necessary_block_positive(family_F(a)).fails, (a, mu)
    elapsed = time.monotonic() - t0
    assert elapsed < 300.0
    _passline(7, f"necessary criterion fails at the 10 most negative points, "
                 f"never at {sum(1 for _, m in grid if m > 1e-3)} "
                 "block-positive points", t0)


def test_criterion_8_groebner_sufficient_on_F():
    t0 = time.monotonic()
    grid = _oracle_grid_F()
    positives = sorted((p for p in grid if p[1] > 1e-3), key=lambda p: -p[1])
    assert len(positives) >= 4
    options = GroebnerOptions()
    for a, mu in positives[:4]:
        t1 = time.monotonic()
        res = sufficient_block_positive(family_F(a).swap_factors(), options)
        per_point = time.monotonic() - t1
        assert per_point < 600.0
        assert res.block_positive, (a, mu, res.details)
        assert not any("cap" in d for d in res.details), (a, res.details)
    _passline(8, "combined criterion certifies block-positivity at 4 "
                 "oracle-selected points, no resource caps", t0)


def test_criterion_9_groebner_correctness():
    t0 = time.monotonic()
    rng = random.Random(909090)
    key_lex = order_key(LEX)
    for trial in range(50):
        # known variety {(shift(k_i), k_i)}: the k-eliminant must be
        # exactly prod (k - k_i)
        kroots = sorted(set(Q(rng.randint(-6, 6)) for _ in range(rng.randint(1, 3))))
        f = UniPoly.from_roots(kroots)
        fk = MultiPoly({(0, i): c for i, c in enumerate(f.coeffs) if c != 0}, 2)
        shift_c = [Q(rng.randint(-3, 3)), Q(rng.randint(-3, 3))]
        shift = MultiPoly({(0, 0): shift_c[0], (0, 1): shift_c[1]}, 2)
        x = MultiPoly.variable(0, 2)
        gens = [fk, x - shift]
        order = LEX if trial % 2 == 0 else GREVLEX
        basis = buchberger(gens, order)
        key = order_key(order)
        members = list(basis.generators)
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                s = s_polynomial(members[i], members[j], key)
                assert normal_form(s, members, key).is_zero()
        for g in gens:
            assert normal_form(g, members, key).is_zero()
        if order == LEX:
            uni = univariate_members(basis, 1)
            assert len(uni) == 1
            gm1 = multipoly_to_unipoly(uni[0], 1)
        else:
            gm1 = minimal_polynomial_of_var(basis, 1)
        assert gm1 == f.monic()
        for r in kroots:
            assert sign_of(gm1(r)) == 0
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    _passline(9, "50 toy ideals: S-polynomials reduce to zero, eliminant "
                 "roots match known k-coordinates", t0)
