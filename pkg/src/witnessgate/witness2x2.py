"""Exact entanglement-witness classification for two-qubit operators.

Pipeline: eigenvalue signature, the trace condition, the six projected-
determinant coefficients c1..c6, and the bivariate slice polynomial
W(r, t) whose global nonnegativity is decided through the quartic bundle.
Every negative verdict is backed by a product vector whose expectation is
re-evaluated exactly before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .bipartite import BipartiteHermitian, eigen_signature, negative_vector_2x2
from .quartic import GBundle, build_chi, build_g_bundle, build_lambda
from .scalars import Q, GaussRational, Sign, sign_of
from .unipoly import (UniPoly, count_roots, eval_alternative_all_reals,
                      find_negative_point, nonneg)


@dataclass(frozen=True)
class TraceData:
    tau1: object
    tau2: object
    xi: GaussRational


@dataclass(frozen=True)
class CCoefficients:
    """The six coefficients of the projected determinant, Eq.-(8) style."""
    c1: object
    c2: GaussRational
    c3: GaussRational
    c4: object
    c5: GaussRational
    c6: object

    def __add__(self, other: "CCoefficients") -> "CCoefficients":
        return CCoefficients(self.c1 + other.c1, self.c2 + other.c2,
                             self.c3 + other.c3, self.c4 + other.c4,
                             self.c5 + other.c5, self.c6 + other.c6)

    def as_tuple(self):
        return (self.c1, self.c2, self.c3, self.c4, self.c5, self.c6)


@dataclass(frozen=True)
class ProductCertificate:
    """Product vector with an exactly negative expectation value."""
    v: tuple
    w: tuple
    value: object


class VerdictKind(Enum):
    POSITIVE_SEMIDEFINITE = "PositiveSemidefinite"
    ENTANGLEMENT_WITNESS = "EntanglementWitness"
    NOT_BLOCK_POSITIVE = "NotBlockPositive"
    NOT_WITNESS_MULTI_NEGATIVE = "NotWitnessMultiNegative"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    certificate: Optional[ProductCertificate] = None
    weakly_optimal_possible: Optional[bool] = None
    n_negative: Optional[int] = None


@dataclass(frozen=True)
class DetFailure:
    """Locus of a failed determinant condition: which slice family and the
    rational point (r, t) with the slice polynomial negative."""
    side: str          # "W" or "V"
    r: object
    t: object


@dataclass(frozen=True)
class DetResult:
    holds: bool
    failure: Optional[DetFailure] = None


def trace_tau_xi(X: BipartiteHermitian) -> TraceData:
    """tau1 = sum_i X_{i1,i1}, tau2 = sum_i X_{i2,i2}, xi = sum_i X_{i1,i2}."""
    if X.dB != 2:
        raise ValueError("trace data requires a d x 2 shape")
    tau1 = sum((X.tensor(i, 0, i, 0).re for i in range(X.dA)), Q(0))
    tau2 = sum((X.tensor(i, 1, i, 1).re for i in range(X.dA)), Q(0))
    xi = sum((X.tensor(i, 0, i, 1) for i in range(X.dA)), GaussRational(0))
    return TraceData(tau1, tau2, xi)


def trace_condition(td: TraceData) -> bool:
    """tr(X_w) >= 0 for every |w> iff tau1 + tau2 >= 0 and tau1 tau2 >= |xi|^2."""
    return td.tau1 + td.tau2 >= 0 and td.tau1 * td.tau2 >= td.xi.abs2()


def _real(z: GaussRational):
    if z.im != 0:
        raise AssertionError("coefficient expected to be real")
    return z.re


def pair_c_coefficients_from(e) -> CCoefficients:
    """The six coefficients from an accessor e(i, j, ip, jp) over a selected
    index pair (zero-based: i, ip in {0,1} label the pair, j, jp the qubit)."""
    co = lambda z: z.conjugate()
    c1 = _real(e(0, 1, 0, 1) * e(1, 1, 1, 1) - e(0, 1, 1, 1) * co(e(0, 1, 1, 1)))
    c2 = (e(1, 1, 1, 1) * e(0, 0, 0, 1) + e(0, 1, 0, 1) * e(1, 0, 1, 1)
          - e(0, 1, 1, 1) * co(e(0, 1, 1, 0)) - co(e(0, 1, 1, 1)) * e(0, 0, 1, 1))
    c3 = e(0, 0, 0, 1) * e(1, 0, 1, 1) - e(0, 0, 1, 1) * co(e(0, 1, 1, 0))
    c4 = _real(e(0, 0, 0, 1) * co(e(1, 0, 1, 1)) - e(0, 1, 1, 1) * co(e(0, 0, 1, 0))
               + co(e(0, 0, 0, 1)) * e(1, 0, 1, 1) - co(e(0, 1, 1, 1)) * e(0, 0, 1, 0)
               + e(0, 0, 0, 0) * e(1, 1, 1, 1) + e(0, 1, 0, 1) * e(1, 0, 1, 0)
               - e(0, 0, 1, 1) * co(e(0, 0, 1, 1)) - e(0, 1, 1, 0) * co(e(0, 1, 1, 0)))
    c5 = (e(0, 0, 0, 0) * e(1, 0, 1, 1) + e(1, 0, 1, 0) * e(0, 0, 0, 1)
          - co(e(0, 0, 1, 0)) * e(0, 0, 1, 1) - e(0, 0, 1, 0) * co(e(0, 1, 1, 0)))
    c6 = _real(e(0, 0, 0, 0) * e(1, 0, 1, 0) - e(0, 0, 1, 0) * co(e(0, 0, 1, 0)))
    return CCoefficients(c1, c2, c3, c4, c5, c6)


def c_coefficients(X: BipartiteHermitian) -> CCoefficients:
    """Eq.-(8) coefficients of a 2 (x) 2 operator."""
    if (X.dA, X.dB) != (2, 2):
        raise ValueError("c coefficients require shape (2, 2)")
    return pair_c_coefficients_from(X.tensor)


# ---------------------------------------------------------------------------
# the bivariate slice polynomial
# ---------------------------------------------------------------------------

def build_W(c: CCoefficients) -> list[UniPoly]:
    """W(r, t) as r-coefficients (lowest power first), each a UniPoly in t.

    W = c1 u^2 r^4 - 2u L(t,c2) r^3 + chi(t,c3,c4) r^2 - 2u L(t,c5) r + c6 u^2
    with u = t^2 + 1.
    """
    u = UniPoly((1, 0, 1))
    u2 = u * u
    lam2 = build_lambda(c.c2)
    lam5 = build_lambda(c.c5)
    chi = build_chi(c.c3, c.c4)
    return [u2.scale(c.c6), (u * lam5).scale(-2), chi,
            (u * lam2).scale(-2), u2.scale(c.c1)]


def build_V(c: CCoefficients) -> list[UniPoly]:
    """V is the reversal of W in r."""
    return list(reversed(build_W(c)))


def eval_r_slice(rcoeffs: list[UniPoly], t) -> UniPoly:
    """Specialize the bivariate polynomial at t = t0: a quartic in r."""
    return UniPoly([p(Q(t)) for p in rcoeffs], "r")


def eval_bivariate(rcoeffs: list[UniPoly], r, t):
    return eval_r_slice(rcoeffs, t)(Q(r))


def stereographic_phase(t) -> GaussRational:
    """e^{i phi} = ((1 - t^2) + 2 t i) / (1 + t^2) for rational t."""
    t = Q(t)
    d = 1 + t * t
    return GaussRational((1 - t * t) / d, 2 * t / d)


def w_from_failure(f: DetFailure) -> tuple:
    """Reconstruct the projected-side vector from a slice failure point."""
    phase = stereographic_phase(f.t)
    r = GaussRational(Q(f.r))
    if f.side == "W":
        return (GaussRational(1), r * phase)
    return (r * phase.conjugate(), GaussRational(1))


def _first_nonroot_of_lambda(c: GaussRational):
    """Rational t with Lambda(t, c) != 0; exists among {0, 1} for c != 0."""
    lam = build_lambda(c)
    for t in (Q(0), Q(1)):
        if sign_of(lam(t)) != Sign.ZERO:
            return t
    raise AssertionError("Lambda vanishes identically only for c = 0")


def _fail(side: str, rcoeffs: list[UniPoly], t0) -> DetResult:
    """Package a failure at slice t0, hunting the negative r exactly."""
    r0 = find_negative_point(eval_r_slice(rcoeffs, t0))
    if r0 is None:
        raise AssertionError("slice certified negative but no point found")
    if sign_of(eval_bivariate(rcoeffs, r0, t0)) >= 0:
        raise AssertionError("counterexample failed exact re-evaluation")
    return DetResult(False, DetFailure(side, r0, Q(t0)))


def det_nonneg_all_w(c: CCoefficients) -> DetResult:
    """Decide det(X_w) >= 0 for every |w>, i.e. W(r, t) >= 0 on the plane.

    Full case split on the signs of c1, c6: negative leading or constant
    coefficients fail at r = 0 of the V or W family; vanishing c1 (or c6)
    requires c2 = 0 (or c5 = 0) and a single quartic slice condition; the
    positive-positive branch runs the g-bundle conditions.
    """
    chi = build_chi(c.c3, c.c4)
    lam2 = build_lambda(c.c2)
    lam5 = build_lambda(c.c5)
    if sign_of(c.c1) < 0:
        return DetResult(False, DetFailure("V", Q(0), Q(0)))
    if sign_of(c.c6) < 0:
        return DetResult(False, DetFailure("W", Q(0), Q(0)))
    if sign_of(c.c1) > 0 and sign_of(c.c6) > 0:
        return _main_branch(c)
    W = build_W(c)
    V = build_V(c)
    if sign_of(c.c1) == Sign.ZERO:
        if c.c2:
            # cubic in r with t-dependent leading coefficient: never bounded below
            return _fail("W", W, _first_nonroot_of_lambda(c.c2))
        if sign_of(c.c6) > 0:
            g5 = c.c6 * chi - lam5 * lam5
            t0 = find_negative_point(g5)
            if t0 is None:
                return DetResult(True)
            return _fail("W", W, t0)
        # c1 = c6 = 0 and c2 = 0
        if c.c5:
            return _fail("W", W, _first_nonroot_of_lambda(c.c5))
        t0 = find_negative_point(chi)
        if t0 is None:
            return DetResult(True)
        return _fail("W", W, t0)
    # c6 = 0 and c1 > 0: mirror analysis on the reversed family
    if c.c5:
        return _fail("V", V, _first_nonroot_of_lambda(c.c5))
    g6 = c.c1 * chi - lam2 * lam2
    t0 = find_negative_point(g6)
    if t0 is None:
        return DetResult(True)
    return _fail("V", V, t0)


def _main_branch(c: CCoefficients) -> DetResult:
    """c1 > 0, c6 > 0: for all t require g_delta >= 0, g1 >= 0, g2 >= 0 and
    g3 >= 0 or g4 >= 0."""
    bundle = build_g_bundle(c)
    W = build_W(c)
    for g in (bundle.g2, bundle.g1):
        if not nonneg(g):
            return _fail("W", W, find_negative_point(g))
    alt = eval_alternative_all_reals(bundle.g3, bundle.g4)
    if not alt.holds:
        return _fail("W", W, alt.witness)
    if not nonneg(bundle.g_delta):
        return _fail("W", W, find_negative_point(bundle.g_delta))
    return DetResult(True)


# ---------------------------------------------------------------------------
# certificates and classification
# ---------------------------------------------------------------------------

def _certificate_at_w(X: BipartiteHermitian, w) -> ProductCertificate:
    m = X.project_b(w)
    v = negative_vector_2x2(m) if X.dA == 2 else _negative_vector_general(m)
    if v is None:
        raise AssertionError("projected operator is PSD at certificate point")
    value = X.product_expectation(v, w)
    if sign_of(value) >= 0:
        raise AssertionError("certificate value failed exact verification")
    return ProductCertificate(tuple(v), tuple(w), value)


def _negative_vector_general(m):
    # basis vector on a negative diagonal entry; enough for trace failures
    n = len(m)
    for i in range(n):
        if sign_of(m[i][i].re) < 0:
            return tuple(GaussRational(1 if k == i else 0) for k in range(n))
    return None


def certificate_from_trace(X: BipartiteHermitian, td: TraceData) -> ProductCertificate:
    """Rational |w0> with tr(X_{w0}) < 0, then a basis |v0>.

    The irrational minimizer (1/sqrt(tau1), -xi/|xi| / sqrt(tau2)) is
    replaced by w = (1, -s conj(xi)) whose trace is the rational quadratic
    tau1 - 2 s |xi|^2 + s^2 |xi|^2 tau2, minimized exactly at s = 1/tau2.
    """
    if trace_condition(td):
        raise ValueError("trace condition holds; no certificate exists here")
    if sign_of(td.tau1) < 0:
        w = (GaussRational(1), GaussRational(0))
    elif sign_of(td.tau2) < 0:
        w = (GaussRational(0), GaussRational(1))
    else:
        n = td.xi.abs2()
        s = Q(1) / td.tau2 if td.tau2 > 0 else (td.tau1 + 1) / (2 * n)
        w = (GaussRational(1), -td.xi.conjugate() * GaussRational(s))
    return _certificate_at_w(X, w)


def certificate_from_failure(X: BipartiteHermitian, failure: DetFailure) -> ProductCertificate:
    return _certificate_at_w(X, w_from_failure(failure))


def extract_certificate(X: BipartiteHermitian, failure_site) -> ProductCertificate:
    """Product certificate from a recorded failure site: either TraceData
    whose condition fails, or a DetFailure slice point."""
    if isinstance(failure_site, TraceData):
        return certificate_from_trace(X, failure_site)
    if isinstance(failure_site, DetFailure):
        return certificate_from_failure(X, failure_site)
    raise TypeError("failure site must be TraceData or DetFailure")


def _gdelta_has_real_roots(g_delta: UniPoly) -> bool:
    """Zero polynomial counts as having roots (every t is one)."""
    if g_delta.is_zero():
        return True
    if g_delta.degree() == 0:
        return False
    return count_roots(g_delta) > 0


def _weak_flag(c: CCoefficients) -> bool:
    """Necessary weak-optimality condition for a confirmed witness.

    On the degenerate branches (c1 = 0 or c6 = 0) a projected operator is
    exactly singular, so the minimal product expectation is exactly zero;
    on the main branch the necessary condition is that g_delta has a real
    root.
    """
    if sign_of(c.c1) == Sign.ZERO or sign_of(c.c6) == Sign.ZERO:
        return True
    return _gdelta_has_real_roots(build_g_bundle(c).g_delta)


def classify(X: BipartiteHermitian) -> Verdict:
    """Decide PSD / witness / not block-positive for a 2 (x) 2 operator."""
    if (X.dA, X.dB) != (2, 2):
        raise ValueError("classify requires shape (2, 2)")
    sig = eigen_signature(X)
    if sig.n_neg == 0:
        return Verdict(VerdictKind.POSITIVE_SEMIDEFINITE, n_negative=0)
    if sig.n_neg >= 2:
        return Verdict(VerdictKind.NOT_WITNESS_MULTI_NEGATIVE, n_negative=sig.n_neg)
    td = trace_tau_xi(X)
    if not trace_condition(td):
        return Verdict(VerdictKind.NOT_BLOCK_POSITIVE,
                       certificate=certificate_from_trace(X, td), n_negative=1)
    c = c_coefficients(X)
    res = det_nonneg_all_w(c)
    if res.holds:
        return Verdict(VerdictKind.ENTANGLEMENT_WITNESS,
                       weakly_optimal_possible=_weak_flag(c), n_negative=1)
    return Verdict(VerdictKind.NOT_BLOCK_POSITIVE,
                   certificate=certificate_from_failure(X, res.failure),
                   n_negative=1)


def weak_optimality_necessary(X: BipartiteHermitian) -> bool:
    """Necessary (not sufficient) condition for weak optimality: g_delta has
    at least one real root.  Requires a confirmed witness with c1, c6 > 0."""
    verdict = classify(X)
    if verdict.kind is not VerdictKind.ENTANGLEMENT_WITNESS:
        raise ValueError("weak-optimality test requires an entanglement witness")
    c = c_coefficients(X)
    if not (sign_of(c.c1) > 0 and sign_of(c.c6) > 0):
        raise ValueError("main-branch test requires c1 > 0 and c6 > 0")
    return _gdelta_has_real_roots(build_g_bundle(c).g_delta)
