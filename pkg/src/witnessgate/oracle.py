"""Floating-point estimate of the minimal product-state expectation.

See-saw alternating minimization: with one factor fixed, the optimal other
factor is the minimal eigenvector of the projected operator, so the
objective is non-increasing step by step.  Minimizing over pure products
suffices because the objective is linear in the separable state and pure
products are the extreme points of the separable set.

The oracle never overrides an exact verdict; it seeds acceptance tests and
produces figure data.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bipartite import BipartiteHermitian
from .scalars import GaussRational, Q


@dataclass(frozen=True)
class OracleEstimate:
    mu_hat: float
    argmin_v: tuple
    argmin_w: tuple
    restarts: int
    converged: bool


def _seesaw(Xt: np.ndarray, w0: np.ndarray, tol: float, max_iters: int = 500):
    w = w0 / np.linalg.norm(w0)
    prev = np.inf
    v = None
    converged = False
    for _ in range(max_iters):
        Xw = np.einsum("ijkl,j,l->ik", Xt, w.conj(), w)
        vals, vecs = np.linalg.eigh(Xw)
        v = vecs[:, 0]
        Xv = np.einsum("ijkl,i,k->jl", Xt, v.conj(), v)
        vals2, vecs2 = np.linalg.eigh(Xv)
        w = vecs2[:, 0]
        cur = float(vals2[0])
        if abs(prev - cur) <= tol * max(1.0, abs(cur)):
            converged = True
            break
        prev = cur
    value = float(np.real(np.einsum("ijkl,i,j,k,l->", Xt, v.conj(), w.conj(), v, w)))
    return value, v, w, converged


def estimate_mu(X: BipartiteHermitian, restarts: int | None = None,
                tol: float = 1e-12, seed: int = 0) -> OracleEstimate:
    """Best product expectation over seeded random and axis-aligned starts."""
    dA, dB = X.dA, X.dB
    if restarts is None:
        restarts = 8 * dA * dB
    Xt = np.array(X.to_complex_rows(), dtype=complex).reshape(dA, dB, dA, dB)
    rng = np.random.default_rng(seed)
    starts = [np.eye(dB, dtype=complex)[j] for j in range(dB)]
    starts.append(np.ones(dB, dtype=complex))
    for _ in range(restarts):
        starts.append(rng.standard_normal(dB) + 1j * rng.standard_normal(dB))
    best = None
    any_converged = False
    for w0 in starts:
        value, v, w, conv = _seesaw(Xt, w0, tol)
        any_converged = any_converged or conv
        if best is None or value < best[0]:
            best = (value, v, w)
    value, v, w = best
    return OracleEstimate(value, tuple(complex(x) for x in v),
                          tuple(complex(x) for x in w), restarts, any_converged)


def rationalize_vector(vec) -> tuple:
    """Exact binary-float to Gaussian-rational conversion, component-wise."""
    out = []
    for z in vec:
        z = complex(z)
        out.append(GaussRational(Q(Fraction(z.real)), Q(Fraction(z.imag))))
    return tuple(out)


def exact_reevaluation(X: BipartiteHermitian, est: OracleEstimate):
    """Exact expectation at the rationalized argmin (an mpq), divided by the
    exact squared norms so it matches the normalized float estimate."""
    v = rationalize_vector(est.argmin_v)
    w = rationalize_vector(est.argmin_w)
    nv = sum((z.abs2() for z in v), Q(0))
    nw = sum((z.abs2() for z in w), Q(0))
    return X.product_expectation(v, w) / (nv * nw)
