"""Necessary block-positivity criteria for d (x) 2 systems.

The trace condition carries over verbatim; order-2 principal minors of the
projected operator give one bivariate slice family W^{(l,k)} per index
pair, plus their coefficient-wise sum.  Any failure refutes
block-positivity with an exactly verified locus; success is merely
inconclusive.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .bipartite import BipartiteHermitian, negative_vector_2x2
from .scalars import GaussRational, sign_of
from .witness2x2 import (CCoefficients, DetFailure, ProductCertificate,
                         certificate_from_trace, det_nonneg_all_w,
                         pair_c_coefficients_from, trace_condition,
                         trace_tau_xi, w_from_failure)


@dataclass(frozen=True)
class PairSelector:
    """One-based row pair 1 <= l < k <= d of retained minor indices."""
    l: int
    k: int

    def __post_init__(self):
        if not 1 <= self.l < self.k:
            raise ValueError("selector requires 1 <= l < k")


def pair_c_coefficients(X: BipartiteHermitian, sel: PairSelector) -> CCoefficients:
    """The six slice coefficients of the (l,k) principal 2x2 minor family."""
    if X.dB != 2:
        raise ValueError("pair coefficients require a d x 2 shape")
    if sel.k > X.dA:
        raise ValueError("selector index exceeds dA")
    rows = (sel.l - 1, sel.k - 1)

    def e(i, j, ip, jp):
        return X.tensor(rows[i], j, rows[ip], jp)

    return pair_c_coefficients_from(e)


@dataclass(frozen=True)
class NecessaryResult:
    verdict: str                                   # "Fails" | "Inconclusive"
    violated: Optional[Union[PairSelector, str]] = None   # selector, "sum" or "trace"
    failure: Optional[DetFailure] = None
    certificate: Optional[ProductCertificate] = None

    @property
    def fails(self) -> bool:
        return self.verdict == "Fails"


def _pair_certificate(X: BipartiteHermitian, sel: PairSelector,
                      failure: DetFailure) -> ProductCertificate:
    """Lift the 2x2 pair counterexample to a full product certificate.

    The slice point gives |w0> with the selected principal submatrix of
    X_w0 not PSD; the pair-supported |v0> embeds into H_d with zeros
    elsewhere."""
    w = w_from_failure(failure)
    m = X.project_b(w)
    rows = (sel.l - 1, sel.k - 1)
    sub = ((m[rows[0]][rows[0]], m[rows[0]][rows[1]]),
           (m[rows[1]][rows[0]], m[rows[1]][rows[1]]))
    v2 = negative_vector_2x2(sub)
    if v2 is None:
        raise AssertionError("pair submatrix is PSD at counterexample point")
    v = [GaussRational(0)] * X.dA
    v[rows[0]], v[rows[1]] = v2[0], v2[1]
    value = X.product_expectation(v, w)
    if sign_of(value) >= 0:
        raise AssertionError("pair certificate failed exact verification")
    return ProductCertificate(tuple(v), tuple(w), value)


def necessary_block_positive(X: BipartiteHermitian) -> NecessaryResult:
    """Trace condition, per-pair slice conditions, then the summed one.

    Fails is definitive (X is neither block-positive nor a witness);
    Inconclusive only says these necessary conditions all hold.
    """
    if X.dB != 2:
        raise ValueError("necessary criterion requires a d x 2 shape")
    td = trace_tau_xi(X)
    if not trace_condition(td):
        return NecessaryResult("Fails", "trace",
                               certificate=certificate_from_trace(X, td))
    total: Optional[CCoefficients] = None
    for l, k in combinations(range(1, X.dA + 1), 2):
        sel = PairSelector(l, k)
        c = pair_c_coefficients(X, sel)
        total = c if total is None else total + c
        res = det_nonneg_all_w(c)
        if not res.holds:
            return NecessaryResult("Fails", sel, failure=res.failure,
                                   certificate=_pair_certificate(X, sel, res.failure))
    res = det_nonneg_all_w(total)
    if not res.holds:
        return NecessaryResult("Fails", "sum", failure=res.failure)
    return NecessaryResult("Inconclusive")
