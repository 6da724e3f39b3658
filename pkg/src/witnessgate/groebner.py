"""Sufficient block-positivity via polynomial critical-point systems.

The sum of order-n principal minors of the projected operator is a real
polynomial on the parameter sphere; its negative values, if any, occur at
critical points, and adjoining k with M + k^2 = 0 turns "has a negative
critical value" into "the elimination ideal in k has a nonzero real root".
Buchberger supplies the basis; for the elimination we take the minimal
polynomial of k modulo the ideal (identical to the univariate member of
the reduced lex basis, but computable from the far cheaper grevlex one).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence

from .bipartite import BipartiteHermitian, char_poly, signature_from_char_poly
from .scalars import Q, GaussRational
from .unipoly import UniPoly, count_roots


class ResourceCapExceeded(RuntimeError):
    """Buchberger exceeded the configured pair or term budget."""


@dataclass(frozen=True)
class GroebnerOptions:
    max_pairs: int = 100_000
    max_terms: int = 100_000
    minpoly_max_degree: int = 128


LEX = "lex"
GREVLEX = "grevlex"


def order_key(order: str) -> Callable:
    if order == LEX:
        return lambda m: m
    if order == GREVLEX:
        return lambda m: (sum(m), tuple(-e for e in reversed(m)))
    raise ValueError(f"unknown monomial order: {order}")


def _m_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _m_divides(a, b):
    """Does monomial a divide b?"""
    return all(x <= y for x, y in zip(a, b))


def _m_sub(a, b):
    """Monomial quotient a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def _m_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    """Sparse multivariate polynomial over Q with a fixed variable count."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: dict, nvars: int):
        object.__setattr__(self, "terms", {m: c for m, c in terms.items() if c != 0})
        object.__setattr__(self, "nvars", nvars)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "MultiPoly":
        return cls({(0,) * nvars: Q(c)}, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MultiPoly":
        e = [0] * nvars
        e[index] = 1
        return cls({tuple(e): Q(1)}, nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"MultiPoly({self.terms!r})"

    def lead(self, key) -> tuple:
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, 0) + c
            if s == 0:
                t.pop(m, None)
            else:
                t[m] = s
        return MultiPoly(t, self.nvars)

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = _m_mul(m1, m2)
                s = t.get(key, 0) + c1 * c2
                if s == 0:
                    t.pop(key, None)
                else:
                    t[key] = s
        return MultiPoly(t, self.nvars)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "MultiPoly":
        c = Q(c)
        return MultiPoly({m: cc * c for m, cc in self.terms.items()}, self.nvars)

    def mul_term(self, mono: tuple, c) -> "MultiPoly":
        return MultiPoly({_m_mul(m, mono): cc * c for m, cc in self.terms.items()},
                         self.nvars)

    def derivative(self, var: int) -> "MultiPoly":
        t: dict = {}
        for m, c in self.terms.items():
            if m[var] > 0:
                mm = list(m)
                mm[var] -= 1
                t[tuple(mm)] = c * m[var]
        return MultiPoly(t, self.nvars)

    def extend_vars(self, extra: int) -> "MultiPoly":
        return MultiPoly({m + (0,) * extra: c for m, c in self.terms.items()},
                         self.nvars + extra)

    def evaluate(self, point: Sequence):
        point = [Q(p) for p in point]
        acc = Q(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                for _ in range(e):
                    v = v * x
            acc += v
        return acc

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def monic(self, key) -> "MultiPoly":
        if self.is_zero():
            return self
        _, c = self.lead(key)
        return self.scale(Q(1) / c)


def normal_form(f: MultiPoly, basis: Sequence[MultiPoly], key,
                max_terms: int = 10**9) -> MultiPoly:
    """Full multivariate division remainder of f by the basis."""
    leads = [(g.lead(key)[0], g.lead(key)[1], g) for g in basis if not g.is_zero()]
    out: dict = {}
    work = dict(f.terms)
    while work:
        if len(work) > max_terms:
            raise ResourceCapExceeded("term budget exhausted during reduction")
        m = max(work, key=key)
        c = work.pop(m)
        if c == 0:
            continue
        hit = None
        for gm, gc, g in leads:
            if _m_divides(gm, m):
                hit = (gm, gc, g)
                break
        if hit is None:
            out[m] = c
            continue
        gm, gc, g = hit
        quot = _m_sub(m, gm)
        fac = c / gc
        for mm, cc in g.terms.items():
            kk = _m_mul(mm, quot)
            if kk == m:
                continue
            s = work.get(kk, 0) - fac * cc
            if s == 0:
                work.pop(kk, None)
            else:
                work[kk] = s
    return MultiPoly(out, f.nvars)


def s_polynomial(f: MultiPoly, g: MultiPoly, key) -> MultiPoly:
    fm, fc = f.lead(key)
    gm, gc = g.lead(key)
    lcm = _m_lcm(fm, gm)
    return (f.mul_term(_m_sub(lcm, fm), Q(1) / fc)
            - g.mul_term(_m_sub(lcm, gm), Q(1) / gc))


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: str
    nvars: int


def buchberger(gens: Sequence[MultiPoly], order: str = LEX,
               options: GroebnerOptions = GroebnerOptions()) -> GroebnerBasis:
    """Reduced Groebner basis; deterministic normal (minimal-lcm) strategy.

    Pairs with coprime leading monomials are skipped (first criterion), as
    are pairs covered by an already-handled chain (second criterion).
    Exceeding the pair or term budget raises ResourceCapExceeded.
    """
    key = order_key(order)
    G: list[MultiPoly] = []
    for f in gens:
        if f.is_zero():
            continue
        r = normal_form(f, G, key, options.max_terms)
        if not r.is_zero():
            G.append(r)
    pending = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    reductions = 0

    def lcm_of(p):
        return _m_lcm(G[p[0]].lead(key)[0], G[p[1]].lead(key)[0])

    while pending:
        best = min(pending, key=lambda p: (key(lcm_of(p)), p))
        pending.discard(best)
        i, j = best
        fm, gm = G[i].lead(key)[0], G[j].lead(key)[0]
        lcm = _m_lcm(fm, gm)
        if lcm == _m_mul(fm, gm):
            continue
        chain = False
        for x in range(len(G)):
            if x in (i, j):
                continue
            if (_m_divides(G[x].lead(key)[0], lcm)
                    and (min(i, x), max(i, x)) not in pending
                    and (min(j, x), max(j, x)) not in pending):
                chain = True
                break
        if chain:
            continue
        reductions += 1
        if reductions > options.max_pairs:
            raise ResourceCapExceeded("pair budget exhausted")
        r = normal_form(s_polynomial(G[i], G[j], key), G, key, options.max_terms)
        if not r.is_zero():
            G.append(r)
            pending.update((idx, len(G) - 1) for idx in range(len(G) - 1))

    # interreduce and normalize
    reduced: list[MultiPoly] = []
    for i, g in enumerate(G):
        others = [h for jdx, h in enumerate(G) if jdx != i]
        r = normal_form(g, others, key, options.max_terms)
        if not r.is_zero():
            reduced.append(r.monic(key))
    final: list[MultiPoly] = []
    for i, g in enumerate(reduced):
        others = [h for jdx, h in enumerate(reduced) if jdx != i]
        r = normal_form(g, others, key, options.max_terms)
        if not r.is_zero():
            final.append(r.monic(key))
    seen = set()
    unique = []
    for g in final:
        h = hash(g)
        if h not in seen:
            seen.add(h)
            unique.append(g)
    unique.sort(key=lambda g: key(g.lead(key)[0]))
    return GroebnerBasis(tuple(unique), order, gens[0].nvars if gens else 0)


def univariate_members(basis: GroebnerBasis, var: int) -> list[MultiPoly]:
    """Basis elements involving only the given variable."""
    out = []
    for g in basis.generators:
        if all(all(e == 0 for i, e in enumerate(m) if i != var) for m in g.terms):
            out.append(g)
    return out


def multipoly_to_unipoly(p: MultiPoly, var: int, name: str = "k") -> UniPoly:
    deg = max((m[var] for m in p.terms), default=0)
    coeffs = [Q(0)] * (deg + 1)
    for m, c in p.terms.items():
        coeffs[m[var]] = c
    return UniPoly(coeffs, name)


def minimal_polynomial_of_var(basis: GroebnerBasis, var: int,
                              options: GroebnerOptions = GroebnerOptions()) -> Optional[UniPoly]:
    """Monic generator of (ideal intersect Q[var]) via normal forms of the
    variable powers: the first linear dependence among NF(var^m) gives the
    minimal univariate member, identical to the one a reduced lex basis
    with var ranked last would expose."""
    key = order_key(basis.order)
    gens = basis.generators
    nvars = basis.nvars
    kmono = MultiPoly.variable(var, nvars)
    pivots: list[tuple] = []      # (pivot monomial, vector dict, combo dict)
    nf = MultiPoly.constant(1, nvars)
    for m in range(options.minpoly_max_degree + 1):
        if m > 0:
            nf = normal_form(nf * kmono, gens, key, options.max_terms)
        vec = dict(nf.terms)
        combo = {m: Q(1)}
        for pm, pvec, pcombo in pivots:
            c = vec.get(pm)
            if c:
                for mm, cc in pvec.items():
                    s = vec.get(mm, 0) - c * cc
                    if s == 0:
                        vec.pop(mm, None)
                    else:
                        vec[mm] = s
                for idx, cc in pcombo.items():
                    s = combo.get(idx, 0) - c * cc
                    if s == 0:
                        combo.pop(idx, None)
                    else:
                        combo[idx] = s
        if not vec:
            coeffs = [Q(0)] * (m + 1)
            for idx, cc in combo.items():
                coeffs[idx] = cc
            return UniPoly(coeffs, "k").monic()
        pm = max(vec, key=key)
        c = vec[pm]
        vec = {mm: cc / c for mm, cc in vec.items()}
        combo = {idx: cc / c for idx, cc in combo.items()}
        pivots.append((pm, vec, combo))
    return None


# ---------------------------------------------------------------------------
# minors of the projected operator in real coordinates
# ---------------------------------------------------------------------------

def _cpx(re: MultiPoly, im: MultiPoly) -> tuple:
    return (re, im)


def _cadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _cmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gauss_const(z: GaussRational, nvars: int):
    return (MultiPoly.constant(z.re, nvars), MultiPoly.constant(z.im, nvars))


def _minor_sum_of_projected(entries, n: int, nvars: int) -> MultiPoly:
    """Sum of order-n principal minors of a Hermitian matrix of complex
    polynomial entries; the result must be real."""
    d = len(entries)
    total = MultiPoly.zero(nvars)
    for subset in combinations(range(d), n):
        det = _complex_det([[entries[i][j] for j in subset] for i in subset])
        if not det[1].is_zero():
            raise AssertionError("principal minor sum must be real")
        total = total + det[0]
    return total


def _complex_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    acc = None
    for j in range(n):
        minor = [[m[i][jj] for jj in range(n) if jj != j] for i in range(1, n)]
        term = _cmul(m[0][j], _complex_det(minor))
        if j % 2 == 1:
            term = (-term[0], -term[1])
        acc = term if acc is None else _cadd(acc, term)
    return acc


def projected_entries_w(X: BipartiteHermitian):
    """Entries of X^w (order dB) with |w> in H_dA written in real
    coordinates w1r, w2r, w2i, ..., the first imaginary part gauged away."""
    nv = 2 * X.dA - 1

    def wvar(i):
        if i == 0:
            return (MultiPoly.variable(0, nv), MultiPoly.zero(nv))
        return (MultiPoly.variable(2 * i - 1, nv), MultiPoly.variable(2 * i, nv))

    w = [wvar(i) for i in range(X.dA)]
    wbar = [(re, -im) for re, im in w]
    out = []
    for j in range(X.dB):
        row = []
        for jp in range(X.dB):
            acc = (MultiPoly.zero(nv), MultiPoly.zero(nv))
            for i in range(X.dA):
                for ip in range(X.dA):
                    z = _gauss_const(X.tensor(i, j, ip, jp), nv)
                    acc = _cadd(acc, _cmul(_cmul(z, wbar[i]), w[ip]))
            row.append(acc)
        out.append(row)
    return out, nv


def minors_sum(X: BipartiteHermitian, n: int) -> MultiPoly:
    """Sum of order-n principal minors of X^w as a real polynomial of
    degree 2n in the 2*dA - 1 real components of |w> in H_dA."""
    if not 1 <= n <= X.dB:
        raise ValueError("minor order must lie in 1..dB")
    entries, nv = projected_entries_w(X)
    return _minor_sum_of_projected(entries, n, nv)


def sphere_constraint(nvars: int) -> MultiPoly:
    """F = sum of squares of all coordinates minus one."""
    acc = MultiPoly.constant(-1, nvars)
    for v in range(nvars):
        x = MultiPoly.variable(v, nvars)
        acc = acc + x * x
    return acc


def lagrange_system(M: MultiPoly) -> list[MultiPoly]:
    """Critical-point system of M on the unit sphere, with k adjoined.

    Variables are extended by (lambda, k).  Generators: dM/dx_v +
    lambda dF/dx_v for every sphere coordinate, the constraint F itself,
    and M + k^2 tying k to negative values of M.  (The k-derivative 2k of
    the naive Lagrange function would force k = 0 and trivialize the
    criterion, so the value equation replaces it.)
    """
    nw = M.nvars
    nv = nw + 2
    lam = MultiPoly.variable(nw, nv)
    k = MultiPoly.variable(nw + 1, nv)
    Mx = M.extend_vars(2)
    F = sphere_constraint(nw).extend_vars(2)
    gens = []
    for v in range(nw):
        gens.append(Mx.derivative(v) + lam * F.derivative(v))
    gens.append(F)
    gens.append(Mx + k * k)
    return gens


def critical_k_system(M: MultiPoly) -> list[MultiPoly]:
    """Lambda-free critical system: cross products of grad M with the
    coordinate vector replace the multiplier (equivalent on the sphere,
    where the coordinate vector never vanishes)."""
    nw = M.nvars
    nv = nw + 1
    Mx = M.extend_vars(1)
    k = MultiPoly.variable(nw, nv)
    xs = [MultiPoly.variable(v, nv) for v in range(nw)]
    grads = [Mx.derivative(v) for v in range(nw)]
    gens = [xs[j] * grads[i] - xs[i] * grads[j]
            for i, j in combinations(range(nw), 2)]
    gens.append(sphere_constraint(nw).extend_vars(1))
    gens.append(Mx + k * k)
    return gens


# ---------------------------------------------------------------------------
# Bloch-coordinate route for a qubit projector side
# ---------------------------------------------------------------------------

def projected_entries_bloch(X: BipartiteHermitian):
    """Entries of X^w for dA = 2 in Bloch coordinates (n1, n2, n3).

    Phase-invariant products conj(w_i) w_j are linear in the Bloch vector:
    G = [[(1+n3)/2, (n1+i n2)/2], [(n1-i n2)/2, (1-n3)/2]], and rank-one
    normalized G's correspond exactly to |n| = 1.  This keeps the minor
    sums at degree n instead of 2n and removes the gauge circle."""
    if X.dA != 2:
        raise ValueError("Bloch route requires dA = 2")
    nv = 3
    half = Q(1, 2)
    n1 = MultiPoly.variable(0, nv)
    n2 = MultiPoly.variable(1, nv)
    n3 = MultiPoly.variable(2, nv)
    one = MultiPoly.constant(1, nv)
    G = {
        (0, 0): ((one + n3).scale(half), MultiPoly.zero(nv)),
        (1, 1): ((one - n3).scale(half), MultiPoly.zero(nv)),
        (0, 1): (n1.scale(half), n2.scale(half)),
        (1, 0): (n1.scale(half), n2.scale(-half)),
    }
    out = []
    for j in range(X.dB):
        row = []
        for jp in range(X.dB):
            acc = (MultiPoly.zero(nv), MultiPoly.zero(nv))
            for i in range(2):
                for ip in range(2):
                    z = _gauss_const(X.tensor(i, j, ip, jp), nv)
                    acc = _cadd(acc, _cmul(z, G[(i, ip)]))
            row.append(acc)
        out.append(row)
    return out, nv


def minors_sum_bloch(X: BipartiteHermitian, n: int) -> MultiPoly:
    if not 1 <= n <= X.dB:
        raise ValueError("minor order must lie in 1..dB")
    entries, nv = projected_entries_bloch(X)
    return _minor_sum_of_projected(entries, n, nv)


# ---------------------------------------------------------------------------
# the sufficient criterion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SufficientResult:
    verdict: str                      # "BlockPositive" | "Inconclusive"
    details: tuple = ()               # one human-readable note per minor order

    @property
    def block_positive(self) -> bool:
        return self.verdict == "BlockPositive"


def _no_nonzero_real_roots(g: UniPoly) -> bool:
    """g(k) = 0 has no real solutions besides k = 0."""
    stripped = g.shift_down(g.trailing_zero_count())
    if stripped.degree() <= 0:
        return True
    return count_roots(stripped) == 0


def minor_order_certified(M: MultiPoly, options: GroebnerOptions) -> tuple[bool, str]:
    """Gröbner leg for one minor order: True when the critical-value
    polynomial has no nonzero real roots."""
    if M.is_zero():
        return True, "identically zero"
    gens = critical_k_system(M)
    try:
        basis = buchberger(gens, GREVLEX, options)
        gminus1 = minimal_polynomial_of_var(basis, M.nvars, options)
    except ResourceCapExceeded:
        return False, "resource cap exceeded"
    if gminus1 is None:
        return False, "no univariate eliminant found"
    if _no_nonzero_real_roots(gminus1):
        return True, f"eliminant degree {gminus1.degree()} has no nonzero real roots"
    return False, "eliminant has nonzero real roots"


def _partial_trace_psd(X: BipartiteHermitian) -> bool:
    """Exact PSD test of the B-side partial trace (the order-1 minor sum)."""
    rows = []
    for i in range(X.dA):
        row = []
        for ip in range(X.dA):
            acc = GaussRational(0)
            for j in range(X.dB):
                acc = acc + X.tensor(i, j, ip, j)
            row.append(acc)
        rows.append(row)
    sig = signature_from_char_poly(char_poly(rows), X.dA)
    return sig.n_neg == 0


def _pair_sum_condition(X: BipartiteHermitian) -> bool:
    """Exact order-2 minor-sum condition via the quartic machinery (dA = 2)."""
    from .quditqubit import PairSelector, pair_c_coefficients
    from .witness2x2 import det_nonneg_all_w
    Y = X.swap_factors()          # shape (dB, 2)
    total = None
    for l, k in combinations(range(1, Y.dA + 1), 2):
        c = pair_c_coefficients(Y, PairSelector(l, k))
        total = c if total is None else total + c
    return det_nonneg_all_w(total).holds


def sufficient_block_positive(X: BipartiteHermitian,
                              options: GroebnerOptions = GroebnerOptions(),
                              quartic_shortcut: bool = True) -> SufficientResult:
    """Block-positivity is certified when every minor order n = 1..dB of
    the projected operator is nonnegative on the sphere of |w> in H_dA.

    Orders with an exact cheaper test (the partial-trace PSD check for
    n = 1 and, for a qubit projector side, the order-2 slice condition)
    use it; the rest go through the critical-point elimination.  Any
    failed or capped leg yields Inconclusive.
    """
    details = []
    ok = True
    for n in range(1, X.dB + 1):
        if quartic_shortcut and n == 1:
            good = _partial_trace_psd(X)
            details.append(f"n=1: partial-trace PSD {'holds' if good else 'fails'}")
        elif quartic_shortcut and n == 2 and X.dA == 2:
            good = _pair_sum_condition(X)
            details.append(f"n=2: slice condition {'holds' if good else 'fails'}")
        else:
            M = minors_sum_bloch(X, n) if X.dA == 2 else minors_sum(X, n)
            good, note = minor_order_certified(M, options)
            details.append(f"n={n}: {note}")
        ok = ok and good
        if not ok:
            break
    return SufficientResult("BlockPositive" if ok else "Inconclusive", tuple(details))
