"""Univariate polynomial algebra over an exact ordered field.

Coefficients are exact rationals (gmpy2.mpq) or QuadSurd values sharing a
single radicand.  Everything is decided through signs: Sturm chains count
distinct real roots, iterated gcd-with-derivative towers certify that all
real roots in a region have even multiplicity, and the mesh/precedence
algorithms decide pointwise alternatives g1 >= 0 or g2 >= 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .scalars import (Q, QZERO, QuadSurd, Sign, as_field_scalar, sign_of)


class EndpointRootError(ValueError):
    """An interval endpoint is a root of the polynomial under test."""


@dataclass(frozen=True)
class Interval:
    """Open rational interval (lo, hi) with lo < hi."""
    lo: object
    hi: object

    def __post_init__(self):
        object.__setattr__(self, "lo", Q(self.lo))
        object.__setattr__(self, "hi", Q(self.hi))
        if not self.lo < self.hi:
            raise ValueError("interval requires lo < hi")


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        cs = [as_field_scalar(c) for c in coeffs]
        while cs and sign_of(cs[-1]) == Sign.ZERO:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, var: str = "t") -> "UniPoly":
        return cls((), var)

    @classmethod
    def constant(cls, c, var: str = "t") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def x(cls, var: str = "t") -> "UniPoly":
        return cls((0, 1), var)

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1, var: str = "t") -> "UniPoly":
        p = cls.constant(lead, var)
        for r in roots:
            p = p * cls((-Q(r), 1), var)
        return p

    # -- basics -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, point):
        """Horner evaluation at an exact scalar."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * point + c
        return acc if acc is not None else QZERO

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out, self.var)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.var)
        out = [QZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.var)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "UniPoly":
        c = as_field_scalar(c)
        return UniPoly([a * c for a in self.coeffs], self.var)

    def __pow__(self, n: int) -> "UniPoly":
        out = UniPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Exact field division: self = q*other + r with deg r < deg other."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [QZERO] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        dlead = other.leading()
        dd = other.degree()
        while len(rem) - 1 >= dd and rem:
            while rem and sign_of(rem[-1]) == Sign.ZERO:
                rem.pop()
            if len(rem) - 1 < dd or not rem:
                break
            shift = len(rem) - 1 - dd
            factor = rem[-1] / dlead
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
            rem.pop()
        return UniPoly(q, self.var), UniPoly(rem, self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly([c * i for i, c in enumerate(self.coeffs) if i > 0],
                       self.var)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        return UniPoly([c / lead for c in self.coeffs], self.var)

    def reversed_coeffs(self) -> "UniPoly":
        return UniPoly(tuple(reversed(self.coeffs)), self.var)

    def shift_down(self, k: int) -> "UniPoly":
        """Divide by t^k; requires the k lowest coefficients to vanish."""
        if any(sign_of(c) != Sign.ZERO for c in self.coeffs[:k]):
            raise ValueError("not divisible by t^k")
        return UniPoly(self.coeffs[k:], self.var)

    def trailing_zero_count(self) -> int:
        n = 0
        for c in self.coeffs:
            if sign_of(c) != Sign.ZERO:
                break
            n += 1
        return n

    def to_float_coeffs(self) -> list[float]:
        from .scalars import scalar_to_float
        return [scalar_to_float(c) for c in self.coeffs]


# ---------------------------------------------------------------------------
# gcd / squarefree / Sturm
# ---------------------------------------------------------------------------

def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd via Euclid's algorithm over the coefficient field."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(f: UniPoly) -> UniPoly:
    """f / gcd(f, f'): same roots as f, each with multiplicity one."""
    if f.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if f.degree() == 0:
        return f.monic()
    return f.exact_div(poly_gcd(f, f.derivative())).monic()


@dataclass(frozen=True)
class SturmChain:
    """Signed remainder chain of a squarefree polynomial."""
    polys: tuple[UniPoly, ...]

    def variations_at(self, point) -> int:
        signs = [sign_of(p(point)) for p in self.polys]
        signs = [s for s in signs if s != Sign.ZERO]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(f: UniPoly) -> SturmChain:
    """Chain {f, f', -rem(f, f'), ...}: the classical negated-remainder chain.

    Built literally as remainders f_{i+1} = rem(f_{i-1}, f_i) with the sign
    pattern +,+,-,-,+,+,-,-,... which coincides elementwise with the
    recursion p_{k+1} = -rem(p_{k-1}, p_k).
    """
    if f.is_zero() or f.degree() == 0:
        raise ValueError("Sturm chain needs a nonconstant polynomial")
    if not poly_gcd(f, f.derivative()).degree() == 0:
        raise ValueError("Sturm chain requires a squarefree polynomial")
    rems = [f, f.derivative()]
    while not rems[-1].is_zero():
        rems.append(rems[-2] % rems[-1])
    rems.pop()
    pattern = (1, 1, -1, -1)
    chain = [p if pattern[i % 4] > 0 else -p for i, p in enumerate(rems)]
    return SturmChain(tuple(chain))


def cauchy_bound(f: UniPoly):
    """Rational B = 1 + max|a_i|/|a_n|; every real root lies in (-B, B).

    For QuadSurd coefficients a rational upper bound of the exact value is
    returned, which is still a valid root bound.
    """
    if f.is_zero() or f.degree() == 0:
        raise ValueError("cauchy bound needs a nonconstant polynomial")
    lead = f.leading()
    ratios = []
    for c in f.coeffs[:-1]:
        r = c / lead
        if isinstance(r, QuadSurd):
            ratios.append(abs(r))
        else:
            ratios.append(QuadSurd(abs(r)))
    if not ratios:
        return Q(1)
    top = ratios[0]
    for r in ratios[1:]:
        if r > top:
            top = r
    return Q(1) + top.rational_upper_bound()


def _deflate_at(f: UniPoly, point) -> tuple[UniPoly, int]:
    """Remove the factor (t - point)^m exactly; returns (cofactor, m)."""
    m = 0
    lin = UniPoly((-Q(point), 1), f.var)
    while not f.is_zero() and sign_of(f(point)) == Sign.ZERO:
        f = f.exact_div(lin)
        m += 1
    return f, m


def count_roots(f: UniPoly, interval: Optional[Interval] = None) -> int:
    """Distinct real roots of f in the open interval (all reals when None).

    The input is replaced by its squarefree part first.  A root at a finite
    endpoint raises EndpointRootError; callers choose how to perturb.
    """
    if f.is_zero():
        raise ValueError("root counting needs a nonzero polynomial")
    if f.degree() == 0:
        return 0
    g = squarefree_part(f)
    if g.degree() == 0:
        return 0
    if interval is None:
        b = Q(1) + cauchy_bound(g)
        lo, hi = -b, b
    else:
        lo, hi = interval.lo, interval.hi
        if sign_of(g(lo)) == Sign.ZERO or sign_of(g(hi)) == Sign.ZERO:
            raise EndpointRootError("interval endpoint is a root")
    chain = sturm_chain(g)
    return chain.variations_at(lo) - chain.variations_at(hi)


def count_roots_open(f: UniPoly, lo, hi) -> int:
    """Distinct roots in the open (lo, hi), deflating endpoint roots exactly."""
    if f.is_zero():
        raise ValueError("root counting needs a nonzero polynomial")
    g = squarefree_part(f) if f.degree() > 0 else f
    if g.degree() <= 0:
        return 0
    g, _ = _deflate_at(g, lo)
    if g.degree() > 0:
        g, _ = _deflate_at(g, hi)
    if g.degree() <= 0:
        return 0
    chain = sturm_chain(g)
    return chain.variations_at(Q(lo)) - chain.variations_at(Q(hi))


def multiplicity_sequence(f: UniPoly, interval: Optional[Interval] = None) -> list[int]:
    """Counts d_k of distinct real roots of the gcd tower f_k, until zero.

    f_1 = f, f_{k+1} = gcd(f_k, f_k'); d_k is the number of distinct real
    roots of f_k (restricted to the interval when given).  All nonzero
    counts are returned.
    """
    if f.is_zero() or f.degree() == 0:
        raise ValueError("multiplicity sequence needs a nonconstant polynomial")
    out = []
    g = f
    while not g.is_zero() and g.degree() > 0:
        if interval is None:
            d = count_roots(g)
        else:
            d = count_roots_open(g, interval.lo, interval.hi)
        if d == 0:
            break
        out.append(d)
        g = poly_gcd(g, g.derivative())
    return out


def _even_multiplicities_only(dseq: list[int]) -> bool:
    # pairs (d1,d2), (d3,d4), ... must match, and the tower must end on an
    # even level; a dangling odd level is a root of odd multiplicity.
    if len(dseq) % 2 == 1:
        return False
    return all(dseq[i] == dseq[i + 1] for i in range(0, len(dseq), 2))


def nonneg(f: UniPoly, interval: Optional[Interval] = None) -> bool:
    """Decide f(t) >= 0 on the open interval (all reals when None)."""
    if f.is_zero():
        return True
    if f.degree() == 0:
        return sign_of(f.coeffs[0]) >= 0
    if interval is None:
        if f.degree() % 2 == 1 or sign_of(f.leading()) < 0:
            return False
        return _even_multiplicities_only(multiplicity_sequence(f))
    if sign_of(f(interval.lo)) < 0 or sign_of(f(interval.hi)) < 0:
        return False
    return _even_multiplicities_only(multiplicity_sequence(f, interval))


def odd_multiplicity_part(f: UniPoly) -> UniPoly:
    """Squarefree product of the factors of f with odd multiplicity.

    With f_k the gcd tower and ~f_k its squarefree part, delta_k =
    ~f_k / ~f_{k+1} collects the multiplicity-k factors; the product over
    odd k has exactly the odd-multiplicity roots of f, all simple.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no odd-multiplicity part")
    tower = [f]
    while not tower[-1].is_zero() and tower[-1].degree() > 0:
        g = tower[-1]
        tower.append(poly_gcd(g, g.derivative()))
    tilde = [squarefree_part(g) if g.degree() > 0 else g.monic() for g in tower]
    out = UniPoly.constant(1, f.var)
    for k in range(0, len(tilde) - 1):  # tower index k holds multiplicity k+1
        if (k + 1) % 2 == 1:
            out = out * tilde[k].exact_div(tilde[k + 1])
    return out.monic()


# ---------------------------------------------------------------------------
# mesh / precedence / alternative
# ---------------------------------------------------------------------------

def generate_mesh(g1: UniPoly, g2: UniPoly, lo, hi) -> list:
    """Ordered points t_1 < ... < t_l such that no t_i is a root of g1 or
    g2 and each (t_i, t_{i+1}) holds at most one root of either polynomial.

    Bisection recursion; midpoints landing on a root are offset toward the
    right endpoint until they clear.
    """
    lo, hi = Q(lo), Q(hi)
    if lo >= hi:
        raise ValueError("mesh needs lo < hi")
    for g in (g1, g2):
        if g.is_zero():
            raise ValueError("mesh needs nonzero polynomials")
        if sign_of(g(lo)) == Sign.ZERO or sign_of(g(hi)) == Sign.ZERO:
            raise EndpointRootError("mesh endpoint is a root")

    def rec(a, b):
        r1 = count_roots_open(g1, a, b)
        r2 = count_roots_open(g2, a, b)
        if r1 <= 1 and r2 <= 1:
            return [a, b]
        mid = (a + b) / 2
        while sign_of(g1(mid)) == Sign.ZERO or sign_of(g2(mid)) == Sign.ZERO:
            mid = (mid + b) / 2
        left = rec(a, mid)
        right = rec(mid, b)
        return left[:-1] + right

    return rec(lo, hi)


def precedence(g1: UniPoly, g2: UniPoly, lo, hi) -> bool:
    """True iff the sign change of g1 precedes that of g2 inside (lo, hi).

    Preconditions: each polynomial flips sign exactly once in the interval
    and they share no root there (Table-B1 cases 8/9).
    """
    a, b = Q(lo), Q(hi)
    s1a, s2a = g1(a), g2(a)
    while True:
        mid = (a + b) / 2
        s1 = sign_of(g1(mid) * s1a)
        s2 = sign_of(g2(mid) * s2a)
        if s1 <= 0 and s2 > 0:
            return True
        if s1 > 0 and s2 <= 0:
            return False
        if s1 > 0 and s2 > 0:
            a = mid
        else:
            b = mid


_VALID_CASES = {
    (1, 1, 1, 1), (1, 1, 1, -1), (1, 1, -1, 1), (1, -1, 1, 1),
    (-1, 1, 1, 1), (-1, 1, -1, 1), (1, -1, 1, -1),
}
_CASE_8 = (1, -1, -1, 1)   # g1 drops, g2 rises
_CASE_9 = (-1, 1, 1, -1)   # g1 rises, g2 drops
# remaining seven sign patterns have a both-negative endpoint: invalid


def _both_negative_near(g1, g2, point, toward):
    """Point strictly between `point` and `toward` where both are negative,
    assuming both are negative at (or immediately beside) `point`."""
    step = (toward - point) / 2
    for _ in range(256):
        cand = point + step
        if sign_of(g1(cand)) < 0 and sign_of(g2(cand)) < 0:
            return cand
        step = step / 2
    raise RuntimeError("failed to localize a both-negative point")


def _search_both_negative(gfirst, gsecond, lo, hi):
    """Witness with both polynomials negative in (lo, hi), given that
    gfirst flips + -> - before gsecond flips - -> +."""
    a, b = Q(lo), Q(hi)
    for _ in range(512):
        mid = (a + b) / 2
        s1, s2 = sign_of(gfirst(mid)), sign_of(gsecond(mid))
        if s1 < 0 and s2 < 0:
            return mid
        if s1 >= 0:          # first flip not reached yet
            a = mid
        else:                # both flips passed
            b = mid
    raise RuntimeError("failed to localize a both-negative point")


def _inward_nonroot(g1, g2, point, toward):
    """A point p strictly between point and toward such that neither g has
    a root in the half-open stretch between point and p, p included."""
    step = (Q(toward) - Q(point)) / 2
    for _ in range(256):
        cand = Q(point) + step
        lo, hi = (point, cand) if point < cand else (cand, point)
        if (sign_of(g1(cand)) != Sign.ZERO and sign_of(g2(cand)) != Sign.ZERO
                and count_roots_open(g1, lo, hi) == 0
                and count_roots_open(g2, lo, hi) == 0):
            return cand
        step = step / 2
    raise RuntimeError("failed to clear interval endpoint")


@dataclass(frozen=True)
class AlternativeResult:
    holds: bool
    witness: Optional[object] = None   # rational t with g1(t)<0 and g2(t)<0


def eval_alternative(g1: UniPoly, g2: UniPoly, lo, hi) -> AlternativeResult:
    """Decide: for all t in (lo, hi), g1(t) >= 0 or g2(t) >= 0.

    Mesh subdivision plus the 16-case endpoint-sign table; ambiguous cases
    8/9 are settled by the common-root count of gcd(sigma_g1, sigma_g2) and
    then by flip precedence.  A False verdict always carries a rational
    witness where both polynomials are exactly negative.
    """
    if g1.is_zero() or g2.is_zero():
        return AlternativeResult(True)
    lo, hi = Q(lo), Q(hi)
    if lo >= hi:
        raise ValueError("alternative needs lo < hi")

    # clear endpoint roots by stepping inward over root-free stretches
    lo2, hi2 = lo, hi
    if sign_of(g1(lo)) == Sign.ZERO or sign_of(g2(lo)) == Sign.ZERO:
        lo2 = _inward_nonroot(g1, g2, lo, hi)
        if sign_of(g1(lo2)) < 0 and sign_of(g2(lo2)) < 0:
            return AlternativeResult(False, lo2)
    if sign_of(g1(hi)) == Sign.ZERO or sign_of(g2(hi)) == Sign.ZERO:
        hi2 = _inward_nonroot(g1, g2, hi, lo2)
        if sign_of(g1(hi2)) < 0 and sign_of(g2(hi2)) < 0:
            return AlternativeResult(False, hi2)
    if lo2 >= hi2:
        return AlternativeResult(True)

    mesh = generate_mesh(g1, g2, lo2, hi2)
    signs = [(sign_of(g1(t)), sign_of(g2(t))) for t in mesh]

    def witness_at(idx):
        t = mesh[idx]
        if lo < t < hi:
            return t
        toward = mesh[idx + 1] if idx == 0 else mesh[idx - 1]
        return _both_negative_near(g1, g2, t, toward)

    for i, (s1, s2) in enumerate(signs):
        if s1 < 0 and s2 < 0:
            return AlternativeResult(False, witness_at(i))

    sig1 = odd_multiplicity_part(g1)
    sig2 = odd_multiplicity_part(g2)
    common = poly_gcd(sig1, sig2)

    for i in range(len(mesh) - 1):
        key = signs[i] + signs[i + 1]
        if key in _VALID_CASES:
            continue
        if key not in (_CASE_8, _CASE_9):
            continue       # invalid cases already caught at mesh points
        a, b = mesh[i], mesh[i + 1]
        if common.degree() > 0 and count_roots_open(common, a, b) >= 1:
            continue       # simultaneous flip at a shared root
        if key == _CASE_8:
            if precedence(g1, g2, a, b):
                return AlternativeResult(False, _search_both_negative(g1, g2, a, b))
        else:
            if precedence(g2, g1, a, b):
                return AlternativeResult(False, _search_both_negative(g2, g1, a, b))
    return AlternativeResult(True)


def eval_alternative_all_reals(g1: UniPoly, g2: UniPoly) -> AlternativeResult:
    """Decide the alternative over the whole real line."""
    if g1.is_zero() or g2.is_zero():
        return AlternativeResult(True)
    if g1.degree() == 0 or g2.degree() == 0:
        if (g1.degree() == 0 and sign_of(g1.coeffs[0]) >= 0) or \
           (g2.degree() == 0 and sign_of(g2.coeffs[0]) >= 0):
            return AlternativeResult(True)
    bounds = []
    for g in (g1, g2):
        if g.degree() > 0:
            bounds.append(cauchy_bound(g))
    b = Q(1) + (max(bounds) if bounds else Q(1))
    for point in (-b, b):
        if sign_of(g1(point)) < 0 and sign_of(g2(point)) < 0:
            return AlternativeResult(False, point)
    return eval_alternative(g1, g2, -b, b)


def find_negative_point(f: UniPoly):
    """Some rational t with f(t) < 0, or None when f >= 0 on all reals."""
    if f.is_zero():
        return None
    if f.degree() == 0:
        return Q(0) if sign_of(f.coeffs[0]) < 0 else None
    b = Q(1) + cauchy_bound(f)
    if sign_of(f(-b)) < 0:
        return -b
    if sign_of(f(b)) < 0:
        return b
    one = UniPoly.constant(1, f.var)
    for t in generate_mesh(f, one, -b, b):
        if sign_of(f(t)) < 0:
            return t
    return None
