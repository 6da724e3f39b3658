"""Exact nonnegativity tests for quartic polynomials and the witness
polynomial bundle.

The quartic decision clears every fractional-power condition of the
normalized form t^4 + alpha t^3 + beta t^2 + gamma t + 1 into sign tests
over Q(sqrt(a4*a0)); nothing irrational is ever materialized.  The bundle
builder assembles g1..g4 over Q(sqrt(c1*c6)) and the rational degree-16
discriminant numerator g_delta.
"""
from __future__ import annotations

from dataclasses import dataclass

from .scalars import (Q, GaussRational, QuadSurd, Sign, sign_of)
from .unipoly import UniPoly


@dataclass(frozen=True)
class Quartic:
    """a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0 over an exact field."""
    a4: object
    a3: object
    a2: object
    a1: object
    a0: object

    def __post_init__(self):
        for name in ("a4", "a3", "a2", "a1", "a0"):
            object.__setattr__(self, name, Q(getattr(self, name))
                               if isinstance(getattr(self, name), int) else getattr(self, name))

    def as_unipoly(self, var: str = "t") -> UniPoly:
        return UniPoly((self.a0, self.a1, self.a2, self.a3, self.a4), var)

    @classmethod
    def from_unipoly(cls, p: UniPoly) -> "Quartic":
        if p.degree() > 4:
            raise ValueError("degree exceeds four")
        c = list(p.coeffs) + [Q(0)] * (5 - len(p.coeffs))
        return cls(c[4], c[3], c[2], c[1], c[0])


def reverse_quartic(q: Quartic) -> Quartic:
    """Coefficient reversal; preserves the nonnegativity verdict when
    a4 > 0 and a0 > 0."""
    return Quartic(q.a0, q.a1, q.a2, q.a3, q.a4)


def quartic_discriminant(q: Quartic):
    """Discriminant of the quartic from its raw coefficients.

    Scale- and dilation-covariant with positive factors, so its sign equals
    the sign of the discriminant of the normalized quartic.
    """
    a, b, c, d, e = q.a4, q.a3, q.a2, q.a1, q.a0
    return (Q(256) * a**3 * e**3 - Q(192) * a**2 * b * d * e**2
            - Q(128) * a**2 * c**2 * e**2 + Q(144) * a**2 * c * d**2 * e
            - Q(27) * a**2 * d**4 + Q(144) * a * b**2 * c * e**2
            - Q(6) * a * b**2 * d**2 * e - Q(80) * a * b * c**2 * d * e
            + Q(18) * a * b * c * d**3 + Q(16) * a * c**4 * e
            - Q(4) * a * c**3 * d**2 - Q(27) * b**4 * e**2
            + Q(18) * b**3 * c * d * e - Q(4) * b**3 * d**3
            - Q(4) * b**2 * c**3 * e + b**2 * c**2 * d**2)


@dataclass(frozen=True)
class NormalizedConditions:
    """The four quartic conditions, evaluated in cleared form."""
    disc_sign: Sign
    beta_range_ok: bool     # beta + 2 >= 0
    cond_diff_ok: bool      # (alpha-gamma)^2 <= 16(beta+2), given beta+2 >= 0
    cond_sum_ok: bool       # beta <= 6, or beta > 6 and (alpha+gamma)^2 <= 16(beta-2)

    @property
    def all_ok(self) -> bool:
        return (self.disc_sign >= 0 and self.beta_range_ok
                and self.cond_diff_ok and self.cond_sum_ok)


def _rational(x):
    if isinstance(x, QuadSurd):
        return x.rational_value()
    return Q(x)


def normalized_conditions(q: Quartic) -> NormalizedConditions:
    """Evaluate the normalized-quartic conditions exactly.

    With s = sqrt(a4*a0) all conditions clear to signs in Q(sqrt(a4*a0)):
      beta + 2 >= 0           <=>  a2 + 2s >= 0
      |alpha-gamma| bound     <=>  a3^2 a0 + a1^2 a4 - 2 a1 a3 s <= 16 a4 a0 (a2 + 2s)
      beta <= 6               <=>  6s - a2 >= 0
      |alpha+gamma| bound     <=>  a3^2 a0 + a1^2 a4 + 2 a1 a3 s <= 16 a4 a0 (a2 - 2s)
    Squaring is valid because each right-hand side is established
    nonnegative before comparing squares.
    """
    a4, a3, a2, a1, a0 = (_rational(q.a4), _rational(q.a3), _rational(q.a2),
                          _rational(q.a1), _rational(q.a0))
    if not (a4 > 0 and a0 > 0):
        raise ValueError("requires a4 > 0 and a0 > 0")
    D = a4 * a0
    s = QuadSurd.sqrt(D)
    disc_sign = sign_of(quartic_discriminant(Quartic(a4, a3, a2, a1, a0)))
    beta_p2 = a2 + 2 * s
    beta_range_ok = beta_p2.sign() >= 0
    sq_base = a3 * a3 * a0 + a1 * a1 * a4
    diff_lhs = QuadSurd(sq_base, -2 * a1 * a3, D)
    cond_diff_ok = beta_range_ok and (16 * D * beta_p2 - diff_lhs).sign() >= 0
    if (6 * s - a2).sign() >= 0:
        cond_sum_ok = beta_range_ok
    else:
        sum_lhs = QuadSurd(sq_base, 2 * a1 * a3, D)
        cond_sum_ok = (16 * D * (a2 - 2 * s) - sum_lhs).sign() >= 0
    return NormalizedConditions(disc_sign, beta_range_ok, cond_diff_ok, cond_sum_ok)


def quartic_nonneg(q: Quartic) -> bool:
    """Exact test: q(t) >= 0 for all real t, for a4 > 0 and a0 > 0."""
    return normalized_conditions(q).all_ok


def quartic_nonneg_symmetric(q: Quartic) -> bool:
    """Specialized test for the pattern a3 = -a1, a4 = a0 > 0.

    The discriminant is automatically nonnegative and the conditions
    collapse to beta + 2 >= 0 and alpha^2 <= 4(beta+2), which clear to
    a2 + 2 a0 >= 0 and a3^2 <= 4 a0 (a2 + 2 a0).
    """
    a4, a3, a2, a1, a0 = (_rational(q.a4), _rational(q.a3), _rational(q.a2),
                          _rational(q.a1), _rational(q.a0))
    if a3 != -a1 or a4 != a0 or not a0 > 0:
        raise ValueError("requires a3 = -a1 and a4 = a0 > 0")
    return a2 + 2 * a0 >= 0 and a3 * a3 <= 4 * a0 * (a2 + 2 * a0)


# ---------------------------------------------------------------------------
# witness polynomial bundle
# ---------------------------------------------------------------------------

def build_lambda(c: GaussRational, var: str = "t") -> UniPoly:
    """Re(c) t^2 + 2 Im(c) t - Re(c)."""
    return UniPoly((-c.re, 2 * c.im, c.re), var)


def build_chi(c3: GaussRational, c4, var: str = "t") -> UniPoly:
    """(c4+2Re c3) t^4 + 8Im(c3) t^3 + 2(c4-6Re c3) t^2 - 8Im(c3) t + (c4+2Re c3)."""
    hi = c4 + 2 * c3.re
    mid = 2 * (c4 - 6 * c3.re)
    return UniPoly((hi, -8 * c3.im, mid, 8 * c3.im, hi), var)


def _unit_square(var: str = "t") -> UniPoly:
    u = UniPoly((1, 0, 1), var)     # t^2 + 1
    return u * u


@dataclass(frozen=True)
class GBundle:
    """g_delta over Q plus g1..g4 over Q(sqrt(c1*c6))."""
    g_delta: UniPoly
    g1: UniPoly
    g2: UniPoly
    g3: UniPoly
    g4: UniPoly
    radicand: object


def build_g_delta(c) -> UniPoly:
    """Numerator of the discriminant of the normalized slice quartic.

    Assembled from the closed forms
      P = chi^2 - 12 L2 L5 u^2 + 12 c1 c6 u^4
      Q = 72 c1 c6 chi u^4 + 36 L2 L5 chi u^2 - 2 chi^3 - 108 (c6 L2^2 + c1 L5^2) u^4
    with u = t^2+1; the combination (4P^3 - Q^2) / (432 u^4) is a rational
    polynomial of degree <= 16 whose sign at each t equals the sign of the
    discriminant of the quartic r -> W(r, t).
    """
    lam2 = build_lambda(c.c2)
    lam5 = build_lambda(c.c5)
    chi = build_chi(c.c3, c.c4)
    u2 = _unit_square()
    u4 = u2 * u2
    c16 = c.c1 * c.c6
    ll = lam2 * lam5
    P = chi * chi - Q(12) * (ll * u2) + Q(12) * c16 * u4
    Qp = (Q(72) * c16 * (chi * u4) + Q(36) * (ll * chi * u2) - Q(2) * chi**3
          - Q(108) * (c.c6 * (lam2 * lam2) + c.c1 * (lam5 * lam5)) * u4)
    num = Q(4) * P**3 - Qp * Qp
    return num.exact_div(Q(432) * u4)


def build_g_bundle(c) -> GBundle:
    """The five decision polynomials for the c1 > 0, c6 > 0 branch."""
    if not (c.c1 > 0 and c.c6 > 0):
        raise ValueError("bundle requires c1 > 0 and c6 > 0")
    D = c.c1 * c.c6
    s = QuadSurd.sqrt(D)
    lam2 = build_lambda(c.c2)
    lam5 = build_lambda(c.c5)
    chi = build_chi(c.c3, c.c4)
    u2 = _unit_square()
    g2 = chi + u2.scale(2 * s)
    g3 = build_chi(-c.c3, 6 * s - c.c4)
    # Lambda(t, sqrt(c1) c5 -/+ sqrt(c6) c2)^2 expands inside Q(sqrt(c1 c6))
    sq_part = c.c1 * (lam5 * lam5) + c.c6 * (lam2 * lam2)
    cross = (lam2 * lam5).scale(2 * s)
    g1 = g2.scale(4 * D) - (sq_part - cross)
    g4 = (chi - u2.scale(2 * s)).scale(4 * D) - (sq_part + cross)
    return GBundle(build_g_delta(c), g1, g2, g3, g4, D)
