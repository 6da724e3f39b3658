"""Hermitian matrices over Q(i) with a declared bipartite tensor shape.

Flat index convention: row r = i*dB + j for tensor index (i, j), with i
indexing the first factor and j the second (second factor fastest).  The
characteristic polynomial of a Hermitian matrix has real rational
coefficients and is computed exactly by the Faddeev-LeVerrier recursion,
so eigenvalue signatures reduce to Sturm counts.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .scalars import (Q, GaussRational, Sign, format_gauss, parse_gauss,
                      sign_of)
from .unipoly import UniPoly, cauchy_bound, count_roots_open, poly_gcd


class HermiticityError(ValueError):
    """Input matrix is not Hermitian; carries the offending index pair."""

    def __init__(self, row: int, col: int):
        self.row, self.col = row, col
        super().__init__(f"entries ({row},{col}) and ({col},{row}) are not conjugate")


def _as_gauss_entry(x) -> GaussRational:
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, str):
        return parse_gauss(x)
    return GaussRational(x)


class BipartiteHermitian:
    """Hermitian dA*dB x dA*dB matrix over Q(i) with tensor shape (dA, dB)."""

    __slots__ = ("entries", "dA", "dB")

    def __init__(self, entries, dA: int, dB: int):
        n = dA * dB
        rows = [tuple(_as_gauss_entry(x) for x in row) for row in entries]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected a {n}x{n} matrix for shape ({dA},{dB})")
        for r in range(n):
            for c in range(r, n):
                if rows[r][c] != rows[c][r].conjugate():
                    raise HermiticityError(r, c)
        object.__setattr__(self, "entries", tuple(rows))
        object.__setattr__(self, "dA", dA)
        object.__setattr__(self, "dB", dB)

    def __setattr__(self, *a):
        raise AttributeError("BipartiteHermitian is immutable")

    @property
    def order(self) -> int:
        return self.dA * self.dB

    def flat(self, i: int, j: int) -> int:
        return i * self.dB + j

    def tensor(self, i: int, j: int, ip: int, jp: int) -> GaussRational:
        """X_{ij,i'j'} with zero-based tensor indices."""
        return self.entries[self.flat(i, j)][self.flat(ip, jp)]

    def scale(self, s) -> "BipartiteHermitian":
        s = Q(s)
        return BipartiteHermitian(
            [[e * s for e in row] for row in self.entries], self.dA, self.dB)

    def swap_factors(self) -> "BipartiteHermitian":
        """Exchange the tensor factors: shape (dB, dA), same operator."""
        n = self.order
        out = [[None] * n for _ in range(n)]
        for i in range(self.dA):
            for j in range(self.dB):
                for ip in range(self.dA):
                    for jp in range(self.dB):
                        out[j * self.dA + i][jp * self.dA + ip] = self.tensor(i, j, ip, jp)
        return BipartiteHermitian(out, self.dB, self.dA)

    # -- projections ---------------------------------------------------------
    def project_b(self, w) -> tuple:
        """(X_w)_{ii'} = sum_{j,j'} X_{ij,i'j'} conj(w_j) w_{j'}: dA x dA."""
        w = [_as_gauss_entry(x) for x in w]
        if len(w) != self.dB:
            raise ValueError("vector length must match dB")
        out = []
        for i in range(self.dA):
            row = []
            for ip in range(self.dA):
                acc = GaussRational(0)
                for j in range(self.dB):
                    for jp in range(self.dB):
                        acc = acc + self.tensor(i, j, ip, jp) * w[j].conjugate() * w[jp]
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def project_a(self, v) -> tuple:
        """(X^v)_{jj'} = sum_{i,i'} X_{ij,i'j'} conj(v_i) v_{i'}: dB x dB."""
        v = [_as_gauss_entry(x) for x in v]
        if len(v) != self.dA:
            raise ValueError("vector length must match dA")
        out = []
        for j in range(self.dB):
            row = []
            for jp in range(self.dB):
                acc = GaussRational(0)
                for i in range(self.dA):
                    for ip in range(self.dA):
                        acc = acc + self.tensor(i, j, ip, jp) * v[i].conjugate() * v[ip]
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def product_expectation(self, v, w):
        """<v (x) w| X |v (x) w> as an exact rational."""
        v = [_as_gauss_entry(x) for x in v]
        m = self.project_b(w)
        acc = GaussRational(0)
        for i in range(self.dA):
            for ip in range(self.dA):
                acc = acc + v[i].conjugate() * m[i][ip] * v[ip]
        if acc.im != 0:
            raise AssertionError("expectation of a Hermitian form must be real")
        return acc.re

    def to_complex_rows(self) -> list[list[complex]]:
        return [[e.to_complex() for e in row] for row in self.entries]

    # -- serialization -------------------------------------------------------
    def to_dict(self) -> dict:
        return {"dA": self.dA, "dB": self.dB,
                "entries": [[format_gauss(e) for e in row] for row in self.entries]}

    @classmethod
    def from_dict(cls, data: dict) -> "BipartiteHermitian":
        try:
            dA, dB = int(data["dA"]), int(data["dB"])
            entries = data["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed matrix object: {exc}") from exc
        return cls(entries, dA, dB)

    @classmethod
    def load(cls, path) -> "BipartiteHermitian":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=1)


# ---------------------------------------------------------------------------
# exact spectra
# ---------------------------------------------------------------------------

def char_poly(matrix) -> UniPoly:
    """Monic characteristic polynomial det(tI - M) via Faddeev-LeVerrier.

    Requires a Hermitian matrix over Q(i); the trace recursion then yields
    real rational coefficients, checked as it goes.
    """
    n = len(matrix)
    rows = [[_as_gauss_entry(x) for x in row] for row in matrix]

    def matmul(a, b):
        return [[sum((a[i][k] * b[k][j] for k in range(n)), GaussRational(0))
                 for j in range(n)] for i in range(n)]

    def add_diag(a, c):
        return [[a[i][j] + c if i == j else a[i][j] for j in range(n)]
                for i in range(n)]

    coeffs = [Q(1)]            # descending: 1, c1, ..., cn
    mk = rows
    for k in range(1, n + 1):
        tr = sum((mk[i][i] for i in range(n)), GaussRational(0))
        if tr.im != 0:
            raise AssertionError("non-real trace in characteristic recursion")
        ck = -tr.re / k
        coeffs.append(ck)
        if k < n:
            mk = matmul(rows, add_diag(mk, ck))
    return UniPoly(tuple(reversed(coeffs)))


@dataclass(frozen=True)
class EigenSignature:
    n_neg: int
    n_zero: int
    n_pos: int


def signature_from_char_poly(p: UniPoly, n: int) -> EigenSignature:
    """Eigenvalue counts with multiplicity from an all-real-rooted monic
    polynomial, via Sturm counts down the gcd tower."""
    n_zero = p.trailing_zero_count()
    q = p.shift_down(n_zero)
    n_neg = n_pos = 0
    g = q
    while not g.is_zero() and g.degree() > 0:
        b = Q(1) + cauchy_bound(g)
        n_neg += count_roots_open(g, -b, Q(0))
        n_pos += count_roots_open(g, Q(0), b)
        g = poly_gcd(g, g.derivative())
    if n_neg + n_zero + n_pos != n:
        raise AssertionError("characteristic polynomial has non-real roots")
    return EigenSignature(n_neg, n_zero, n_pos)


def eigen_signature(X: BipartiteHermitian) -> EigenSignature:
    """(negative, zero, positive) eigenvalue counts, with multiplicity."""
    return signature_from_char_poly(char_poly(X.entries), X.order)


def hermitian_psd(matrix) -> bool:
    """Exact positive-semidefiniteness of a Hermitian matrix over Q(i)."""
    n = len(matrix)
    sig = signature_from_char_poly(char_poly(matrix), n)
    return sig.n_neg == 0


def negative_vector_2x2(m):
    """A vector v over Q(i) with <v|M|v> < 0 for a 2x2 Hermitian M that is
    not PSD, or None when the matrix is PSD.

    Basis vectors settle negative diagonals; otherwise det < 0 with a
    nonnegative diagonal, and v = (1, -s conj(M12)) gives the exact value
    M11 - 2 s |M12|^2 + s^2 |M12|^2 M22 < 0 at rational s.
    """
    m11, m22 = m[0][0].re, m[1][1].re
    m12 = m[0][1]
    if sign_of(m11) < 0:
        return (GaussRational(1), GaussRational(0))
    if sign_of(m22) < 0:
        return (GaussRational(0), GaussRational(1))
    det = m11 * m22 - m12.abs2()
    if sign_of(det) >= 0:
        return None
    if m22 > 0:
        s = Q(1) / m22
    else:
        # m22 = 0 and det < 0 force M12 != 0; push s past M11/(2|M12|^2)
        s = (m11 + 1) / (2 * m12.abs2())
    return (GaussRational(1), -m12.conjugate() * GaussRational(s))
