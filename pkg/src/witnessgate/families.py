"""The two one-parameter operator families used in the experiments."""
from __future__ import annotations

from .bipartite import BipartiteHermitian
from .scalars import GaussRational, Q


def family_E(a) -> BipartiteHermitian:
    """Order-4 family: 2 (x) 2, with a complex corner a/2 (1+i)."""
    a = Q(a)
    g = GaussRational
    h = Q(1, 2)
    rows = [
        [g(Q(3, 5)), g(Q(1, 10)), g(0), g(a * h, a * h)],
        [g(Q(1, 10)), g(Q(3, 5)), g(-h), g(0)],
        [g(0), g(-h), g(Q(3, 5)), g(-a)],
        [g(a * h, -a * h), g(0), g(-a), g(Q(3, 5))],
    ]
    return BipartiteHermitian(rows, 2, 2)


def family_F(a) -> BipartiteHermitian:
    """Order-6 family: 3 (x) 2, all entries real."""
    a = Q(a)
    rows = [
        [2 + a, -a, 0, 1, 1, 0],
        [-a, 1 + a, 0, 0, 0, 1],
        [0, 0, 2, a, a, 1],
        [1, 0, a, 2, 0, 0],
        [1, 0, a, 0, 1, 0],
        [0, 1, 1, 0, 0, 2 + a],
    ]
    return BipartiteHermitian([[GaussRational(x) for x in row] for row in rows], 3, 2)


def build_family(name: str, a) -> BipartiteHermitian:
    if name.upper() == "E":
        return family_E(a)
    if name.upper() == "F":
        return family_F(a)
    raise ValueError(f"unknown family: {name!r}")
