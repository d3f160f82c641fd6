"""Finite basis sweeps used by the verification suites."""

from __future__ import annotations

from itertools import combinations

from .exterior import Mono
from .poly import PolyMonomial


def subsets(n: int) -> list[Mono]:
    """All sorted index tuples in [1, n], the empty one first."""
    out: list[Mono] = []
    for k in range(n + 1):
        out.extend(combinations(range(1, n + 1), k))
    return out


def exponents_bounded(n: int, bound: int) -> list[tuple[int, ...]]:
    """All exponent vectors of length n with total degree <= bound."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, slots: int):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], bound, n)
    return sorted(out)


def f_monomials(n: int, f_bound: int, u_powers: tuple[int, ...] = (0,)) -> list[PolyMonomial]:
    return [(exps, t) for exps in exponents_bounded(n, f_bound) for t in u_powers]


def b_basis_keys(n: int, f_bound: int, u_powers: tuple[int, ...] = (0,)):
    """Every basic tensor (beta, f, theta) within the stated bounds."""
    monos = f_monomials(n, f_bound, u_powers)
    subs = subsets(n)
    for beta in subs:
        for f in monos:
            for theta in subs:
                yield beta, f, theta
