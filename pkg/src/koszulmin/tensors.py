"""Vector containers for the factorization, its endomorphisms, and the model.

Three kinds of exact formal sums, all keyed on canonical monomial data with
Fraction coefficients and no zero terms stored:

  FVector  terms (beta, f)         sections of the Koszul factorization
  BVector  terms (beta, f, theta)  sections of the endomorphism algebra
  AVector  terms (u_power, theta)  sections of the transferred model

beta and theta are sorted index tuples (exterior monomials in dx and in v),
f is a single (exponents, u_power) monomial.  A basic tensor (beta, f, theta)
acts on the factorization by (beta, f, theta)(beta', f') =
<theta, beta'> (beta, f f'), with the full pairing of exterior.pair.

The four gradings: u has internal degree d and cohomological degree 2;
dx_i has internal and cohomological degree -1; v_i the opposite; x_i has
internal degree -1 and cohomological degree 0.  The f-degree is the total
x-exponent and the beta-degree is the wedge degree of beta.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .exterior import Mono
from .poly import PolyMonomial, mono_xdeg

BKey = tuple[Mono, PolyMonomial, Mono]  # (beta, f, theta)
FKey = tuple[Mono, PolyMonomial]  # (beta, f)
AKey = tuple[int, Mono]  # (u_power, theta)


def _merged(into: dict, items: Iterable[tuple]) -> dict:
    for key, c in items:
        s = into.get(key, Fraction(0)) + c
        if s:
            into[key] = s
        else:
            into.pop(key, None)
    return into


class _FormalSum:
    """Shared behaviour of the three exact formal-sum containers."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = Fraction(c)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return type(self)(_merged(dict(self.terms), other.terms.items()))

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        c = Fraction(scalar)
        if not c:
            return type(self)()
        return type(self)({k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def sorted_terms(self) -> list[tuple]:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __repr__(self):
        if not self.terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{c}*{k}" for k, c in self.sorted_terms())
        return f"{type(self).__name__}({body})"


class FVector(_FormalSum):
    @classmethod
    def term(cls, beta: Mono, f: PolyMonomial, c=1) -> "FVector":
        return cls({(beta, f): Fraction(c)})


class BVector(_FormalSum):
    @classmethod
    def term(cls, beta: Mono, f: PolyMonomial, theta: Mono, c=1) -> "BVector":
        return cls({(beta, f, theta): Fraction(c)})


class AVector(_FormalSum):
    @classmethod
    def term(cls, u_power: int, theta: Mono, c=1) -> "AVector":
        return cls({(u_power, theta): Fraction(c)})

    def sorted_terms(self) -> list[tuple]:
        # canonical order for serialized model elements: (u_power, indices)
        return sorted(self.terms.items(), key=lambda kv: kv[0])


def degrees_b(key: BKey, d: int) -> tuple[int, int, int, int]:
    """(internal, cohomological, f_degree, beta_degree) of a basic tensor."""
    beta, (exps, t), theta = key
    fdeg = sum(exps)
    internal = -len(beta) + len(theta) + d * t - fdeg
    coh = -len(beta) + len(theta) + 2 * t
    return internal, coh, fdeg, len(beta)


def coh_b(key: BKey) -> int:
    beta, (_, t), theta = key
    return -len(beta) + len(theta) + 2 * t


def f_degree(key: BKey) -> int:
    return mono_xdeg(key[1])


def beta_degree(key: BKey) -> int:
    return len(key[0])


def degrees_a(key: AKey, d: int) -> tuple[int, int]:
    """(internal, cohomological) of a model basis element u^t theta."""
    t, theta = key
    return len(theta) + d * t, len(theta) + 2 * t


def coh_a(key: AKey) -> int:
    t, theta = key
    return len(theta) + 2 * t


def is_coh_homogeneous(v: BVector) -> int | None:
    """The common cohomological degree of a BVector's terms, if any."""
    degs = {coh_b(k) for k in v.terms}
    if len(degs) == 1:
        return degs.pop()
    return None
