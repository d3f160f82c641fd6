"""Exact sparse polynomials in x_1, ..., x_n with a Laurent variable u.

A monomial is a pair (exponents, u_power): the exponent vector of the x
variables and an integer power of u.  Polynomials are finite Fraction-valued
maps on monomials with no zero coefficients stored.  u is a formal invertible
variable of the base ring: it multiplies through every operation and is never
differentiated.

The module also owns the potential grammar

    expr   := '-'? term (('+'|'-') term)*
    term   := coeff? ('*'? factor)*
    factor := 'x' INT ('^' INT)?
    coeff  := INT ('/' INT)?

(the optional leading '-' extends the published grammar so that every
canonical rendering round-trips), the canonical renderer, and the potential
context carrying the gradient and the rescaled gradient gamma = (1/d) dw.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

PolyMonomial = tuple[tuple[int, ...], int]  # (exponents, u_power)


def mono_one(n: int) -> PolyMonomial:
    return ((0,) * n, 0)


def mono_mul(a: PolyMonomial, b: PolyMonomial) -> PolyMonomial:
    return tuple(x + y for x, y in zip(a[0], b[0], strict=True)), a[1] + b[1]


def mono_xdeg(m: PolyMonomial) -> int:
    return sum(m[0])


def mono_times_var(m: PolyMonomial, i: int) -> PolyMonomial:
    exps = list(m[0])
    exps[i - 1] += 1
    return tuple(exps), m[1]


def mono_u_shift(m: PolyMonomial, k: int) -> PolyMonomial:
    return m[0], m[1] + k


def mono_de_rham(m: PolyMonomial) -> list[tuple[int, int, PolyMonomial]]:
    """d(x^alpha u^t) = sum_i alpha_i x^(alpha - e_i) u^t dx_i.

    Returns (i, alpha_i, lowered monomial) for every i with alpha_i > 0;
    u passes through untouched.
    """
    out = []
    for i, e in enumerate(m[0], start=1):
        if e > 0:
            exps = list(m[0])
            exps[i - 1] -= 1
            out.append((i, e, (tuple(exps), m[1])))
    return out


class Polynomial:
    """Finite Fraction-valued combination of monomials in n variables.

    Example:
        >>> f = Polynomial.variable(2, 1) * Polynomial.variable(2, 2)
        >>> g = f + f
        >>> g.pretty()
        '2*x1*x2'
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[PolyMonomial, Fraction] | None = None):
        self.n = n
        self.terms: dict[PolyMonomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = Fraction(c)

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> "Polynomial":
        return cls(n, {mono_one(n): Fraction(c)})

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        if not 1 <= i <= n:
            raise ValueError(f"variable index out of range [1, {n}]: {i}")
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {(tuple(exps), 0): Fraction(1)})

    @classmethod
    def monomial(cls, n: int, m: PolyMonomial, c=1) -> "Polynomial":
        return cls(n, {m: Fraction(c)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.n, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out: dict[PolyMonomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    s = out.get(m, Fraction(0)) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            return Polynomial(self.n, out)
        return Polynomial(self.n, {m: c * Fraction(other) for m, c in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def partial(self, i: int) -> "Polynomial":
        """Formal d/dx_i; u is horizontal and passes through."""
        out: dict[PolyMonomial, Fraction] = {}
        for m, c in self.terms.items():
            e = m[0][i - 1]
            if e > 0:
                exps = list(m[0])
                exps[i - 1] -= 1
                key = (tuple(exps), m[1])
                s = out.get(key, Fraction(0)) + c * e
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Polynomial(self.n, out)

    def u_shift(self, k: int) -> "Polynomial":
        return Polynomial(self.n, {mono_u_shift(m, k): c for m, c in self.terms.items()})

    def homogeneous_degree(self) -> int | None:
        """Total x-degree if homogeneous (and nonzero), else None."""
        degs = {mono_xdeg(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_u_free(self) -> bool:
        return all(t == 0 for _, t in self.terms)

    def constant_value(self) -> Fraction:
        """The coefficient of x^0 u^0, for polynomials known to be constant."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {mono_one(self.n)}:
            raise ValueError("not a constant polynomial")
        return self.terms[mono_one(self.n)]

    def _sorted_terms(self):
        # graded-lex, highest first
        return sorted(
            self.terms.items(),
            key=lambda mc: (-mono_xdeg(mc[0]), tuple(-e for e in mc[0][0]), -mc[0][1]),
        )

    def pretty(self) -> str:
        """Canonical rendering conforming to the potential grammar."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for idx, (m, c) in enumerate(self._sorted_terms()):
            factors = []
            if m[1] != 0:
                factors.append("u" if m[1] == 1 else f"u^{m[1]}")
            for i, e in enumerate(m[0], start=1):
                if e == 1:
                    factors.append(f"x{i}")
                elif e >= 2:
                    factors.append(f"x{i}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if idx == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({self.pretty()!r})"


def de_rham(f: Polynomial) -> list[tuple[int, Polynomial]]:
    """The deRham differential as the list of nonzero partials (i, df/dx_i)."""
    out = []
    for i in range(1, f.n + 1):
        g = f.partial(i)
        if g:
            out.append((i, g))
    return out


def mixed_partial(f: Polynomial, indices: tuple[int, ...] | list[int]) -> Polynomial:
    """Iterated formal partial derivative along the given index list."""
    g = f
    for i in indices:
        g = g.partial(i)
    return g


class PotentialParseError(ValueError):
    """Syntax or semantic error in a potential expression, with position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    def __init__(self, source: str, n: int):
        self.src = source
        self.n = n
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str | None:
        self._skip_ws()
        if self.pos >= len(self.src):
            return None
        return self.src[self.pos]

    def _take_int(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PotentialParseError("expected an integer", start)
        return int(self.src[start : self.pos])

    def _factor(self) -> PolyMonomial:
        # caller guarantees the next char is 'x'
        self.pos += 1
        var_pos = self.pos
        i = self._take_int()
        if not 1 <= i <= self.n:
            raise PotentialParseError(
                f"variable index out of range [1, {self.n}]: x{i}", var_pos
            )
        e = 1
        if self._peek() == "^":
            self.pos += 1
            e = self._take_int()
        exps = [0] * self.n
        exps[i - 1] = e
        return (tuple(exps), 0)

    def _term(self) -> Polynomial:
        coeff = Fraction(1)
        have_any = False
        ch = self._peek()
        if ch is not None and ch.isdigit():
            num = self._take_int()
            coeff = Fraction(num)
            if self._peek() == "/":
                self.pos += 1
                den_pos = self.pos
                den = self._take_int()
                if den == 0:
                    raise PotentialParseError("zero denominator", den_pos)
                coeff = Fraction(num, den)
            have_any = True
        mono = mono_one(self.n)
        while True:
            ch = self._peek()
            if ch == "*":
                save = self.pos
                self.pos += 1
                if self._peek() != "x":
                    raise PotentialParseError("expected a factor after '*'", save + 1)
                ch = "x"
            if ch != "x":
                break
            mono = mono_mul(mono, self._factor())
            have_any = True
        if not have_any:
            raise PotentialParseError("expected a term", self.pos)
        return Polynomial(self.n, {mono: coeff})

    def parse(self) -> Polynomial:
        total = Polynomial.zero(self.n)
        sign = 1
        if self._peek() == "-":
            self.pos += 1
            sign = -1
        total = total + sign * self._term()
        while True:
            ch = self._peek()
            if ch is None:
                break
            if ch == "+":
                self.pos += 1
                total = total + self._term()
            elif ch == "-":
                self.pos += 1
                total = total - self._term()
            else:
                raise PotentialParseError(f"unexpected character {ch!r}", self.pos)
        return total


@dataclass(frozen=True)
class Potential:
    """A nonzero homogeneous u-free polynomial of x-degree d >= 2."""

    n: int
    d: int
    p: Polynomial

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if not self.p.is_u_free():
            raise ValueError("potential must be u-free")
        deg = self.p.homogeneous_degree()
        if deg is None:
            raise ValueError("potential must be nonzero and homogeneous")
        if deg != self.d:
            raise ValueError(f"potential is homogeneous of degree {deg}, not {self.d}")
        if self.d < 2:
            raise ValueError("potential degree must be at least 2")


def parse_potential(source: str, n: int, degree: int | None = None) -> Potential:
    """Parse a potential expression and validate homogeneity.

    Raises PotentialParseError on syntax errors (with position) and on the
    semantic failures: zero polynomial, inhomogeneity, degree < 2, variable
    index out of range, and (when a degree is declared) a degree mismatch.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    p = _Parser(source, n).parse()
    if not p:
        raise PotentialParseError("zero polynomial", 0)
    deg = p.homogeneous_degree()
    if deg is None:
        degs = sorted({mono_xdeg(m) for m in p.terms})
        raise PotentialParseError(
            f"inhomogeneous polynomial (degrees {degs})", len(source)
        )
    if deg < 2:
        raise PotentialParseError(f"degree must be at least 2, got {deg}", len(source))
    if degree is not None and deg != degree:
        raise PotentialParseError(
            f"declared degree {degree} but the polynomial is homogeneous "
            f"of degree {deg}",
            len(source),
        )
    return Potential(n, deg, p)


class Context:
    """A potential together with its gradient data.

    gradients[i-1] is dp/dx_i and gamma[i-1] = gradients[i-1] / d, the u-free
    coefficient of dx_i in gamma = (1/d) dw; operators that need the u of
    w = u p insert it explicitly.  The Euler identity
    sum_i x_i dp/dx_i = d p is asserted on construction.
    """

    __slots__ = ("potential", "gradients", "gamma")

    def __init__(self, potential: Potential):
        self.potential = potential
        n, d, p = potential.n, potential.d, potential.p
        self.gradients = [p.partial(i) for i in range(1, n + 1)]
        self.gamma = [Fraction(1, d) * g for g in self.gradients]
        euler = Polynomial.zero(n)
        for i in range(1, n + 1):
            euler = euler + Polynomial.variable(n, i) * self.gradients[i - 1]
        if euler != d * p:
            raise AssertionError("Euler identity failed for the parsed potential")

    @property
    def n(self) -> int:
        return self.potential.n

    @property
    def d(self) -> int:
        return self.potential.d

    @classmethod
    def from_source(cls, source: str, n: int, degree: int | None = None) -> "Context":
        return cls(parse_potential(source, n, degree))
