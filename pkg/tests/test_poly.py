"""Polynomial ring with inverted central variable, parser, derivatives."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from koszulmin.poly import (
    Context,
    Polynomial,
    PotentialParseError,
    de_rham,
    mixed_partial,
    mono_de_rham,
    parse_potential,
)


def poly_strategy(n=3, max_terms=4, max_exp=3):
    mono = st.tuples(
        st.tuples(*[st.integers(0, max_exp) for _ in range(n)]),
        st.integers(-1, 1),
    )
    coeff = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
    return st.dictionaries(mono, coeff, max_size=max_terms).map(
        lambda d: Polynomial(n, {m: c for m, c in d.items() if c})
    )


def test_parse_basic_forms():
    p = parse_potential("x1^3 + x2^3", 2).p
    q = parse_potential("x1*x1*x1 + x2^2*x2", 2).p
    assert p == q
    assert parse_potential("-x1^2 + 2*x1*x2", 2).p.pretty() == "-x1^2 + 2*x1*x2"
    assert parse_potential("3*x1^2", 1).d == 2


def test_parse_error_positions():
    with pytest.raises(PotentialParseError) as e:
        parse_potential("x1 + x5", 2)
    assert "x5" in str(e.value) and e.value.position == 6
    with pytest.raises(PotentialParseError):
        parse_potential("x1^2 + ", 2)
    with pytest.raises(PotentialParseError):
        parse_potential("", 2)
    with pytest.raises(PotentialParseError):
        parse_potential("x1^2 + x2^3", 2)  # inhomogeneous


def test_declared_degree_mismatch():
    with pytest.raises(PotentialParseError) as e:
        parse_potential("x1^2", 2, degree=3)
    assert "declared degree 3" in str(e.value)
    assert parse_potential("x1^2", 2, degree=2).d == 2


@given(poly_strategy())
def test_pretty_round_trips_u_free_parts(p):
    # the parser does not accept u; strip to the u-free part first
    q = Polynomial(3, {m: c for m, c in p.terms.items() if m[1] == 0})
    if not q:
        return
    assert Polynomial(3, dict(q.terms)) == q
    # printable and re-parseable whenever it is an admissible potential
    deg = q.homogeneous_degree()
    if deg is not None and deg >= 2:
        assert parse_potential(q.pretty(), 3).p == q


@given(poly_strategy(), poly_strategy())
def test_product_rule(p, q):
    for i in (1, 2, 3):
        lhs = (p * q).partial(i)
        rhs = p.partial(i) * q + p * q.partial(i)
        assert lhs == rhs


@given(poly_strategy())
def test_mixed_partials_commute(p):
    assert mixed_partial(p, (1, 2)) == mixed_partial(p, (2, 1))
    assert mixed_partial(p, (1, 3, 2)) == mixed_partial(p, (3, 2, 1))


def test_euler_identity_on_context(ctx_xyz, ctx_fermat, ctx_quartic):
    for ctx in (ctx_xyz, ctx_fermat, ctx_quartic):
        n, d = ctx.n, ctx.d
        total = Polynomial.zero(n)
        for i in range(1, n + 1):
            total = total + Polynomial.variable(n, i) * ctx.potential.p.partial(i)
        assert total == Fraction(d) * ctx.potential.p


def test_mono_de_rham_terms():
    # d(x1^2 x2 u) = 2 x1 x2 u dx1 + x1^2 u dx2
    m = ((2, 1, 0), 1)
    got = sorted(mono_de_rham(m))
    assert got == [(1, 2, ((1, 1, 0), 1)), (2, 1, ((2, 0, 0), 1))]


def test_de_rham_of_potential_matches_gradients(ctx_fermat):
    parts = dict()
    for i, g in de_rham(ctx_fermat.potential.p):
        parts[i] = parts.get(i, Polynomial.zero(2)) + g
    for i in (1, 2):
        assert parts.get(i, Polynomial.zero(2)) == ctx_fermat.potential.p.partial(i)


def test_gamma_is_u_free_gradient_over_degree(ctx_cube):
    # gamma stores (1/d) dp with the u factor left to the operators
    (entry,) = ctx_cube.gamma
    assert entry == Fraction(1, 3) * ctx_cube.potential.p.partial(1)
    assert entry.is_u_free()


def test_context_rejects_mismatched_rank():
    with pytest.raises(PotentialParseError):
        Context.from_source("x1^2 + x3^2", 2)
