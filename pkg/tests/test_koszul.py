"""The twisted differential squares to multiplication by the potential."""

import copy
from fractions import Fraction

from koszulmin.bases import f_monomials, subsets
from koszulmin.koszul import (
    check_factorization,
    d_koszul,
    delta_F,
    gamma_wedge,
    u_p_times,
)
from koszulmin.poly import Context
from koszulmin.tensors import FVector
from koszulmin.verify import TEST_MATRIX


def f_basis(n, f_bound=2, u_powers=(-1, 0, 1)):
    for beta in subsets(n):
        for f in f_monomials(n, f_bound, u_powers):
            yield FVector.term(beta, f)


def test_koszul_differential_squares_to_zero():
    for n in (1, 2, 3):
        for v in f_basis(n):
            assert not d_koszul(d_koszul(v))


def test_gamma_wedge_squares_to_zero(ctx_xyz):
    for v in f_basis(3, f_bound=1):
        assert not gamma_wedge(ctx_xyz, gamma_wedge(ctx_xyz, v))


def test_anticommutator_is_potential(ctx_fermat):
    # delta_F^2 = d gamma + gamma d since both squares vanish
    for v in f_basis(2):
        dg = d_koszul(gamma_wedge(ctx_fermat, v))
        gd = gamma_wedge(ctx_fermat, d_koszul(v))
        assert dg + gd == u_p_times(ctx_fermat, v)


def test_factorization_on_test_matrix():
    for n, d, src in TEST_MATRIX:
        ctx = Context.from_source(src, n, d)
        rep = check_factorization(ctx)
        assert rep["status"] == "pass", (src, rep)
        assert rep["checked_basis_count"] > 0


def test_corrupted_gradient_breaks_factorization(ctx_cube):
    broken = copy.copy(ctx_cube)
    broken.gamma = [Fraction(2) * g for g in ctx_cube.gamma]
    rep = check_factorization(broken)
    assert rep["status"] == "fail"
    assert rep["counterexample"]


def test_delta_squares_on_explicit_vector(ctx_cube):
    # delta_F^2 (dx1 . x1) = u x1^3 (dx1 . x1)
    v = FVector.term((1,), ((1,), 0))
    out = delta_F(ctx_cube, delta_F(ctx_cube, v))
    assert out == u_p_times(ctx_cube, v)
