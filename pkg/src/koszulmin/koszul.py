"""The Koszul factorization of a potential and its differential.

The factorization carrier is Lambda E tensor Sym E tensor Sym(U, U^-1) with
the differential delta_F = d_Koszul + gamma wedge (.), where d_Koszul is the
contraction i_eta against the Euler field eta = sum_i x_i d/dx_i and gamma
is (1/d) dw with the u of w = u p supplied by the wedge operator.  The two
pieces square to zero separately and their anticommutator is multiplication
by u p, by the Euler identity; delta_F therefore squares to (u p) id.
"""

from __future__ import annotations

from fractions import Fraction

from .bases import exponents_bounded, subsets
from .exterior import Mono, wedge_e
from .poly import Context, PolyMonomial, mono_mul, mono_times_var, mono_u_shift
from .tensors import FVector, _merged


def euler_contract(beta: Mono, f: PolyMonomial) -> list[tuple[Mono, PolyMonomial, int]]:
    """i_eta(dx_{j_1} ^ ... ^ dx_{j_k} . f) expanded term by term.

    Returns (beta with slot a removed, x_{j_a} f, (-1)^(a-1)) for each slot.
    """
    out = []
    for a, j in enumerate(beta):
        sign = -1 if a % 2 else 1
        out.append((beta[:a] + beta[a + 1 :], mono_times_var(f, j), sign))
    return out


def d_koszul(v: FVector) -> FVector:
    out: dict = {}
    for (beta, f), c in v.terms.items():
        _merged(out, (((b2, f2), c * s) for b2, f2, s in euler_contract(beta, f)))
    return FVector(out)


def gamma_wedge(ctx: Context, v: FVector) -> FVector:
    """gamma wedge (.) with gamma = (u/d) sum_i (dp/dx_i) dx_i."""
    out: dict = {}
    for (beta, f), c in v.terms.items():
        for i in range(1, ctx.n + 1):
            step = wedge_e((i,), beta)
            if step is None:
                continue
            sign, beta2 = step
            for mono_g, cg in ctx.gamma[i - 1].terms.items():
                f2 = mono_u_shift(mono_mul(f, mono_g), 1)
                _merged(out, (((beta2, f2), c * cg * sign),))
    return FVector(out)


def delta_F(ctx: Context, v: FVector) -> FVector:
    return d_koszul(v) + gamma_wedge(ctx, v)


def u_p_times(ctx: Context, v: FVector) -> FVector:
    """Multiplication by u p, the square of delta_F."""
    out: dict = {}
    for (beta, f), c in v.terms.items():
        for mono_p, cp in ctx.potential.p.terms.items():
            f2 = mono_u_shift(mono_mul(f, mono_p), 1)
            _merged(out, (((beta, f2), c * cp),))
    return FVector(out)


def check_factorization(ctx: Context, sym_bound: int | None = None) -> dict:
    """Verify delta_F^2 = (u p) id on the truncated basis.

    Exact check on every (beta, x^alpha) with |alpha| <= sym_bound (default
    3 + d); returns {status, checked_basis_count, counterexample?}.
    """
    bound = sym_bound if sym_bound is not None else 3 + ctx.d
    count = 0
    for beta in subsets(ctx.n):
        for exps in exponents_bounded(ctx.n, bound):
            e = FVector.term(beta, (exps, 0))
            defect = delta_F(ctx, delta_F(ctx, e)) - u_p_times(ctx, e)
            count += 1
            if defect:
                return {
                    "status": "fail",
                    "checked_basis_count": count,
                    "counterexample": {
                        "beta": list(beta),
                        "f_exponents": list(exps),
                        "u_power": 0,
                        "defect": repr(defect),
                    },
                }
    return {"status": "pass", "checked_basis_count": count}
