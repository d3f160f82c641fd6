"""The endomorphism algebra of the factorization and its differentials.

A basic tensor (beta, f, theta) is the endomorphism sending (beta', f') to
<theta, beta'> (beta, f f').  Under this identification the product

    (beta, f, theta)(beta', f', theta') = <theta, beta'> (beta, f f', theta')

is literal operator composition, so associativity is free and all signs live
in the pairing convention.  The differential partial_d is the graded
commutator with d_Koszul, partial_bar the one with delta_F; their difference,
the perturbation, is the graded commutator with gamma wedge (.) and shifts the
f-degree by exactly d - 1.

The commutators are implemented in closed form on basic tensors (the fast
path used by tree evaluation) and certified extensionally: tensorize
reconstructs an operator's tensor expansion from its action on the finite
spanning set (beta', 1), and the test suite checks the closed forms against
commutators computed directly on the factorization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .bases import subsets
from .exterior import contract_theta, pair, pair_diag, wedge_e, wedge_estar
from .poly import Context, mono_mul, mono_one, mono_times_var, mono_u_shift
from .tensors import BVector, FVector, coh_b, _merged


def _tau_up(q: int) -> int:
    # pair_diag(q) pair_diag(q+1): the sign relating a sorted insertion on
    # the theta side to the pairing it must reproduce
    return pair_diag(q) * pair_diag(q + 1)


def m_product(b: BVector, b2: BVector) -> BVector:
    """Bilinear extension of the composition product."""
    out: dict = {}
    for (beta, f, theta), c in b.terms.items():
        for (beta2, f2, theta2), c2 in b2.terms.items():
            s = pair(theta, beta2)
            if s:
                _merged(out, (((beta, mono_mul(f, f2), theta2), c * c2 * s),))
    return BVector(out)


def act_on_F(b: BVector, v: FVector) -> FVector:
    """Apply an endomorphism to a section of the factorization."""
    out: dict = {}
    for (beta, f, theta), c in b.terms.items():
        for (beta2, f2), c2 in v.terms.items():
            s = pair(theta, beta2)
            if s:
                _merged(out, (((beta, mono_mul(f, f2)), c * c2 * s),))
    return FVector(out)


def unit_b(n: int) -> BVector:
    """The unit of the endomorphism algebra, sum_J pair_diag(|J|) (dx_J, 1, v_J)."""
    one = mono_one(n)
    return BVector({(J, one, J): Fraction(pair_diag(len(J))) for J in subsets(n)})


def partial_d(b: BVector, n: int) -> BVector:
    """Graded commutator with d_Koszul, in closed form per basic tensor."""
    out: dict = {}
    for (beta, f, theta), c in b.terms.items():
        for a, j in enumerate(beta):
            sign = -1 if a % 2 else 1
            key = (beta[:a] + beta[a + 1 :], mono_times_var(f, j), theta)
            _merged(out, ((key, c * sign),))
        csign = -(-1) ** (coh_b((beta, f, theta)) % 2) * _tau_up(len(theta))
        for k in range(1, n + 1):
            step = wedge_estar((k,), theta)
            if step is None:
                continue
            s, theta2 = step
            _merged(out, (((beta, mono_times_var(f, k), theta2), c * csign * s),))
    return BVector(out)


def perturbation(ctx: Context, b: BVector) -> BVector:
    """partial_bar - partial_d: the graded commutator with gamma wedge (.)."""
    out: dict = {}
    for (beta, f, theta), c in b.terms.items():
        for i in range(1, ctx.n + 1):
            step = wedge_e((i,), beta)
            if step is None:
                continue
            sign, beta2 = step
            for mono_g, cg in ctx.gamma[i - 1].terms.items():
                key = (beta2, mono_u_shift(mono_mul(f, mono_g), 1), theta)
                _merged(out, ((key, c * cg * sign),))
        csign = -(-1) ** (coh_b((beta, f, theta)) % 2) * _tau_up(len(theta) - 1)
        for i in list(theta):
            step = contract_theta(i, theta)
            if step is None:
                continue
            sign, theta2 = step
            for mono_g, cg in ctx.gamma[i - 1].terms.items():
                key = (beta, mono_u_shift(mono_mul(f, mono_g), 1), theta2)
                _merged(out, ((key, c * cg * csign * sign),))
    return BVector(out)


def partial_bar(ctx: Context, b: BVector) -> BVector:
    """Graded commutator with delta_F = d_Koszul + gamma wedge (.)."""
    return partial_d(b, ctx.n) + perturbation(ctx, b)


def tensorize(op: Callable[[FVector], FVector], n: int) -> BVector:
    """Reconstruct the tensor expansion of an f'-linear operator on F.

    Every operator built from basic tensors and the differentials is
    Sym-linear in the argument's polynomial slot, so its action on the 2^n
    sections (beta', 1) determines it; the theta-leg of the expansion is
    read off against the pairing convention.
    """
    out: dict = {}
    for beta2 in subsets(n):
        image = op(FVector.term(beta2, mono_one(n)))
        s = pair_diag(len(beta2))
        _merged(
            out,
            (((beta, f, beta2), c * s) for (beta, f), c in image.terms.items()),
        )
    return BVector(out)


def commutator_on_F(
    dF: Callable[[FVector], FVector], b: BVector, n: int
) -> BVector:
    """The graded commutator [dF, b] computed extensionally and tensorized.

    b is split into coh-homogeneous basic tensors first; dF must be a
    degree-one operator on the factorization.
    """
    total = BVector()
    for key, c in b.terms.items():
        single = BVector({key: c})
        parity = coh_b(key) % 2

        def op(v: FVector, single=single, parity=parity) -> FVector:
            first = dF(act_on_F(single, v))
            second = act_on_F(single, dF(v))
            return first - second if parity == 0 else first + second

        total = total + tensorize(op, n)
    return total
