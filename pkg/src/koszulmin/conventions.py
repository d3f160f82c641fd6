"""Frozen sign conventions.

Every sign that the formulas leave open is fixed here, once, as a module
constant.  The values below are not adjustable knobs: they are the unique
assignment (within the finite toggle space) under which the anchor values
mu^2 = wedge (d > 2), the Clifford relation (d = 2), mu^d = (u/d!) times the
mixed partial, the side conditions of the contraction, and the A-infinity
relations all hold simultaneously.  tests/test_calibration.py re-derives the
pinned choices; changing any constant here must make that test fail loudly.

PAIR_REVERSED
    The pairing of a sorted monomial v_{j_1} ^ ... ^ v_{j_k} in the dual
    exterior algebra against the sorted monomial dx_{j_1} ^ ... ^ dx_{j_k}
    is (-1)^(k(k-1)/2) rather than +1.  Equivalently, the plain determinant
    pairing is taken against the reversed word dx_{j_k} ^ ... ^ dx_{j_1}.
    This is the single global sign toggle on the pairing, and it is forced:
    with the +1 convention the inclusion of the transferred algebra fails to
    be unital (i(1) would act on the factorization by the diagonal sign
    (-1)^(k(k-1)/2) instead of the identity), so p i = 1 would survive but
    i(a a') = i(a) i(a') would fail on top wedge degrees.

HOMOTOPY_SIGN
    The contracting homotopy h (the literal summed formula, positive leading
    coefficient 1/s) satisfies  d h + h d = HOMOTOPY_SIGN * (i p - 1)  with
    d the commutator differential induced by the Koszul contraction.  The
    value is -1: the homotopy identity holds in the direction
    1 - i p = d h + h d.  The opposite direction would require the global
    replacement h -> -h, which flips the sign of the d = 2 Clifford product
    and of mu^d for odd d, contradicting the anchor values.  See the
    decisions ledger for the full argument.

TREE_CROSSING_SIGNS
    Whether a tree evaluation inserts a Koszul sign when the operator
    composite feeding the right branch of a product vertex is applied past
    the inputs feeding the left branch.  The composite's parity is
    (its leaf count - 1); the input degrees entering the sign are the
    shifted ones (cohomological degree + 1), the parity the inputs carry
    on the bar side of the construction.  Calibrated: with the unshifted
    degrees the pinned values of mu^3 come out negated, and with no sign
    at all the arity-4 A-infinity relation fails on x1 x2 x3; the shifted
    rule is the unique choice satisfying the pinned products and the
    relations simultaneously, and the relation sign convention it pairs
    with is (-1)^(r + s t) times the Koszul sign of moving mu_s (parity s)
    past the first r inputs in their unshifted degrees.
"""

PAIR_REVERSED = True

HOMOTOPY_SIGN = -1

TREE_CROSSING_SIGNS = True
