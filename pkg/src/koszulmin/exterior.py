"""Exterior monomial combinatorics on a chart.

A monomial in Lambda E (basis dx_1, ..., dx_n) or in Lambda E* (basis
v_1 = d/dx_1, ..., v_n = d/dx_n) is stored as a strictly increasing tuple
of indices in [1, n]; the empty tuple is the unit.  All generators are odd,
so any operation that reorders letters records the Koszul sign of the
permutation.  Functions return a (sign, monomial) pair, or None when the
result vanishes because an index repeats.

The pairing between Lambda E* and Lambda E is the full one: it vanishes
unless the two wedge degrees agree, and on sorted monomials with the same
index set it evaluates to the sign fixed in conventions.PAIR_REVERSED.
"""

from __future__ import annotations

from .conventions import PAIR_REVERSED

Mono = tuple[int, ...]


def check_indices(mono: Mono, n: int) -> None:
    if any(i < 1 or i > n for i in mono):
        raise ValueError(f"index out of range [1, {n}]: {mono}")


def merge_mono(a: Mono, b: Mono) -> tuple[int, Mono] | None:
    """Wedge two sorted monomials: Koszul-signed sorted merge.

    Returns None if the index sets intersect.  The sign is (-1)^t with t
    the number of transpositions needed to interleave b into a, i.e. the
    number of pairs (i, j) in a x b with i > j.
    """
    if not a:
        return 1, b
    if not b:
        return 1, a
    if set(a) & set(b):
        return None
    out: list[int] = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining letters of a
            if (len(a) - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


def wedge_e(a: Mono, b: Mono) -> tuple[int, Mono] | None:
    """dx_a ^ dx_b as a signed sorted monomial, None if it vanishes."""
    return merge_mono(a, b)


def wedge_estar(a: Mono, b: Mono) -> tuple[int, Mono] | None:
    """v_a ^ v_b on the dual side; the same rule as wedge_e."""
    return merge_mono(a, b)


def normalize_word(word: tuple[int, ...]) -> tuple[int, Mono] | None:
    """Sort an arbitrary word of odd generators, tracking the Koszul sign.

    Returns None when a letter repeats.
    """
    sign = 1
    out: Mono = ()
    for letter in word:
        step = merge_mono(out, (letter,))
        if step is None:
            return None
        s, out = step
        sign *= s
    return sign, out


def reversal_sign(k: int) -> int:
    """Sign of reversing a k-letter word of odd generators: (-1)^(k(k-1)/2)."""
    return -1 if (k * (k - 1) // 2) % 2 else 1


def pair_diag(k: int) -> int:
    """The pairing of matching sorted degree-k monomials."""
    return reversal_sign(k) if PAIR_REVERSED else 1


def pair(theta: Mono, beta: Mono) -> int:
    """Full pairing <theta, beta> of sorted monomials.

    Zero unless the wedge degrees agree and the index sets coincide.  On a
    matching pair the value is reversal_sign(k) under the reversed
    convention, +1 under the plain sorted-determinant one.
    """
    if theta != beta:
        return 0
    return pair_diag(len(theta))


def contract_theta(k: int, theta: Mono) -> tuple[int, Mono] | None:
    """Contraction i_{dx_k} theta = sum_a (-1)^(a-1) delta_{k, j_a} (theta \\ j_a).

    Returns None when k does not occur in theta.
    """
    for a, j in enumerate(theta):
        if j == k:
            sign = -1 if a % 2 else 1
            return sign, theta[:a] + theta[a + 1 :]
    return None


def rev_wedge_estar(js: Mono, theta: Mono) -> tuple[int, Mono] | None:
    """Normalize v_{j_k} ^ ... ^ v_{j_1} ^ theta for a sorted tuple js.

    This is the dual-side word shape produced by the inclusion and homotopy
    formulas; the reversal contributes (-1)^(k(k-1)/2) on top of the merge.
    """
    step = merge_mono(js, theta)
    if step is None:
        return None
    sign, mono = step
    return sign * reversal_sign(len(js)), mono
