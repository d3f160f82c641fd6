"""Ribbon trees and the transferred higher products.

A tree is a nested tuple: ("leaf",) consumes one model input through the
inclusion, ("bi", t) applies the perturbation to the value of t, and
("tri", l, r) multiplies the values of its subtrees.  The value flowing
out of any non-leaf subtree passes through the homotopy before entering
its parent; the value at the top passes through the projection instead.
A stack of c perturbation vertices over a node is c nested "bi" wrappers,
so enumerating trees with k leaves and m perturbation vertices is a
Catalan count of binary shapes times a multichoose of m over the 2k - 1
node positions.

Exact degree bookkeeping prunes the sum over m: every perturbation raises
the polynomial degree by d - 1 and every homotopy lowers it by exactly one,
so a tree with k leaves and m perturbation vertices survives the final
projection only when m (d - 2) = k - 2.  For d = 2 this frees m on two
leaves and kills every other arity, whence the cap m_cap on the stacked
perturbation count; the verification suite checks the cap is saturated
(raising it adds nothing).

At a product vertex the composite feeding the right slot is an operator of
cohomological parity (number of its leaves - 1); when that parity is odd it
crosses the inputs feeding the left slot, contributing a Koszul sign.  The
degrees in that sign are the shifted ones (cohomological degree + 1), the
parity the inputs carry on the bar side of the construction; the unshifted
rule fails the pinned product values and the no-sign rule fails the
A-infinity relations, so the shifted rule is the unique workable choice
(conventions.TREE_CROSSING_SIGNS, re-derived by the calibration tests).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .bases import subsets
from .conventions import TREE_CROSSING_SIGNS
from .endo import m_product, perturbation
from .poly import Context
from .tensors import AKey, AVector, coh_a
from .transfer import homotopy_h, incl_i, proj_p

Tree = tuple

DEFAULT_M_CAP = 4

LEAF: Tree = ("leaf",)


def leaf_count(t: Tree) -> int:
    if t[0] == "leaf":
        return 1
    if t[0] == "bi":
        return leaf_count(t[1])
    return leaf_count(t[1]) + leaf_count(t[2])


def binary_shapes(k: int) -> list[Tree]:
    """All planar binary trees with k leaves, in a fixed recursive order."""
    if k == 1:
        return [LEAF]
    out: list[Tree] = []
    for k1 in range(1, k):
        for left in binary_shapes(k1):
            for right in binary_shapes(k - k1):
                out.append(("tri", left, right))
    return out


def _node_count(t: Tree) -> int:
    if t[0] == "leaf":
        return 1
    return 1 + _node_count(t[1]) + _node_count(t[2])


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _apply_bis(t: Tree, counts: tuple[int, ...], pos: int) -> tuple[Tree, int]:
    c = counts[pos]
    pos += 1
    if t[0] == "leaf":
        node = t
    else:
        left, pos = _apply_bis(t[1], counts, pos)
        right, pos = _apply_bis(t[2], counts, pos)
        node = ("tri", left, right)
    for _ in range(c):
        node = ("bi", node)
    return node, pos


def trees_with_m(k: int, m: int) -> list[Tree]:
    """All trees with k leaves and exactly m perturbation vertices.

    Every node position (equivalently, the edge above it, the root edge
    included) may carry any number of stacked perturbation vertices.
    """
    out: list[Tree] = []
    for shape in binary_shapes(k):
        q = _node_count(shape)
        for counts in _compositions(m, q):
            tree, _ = _apply_bis(shape, counts, 0)
            out.append(tree)
    return out


def enumerate_trees(k: int, m_max: int) -> list[Tree]:
    """All trees with k leaves and at most m_max perturbation vertices,
    in canonical order (by perturbation count, then shape, then placement)."""
    out: list[Tree] = []
    for m in range(m_max + 1):
        out.extend(trees_with_m(k, m))
    return out


def contributing_m(k: int, d: int, m_cap: int = DEFAULT_M_CAP) -> list[int]:
    """Perturbation counts that survive the degree bookkeeping at arity k."""
    if d == 2:
        return list(range(m_cap + 1)) if k == 2 else []
    if k < 2:
        return []
    q, r = divmod(k - 2, d - 2)
    return [q] if r == 0 else []


def _eval_edge(ctx: Context, t: Tree, inputs: tuple[AKey, ...], cache: dict):
    key = (t, inputs)
    hit = cache.get(key)
    if hit is not None:
        return hit
    kind = t[0]
    if kind == "leaf":
        out = incl_i(AVector({inputs[0]: Fraction(1)}), ctx.n)
    elif kind == "bi":
        out = homotopy_h(perturbation(ctx, _eval_edge(ctx, t[1], inputs, cache)), ctx.n)
    else:
        kl = leaf_count(t[1])
        left = _eval_edge(ctx, t[1], inputs[:kl], cache)
        right = _eval_edge(ctx, t[2], inputs[kl:], cache)
        out = m_product(left, right)
        if TREE_CROSSING_SIGNS and (leaf_count(t[2]) - 1) % 2:
            if sum(coh_a(a) + 1 for a in inputs[:kl]) % 2:
                out = -out
        out = homotopy_h(out, ctx.n)
    cache[key] = out
    return out


def _strip_top_h(ctx: Context, t: Tree, inputs: tuple[AKey, ...], cache: dict):
    # the segment above the top node carries the projection, not the homotopy
    kind = t[0]
    if kind == "leaf":
        return _eval_edge(ctx, t, inputs, cache)
    if kind == "bi":
        return perturbation(ctx, _eval_edge(ctx, t[1], inputs, cache))
    kl = leaf_count(t[1])
    left = _eval_edge(ctx, t[1], inputs[:kl], cache)
    right = _eval_edge(ctx, t[2], inputs[kl:], cache)
    out = m_product(left, right)
    if TREE_CROSSING_SIGNS and (leaf_count(t[2]) - 1) % 2:
        if sum(coh_a(a) + 1 for a in inputs[:kl]) % 2:
            out = -out
    return out


def eval_tree(
    ctx: Context, t: Tree, inputs, cache: dict | None = None
) -> AVector:
    """The model-valued contribution of one tree on basis inputs."""
    inputs = tuple(inputs)
    if len(inputs) != leaf_count(t):
        raise ValueError("input arity does not match the tree's leaf count")
    if cache is None:
        cache = {}
    return proj_p(_strip_top_h(ctx, t, inputs, cache))


def mu_k(
    ctx: Context,
    inputs,
    m_values=None,
    m_cap: int = DEFAULT_M_CAP,
    cache: dict | None = None,
) -> AVector:
    """The transferred product of arity len(inputs) on model basis inputs.

    inputs is a sequence of (u_power, theta) basis keys; the result extends
    u-linearly (a property the verification suite checks rather than
    assumes).  m_values overrides the degree pruning, for checks that
    evaluate non-contributing perturbation counts honestly.
    """
    inputs = tuple(inputs)
    k = len(inputs)
    if m_values is None:
        m_values = contributing_m(k, ctx.d, m_cap)
    if cache is None:
        cache = {}
    total = AVector()
    for m in m_values:
        if k == 1 and m == 0:
            # the bare leaf is the identity p i, not a product term
            continue
        for t in trees_with_m(k, m):
            total = total + eval_tree(ctx, t, inputs, cache)
    return total


def mu_on_generators(ctx: Context, indices, **kw) -> AVector:
    """mu_k on odd generators: indices (i_1, ..., i_k) feed (v_{i_1}, ..., v_{i_k})."""
    return mu_k(ctx, tuple((0, (i,)) for i in indices), **kw)


def mu_table(
    ctx: Context,
    max_k: int,
    theta_cap: int = 1,
    m_cap: int = DEFAULT_M_CAP,
) -> dict:
    """All products of arity <= max_k on inputs of wedge degree <= theta_cap.

    Returns the plain-data table {n, d, potential, entries}; each entry
    records one tuple of inputs with a nonzero product.  Entries appear in
    the deterministic enumeration order (arity, then input tuples
    lexicographically).
    """
    cache: dict = {}
    monos = [th for th in subsets(ctx.n) if len(th) <= theta_cap]
    entries = []
    for k in range(1, max_k + 1):
        for tup in product(monos, repeat=k):
            inputs = tuple((0, th) for th in tup)
            val = mu_k(ctx, inputs, m_cap=m_cap, cache=cache)
            if val:
                entries.append(
                    {"k": k, "inputs": [list(th) for th in tup], "output": val}
                )
    return {
        "n": ctx.n,
        "d": ctx.d,
        "potential": ctx.potential.p.pretty(),
        "entries": entries,
    }
