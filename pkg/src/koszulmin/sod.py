"""Semiorthogonal-decomposition numerology.

Pure integer arithmetic describing the block structure of the window
decompositions: the graded-hypersurface trichotomy, its relative
complete-intersection version, Lefschetz block widths, and the branch
arithmetic of the Veronese embedding and its dual.  Descriptors are
combinatorial only: ordered block tags with twists, plus the wall weight
mu = rank - sum of degrees.  Nothing here certifies the equivalences
themselves; this is the bookkeeping the window calculus predicts.
"""

from __future__ import annotations

from math import ceil


def _line_bundle(t: int) -> dict:
    return {"kind": "line_bundle", "twist": t}


def _base(t: int) -> dict:
    return {"kind": "base", "twist": t}


def _exceptional(t: int) -> dict:
    return {"kind": "exceptional_object", "twist": t}


def _mf() -> dict:
    return {"kind": "matrix_factorization"}


def _geometric() -> dict:
    return {"kind": "geometric"}


def orlov_case(N: int, d: int) -> dict:
    """Trichotomy for a degree-d hypersurface in N variables.

    d < N: line-bundle twists d-N+1 .. 0, then the graded singularity
    block.  d = N: a single block, an equivalence.  d > N: exceptional
    objects with twists N-d+1 .. 0, then the geometric block.  The wall
    weight is N - d.
    """
    if N < 1 or d < 1:
        raise ValueError("dimension and degree must be at least 1")
    mu = N - d
    if mu > 0:
        blocks = [_line_bundle(t) for t in range(d - N + 1, 1)]
        blocks.append(_mf())
        return {"case": 1, "wall_mu": mu, "blocks": blocks}
    if mu == 0:
        return {
            "case": 2,
            "wall_mu": 0,
            "blocks": [_mf()],
            "notes": "equivalence",
        }
    blocks = [_exceptional(t) for t in range(N - d + 1, 1)]
    blocks.append(_geometric())
    return {"case": 3, "wall_mu": mu, "blocks": blocks}


def relative_ci(rank: int, degrees) -> dict:
    """Relative version for a complete intersection of the given degrees
    inside the total space of a rank-`rank` bundle.

    mu = rank - sum(degrees).  Positive: base blocks twisted 0 .. mu-1,
    then the window block on the negative cone.  Zero: equivalence.
    Negative: |mu| base blocks twisted 0, -1, .., mu+1, then geometric.
    """
    degrees = list(degrees)
    if rank < 1:
        raise ValueError("rank must be at least 1")
    if not degrees or any(x < 1 for x in degrees):
        raise ValueError("degrees must be a nonempty list of integers >= 1")
    mu = rank - sum(degrees)
    if mu > 0:
        blocks = [_base(t) for t in range(mu)]
        blocks.append(_mf())
        return {"case": "positive", "wall_mu": mu, "blocks": blocks}
    if mu == 0:
        return {
            "case": "equivalence",
            "wall_mu": 0,
            "blocks": [_mf()],
            "notes": "equivalence",
        }
    blocks = [_base(-j) for j in range(-mu)]
    blocks.append(_geometric())
    return {"case": "negative", "wall_mu": mu, "blocks": blocks}


def lefschetz_blocks(rank_P: int, d: int) -> dict:
    """Block count and last-block width for the degree-d Lefschetz
    structure on a rank-`rank_P` projectivization: blocks A_0 .. A_i with
    i = ceil(rank_P/d) - 1 and final width k = rank_P - d*i, 1 <= k <= d.
    """
    if rank_P < 1 or d < 1:
        raise ValueError("rank and degree must be at least 1")
    i = ceil(rank_P / d) - 1
    k = rank_P - d * i
    assert 1 <= k <= d and rank_P == d * i + k
    return {"i": i, "k": k}


def veronese_branch(rank_E: int, d: int, r: int) -> dict:
    """Branch arithmetic for r generic degree-d sections against the
    degree-d Veronese of a rank-`rank_E` bundle.

    The wall weight is rank_E - d*r.  When r <= rank_E/d the geometric
    side contains the dual side, with Lefschetz tail A_r(1) .. A_i(i-r+1);
    when r >= rank_E/d the dual side contains the geometric one, preceded
    by blocks B_j(-j) for j descending from rank_E-2 down to
    k = rank_E - r - 1.  Both branches are reported at equality.
    """
    if r < 1:
        raise ValueError("codimension must be at least 1")
    if d < 2:
        raise ValueError("degree must be at least 2")
    if rank_E < d:
        raise ValueError("rank must be at least the degree")
    mu = rank_E - d * r
    notes: list[str] = []

    def geometric_blocks() -> list[dict]:
        i = lefschetz_blocks(rank_E, d)["i"]
        blocks = [_mf()]
        blocks.extend(
            {"kind": "lefschetz", "index": j, "twist": j - r + 1}
            for j in range(r, i + 1)
        )
        return blocks

    def dual_blocks() -> list[dict]:
        k = rank_E - r - 1
        # top dual index: the last ambient twist, one below the rank edge
        blocks = [
            {"kind": "dual", "index": j, "twist": -j}
            for j in range(rank_E - 2, k - 1, -1)
        ]
        blocks.append(_geometric())
        return blocks

    if mu > 0:
        return {"case": "geometric", "wall_mu": mu, "blocks": geometric_blocks()}
    if mu < 0:
        notes.append(
            "dual-collection twists follow B_j(-j); the other displayed "
            "sign on the top twist is a typo"
        )
        return {
            "case": "dual",
            "wall_mu": mu,
            "blocks": dual_blocks(),
            "notes": "; ".join(notes),
        }
    notes.append(
        "boundary case r = rank/d: both branches apply; dual branch blocks: "
        + ", ".join(
            f"B_{b['index']}({b['twist']})" if b["kind"] == "dual" else b["kind"]
            for b in dual_blocks()
        )
    )
    return {
        "case": "both",
        "wall_mu": 0,
        "blocks": geometric_blocks(),
        "notes": "; ".join(notes),
    }
