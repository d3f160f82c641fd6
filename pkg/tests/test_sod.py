"""Decomposition numerology: pinned shapes and exhaustive invariants."""

import pytest

from koszulmin.sod import (
    lefschetz_blocks,
    orlov_case,
    relative_ci,
    veronese_branch,
)


def kinds(desc):
    return [b["kind"] for b in desc["blocks"]]


def twists(desc):
    return [b.get("twist") for b in desc["blocks"]]


def test_trichotomy_displayed_shapes():
    below = orlov_case(5, 3)
    assert below["case"] == 1 and below["wall_mu"] == 2
    assert twists(below) == [-1, 0, None]
    assert kinds(below) == ["line_bundle", "line_bundle", "matrix_factorization"]

    equal = orlov_case(4, 4)
    assert equal["case"] == 2 and equal["notes"] == "equivalence"
    assert kinds(equal) == ["matrix_factorization"]

    above = orlov_case(3, 5)
    assert above["case"] == 3 and above["wall_mu"] == -2
    assert twists(above) == [-1, 0, None]
    assert kinds(above) == ["exceptional_object", "exceptional_object", "geometric"]


def test_trichotomy_block_counts_exhaustive():
    for N in range(1, 21):
        for d in range(1, 21):
            desc = orlov_case(N, d)
            line = sum(1 for k in kinds(desc) if k == "line_bundle")
            exc = sum(1 for k in kinds(desc) if k == "exceptional_object")
            assert line == max(N - d, 0)
            assert exc == max(d - N, 0)
            assert desc["wall_mu"] == N - d


def test_relative_ci_pinned():
    pos = relative_ci(5, [2, 2])
    assert pos["case"] == "positive" and pos["wall_mu"] == 1
    assert kinds(pos) == ["base", "matrix_factorization"] and twists(pos) == [0, None]

    eq = relative_ci(4, [2, 2])
    assert eq["case"] == "equivalence" and eq["wall_mu"] == 0

    neg = relative_ci(3, [2, 3])
    assert neg["case"] == "negative" and neg["wall_mu"] == -2
    assert twists(neg) == [0, -1, None]
    assert kinds(neg) == ["base", "base", "geometric"]


def test_relative_single_degree_matches_trichotomy_counts():
    for rank in range(1, 51):
        for d in range(1, 51):
            rel = relative_ci(rank, [d])
            tri = orlov_case(rank, d)
            assert len(rel["blocks"]) == len(tri["blocks"])
            assert rel["wall_mu"] == tri["wall_mu"]


def test_lefschetz_pinned_and_exhaustive():
    assert lefschetz_blocks(5, 2) == {"i": 2, "k": 1}
    assert lefschetz_blocks(6, 3) == {"i": 1, "k": 3}
    assert lefschetz_blocks(4, 4) == {"i": 0, "k": 4}
    for rank in range(1, 51):
        for d in range(1, 51):
            out = lefschetz_blocks(rank, d)
            assert rank == d * out["i"] + out["k"]
            assert 1 <= out["k"] <= d


def test_veronese_branches():
    geo = veronese_branch(6, 3, 1)
    assert geo["case"] == "geometric" and geo["wall_mu"] == 3
    assert geo["blocks"][1] == {"kind": "lefschetz", "index": 1, "twist": 1}

    dual = veronese_branch(6, 3, 4)
    assert dual["case"] == "dual"
    duals = [b for b in dual["blocks"] if b["kind"] == "dual"]
    assert duals[0]["index"] == 4 and duals[0]["twist"] == -4
    assert duals[-1]["index"] == 1  # k = rank - r - 1
    assert all(b["twist"] == -b["index"] for b in duals)
    assert "typo" in dual["notes"]

    both = veronese_branch(6, 3, 2)
    assert both["case"] == "both" and both["wall_mu"] == 0
    assert "both branches" in both["notes"]


def test_argument_validation():
    with pytest.raises(ValueError):
        orlov_case(0, 3)
    with pytest.raises(ValueError):
        relative_ci(4, [])
    with pytest.raises(ValueError):
        relative_ci(4, [2, 0])
    with pytest.raises(ValueError):
        lefschetz_blocks(5, 0)
    with pytest.raises(ValueError):
        veronese_branch(3, 4, 1)  # rank below degree
