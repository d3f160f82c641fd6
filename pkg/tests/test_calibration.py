"""Each frozen sign convention is load-bearing.

Flipping any one of the three constants breaks a pinned identity that the
frozen triple satisfies, so the conventions file records the unique
calibration rather than an arbitrary choice: the reversed pairing and the
homotopy normalization are forced by the side conditions, the shifted-degree
crossing signs by holding the anchored products and the arity-4 relation
simultaneously.
"""

from itertools import product

import koszulmin.conventions as conventions
from koszulmin.tensors import AVector
from koszulmin.transfer import side_conditions
from koszulmin.trees import mu_on_generators
from koszulmin.verify import stasheff_defect


def test_frozen_values():
    assert conventions.PAIR_REVERSED is True
    assert conventions.HOMOTOPY_SIGN == -1
    assert conventions.TREE_CROSSING_SIGNS is True


def test_plain_pairing_breaks_homotopy_identity(monkeypatch):
    monkeypatch.setattr("koszulmin.exterior.PAIR_REVERSED", False)
    rep = side_conditions(2)
    assert rep["status"] == "fail"
    broken = {i["identity"] for i in rep["identities"] if i["status"] == "fail"}
    assert "d h + h d = 1 - i p" in broken


def test_flipped_homotopy_sign_breaks_identity(monkeypatch):
    monkeypatch.setattr("koszulmin.transfer.HOMOTOPY_SIGN", 1)
    rep = side_conditions(1, f_bound=2)
    assert rep["status"] == "fail"
    broken = {i["identity"] for i in rep["identities"] if i["status"] == "fail"}
    assert broken == {"d h + h d = 1 - i p"}


def test_crossing_signs_required_by_arity_four_relation(ctx_xyz, monkeypatch):
    # without crossing signs the anchors still land ...
    monkeypatch.setattr("koszulmin.trees.TREE_CROSSING_SIGNS", False)
    cache: dict = {}
    anchor = mu_on_generators(ctx_xyz, (1, 2, 3), cache=cache)
    assert anchor == AVector.term(1, (), "1/6")
    # ... but some arity-4 relation acquires a nonzero defect
    defect_found = False
    for tup in product(((0, (1,)), (0, (2,)), (0, (3,))), repeat=4):
        if stasheff_defect(ctx_xyz, tup, 4, cache):
            defect_found = True
            break
    assert defect_found


def test_crossing_signs_close_the_relations(ctx_xyz):
    cache: dict = {}
    for tup in product(((0, (1,)), (0, (2,)), (0, (3,))), repeat=4):
        assert not stasheff_defect(ctx_xyz, tup, 4, cache)
