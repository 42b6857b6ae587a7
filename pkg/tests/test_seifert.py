from math import gcd

import pytest

from cosmetic.homology import AbelianGroup, cokernel
from cosmetic.seifert import (
    REMARK_EXTERIOR,
    REMARK_LONGITUDE,
    REMARK_MERIDIAN,
    Chirality,
    SeifertData,
    UnsupportedSFS,
    h1_exterior,
    h1_filled,
    mirror_sfs,
    normalize_closed_sfs,
    remark_slopes,
    sfs_chiral_compare,
    thm2_solve,
)
from cosmetic.slopes import Slope

A = SeifertData("sphere", ((3, 1), (4, 1), (7, -4)))
B = SeifertData("sphere", ((2, 1), (3, 1), (19, -16)))


def test_remark_exterior_classes():
    ext = h1_exterior(REMARK_EXTERIOR)
    assert ext.group.free_rank == 1
    assert ext.multiple_of_generator("c0") == 5
    assert ext.multiple_of_generator("h") == -30


def test_remark_exterior_has_z5_torsion():
    # every maximal minor of the relation matrix is divisible by 5
    assert h1_exterior(REMARK_EXTERIOR).group == AbelianGroup(1, (5,))


def test_reduced_presentation_modulo_torsion():
    # 3c1 = h, 5c3 = h, -2c4 = h in generators c1, c3, c4, h
    reduced = cokernel([[3, 0, 0, -1], [0, 5, 0, 1], [0, 0, 2, 1]], 4).group
    assert reduced == AbelianGroup(1, ())
    assert h1_exterior(REMARK_EXTERIOR).group.free_rank == reduced.free_rank


def test_remark_fillings():
    assert h1_filled(REMARK_EXTERIOR, (1, 0), REMARK_MERIDIAN, REMARK_LONGITUDE) == \
        AbelianGroup(0, (25,))
    assert h1_filled(REMARK_EXTERIOR, (0, 1), REMARK_MERIDIAN, REMARK_LONGITUDE) == \
        AbelianGroup(1, ())


def test_solid_torus():
    st = SeifertData("disk", ())
    assert h1_exterior(st).group == AbelianGroup(1, ())
    assert h1_filled(st, (1, 0)) == AbelianGroup(1, ())
    assert h1_filled(st, (0, 1)).is_trivial


def test_trefoil_exterior():
    found = [b for b in range(-6, 7) if gcd(b, 3) == 1
             and h1_exterior(SeifertData("disk", ((2, 1), (3, b)))).group == AbelianGroup(1, ())]
    assert found


def test_filling_validation():
    with pytest.raises(ValueError):
        h1_filled(REMARK_EXTERIOR, (2, 4))
    with pytest.raises(ValueError):
        h1_filled(REMARK_EXTERIOR, (1, 0), (1, 0), (2, 0))
    with pytest.raises(ValueError):
        h1_exterior(SeifertData("sphere", ()))


def test_seifert_data_validation_and_json():
    with pytest.raises(ValueError):
        SeifertData("torus", ())
    with pytest.raises(ValueError):
        SeifertData("disk", ((4, 2),))
    with pytest.raises(ValueError):
        SeifertData.from_json({"fibers": []})
    s = SeifertData.from_json('{"base": "disk", "fibers": [[3, -1], [2, 1]]}')
    assert SeifertData.from_json(s.to_json()) == s


def test_thm2_examples():
    assert thm2_solve(10, 10) == [(3, 0, 9), (-3, -1, 9)]
    assert thm2_solve(2, 2) == []
    assert thm2_solve(100, 100) == [(3, 0, 9), (-3, -1, 9)]


def test_thm2_solutions_satisfy_formulas():
    for alpha, m, p in thm2_solve(40, 40):
        u = alpha * (2 * m + 1)
        assert u in (3, -3)
        assert abs(alpha * alpha * (2 * m + 1) * 2) == p * abs(u - 1)


def test_remark_slopes():
    pr = remark_slopes(0)
    assert (pr.first, pr.second) == (Slope(9, 1), Slope(9, 2))
    pr = remark_slopes(1)
    assert (pr.first, pr.second) == (Slope(27, 4), Slope(27, 5))
    pr = remark_slopes(-1)
    assert (pr.first, pr.second) == (Slope(9, 2), Slope(9, 1))


def test_normalize_examples():
    n = normalize_closed_sfs(A)
    assert n.e0 == -1 and sorted(n.fibers) == [(3, 1), (4, 1), (7, 3)]
    n = normalize_closed_sfs(B)
    assert n.e0 == -1 and sorted(n.fibers) == [(2, 1), (3, 1), (19, 3)]
    n = normalize_closed_sfs(SeifertData("sphere", ()))
    assert (n.e0, n.fibers) == (0, ())
    assert str(normalize_closed_sfs(A)) == "S2(-1; 1/3, 1/4, 3/7)"


def test_chiral_compare_examples():
    assert sfs_chiral_compare(A, B) == Chirality.DISTINCT
    assert sfs_chiral_compare(A, A) == Chirality.ORIENTATION_PRESERVING
    assert sfs_chiral_compare(A, mirror_sfs(A)) == Chirality.ORIENTATION_REVERSING


def test_chiral_compare_reordered_invariants():
    shifted = SeifertData("sphere", ((7, 3), (4, -3), (3, 1)))
    assert sfs_chiral_compare(A, shifted) == Chirality.ORIENTATION_PRESERVING


def test_chiral_compare_unsupported():
    lens = SeifertData("sphere", ((2, 1), (3, 1)))
    with pytest.raises(UnsupportedSFS):
        sfs_chiral_compare(lens, lens)
