import numpy as np
import pytest

from innzero.bundles import (Cocycle, all_cocycles, cech_groupoid, check_bundle,
                             check_equivariant_iso, check_pullback_groupoid, check_reextraction,
                             check_total, circle_cocycle, circle_cover, circle_family_report,
                             cohomology_classes, find_coboundary, is_product_bundle,
                             isomorphism_of_totals, loop_holonomy, make_cocycle, make_cover,
                             pullback_groupoid, reconstruct_total, single_patch_cover,
                             trivial_cocycle, validate_cocycle)
from innzero.errors import CocycleInvalid
from innzero.groups import cyclic_group, dihedral_group
from innzero.simplicial import validate_category

from conftest import el


def test_circle_cover_shape():
    cover = circle_cover(3)
    assert cover.n_points == 6 and len(cover.base) == 3
    assert [cover.point_label(y) for y in range(2)] == ["U0:c0", "U0:c1"]
    assert all(len(cover.fiber(x)) == 2 for x in range(3))
    assert cover.adjacent(0, 1) and cover.adjacent(2, 0)
    with pytest.raises(ValueError):
        make_cover(["a", "b"], {"U": ["a"]})


def test_cech_groupoid():
    Y2 = cech_groupoid(circle_cover(3))
    assert Y2.n_objects == 6 and Y2.n_morphisms == 12
    assert validate_category(Y2).ok and Y2.is_groupoid()


def test_single_patch_trivial(Z2):
    c = trivial_cocycle(single_patch_cover(["p", "q"], [("p", "q")]), Z2)
    assert validate_cocycle(c).ok
    T = reconstruct_total(c)
    assert T.size == 4 and is_product_bundle(T)


def test_cocycle_examples(Z2, S3):
    triv = circle_cocycle(Z2, [0, 0, 0])
    moeb = circle_cocycle(Z2, [1, 0, 0])
    for c in (triv, moeb):
        assert validate_cocycle(c).ok
    assert loop_holonomy(triv) == 0 and loop_holonomy(moeb) == 1
    a, b = el(S3, "(12)", "(123)")
    c = circle_cocycle(S3, [a, b, S3.identity])
    assert validate_cocycle(c).ok and loop_holonomy(c) == S3.op(b, a)


def test_bad_unit_is_witnessed(Z2):
    c = trivial_cocycle(circle_cover(3), Z2)
    vals = dict(c.values)
    vals[(2, 2)] = 1
    rep = validate_cocycle(Cocycle(c.cover, Z2, vals))
    assert not rep["unit"].passed and rep["unit"].witness == (2,)
    with pytest.raises(CocycleInvalid):
        reconstruct_total(Cocycle(c.cover, Z2, vals))


def test_inconsistent_triple_overlap():
    Z3 = cyclic_group(3)
    cover = make_cover(["p"], {"A": ["p"], "B": ["p"], "C": ["p"]})
    A, B, C = (cover.point(i, 0) for i in range(3))
    c = make_cocycle(cover, Z3, {(A, B): 1, (B, C): 1, (A, C): 0})
    rep = validate_cocycle(c)
    assert not rep["composition"].passed and rep["composition"].witness is not None
    good = make_cocycle(cover, Z3, {(A, B): 1, (B, C): 1})
    assert validate_cocycle(good).ok and good(A, C) == 2


def test_missing_pair_reported(Z2):
    c = trivial_cocycle(circle_cover(3), Z2)
    vals = dict(c.values)
    del vals[(0, 5)]
    rep = validate_cocycle(Cocycle(c.cover, Z2, vals))
    assert not rep["defined_on_fiber_pairs"].passed


def test_pullback_groupoid(Z2):
    c = circle_cocycle(Z2, [1, 0, 0])
    P = pullback_groupoid(c)
    assert P.n_objects == 12
    assert check_pullback_groupoid(c).ok


def test_totals(Z2):
    triv = reconstruct_total(circle_cocycle(Z2, [0, 0, 0]))
    moeb = reconstruct_total(circle_cocycle(Z2, [1, 0, 0]))
    assert triv.size == moeb.size == 6
    assert check_total(triv).ok and check_total(moeb).ok
    assert is_product_bundle(triv) and triv.component_count() == 2
    assert not is_product_bundle(moeb) and moeb.component_count() == 1


def test_glued_points_agree(S3):
    c = circle_cocycle(S3, list(el(S3, "(12)", "(123)", "(13)")))
    T = reconstruct_total(c)
    for (x, y) in c.cover.fiber_pairs():
        for h in S3:
            assert T.element(x, h) == T.element(y, S3.op(c(x, y), h))


@pytest.mark.parametrize("vals", [[0, 0, 0], [1, 0, 0], [1, 1, 0], [1, 1, 1]])
def test_reextraction_z2(Z2, vals):
    c = circle_cocycle(Z2, vals)
    rep, cs = check_reextraction(c)
    assert rep.ok and cs is not None


def test_reextraction_nonabelian():
    D4 = dihedral_group(4)
    c = circle_cocycle(D4, [1, 5, 2])
    rep = check_bundle(c)
    assert rep.ok, [x.name for x in rep.failures()]


def test_coboundary_gives_equivariant_iso(S3):
    a = circle_cocycle(S3, list(el(S3, "(12)", "e", "e")))
    b = circle_cocycle(S3, list(el(S3, "e", "(12)", "e")))
    cs = find_coboundary(a, b)
    assert cs is not None
    Ta, Tb = reconstruct_total(a), reconstruct_total(b)
    phi = isomorphism_of_totals(Ta, Tb, cs)
    assert check_equivariant_iso(Ta, Tb, phi).ok
    assert find_coboundary(a, trivial_cocycle(a.cover, S3)) is None


def test_z2_family(Z2):
    rep, cocycles, classes, summary = circle_family_report(Z2, 3)
    assert rep.ok
    assert len(cocycles) == 8 and len(classes) == 2
    assert sorted(summary) == [(0, 4, 2), (1, 4, 1)]


def test_s3_family(S3):
    rep, cocycles, classes, summary = circle_family_report(S3, 3)
    assert rep.ok, [x.name for x in rep.failures()]
    assert len(cocycles) == 216 and len(classes) == 3
    assert sorted(size for _, size, _ in summary) == [36, 72, 108]


def test_classes_match_holonomy_parity(Z2):
    cocycles = list(all_cocycles(circle_cover(3), Z2))
    classes = cohomology_classes(cocycles)
    for cl in classes:
        assert len({loop_holonomy(cocycles[i]) for i in cl}) == 1
