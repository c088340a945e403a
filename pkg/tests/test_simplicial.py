import numpy as np
import pytest

from innzero.errors import BudgetExceeded, DepthExhausted
from innzero.groups import cyclic_group, quotient, trivial_group
from innzero.simplicial import (DoubleNerve, Functor, RowDecalage, TruncatedSimplicialSet,
                                check_bisimplicial, check_bisimplicial_sequence,
                                check_simplicial_identities, check_simplicial_map,
                                check_tangent_vs_decalage, check_W_identifications,
                                codiscrete_groupoid, decalage, delooping,
                                extra_degeneracy_check, linear_poset, nerve, nerve_map,
                                point_category, tangent_category, validate_category,
                                validate_functor, w_construction, wbar)
from innzero.xmod import trivial_crossed_module

from conftest import CORPUS, el


def test_categories_validate(S3):
    for C in (point_category(), delooping(S3), linear_poset(3), codiscrete_groupoid(4),
              tangent_category(delooping(S3)), tangent_category(linear_poset(3))):
        rep = validate_category(C)
        assert rep.ok, (C, [c.name for c in rep.failures()])


def test_broken_associativity_caught():
    C = delooping(cyclic_group(3))
    C.comp = C.comp.copy()
    C.comp[1, 1] = 0
    rep = validate_category(C)
    assert not rep["associativity"].passed and rep["associativity"].witness is not None


def test_nerve_sizes(S3, Z2):
    assert nerve(point_category(), 4).sizes() == [1] * 5
    assert nerve(delooping(Z2), 3).sizes() == [1, 2, 4, 8]
    assert nerve(delooping(S3), 5).sizes() == [6 ** n for n in range(6)]
    # monotone chains i0 <= ... <= in in {0,1,2}
    assert nerve(linear_poset(3), 4).sizes() == [3, 6, 10, 15, 21]


@pytest.mark.parametrize("which", ["point", "BZ2", "BS3", "poset3"])
def test_nerve_identities(which, S3, Z2):
    C = {"point": point_category(), "BZ2": delooping(Z2), "BS3": delooping(S3),
         "poset3": linear_poset(3)}[which]
    rep = check_simplicial_identities(nerve(C, 4))
    assert rep.ok, [c.name for c in rep.failures()]


def test_corrupted_face_caught():
    X = nerve(delooping(cyclic_group(3)), 3)
    faces = [list(f) for f in X.faces]
    faces[2][1] = np.roll(faces[2][1], 1)
    Y = TruncatedSimplicialSet(X.simplices, faces, X.degens)
    rep = check_simplicial_identities(Y)
    assert not rep.ok
    assert all(c.witness is not None for c in rep.failures())


def test_faces_compose_in_the_middle(S3):
    C = delooping(S3)
    X = nerve(C, 2)
    a, b = el(S3, "(12)", "(123)")
    i = X.simplices[2].index((a, b))
    mid = X.simplices[1][X.d(2, 1)[i]]
    assert mid == (C.then(a, b),) == (S3.op(b, a),)
    assert X.simplices[1][X.d(2, 0)[i]] == (b,)
    assert X.simplices[1][X.d(2, 2)[i]] == (a,)


def test_tangent_categories(S3, Z2):
    assert tangent_category(point_category()).n_morphisms == 1
    T2 = tangent_category(delooping(Z2))
    assert T2.n_objects == 2 and T2.is_codiscrete() and T2.is_groupoid()
    T6 = tangent_category(delooping(S3))
    assert T6.n_objects == 6 and T6.n_morphisms == 36 and T6.is_codiscrete()
    TP = tangent_category(linear_poset(3))
    assert TP.n_objects == 6 and not TP.is_groupoid()


def test_decalage(Z2):
    X = nerve(delooping(Z2), 4)
    D = decalage(X)
    assert D.depth == 3 and D.sizes() == [2, 4, 8, 16]
    assert D.size(2) == 8
    assert check_simplicial_identities(D).ok
    DD = decalage(D)
    assert DD.sizes() == [4, 8, 16] and check_simplicial_identities(DD).ok
    assert extra_degeneracy_check(X).ok
    P = nerve(point_category(), 3)
    assert decalage(P).sizes() == [1, 1, 1]
    with pytest.raises(DepthExhausted):
        decalage(nerve(point_category(), 0))


@pytest.mark.parametrize("which", ["point", "BZ2", "BS3", "poset3"])
def test_tangent_nerve_is_decalage(which, S3, Z2):
    C = {"point": point_category(), "BZ2": delooping(Z2), "BS3": delooping(S3),
         "poset3": linear_poset(3)}[which]
    rep = check_tangent_vs_decalage(C, 4)
    assert rep.ok, [c.name for c in rep.failures()]


def test_functor_nerve_maps(S3):
    Z2, proj = quotient(S3, [el(S3, "e"), *el(S3, "(123)", "(132)")])
    BS3, BZ2 = delooping(S3), delooping(Z2)
    sign = Functor(BS3, BZ2, [0], proj.map)
    assert validate_functor(sign).ok
    X, Y = nerve(BS3, 3), nerve(BZ2, 3)
    assert check_simplicial_map(X, Y, nerve_map(sign, X, Y)).ok
    P = linear_poset(3)
    collapse = Functor(P, point_category(), [0, 0, 0], [0] * P.n_morphisms)
    assert validate_functor(collapse).ok
    bad = Functor(BS3, BZ2, [0], [0, 1, 0, 0, 0, 0])
    assert not validate_functor(bad)["composition"].passed


def test_wbar_and_w_small(S3, Z2):
    assert wbar(Z2, 3).sizes() == [1, 2, 4, 8]
    assert w_construction(S3, 2).sizes() == [6, 36, 216]
    for G, k in ((trivial_group(), 3), (Z2, 4), (S3, 3)):
        rep = check_W_identifications(G, k)
        assert rep.ok, [c.name for c in rep.failures()]


def test_double_nerve_sizes(Z2Z4):
    B = DoubleNerve(Z2Z4, (3, 3))
    for n in range(4):
        assert B.size(0, n) == 1
    assert B.size(1, 0) == 4 and B.size(1, 1) == 8
    assert B.size(2, 1) == 64
    assert B.groups[1].order == 8


def test_double_nerve_trivial():
    rep = check_bisimplicial_sequence(trivial_crossed_module(), 3)
    assert rep.ok, [c.name for c in rep.failures()]


def test_double_nerve_z2_in_z4(Z2Z4):
    rep = check_bisimplicial_sequence(Z2Z4, 3)
    assert rep.ok, [c.name for c in rep.failures()]


def test_row_decalage_bisimplicial(Z2Z4):
    B = DoubleNerve(Z2Z4, (3, 2))
    assert check_bisimplicial(RowDecalage(B), (2, 2)).ok


@pytest.mark.slow
def test_double_nerve_s3(innS3):
    rep = check_bisimplicial_sequence(innS3, 2)
    assert rep.ok, [c.name for c in rep.failures()]


def test_double_nerve_budget(innS3):
    with pytest.raises(BudgetExceeded):
        DoubleNerve(innS3, (4, 4), budget=1_000_000)
