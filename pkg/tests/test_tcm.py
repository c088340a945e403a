import numpy as np
import pytest

from innzero.groups import GroupAction, GroupHom, cyclic_group, symmetric_group, trivial_group
from innzero.inn import build_inn
from innzero.tcm import (TwoCrossedModule, check_isomorphism, compare_cone_inn, extract_from_inn,
                         from_cells, from_crossed_module, homology, image_d1_normal,
                         induced_action, is_isomorphic, mapping_cone, trivial_tcm,
                         validate_2crossed)
from innzero.xmod import (commutator_square, identity_square, inn_crossed_module, trivial_square,
                          validate_crossed_module)

from conftest import CORPUS, el


def replace_peiffer(T, table):
    return TwoCrossedModule(T.L, T.M, T.N, T.d2, T.d1, T.act_M, T.act_L, table, T.name)


@pytest.fixture(scope="module")
def TS3(innS3):
    return extract_from_inn(innS3)


def test_trivial():
    T = trivial_tcm()
    assert validate_2crossed(T).ok
    E = extract_from_inn(CORPUS["trivial"])
    assert (E.L.order, E.M.order, E.N.order) == (1, 1, 1) and validate_2crossed(E).ok
    assert all(p.order == 1 for p in homology(T))
    C = mapping_cone(trivial_square())
    assert (C.L.order, C.M.order, C.N.order) == (1, 1, 1)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_extracted_is_valid(name):
    T = extract_from_inn(CORPUS[name])
    rep = validate_2crossed(T)
    assert rep.ok, [c.name for c in rep.failures()]
    # complex-level contractibility
    assert T.d2.is_injective() and T.d1.is_surjective()
    assert set(T.d2.image()) == set(T.d1.kernel())


def test_peiffer_example(TS3, S3):
    X = inn_crossed_module(S3)
    H = X.H
    h, Hh, f = el(S3, "(12)"), el(H, "(123)"), el(S3, "(13)")
    nH = H.order
    for F in H:
        assert TS3.bracket(h * nH + Hh, f * nH + F) == el(H, "(123)")
    # the other sign evaluates to (132)
    conj = S3.op(h, f, S3.inverse(h))
    other = H.op(Hh, H.inverse(X.act(conj, Hh)))
    assert other == el(H, "(132)")


def test_peiffer_independent_of_second_F(TS3):
    pf = np.asarray(TS3.peiffer)
    nH = TS3.L.order
    blocks = pf.reshape(TS3.M.order, -1, nH)
    assert (blocks == blocks[:, :, :1]).all()


def test_opposite_sign_fails_axioms(TS3):
    L = TS3.L
    flipped = L.inv[np.asarray(TS3.peiffer)]
    rep = validate_2crossed(replace_peiffer(TS3, flipped))
    for ax in ("axiom1", "axiom2", "axiom3a", "axiom4"):
        assert not rep[ax].passed and rep[ax].witness is not None


@pytest.mark.parametrize("pos", [(0, 0), (7, 19), (35, 35)])
def test_single_entry_mutation_caught(TS3, pos):
    pf = np.array(TS3.peiffer, copy=True)
    pf[pos] = TS3.L.mul[pf[pos], 1]
    rep = validate_2crossed(replace_peiffer(TS3, pf))
    assert not rep.ok
    assert all(c.witness is not None for c in rep.failures() if c.name.startswith("axiom"))


def test_L_trivial_example(Z2Z4):
    T = from_crossed_module(Z2Z4)
    assert validate_2crossed(T).ok
    pi0, pi1, pi2 = homology(T)
    assert (pi0.order, pi1.order, pi2.order) == (2, 1, 1)
    assert image_d1_normal(T)
    assert (induced_action(T).table == 0).all()


def test_induced_action(TS3, innS3):
    act = induced_action(TS3)
    X = type(innS3)(TS3.L, TS3.M, TS3.d2, act)
    assert validate_crossed_module(X).ok
    ab = induced_action(extract_from_inn(CORPUS["Z2inZ4"]))
    assert (ab.table == np.arange(ab.table.shape[1])[None, :]).all()


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_extracted_homology_trivial(name):
    T = extract_from_inn(CORPUS[name])
    assert all(p.order == 1 for p in homology(T))
    assert image_d1_normal(T)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_cone_matches_extracted(name):
    rep = compare_cone_inn(CORPUS[name])
    assert rep.ok, [c.name for c in rep.failures()]


def test_cone_peiffer_formula(S3):
    X = inn_crossed_module(S3)
    C = mapping_cone(identity_square(X))
    H, nH = X.H, X.H.order
    for g1 in S3:
        for h1 in H:
            for g2 in S3:
                conj = S3.op(g1, g2, S3.inverse(g1))
                expect = H.op(h1, X.act(conj, H.inverse(h1)))
                assert H.inverse(C.bracket(g1 * nH + h1, g2 * nH)) == expect
    abel = mapping_cone(identity_square(CORPUS["innZ4"]))
    assert (np.asarray(abel.peiffer) == 0).all()


def test_commutator_square_cone():
    S4 = symmetric_group(4)
    A4 = list(S4.generated([S4.index("(123)"), S4.index("(12)(34)")]))
    V4 = list(S4.generated([S4.index("(12)(34)"), S4.index("(13)(24)")]))
    C = mapping_cone(commutator_square(S4, A4, V4))
    assert (C.L.order, C.M.order, C.N.order) == (4, 48, 24)
    assert validate_2crossed(C).ok


def test_is_isomorphic(TS3, Z2Z4):
    w = is_isomorphic(TS3, TS3)
    assert w is not None and all((p == np.arange(len(p))).all() for p in w)
    a = from_crossed_module(inn_crossed_module(cyclic_group(2)))
    b = from_crossed_module(inn_crossed_module(cyclic_group(3)))
    assert is_isomorphic(a, b) is None


def test_is_isomorphic_needs_search(Z2Z4):
    T = extract_from_inn(Z2Z4)
    Z4 = T.N
    # relabel N by the automorphism x -> -x; the identity-shaped maps no longer work
    neg = np.array([Z4.inverse(x) for x in Z4])
    d1 = GroupHom(T.M, T.N, neg[T.d1.map])
    act_M = GroupAction(T.N, T.M, T.act_M.table[neg])
    act_L = GroupAction(T.N, T.L, T.act_L.table[neg])
    R = TwoCrossedModule(T.L, T.M, T.N, T.d2, d1, act_M, act_L, T.peiffer)
    assert validate_2crossed(R).ok
    ident = tuple(np.arange(G.order) for G in (T.L, T.M, T.N))
    assert not check_isomorphism(T, R, *ident).ok
    w = is_isomorphic(T, R)
    assert w is not None and check_isomorphism(T, R, *w).ok


@pytest.mark.parametrize("name", ["Z2inZ4", "innS3", "A3inS3", "innD4"])
def test_cells_reproduce_extracted(name):
    X = CORPUS[name]
    Tc, maps = from_cells(build_inn(X))
    assert validate_2crossed(Tc).ok
    rep = check_isomorphism(Tc, extract_from_inn(X), *maps)
    assert rep.ok, [c.name for c in rep.failures()]
    # whiskering-defined M-action on L is the induced one
    ind = induced_action(Tc)
    assert validate_crossed_module(type(X)(Tc.L, Tc.M, Tc.d2, ind)).ok
