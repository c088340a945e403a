import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from innzero.errors import ActionInvalid, NoIdentity, NoInverse, NotAssociative, NotHomomorphism, NotAction
from innzero.groups import (GroupAction, alternating_group, automorphism_group, center,
                            conjugation_action, cyclic_group, dihedral_group, direct_product,
                            find_isomorphism, isomorphisms, make_action, make_group, make_hom,
                            quotient, semidirect_product, symmetric_group, trivial_action,
                            trivial_group)

from conftest import el


def test_z2_from_table():
    G = make_group([[0, 1], [1, 0]])
    assert G.order == 2 and G.identity == 0 and list(G.inv) == [0, 1]


def test_non_associative_table_reports_triple():
    # the order-5 loop: identity and self-inverses, but not associative
    bad = [[0, 1, 2, 3, 4],
           [1, 0, 3, 4, 2],
           [2, 4, 0, 1, 3],
           [3, 2, 4, 0, 1],
           [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative) as exc:
        make_group(bad)
    a, b, c = exc.value.witness
    m = np.array(bad)
    assert m[a, m[b, c]] != m[m[a, b], c]


def test_missing_identity_and_inverse():
    with pytest.raises(NoIdentity):
        make_group([[1, 0], [0, 0]])
    with pytest.raises(NoInverse) as exc:
        make_group([[0, 1], [1, 1]])
    assert exc.value.witness == (1,)


def test_s3_permutation_model(S3):
    assert S3.order == 6 and not S3.is_abelian()
    assert S3.labels == ("e", "(23)", "(12)", "(123)", "(132)", "(13)")
    # right-to-left: (13)(12) sends 1 -> 2 -> 2, so it is (123)
    assert S3.op(el(S3, "(13)"), el(S3, "(12)")) == el(S3, "(123)")


def test_labels_distinct():
    with pytest.raises(ValueError):
        make_group([[0, 1], [1, 0]], labels=["a", "a"])


@pytest.mark.parametrize("G,order", [(cyclic_group(2), 1), (cyclic_group(4), 2),
                                     (symmetric_group(3), 6), (dihedral_group(4), 8)])
def test_automorphism_group_orders(G, order):
    Aut, perms = automorphism_group(G)
    assert Aut.order == order
    assert np.array_equal(perms[0], np.arange(G.order))
    for p in perms:
        assert (p[G.mul] == G.mul[p[:, None], p[None, :]]).all()


def _brute_automorphisms(G):
    out = []
    for p in itertools.permutations(range(G.order)):
        p = np.array(p)
        if (p[G.mul] == G.mul[p[:, None], p[None, :]]).all():
            out.append(tuple(p))
    return sorted(out)


@pytest.mark.parametrize("G", [cyclic_group(4), symmetric_group(3), dihedral_group(4)])
def test_automorphisms_exhaustive_against_brute_force(G):
    _, perms = automorphism_group(G)
    assert sorted(tuple(int(v) for v in p) for p in perms) == _brute_automorphisms(G)


def test_aut_s3_is_s3(S3):
    Aut, _ = automorphism_group(S3)
    assert find_isomorphism(Aut, S3) is not None


def test_semidirect_trivial_action_is_direct_product(Z2):
    P = semidirect_product(Z2, Z2, trivial_action(Z2, Z2))
    assert P.order == 4 and P.is_abelian()
    assert np.array_equal(P.mul, direct_product(Z2, Z2).mul)


def test_semidirect_inversion_gives_s3(Z2, S3):
    Z3 = cyclic_group(3)
    inv = GroupAction(Z2, Z3, np.array([[0, 1, 2], [0, 2, 1]]))
    P = semidirect_product(Z2, Z3, inv)
    assert P.order == 6 and not P.is_abelian()
    assert find_isomorphism(P, S3) is not None


def test_semidirect_example_in_identity_crossed_module(S3):
    P = semidirect_product(S3, S3, conjugation_action(S3))
    n = S3.order
    a = el(S3, "(13)") * n + el(S3, "(12)")
    b = el(S3, "(12)") * n + el(S3, "(123)")
    prod = P.op(a, b)
    assert divmod(prod, n) == (el(S3, "(123)"), el(S3, "(13)"))


def test_semidirect_rejects_bad_action(Z2):
    Z3 = cyclic_group(3)
    with pytest.raises(ActionInvalid):
        semidirect_product(Z2, Z3, GroupAction(Z2, Z3, np.array([[0, 1, 2], [1, 2, 0]])))


@pytest.mark.parametrize("G,order", [(cyclic_group(4), 4), (symmetric_group(3), 1),
                                     (dihedral_group(4), 2)])
def test_center(G, order):
    Z, inc = center(G)
    assert Z.order == order
    assert G.order % Z.order == 0
    for z in inc.map:
        assert all(G.op(z, g) == G.op(g, z) for g in G)


def test_homs(S3, Z2, Z4):
    make_hom(S3, S3, np.arange(6))
    make_hom(Z4, Z2, [0, 1, 0, 1])
    with pytest.raises(NotHomomorphism) as exc:
        make_hom(Z2, cyclic_group(3), [0, 1])
    x, y = exc.value.witness
    assert (x, y) == (1, 1)


def test_action_rejects_non_automorphism(Z2):
    with pytest.raises(NotAction):
        make_action(Z2, Z2, [[0, 1], [1, 0]])


def test_quotient_by_center(D4):
    Z, inc = center(D4)
    Q, proj = quotient(D4, list(inc.map))
    assert Q.order == 4 and Q.is_abelian()
    assert all(proj(D4.op(a, b)) == Q.op(proj(a), proj(b)) for a in D4 for b in D4)


def test_isomorphism_counts():
    # |Aut| isomorphisms between isomorphic groups, none otherwise
    assert len(list(isomorphisms(symmetric_group(3), symmetric_group(3)))) == 6
    assert len(list(isomorphisms(dihedral_group(4), dihedral_group(4)))) == 8
    assert find_isomorphism(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))) is None
    assert find_isomorphism(alternating_group(4), dihedral_group(6)) is None


small_groups = st.sampled_from([trivial_group(), cyclic_group(2), cyclic_group(5), symmetric_group(3),
                                dihedral_group(4), alternating_group(4)])


@settings(max_examples=30, deadline=None)
@given(small_groups, st.data())
def test_group_axioms_hold(G, data):
    a, b, c = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    assert G.op(G.op(a, b), c) == G.op(a, G.op(b, c))
    assert G.op(a, G.inverse(a)) == G.identity == G.op(G.inverse(a), a)
    assert G.op(G.identity, a) == a


@settings(max_examples=20, deadline=None)
@given(small_groups)
def test_automorphisms_form_a_group(G):
    Aut, perms = automorphism_group(G)
    perms = {tuple(int(v) for v in p) for p in perms}
    for p in perms:
        inv = tuple(int(v) for v in np.argsort(p))
        assert inv in perms
        for q in list(perms)[:4]:
            assert tuple(p[i] for i in q) in perms
