"""2-crossed modules L -> M -> N with a Peiffer lifting."""

from dataclasses import dataclass

import numpy as np

from .errors import SquareInvalid
from .groups import (GroupAction, GroupHom, action_witness, check_hom,
                     isomorphisms, is_normal, make_group, normal_closure,
                     quotient, semidirect_product, subgroup, trivial_group,
                     trivial_action)
from .report import ValidationReport, first_false
from .xmod import validate_crossed_square


@dataclass(frozen=True, eq=False)
class TwoCrossedModule:
    L: object
    M: object
    N: object
    d2: GroupHom
    d1: GroupHom
    act_M: GroupAction
    act_L: GroupAction
    peiffer: np.ndarray
    name: str | None = None

    def bracket(self, m, m2):
        return int(self.peiffer[m, m2])

    def __eq__(self, other):
        if not isinstance(other, TwoCrossedModule):
            return NotImplemented
        return (self.L == other.L and self.M == other.M and self.N == other.N
                and self.d2 == other.d2 and self.d1 == other.d1
                and self.act_M == other.act_M and self.act_L == other.act_L
                and np.array_equal(self.peiffer, other.peiffer))

    __hash__ = None


def _induced(T):
    """ind[m, l] = l · {d2(l)^-1, m}."""
    L, pf, d2 = T.L, np.asarray(T.peiffer), T.d2.map
    M = T.M
    l = np.arange(L.order)[None, :]
    m = np.arange(M.order)[:, None]
    return L.mul[l, pf[M.inv[d2[l]], m]]


def induced_action(T):
    return GroupAction(T.M, T.L, _induced(T))


def validate_2crossed(T):
    rep = ValidationReport("tcm")
    L, M, N = T.L, T.M, T.N
    d2, d1 = T.d2.map, T.d1.map
    aM, aL = T.act_M.table, T.act_L.table
    pf = np.asarray(T.peiffer)

    w = check_hom(L, M, d2)
    rep.add("d2_homomorphism", w is None, w)
    w = check_hom(M, N, d1)
    rep.add("d1_homomorphism", w is None, w)
    w = action_witness(N, M, aM)
    rep.add("action_on_M", w is None, None if w is None else w[1])
    w = action_witness(N, L, aL)
    rep.add("action_on_L", w is None, None if w is None else w[1])

    ok = d1[d2] == N.identity
    rep.add("complex", ok.all(), first_false(ok))
    ker1 = [x for x in M if d1[x] == N.identity]
    im2 = sorted(set(d2.tolist()))
    sub = set(ker1)
    normal = set(im2) <= sub and all(M.conj(k, x) in set(im2) for k in ker1 for x in im2)
    rep.add("normal_complex", normal)

    n = np.arange(N.order)[:, None]
    m = np.arange(M.order)[None, :]
    ok = d1[aM] == N.mul[N.mul[n, d1[m]], N.inv[n]]
    rep.add("d1_equivariant", ok.all(), first_false(ok, n, m))
    l = np.arange(L.order)[None, :]
    ok = d2[aL] == aM[n, d2[l]]
    rep.add("d2_equivariant", ok.all(), first_false(ok, n, l))

    ind = _induced(T)
    ma = np.arange(M.order)[:, None]
    mb = np.arange(M.order)[None, :]
    conj = M.mul[M.mul[ma, mb], M.inv[ma]]
    # 1: d2{m,m'} = (m m' m^-1)(^{d1 m} m')^-1
    ok = d2[pf] == M.mul[conj, M.inv[aM[d1[ma], mb]]]
    rep.add("axiom1", ok.all(), first_false(ok, ma, mb))
    # 2: {d2 l, d2 l'} = l l' l^-1 l'^-1
    la = np.arange(L.order)[:, None]
    lb = np.arange(L.order)[None, :]
    comm = L.mul[L.mul[L.mul[la, lb], L.inv[la]], L.inv[lb]]
    ok = pf[d2[la], d2[lb]] == comm
    rep.add("axiom2", ok.all(), first_false(ok, la, lb))
    # 3a: {m, m'm''} = {m,m'} · ^{m m' m^-1}{m, m''}
    x = np.arange(M.order)[:, None, None]
    y = np.arange(M.order)[None, :, None]
    z = np.arange(M.order)[None, None, :]
    cxy = M.mul[M.mul[x, y], M.inv[x]]
    ok = pf[x, M.mul[y, z]] == L.mul[pf[x, y], ind[cxy, pf[x, z]]]
    rep.add("axiom3a", ok.all(), first_false(ok, x, y, z))
    # 3b: {m m', m''} = {m, m' m'' m'^-1} · ^{d1 m}{m', m''}
    cyz = M.mul[M.mul[y, z], M.inv[y]]
    ok = pf[M.mul[x, y], z] == L.mul[pf[x, cyz], aL[d1[x], pf[y, z]]]
    rep.add("axiom3b", ok.all(), first_false(ok, x, y, z))
    # 4: {m, d2 l} = (^m l)(^{d1 m} l)^-1
    ok = pf[ma, d2[lb]] == L.mul[ind[ma, lb], L.inv[aL[d1[ma], lb]]]
    rep.add("axiom4", ok.all(), first_false(ok, ma, lb))
    # 5: ^n{m,m'} = {^n m, ^n m'}
    nn = np.arange(N.order)[:, None, None]
    ok = aL[nn, pf[y, z]] == pf[aM[nn, y], aM[nn, z]]
    rep.add("axiom5", ok.all(), first_false(ok, nn, y, z))

    # consequence: d2 with the induced action is a crossed module
    w = action_witness(M, L, ind)
    rep.add("induced_action_valid", w is None, None if w is None else w[1])
    ok = d2[ind] == M.mul[M.mul[ma, d2[lb]], M.inv[ma]]
    ok2 = ind[d2[la], lb] == L.mul[L.mul[la, lb], L.inv[la]]
    rep.add("induced_crossed_module", ok.all() and ok2.all(),
            first_false(ok, ma, lb) if not ok.all() else first_false(ok2, la, lb))
    return rep


def check_morphism(A, B, psi_L, psi_M, psi_N):
    """Map of complexes, equivariant for both actions, preserving the lifting."""
    rep = ValidationReport("tcm")
    psi_L, psi_M, psi_N = (np.asarray(p) for p in (psi_L, psi_M, psi_N))
    for nm, dom, cod, p in (("L", A.L, B.L, psi_L), ("M", A.M, B.M, psi_M), ("N", A.N, B.N, psi_N)):
        w = check_hom(dom, cod, p)
        rep.add(f"hom_{nm}", w is None, w)
    ok = B.d2.map[psi_L] == psi_M[A.d2.map]
    rep.add("commutes_d2", ok.all(), first_false(ok))
    ok = B.d1.map[psi_M] == psi_N[A.d1.map]
    rep.add("commutes_d1", ok.all(), first_false(ok))
    n = np.arange(A.N.order)[:, None]
    ok = psi_M[A.act_M.table] == B.act_M.table[psi_N[n], psi_M[None, :]]
    rep.add("equivariant_N_on_M", ok.all(), first_false(ok))
    ok = psi_L[A.act_L.table] == B.act_L.table[psi_N[n], psi_L[None, :]]
    rep.add("equivariant_N_on_L", ok.all(), first_false(ok))
    ok = psi_L[_induced(A)] == _induced(B)[psi_M[:, None], psi_L[None, :]]
    rep.add("equivariant_M_on_L", ok.all(), first_false(ok))
    ok = psi_L[np.asarray(A.peiffer)] == np.asarray(B.peiffer)[psi_M[:, None], psi_M[None, :]]
    rep.add("peiffer", ok.all(), first_false(ok))
    return rep


def check_isomorphism(A, B, psi_L, psi_M, psi_N):
    rep = check_morphism(A, B, psi_L, psi_M, psi_N)
    for nm, p, cod in (("L", psi_L, B.L), ("M", psi_M, B.M), ("N", psi_N, B.N)):
        rep.add(f"bijective_{nm}", len(set(np.asarray(p).tolist())) == cod.order == len(p))
    return rep


def is_isomorphic(A, B):
    """A witness (psi_L, psi_M, psi_N) of isomorphism, or None.

    The identity-shaped candidate is tried first, then an exhaustive search.
    """
    if (A.L.order, A.M.order, A.N.order) != (B.L.order, B.M.order, B.N.order):
        return None
    ident = tuple(np.arange(G.order) for G in (A.L, A.M, A.N))
    if check_isomorphism(A, B, *ident).ok:
        return ident
    for pN in isomorphisms(A.N, B.N):
        for pM in isomorphisms(A.M, B.M):
            if not np.array_equal(B.d1.map[pM], pN[A.d1.map]):
                continue
            if not np.array_equal(pM[A.act_M.table], B.act_M.table[pN[:, None], pM[None, :]]):
                continue
            for pL in isomorphisms(A.L, B.L):
                if check_isomorphism(A, B, pL, pM, pN).ok:
                    return pL, pM, pN
    return None


def homology(T):
    """(pi0, pi1, pi2) = (N / <im d1>, ker d1 / im d2, ker d2)."""
    L, M, N = T.L, T.M, T.N
    ker2 = [x for x in L if T.d2(x) == M.identity]
    pi2, _ = subgroup(L, ker2, "pi2")
    ker1 = [x for x in M if T.d1(x) == N.identity]
    K, inc = subgroup(M, ker1)
    local = {int(v): i for i, v in enumerate(inc.map)}
    im2 = [local[y] for y in T.d2.image()]
    pi1, _ = quotient(K, im2, "pi1")
    closure = normal_closure(N, T.d1.image())
    pi0, _ = quotient(N, closure, "pi0")
    return pi0, pi1, pi2


def image_d1_normal(T):
    return is_normal(T.N, T.d1.image())


def check_trivial_homology(T):
    rep = ValidationReport("tcm")
    rep.add("d2_injective", T.d2.is_injective())
    im2 = set(T.d2.image())
    ker1 = set(T.d1.kernel())
    rep.add("image_d2_is_kernel_d1", im2 == ker1, tuple(sorted(im2 ^ ker1))[:1] or None)
    rep.add("d1_surjective", T.d1.is_surjective())
    rep.add("image_d1_normal", image_d1_normal(T))
    return rep


def trivial_tcm():
    one = trivial_group()
    i = GroupHom(one, one, [0])
    a = trivial_action(one, one)
    return TwoCrossedModule(one, one, one, i, i, a, a, np.zeros((1, 1), dtype=np.int64), "trivial")


def from_crossed_module(X):
    """L = 1 over the crossed module X, with constant lifting."""
    one = trivial_group()
    return TwoCrossedModule(one, X.H, X.G, GroupHom(one, X.H, [X.H.identity]), X.t,
                            X.alpha, trivial_action(X.G, one),
                            np.zeros((X.H.order, X.H.order), dtype=np.int64),
                            f"lift({X.name})")


def extract_from_inn(X):
    """N = G, M = G ⋉ H, L = H with
    d1(f,F) = t(F) f, d2(l) = (t(l), l^-1), ^g(f,F) = (g f g^-1, ^gF),
    {(h,H), (f,F)} = ^{h f h^-1}H · H^-1.
    """
    G, H = X.G, X.H
    t, A = X.t.map, X.alpha.table
    M = semidirect_product(G, H, X.alpha)
    nH = H.order
    idx = np.arange(M.order)
    f, F = idx // nH, idx % nH
    d1 = G.mul[t[F], f]
    l = np.arange(nH)
    d2 = t[l] * nH + H.inv[l]
    g = np.arange(G.order)[:, None]
    act_M = (G.mul[G.mul[g, f[None, :]], G.inv[g]]) * nH + A[g, F[None, :]]
    hh, HH = f[:, None], F[:, None]
    ff = f[None, :]
    conj = G.mul[G.mul[hh, ff], G.inv[hh]]
    pf = H.mul[A[conj, HH], H.inv[HH]]
    return TwoCrossedModule(H, M, G, GroupHom(H, M, d2), GroupHom(M, G, d1),
                            GroupAction(G, M, act_M), X.alpha, pf, f"inn0({X.name})")


def from_cells(inn):
    """The 2-crossed module read off the cells of INN0 directly.

    N = objects, M = 1-cells out of the unit object under ⊗, L = 2-cells out
    of the unit 1-cell under ⊗. d2, d1 are the target maps; N acts by
    whiskering with objects on both sides; the lifting comes from the
    2-cell comparing conjugation with the object action.

    Returns (T, (psi_L, psi_M, psi_N)) with the maps onto extract_from_inn(X).
    """
    from .inn import InnCell1, peiffer_via_cells
    I = inn
    G, H = I.G, I.H
    e = I.eG
    m_cells = [I.index1(InnCell1(f, F, e)) for f in G for F in H]
    pos_m = {c: i for i, c in enumerate(m_cells)}
    unit = I.index1(I.identity_1(e))
    l_cells = [int(unit * I.nH + K) for K in H]        # 2-cells unit => (k, K; e)
    pos_l = {c: i for i, c in enumerate(l_cells)}

    Mt = [[pos_m[int(I.tensor1(a, b))] for b in m_cells] for a in m_cells]
    M = make_group(Mt, name="Mor1")
    def tensor2(p, r):
        s = I.tensor1(I.src2(p), I.src2(r))
        u = I.tensor1(I.tgt2(p), I.tgt2(r))
        return int(I.enc2(s, u))
    Lt = [[pos_l[tensor2(p, r)] for r in l_cells] for p in l_cells]
    L = make_group(Lt, name="Mor2")
    N = make_group(G.mul, name="Obj")

    d2 = [pos_m[int(I.tgt2(p))] for p in l_cells]
    d1 = [int(I.tgt[c]) for c in m_cells]
    act_M = [[pos_m[int(I.wleft1(G.inverse(g), I.wright1(c, g)))] for c in m_cells] for g in G]
    def whisker2(p, g):
        s = I.wleft1(G.inverse(g), I.wright1(I.src2(p), g))
        u = I.wleft1(G.inverse(g), I.wright1(I.tgt2(p), g))
        return pos_l[int(I.enc2(s, u))]
    act_L = [[whisker2(p, g) for p in l_cells] for g in G]
    label_to_l = {int(I.label2(p)): i for i, p in enumerate(l_cells)}
    pf = np.array([[label_to_l[peiffer_via_cells(I, I.cell1(a), I.cell1(b))] for b in m_cells]
                   for a in m_cells])
    T = TwoCrossedModule(L, M, N, GroupHom(L, M, d2), GroupHom(M, N, d1),
                         GroupAction(N, M, act_M), GroupAction(N, L, act_L), pf, "cells")
    psi_L = np.array([int(I.label2(p)) for p in l_cells])
    psi_M = np.array([int(I.f1[c]) * I.nH + int(I.F1[c]) for c in m_cells])
    psi_N = np.arange(G.order)
    return T, (psi_L, psi_M, psi_N)


def mapping_cone(S):
    """L -> N ⋉ M -> P with
    d1(n, m) = v(m) g(n), d2(l) = (u(l), f(l)^-1),
    {(n1, m1), (n2, m2)} = hmap(m1, n1 n2 n1^-1)^-1.
    """
    rep = validate_crossed_square(S)
    if not rep.ok:
        bad = rep.failures()[0]
        raise SquareInvalid(f"crossed square fails {bad.name}", bad.witness)
    L, M, N, P = S.L, S.M, S.N, S.P
    aM, aN, aL = S.act_M.table, S.act_N.table, S.act_L.table
    f, u, v, g = S.f.map, S.u.map, S.v.map, S.g.map
    hm = np.asarray(S.hmap)
    N_on_M = GroupAction(N, M, aM[g])
    C = semidirect_product(N, M, N_on_M)
    nM = M.order
    idx = np.arange(C.order)
    n, m = idx // nM, idx % nM
    d1 = P.mul[v[m], g[n]]
    l = np.arange(L.order)
    d2 = u[l] * nM + M.inv[f[l]]
    p = np.arange(P.order)[:, None]
    act_C = aN[p, n[None, :]] * nM + aM[p, m[None, :]]
    n1, m1 = n[:, None], m[:, None]
    n2 = n[None, :]
    pf = L.inv[hm[m1, N.mul[N.mul[n1, n2], N.inv[n1]]]]
    return TwoCrossedModule(L, C, P, GroupHom(L, C, d2), GroupHom(C, P, d1),
                            GroupAction(P, C, act_C), S.act_L, pf, f"cone({S.name})")


def compare_cone_inn(X):
    """Identity-shaped levelwise maps extract_from_inn(X) -> mapping_cone(identity_square(X))."""
    from .xmod import identity_square
    A = extract_from_inn(X)
    B = mapping_cone(identity_square(X))
    ident = tuple(np.arange(G.order) for G in (A.L, A.M, A.N))
    rep = check_isomorphism(A, B, *ident)
    same = np.array_equal(np.asarray(A.peiffer), np.asarray(B.peiffer))
    rep.add("peiffer_tables_equal", same, first_false(np.asarray(A.peiffer) == np.asarray(B.peiffer)))
    rep.add("group_tables_equal", all(np.array_equal(a.mul, b.mul)
                                      for a, b in ((A.L, B.L), (A.M, B.M), (A.N, B.N))))
    return rep
