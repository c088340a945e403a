"""Crossed modules, crossed squares and the standard constructions on a group."""

from dataclasses import dataclass

import numpy as np

from .groups import (GroupAction, GroupHom, action_witness, automorphism_group,
                     center, check_hom, conjugation_action, quotient,
                     trivial_action, trivial_group)
from .report import ValidationReport, first_false


@dataclass(frozen=True, eq=False)
class CrossedModule:
    """t: H -> G with G acting on H by ``alpha``."""

    H: object
    G: object
    t: GroupHom
    alpha: GroupAction
    name: str | None = None

    def act(self, g, h):
        return self.alpha(g, h)

    def __eq__(self, other):
        if not isinstance(other, CrossedModule):
            return NotImplemented
        return (self.H == other.H and self.G == other.G and self.t == other.t
                and self.alpha == other.alpha)

    __hash__ = None


def crossed_module(H, G, t_map, alpha_table, name=None):
    """Unvalidated candidate; run :func:`validate_crossed_module` on it."""
    return CrossedModule(H, G, GroupHom(H, G, t_map), GroupAction(G, H, alpha_table), name)


def _xmod_checks(rep, H, G, t, A, prefix=""):
    """Equivariance and Peiffer identity for t: H -> G with action table A[g, h]."""
    gi = np.arange(G.order)[:, None]
    hi = np.arange(H.order)[None, :]
    # t(^g h) = g t(h) g^-1
    lhs = t[A]
    rhs = G.mul[G.mul[gi, t[hi]], G.inv[gi]]
    rep.add(prefix + "equivariance", (lhs == rhs).all(), first_false(lhs == rhs, gi, hi))
    # ^{t(h)} h' = h h' h^-1
    h = np.arange(H.order)[:, None]
    h2 = np.arange(H.order)[None, :]
    lhs = A[t[h], h2]
    rhs = H.mul[H.mul[h, h2], H.inv[h]]
    rep.add(prefix + "peiffer", (lhs == rhs).all(), first_false(lhs == rhs, h, h2))


def validate_crossed_module(X):
    rep = ValidationReport("xmod")
    w = check_hom(X.H, X.G, X.t.map)
    rep.add("t_homomorphism", w is None, w)
    w = action_witness(X.G, X.H, X.alpha.table)
    rep.add("alpha_action", w is None, None if w is None else w[1], "" if w is None else w[0])
    _xmod_checks(rep, X.H, X.G, X.t.map, X.alpha.table)
    return rep


def classical_consequences(X):
    """im t is normal in G and ker t is central in H."""
    rep = ValidationReport("xmod")
    im = set(X.t.image())
    w = next(((g, x) for g in X.G for x in im if X.G.conj(g, x) not in im), None)
    rep.add("image_normal", w is None, w)
    w = next(((k, h) for k in X.t.kernel() for h in X.H
              if X.H.op(k, h) != X.H.op(h, k)), None)
    rep.add("kernel_central", w is None, w)
    return rep


def inn_crossed_module(G):
    """id: G -> G with G acting on itself by conjugation."""
    return CrossedModule(G, G, GroupHom(G, G, np.arange(G.order)), conjugation_action(G),
                         f"inn({G.name})")


def aut_crossed_module(G):
    """Ad: G -> Aut(G), Aut(G) acting tautologically."""
    Aut, perms = automorphism_group(G)
    pos = {tuple(p.tolist()): i for i, p in enumerate(perms)}
    conj = conjugation_action(G).table
    ad = [pos[tuple(conj[g].tolist())] for g in G]
    alpha = GroupAction(Aut, G, np.stack(perms))
    return CrossedModule(G, Aut, GroupHom(G, Aut, ad), alpha, f"aut({G.name})")


def inclusion_crossed_module(G, normal_elements, name=None):
    """Normal subgroup inclusion with conjugation action."""
    from .groups import subgroup
    N, inc = subgroup(G, normal_elements)
    table = [[inc.map.tolist().index(G.conj(g, inc(n))) for n in N] for g in G]
    return CrossedModule(N, G, inc, GroupAction(G, N, table), name)


def trivial_crossed_module():
    one = trivial_group()
    return CrossedModule(one, one, GroupHom(one, one, [0]), trivial_action(one, one), "trivial")


# morphisms and the tower

@dataclass(frozen=True, eq=False)
class CrossedModuleMorphism:
    src: CrossedModule
    tgt: CrossedModule
    on_H: GroupHom
    on_G: GroupHom


def validate_morphism(phi, prefix=""):
    rep = ValidationReport("xmod")
    X, Y = phi.src, phi.tgt
    w = check_hom(X.H, Y.H, phi.on_H.map)
    rep.add(prefix + "hom_H", w is None, w)
    w = check_hom(X.G, Y.G, phi.on_G.map)
    rep.add(prefix + "hom_G", w is None, w)
    lhs = Y.t.map[phi.on_H.map]
    rhs = phi.on_G.map[X.t.map]
    rep.add(prefix + "commutes_with_t", (lhs == rhs).all(), first_false(lhs == rhs))
    lhs = phi.on_H.map[X.alpha.table]
    rhs = Y.alpha.table[phi.on_G.map[:, None], phi.on_H.map[None, :]]
    rep.add(prefix + "equivariant", (lhs == rhs).all(), first_false(lhs == rhs))
    return rep


def _exact_at(rep, name, incoming, outgoing):
    im = set(incoming.image())
    ker = set(outgoing.kernel())
    w = tuple(sorted(im ^ ker))[:1]
    rep.add(name, im == ker, w or None)


@dataclass
class Tower:
    modules: list
    maps: list
    report: ValidationReport


def one_group_tower(G):
    """(1 -> Z(G)) -> (G -> G) -> (G -> Aut G) -> (1 -> Out G) with exactness checks."""
    one = trivial_group()
    Z, z_inc = center(G)
    inn = inn_crossed_module(G)
    aut = aut_crossed_module(G)
    Aut = aut.G
    Out, out_proj = quotient(Aut, aut.t.image(), f"Out({G.name})")

    center_xm = CrossedModule(one, Z, GroupHom(one, Z, [Z.identity]), trivial_action(Z, one),
                              f"center({G.name})")
    out_xm = CrossedModule(one, Out, GroupHom(one, Out, [Out.identity]), trivial_action(Out, one),
                           f"out({G.name})")
    m1 = CrossedModuleMorphism(center_xm, inn, GroupHom(one, G, [G.identity]), z_inc)
    m2 = CrossedModuleMorphism(inn, aut, GroupHom(G, G, np.arange(G.order)), aut.t)
    m3 = CrossedModuleMorphism(aut, out_xm, GroupHom(G, one, np.zeros(G.order, dtype=np.int64)),
                               out_proj)
    rep = ValidationReport("xmod")
    for i, X in enumerate([center_xm, inn, aut, out_xm]):
        rep.merge(validate_crossed_module(X), f"module{i}.")
    for i, m in enumerate([m1, m2, m3]):
        rep.merge(validate_morphism(m), f"map{i}.")
    for level in ("H", "G"):
        homs = [getattr(m, "on_" + level) for m in (m1, m2, m3)]
        rep.add(f"{level}.injective_start", homs[0].is_injective())
        _exact_at(rep, f"{level}.exact_1", homs[0], homs[1])
        _exact_at(rep, f"{level}.exact_2", homs[1], homs[2])
        rep.add(f"{level}.surjective_end", homs[2].is_surjective())
    return Tower([center_xm, inn, aut, out_xm], [m1, m2, m3], rep)


# crossed squares

@dataclass(frozen=True, eq=False)
class CrossedSquare:
    """Commuting square  f: L -> M, u: L -> N, v: M -> P, g: N -> P  of P-groups
    with structure map ``hmap[x, y]`` for x in M, y in N.
    """

    L: object
    M: object
    N: object
    P: object
    f: GroupHom
    u: GroupHom
    v: GroupHom
    g: GroupHom
    act_L: GroupAction
    act_M: GroupAction
    act_N: GroupAction
    hmap: np.ndarray
    name: str | None = None

    def h(self, x, y):
        return int(self.hmap[x, y])


def identity_square(X):
    """f = g = id, u = v = t, hmap(x, y) = x · ^y(x^-1) on M = H, N = G."""
    H, G = X.H, X.G
    A = X.alpha.table
    x = np.arange(H.order)[:, None]
    y = np.arange(G.order)[None, :]
    hmap = H.mul[x, A[y, H.inv[x]]]
    ident_H = GroupHom(H, H, np.arange(H.order))
    ident_G = GroupHom(G, G, np.arange(G.order))
    return CrossedSquare(H, H, G, G, ident_H, X.t, X.t, ident_G,
                         X.alpha, X.alpha, conjugation_action(G), hmap,
                         f"square({X.name})")


def commutator_square(P, M_elements, N_elements, name=None):
    """Normal subgroups M, N of P with L = M ∩ N and hmap the commutator."""
    from .groups import subgroup
    M, incM = subgroup(P, M_elements)
    N, incN = subgroup(P, N_elements)
    L, incL = subgroup(P, sorted(set(M_elements) & set(N_elements)))
    def local(sub_inc, x):
        return sub_inc.map.tolist().index(x)
    f = GroupHom(L, M, [local(incM, incL(z)) for z in L])
    u = GroupHom(L, N, [local(incN, incL(z)) for z in L])
    def conj_table(S, inc):
        return [[local(inc, P.conj(p, inc(s))) for s in S] for p in P]
    hmap = np.array([[local(incL, P.commutator(incM(x), incN(y))) for y in N] for x in M])
    return CrossedSquare(L, M, N, P, f, u, incM, incN,
                         GroupAction(P, L, conj_table(L, incL)),
                         GroupAction(P, M, conj_table(M, incM)),
                         GroupAction(P, N, conj_table(N, incN)), hmap, name)


def trivial_square():
    one = trivial_group()
    i = GroupHom(one, one, [0])
    a = trivial_action(one, one)
    return CrossedSquare(one, one, one, one, i, i, i, i, a, a, a, np.zeros((1, 1), dtype=np.int64),
                         "trivial")


def validate_crossed_square(S):
    rep = ValidationReport("xmod")
    L, M, N, P = S.L, S.M, S.N, S.P
    f, u, v, g = S.f.map, S.u.map, S.v.map, S.g.map
    aL, aM, aN = S.act_L.table, S.act_M.table, S.act_N.table
    hm = np.asarray(S.hmap)

    for nm, dom, cod, m in (("f", L, M, f), ("u", L, N, u), ("v", M, P, v), ("g", N, P, g)):
        w = check_hom(dom, cod, m)
        rep.add(f"hom_{nm}", w is None, w)
    for nm, T, A in (("L", L, aL), ("M", M, aM), ("N", N, aN)):
        w = action_witness(P, T, A)
        rep.add(f"action_on_{nm}", w is None, None if w is None else w[1])
    ok = v[f] == g[u]
    rep.add("commutes", ok.all(), first_false(ok))

    # 1: f, u are P-equivariant; N -> P, M -> P, L -> P are crossed modules
    eq_f = f[aL] == aM[np.arange(P.order)[:, None], f[None, :]]
    eq_u = u[aL] == aN[np.arange(P.order)[:, None], u[None, :]]
    ok = eq_f.all() and eq_u.all()
    rep.add("ax1_equivariant_maps", ok, first_false(eq_f) if not eq_f.all() else first_false(eq_u))
    sub = ValidationReport("xmod")
    _xmod_checks(sub, N, P, g, aN, "N.")
    _xmod_checks(sub, M, P, v, aM, "M.")
    _xmod_checks(sub, L, P, v[f], aL, "L.")
    bad = sub.failures()
    rep.add("ax1_crossed_modules", not bad, bad[0].witness if bad else None,
            bad[0].name if bad else "")

    x = np.arange(M.order)[:, None]
    y = np.arange(N.order)[None, :]
    # 2: f(h(x,y)) = x ^{g(y)}x^-1 ; u(h(x,y)) = ^{v(x)}y y^-1
    a = f[hm] == M.mul[x, aM[g[y], M.inv[x]]]
    b = u[hm] == N.mul[aN[v[x], y], N.inv[y]]
    rep.add("ax2", a.all() and b.all(), first_false(a, x, y) if not a.all() else first_false(b, x, y))
    # 3: h(f(z), y) = z ^{g(y)}z^-1 ; h(x, u(z)) = ^{v(x)}z z^-1
    z = np.arange(L.order)
    zc = z[:, None]
    a = hm[f[zc], y] == L.mul[zc, aL[g[y], L.inv[zc]]]
    zr = z[None, :]
    b = hm[x, u[zr]] == L.mul[aL[v[x], zr], L.inv[zr]]
    rep.add("ax3", a.all() and b.all(), first_false(a, zc, y) if not a.all() else first_false(b, x, zr))
    # 4: h(xx', y) = ^{v(x)}h(x', y) · h(x, y) ; h(x, yy') = h(x, y) · ^{g(y)}h(x, y')
    X1 = np.arange(M.order)[:, None, None]
    X2 = np.arange(M.order)[None, :, None]
    Y1 = np.arange(N.order)[None, None, :]
    a = hm[M.mul[X1, X2], Y1] == L.mul[aL[v[X1], hm[X2, Y1]], hm[X1, Y1]]
    Xc = np.arange(M.order)[:, None, None]
    Ya = np.arange(N.order)[None, :, None]
    Yb = np.arange(N.order)[None, None, :]
    b = hm[Xc, N.mul[Ya, Yb]] == L.mul[hm[Xc, Ya], aL[g[Ya], hm[Xc, Yb]]]
    rep.add("ax4", a.all() and b.all(),
            first_false(a, X1, X2, Y1) if not a.all() else first_false(b, Xc, Ya, Yb))
    # 5: h(^p x, ^p y) = ^p h(x, y)
    p = np.arange(P.order)[:, None, None]
    xx = np.arange(M.order)[None, :, None]
    yy = np.arange(N.order)[None, None, :]
    a = hm[aM[p, xx], aN[p, yy]] == aL[p, hm[xx, yy]]
    rep.add("ax5", a.all(), first_false(a, p, xx, yy))
    return rep
