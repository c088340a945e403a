"""The inner automorphism 3-group INN0 of a crossed module, as an enumerated
2-groupoid with its monoidal product.

Cells:
    objects   q in G
    1-cells   (f, F; q): q -> t(F)·f·q
    2-cells   between parallel 1-cells (f, F; q) => (k, K; q), unique,
              with label L = K^-1·F, so that t(L)·f = k.

1-cells are numbered (q*|G| + f)*|H| + F. A 2-cell is numbered s*|H| + K
where s is its source 1-cell and K the H-part of its target.
"""

from typing import NamedTuple

import numpy as np

from .errors import BudgetExceeded, NotComposable
from .report import ValidationReport, first_false


class InnCell0(NamedTuple):
    g: int


class InnCell1(NamedTuple):
    f: int
    F: int
    src: int


class InnCell2(NamedTuple):
    src1: InnCell1
    tgt1: InnCell1


def _chunks(n, size):
    for start in range(0, n, size):
        yield start, min(n, start + size)


class Inn0:
    def __init__(self, X, budget=10_000):
        self.X = X
        self.G, self.H = X.G, X.H
        nG, nH = X.G.order, X.H.order
        self.nG, self.nH = nG, nH
        self.n1 = nG * nG * nH
        if self.n1 > budget:
            raise BudgetExceeded(self.n1, budget)
        self.n2 = self.n1 * nH
        self.Gm, self.Gi = X.G.mul, X.G.inv
        self.Hm, self.Hi = X.H.mul, X.H.inv
        self.t = X.t.map
        self.A = X.alpha.table
        self.eG, self.eH = X.G.identity, X.H.identity

        idx = np.arange(self.n1)
        self.q1 = idx // (nG * nH)
        self.f1 = (idx // nH) % nG
        self.F1 = idx % nH
        self.tgt = self.target_obj(self.f1, self.F1, self.q1)

    # -- vectorized cell algebra (arrays or scalars) --

    def enc1(self, f, F, q):
        return (q * self.nG + f) * self.nH + F

    def dec1(self, i):
        return self.f1[i], self.F1[i], self.q1[i]

    def target_obj(self, f, F, q):
        return self.Gm[self.Gm[self.t[F], f], q]

    def conjG(self, g, x):
        return self.Gm[self.Gm[g, x], self.Gi[g]]

    def comp1(self, a, b):
        """a then b."""
        fa, Fa, qa = self.dec1(a)
        fb, Fb, _ = self.dec1(b)
        return self.enc1(self.Gm[fb, fa], self.Hm[Fb, self.A[fb, Fa]], qa)

    def inv1(self, a):
        f, F, _ = self.dec1(a)
        fi = self.Gi[f]
        return self.enc1(fi, self.A[fi, self.Hi[F]], self.tgt[a])

    def tensor1(self, a, b):
        """a ⊗ b with a the left factor: object q_a q_b."""
        fa, Fa, qa = self.dec1(a)
        fb, Fb, qb = self.dec1(b)
        return self.enc1(self.Gm[fa, self.conjG(qa, fb)],
                         self.Hm[Fa, self.A[self.Gm[fa, qa], Fb]],
                         self.Gm[qa, qb])

    def wleft1(self, g, a):
        """Ad_g applied first, then the transformation a."""
        f, F, q = self.dec1(a)
        return self.enc1(f, F, self.Gm[q, g])

    def wright1(self, a, g):
        """The transformation a, then Ad_g."""
        f, F, q = self.dec1(a)
        return self.enc1(self.conjG(g, f), self.A[g, F], self.Gm[g, q])

    def id1(self, q):
        return self.enc1(self.eG, self.eH, q)

    def src2(self, p):
        return p // self.nH

    def tgt2(self, p):
        s = p // self.nH
        K = p % self.nH
        f, F, q = self.dec1(s)
        k = self.Gm[self.Gm[self.Gi[self.t[K]], self.tgt[s]], self.Gi[q]]
        return self.enc1(k, K, q)

    def label2(self, p):
        """Label forced by the boundary: K^-1·F."""
        s = p // self.nH
        return self.Hm[self.Hi[p % self.nH], self.F1[s]]

    def from_label(self, s, L):
        """The 2-cell out of 1-cell s with label L."""
        return s * self.nH + self.Hm[self.F1[s], self.Hi[L]]

    def enc2(self, s, u):
        """2-cell between parallel 1-cells s, u (no parallelism check)."""
        return s * self.nH + self.F1[u]

    def parallel(self, s, u):
        return (self.q1[s] == self.q1[u]) & (self.tgt[s] == self.tgt[u])

    def out1(self, q, j):
        """The j-th 1-cell out of object q, 0 <= j < |G||H|."""
        return self.enc1(j // self.nH, j % self.nH, q)

    # label formulas
    def vlabel(self, Lp, Lr):
        return self.Hm[Lr, Lp]

    def hlabel(self, Lp, Lr, f_r):
        """p then r along objects; f_r is the f-part of r's source."""
        return self.Hm[Lr, self.A[f_r, Lp]]

    def tensor_label(self, Lp, Lr, f_p, q_p):
        return self.Hm[Lp, self.A[self.Gm[f_p, q_p], Lr]]

    # -- scalar API --

    def cell1(self, i):
        f, F, q = self.dec1(i)
        return InnCell1(int(f), int(F), int(q))

    def index1(self, m):
        return int(self.enc1(m.f, m.F, m.src))

    def cell2(self, p):
        return InnCell2(self.cell1(self.src2(p)), self.cell1(self.tgt2(p)))

    def index2(self, c):
        s, u = self.index1(c.src1), self.index1(c.tgt1)
        if not self.parallel(s, u):
            raise NotComposable("1-cells are not parallel", (c.src1, c.tgt1))
        return int(self.enc2(s, u))

    def objects(self):
        return [InnCell0(q) for q in self.G]

    def one_cells(self):
        return [self.cell1(i) for i in range(self.n1)]

    def target(self, m):
        return InnCell0(int(self.target_obj(m.f, m.F, m.src)))

    def identity_1(self, q):
        q = q.g if isinstance(q, InnCell0) else q
        return InnCell1(self.eG, self.eH, int(q))

    def identity_2(self, m):
        return InnCell2(m, m)

    def compose_mor1(self, a, b):
        if self.target(a).g != b.src:
            raise NotComposable("target(a) != src(b)", (a, b))
        return self.cell1(self.comp1(self.index1(a), self.index1(b)))

    def inverse_mor1(self, a):
        return self.cell1(self.inv1(self.index1(a)))

    def whisker_obj_left(self, g, m):
        g = g.g if isinstance(g, InnCell0) else g
        return self.cell1(self.wleft1(g, self.index1(m)))

    def whisker_obj_right(self, m, g):
        g = g.g if isinstance(g, InnCell0) else g
        return self.cell1(self.wright1(self.index1(m), g))

    def tensor_mor1(self, a, b):
        return self.cell1(self.tensor1(self.index1(a), self.index1(b)))

    def two_cell(self, s, u):
        """The unique 2-cell s => u."""
        c = InnCell2(s, u)
        self.index2(c)
        return c

    def label(self, c):
        return int(self.label2(self.index2(c)))

    def vcompose_mor2(self, p, r):
        if p.tgt1 != r.src1:
            raise NotComposable("target(p) != source(r)", (p, r))
        return self.two_cell(p.src1, r.tgt1)

    def hcompose_mor2(self, p, r):
        return self.two_cell(self.compose_mor1(p.src1, r.src1), self.compose_mor1(p.tgt1, r.tgt1))

    def whisker_1cell(self, m, p, side):
        """Compose the 2-cell p with a 1-cell: side 'pre' is m then p, 'post' is p then m."""
        if side == "pre":
            return self.hcompose_mor2(self.identity_2(m), p)
        if side == "post":
            return self.hcompose_mor2(p, self.identity_2(m))
        raise ValueError(side)

    def tensor_mor2(self, p, r):
        return InnCell2(self.tensor_mor1(p.src1, r.src1), self.tensor_mor1(p.tgt1, r.tgt1))

    def whisker_mor2(self, p, m, side):
        """Tensor of p with the identity 2-cell on m: 'right' is p ⊗ m, 'left' is m ⊗ p."""
        if side == "right":
            return self.tensor_mor2(p, self.identity_2(m))
        if side == "left":
            return self.tensor_mor2(self.identity_2(m), p)
        raise ValueError(side)

    def whisker_label(self, p, m, side):
        """Label of :meth:`whisker_mor2` by its closed formula."""
        L = self.label(p)
        if side == "right":
            q = p.src1.src
            G_ = m.F
            k = p.tgt1.f
            left = self.A[self.Gm[k, q], self.Hi[G_]]
            return int(self.Hm[self.Hm[left, L], self.A[self.Gm[p.src1.f, q], G_]])
        return int(self.A[self.Gm[m.f, m.src], L])

    def act_on_2cell(self, m, p):
        """m ⊗ p ⊗ m^-1, for m a 1-cell and p a 2-cell out of the unit 1-cell."""
        mi = self.cell1(self.inv1(self.index1(m)))
        mi = InnCell1(mi.f, mi.F, self.G.inverse(m.src))
        return self.tensor_mor2(self.tensor_mor2(self.identity_2(m), p), self.identity_2(mi))


def build_inn(X, budget=10_000):
    return Inn0(X, budget)


# -- structural checks --

def check_strictness(inn, chunk=1 << 20):
    """Associativity, units, interchange and inverses, exhaustively.

    Labels are computed by the composition formulas and compared."""
    I = inn
    nG, nH, n1 = I.nG, I.nH, I.n1
    rep = ValidationReport("inn")
    per_obj = nG * nH

    # 1-cells
    a = np.arange(n1)[:, None, None]
    j = np.arange(per_obj)[None, :, None]
    k = np.arange(per_obj)[None, None, :]
    b = I.out1(I.tgt[a], j)
    c = I.out1(I.tgt[b], k)
    lhs = I.comp1(I.comp1(a, b), c)
    rhs = I.comp1(a, I.comp1(b, c))
    ok = lhs == rhs
    rep.add("assoc_1cells", ok.all(), first_false(ok, a, b, c))
    al = np.arange(n1)
    ok = (I.comp1(I.id1(I.q1[al]), al) == al) & (I.comp1(al, I.id1(I.tgt[al])) == al)
    rep.add("unit_1cells", ok.all(), first_false(ok, al))
    ok = (I.comp1(al, I.inv1(al)) == I.id1(I.q1[al])) & (I.comp1(I.inv1(al), al) == I.id1(I.tgt[al]))
    rep.add("inverse_1cells", ok.all(), first_false(ok, al))
    ok = I.tgt[I.comp1(a[:, :, 0], b[:, :, 0])] == I.tgt[b[:, :, 0]]
    rep.add("target_of_composite", ok.all(), first_false(ok))

    # vertical: 2-cells over s, given by the H-part of each boundary
    s = np.arange(n1)[:, None, None, None]
    K1 = np.arange(nH)[None, :, None, None]
    K2 = np.arange(nH)[None, None, :, None]
    K3 = np.arange(nH)[None, None, None, :]
    f, F, q = I.dec1(s)
    def par(Ki):
        # the 1-cell parallel to s with H-part Ki
        kf = I.Gm[I.Gm[I.Gi[I.t[Ki]], I.tgt[s]], I.Gi[q]]
        return I.enc1(kf, Ki, q)
    u1, u2, u3 = par(K1), par(K2), par(K3)
    L01 = I.label2(I.enc2(s, u1))
    L12 = I.label2(I.enc2(u1, u2))
    L23 = I.label2(I.enc2(u2, u3))
    lhs = I.vlabel(I.vlabel(L01, L12), L23)
    rhs = I.vlabel(L01, I.vlabel(L12, L23))
    ok = (lhs == rhs) & (lhs == I.label2(I.enc2(s, u3)))
    rep.add("assoc_vertical", ok.all(), first_false(ok, s, u1, u2, u3))
    sv = np.arange(n1)[:, None]
    Kv = np.arange(nH)[None, :]
    pv = sv * nH + Kv
    Lp = I.label2(pv)
    ok = (I.vlabel(I.eH, Lp) == Lp) & (I.vlabel(Lp, I.eH) == Lp)
    ok &= I.label2(I.enc2(sv, sv)) == I.eH
    rep.add("unit_vertical", ok.all(), first_false(ok, pv))
    inv_p = I.enc2(I.tgt2(pv), sv)
    ok = (I.vlabel(Lp, I.label2(inv_p)) == I.eH) & (I.label2(inv_p) == I.Hi[Lp])
    rep.add("inverse_vertical", ok.all(), first_false(ok, pv))

    # horizontal: p over a (s => u), r over b (s' => u') with src(s') = tgt(s)
    p_all = np.arange(I.n2)
    ok_assoc, w_assoc = True, None
    ok_unit, w_unit = True, None
    # unit: identity 2-cell on identity 1-cells on both sides
    sp, up = I.src2(p_all), I.tgt2(p_all)
    Lp = I.label2(p_all)
    idl = I.hlabel(I.eH, Lp, I.f1[sp])    # id_{id_q} then p
    idr = I.hlabel(Lp, I.eH, I.eG)        # p then id_{id_q'}
    ok = (idl == Lp) & (idr == Lp)
    rep.add("unit_horizontal", ok.all(), first_false(ok, p_all))

    # horizontal inverse: p^-1 over s^-1 => u^-1
    pi = I.enc2(I.inv1(sp), I.inv1(up))
    Li = I.label2(pi)
    ok = (I.hlabel(Lp, Li, I.f1[I.inv1(sp)]) == I.eH) & (I.hlabel(Li, Lp, I.f1[sp]) == I.eH)
    ok &= Li == I.A[I.Gi[I.f1[sp]], I.Hi[Lp]]
    rep.add("inverse_horizontal", ok.all(), first_false(ok, p_all))

    # 2-cells out of object q: (j, K) pairs, j indexing the source 1-cell
    per2 = per_obj * nH
    def out2(qq, jj):
        return I.out1(qq, jj // nH) * nH + jj % nH
    rr = np.arange(per2)[:, None]
    tt = np.arange(per2)[None, :]
    for p in range(I.n2):
        s0, u0 = I.src2(p), I.tgt2(p)
        q1 = I.tgt[s0]
        r = out2(q1, rr)
        sr, ur = I.src2(r), I.tgt2(r)
        t_ = out2(I.tgt[sr], tt)
        st, ut = I.src2(t_), I.tgt2(t_)
        L0, Lr, Lt = I.label2(p), I.label2(r), I.label2(t_)
        lhs = I.hlabel(I.hlabel(L0, Lr, I.f1[sr]), Lt, I.f1[st])
        rhs = I.hlabel(L0, I.hlabel(Lr, Lt, I.f1[st]), I.f1[I.comp1(sr, st)])
        bound = I.label2(I.enc2(I.comp1(I.comp1(s0, sr), st), I.comp1(I.comp1(u0, ur), ut)))
        ok = (lhs == rhs) & (lhs == bound)
        if not ok.all():
            ok_assoc, w_assoc = False, (p,) + first_false(ok, r, t_)
            break
    rep.add("assoc_horizontal", ok_assoc, w_assoc)

    # interchange: (α;β) then (γ;δ) along objects equals (α then γ);(β then δ)
    ok_ic, w_ic = True, None
    j = np.arange(per_obj)[:, None, None]
    Kb2 = np.arange(nH)[None, :, None]
    Kc2 = np.arange(nH)[None, None, :]
    for a0 in range(n1):
        fa, Fa, qa = I.dec1(a0)
        for Kb in range(nH):
            b0 = int(I.enc1(I.Gm[I.Gm[I.Gi[I.t[Kb]], I.tgt[a0]], I.Gi[qa]], Kb, qa))
            for Kc in range(nH):
                c0 = int(I.enc1(I.Gm[I.Gm[I.Gi[I.t[Kc]], I.tgt[a0]], I.Gi[qa]], Kc, qa))
                La = I.label2(I.enc2(a0, b0))
                Lb = I.label2(I.enc2(b0, c0))
                a1 = I.out1(I.tgt[a0], j)
                q1_ = I.q1[a1]
                def par1(Ki):
                    kf = I.Gm[I.Gm[I.Gi[I.t[Ki]], I.tgt[a1]], I.Gi[q1_]]
                    return I.enc1(kf, Ki, q1_)
                b1, c1 = par1(Kb2), par1(Kc2)
                Lg = I.label2(I.enc2(a1, b1))
                Ld = I.label2(I.enc2(b1, c1))
                lhs = I.hlabel(I.vlabel(La, Lb), I.vlabel(Lg, Ld), I.f1[a1])
                rhs = I.vlabel(I.hlabel(La, Lg, I.f1[a1]), I.hlabel(Lb, Ld, I.f1[b1]))
                ok = lhs == rhs
                if not ok.all():
                    ok_ic = False
                    w_ic = (a0, b0, c0) + first_false(ok, a1, b1, c1)
                    break
            if not ok_ic:
                break
        if not ok_ic:
            break
    rep.add("interchange", ok_ic, w_ic)
    return rep


def check_label_formulas(inn):
    """Every composition, whiskering and product formula for 2-cell labels
    agrees with the label forced by the boundary of the result."""
    I = inn
    nG, nH, n1, n2 = I.nG, I.nH, I.n1, I.n2
    rep = ValidationReport("inn")
    per_obj = nG * nH
    p = np.arange(n2)[:, None]
    s, u = I.src2(p), I.tgt2(p)
    Lp = I.label2(p)

    # vertical: p then r with r out of u
    Kr = np.arange(nH)[None, :]
    r = u * nH + Kr
    w_ = I.tgt2(r)
    ok = I.vlabel(Lp, I.label2(r)) == I.label2(I.enc2(s, w_))
    rep.add("vertical_label", ok.all(), first_false(ok, p, r))

    # horizontal: p then r, r any 2-cell out of the target object
    jr = np.arange(per_obj * nH)[None, :]
    r = I.out1(I.tgt[s], jr // nH) * nH + jr % nH
    sr, ur = I.src2(r), I.tgt2(r)
    lab = I.hlabel(Lp, I.label2(r), I.f1[sr])
    ok = lab == I.label2(I.enc2(I.comp1(s, sr), I.comp1(u, ur)))
    rep.add("horizontal_label", ok.all(), first_false(ok, p, r))

    # whiskering by 1-cells
    m = I.out1(I.tgt[s], np.arange(per_obj)[None, :])
    ok = I.A[I.f1[m], Lp] == I.label2(I.enc2(I.comp1(s, m), I.comp1(u, m)))
    rep.add("post_whisker_label", ok.all(), first_false(ok, p, m))
    # m then p: m ends at the source object of p
    mm = np.arange(n1)[None, :]
    ok_pre = True
    w_pre = None
    for q in range(nG):
        sel = I.q1[s[:, 0]] == q
        ps = p[sel]
        ms = mm[:, I.tgt[mm[0]] == q]
        ss, us = I.src2(ps), I.tgt2(ps)
        ok = I.label2(ps) == I.label2(I.enc2(I.comp1(ms, ss), I.comp1(ms, us)))
        if not ok.all():
            ok_pre, w_pre = False, first_false(ok, ps, ms)
            break
    rep.add("pre_whisker_label", ok_pre, w_pre)

    # object whiskering
    g = np.arange(nG)[None, :]
    ok = Lp == I.label2(I.enc2(I.wleft1(g, s), I.wleft1(g, u)))
    rep.add("object_whisker_left_label", ok.all(), first_false(ok, p, g))
    ok = I.A[g, Lp] == I.label2(I.enc2(I.wright1(s, g), I.wright1(u, g)))
    rep.add("object_whisker_right_label", ok.all(), first_false(ok, p, g))
    # object whiskering is tensoring with identity 1-cells
    a = np.arange(n1)[:, None]
    ok = (I.wleft1(g, a) == I.tensor1(a, I.id1(g))) & (I.wright1(a, g) == I.tensor1(I.id1(g), a))
    rep.add("object_whisker_is_tensor", ok.all(), first_false(ok, a, g))

    # tensor with the identity 2-cell of a 1-cell, closed formulas
    m = np.arange(n1)[None, :]
    _, Gm_, qm = I.dec1(m)
    fs, Fs, qs = I.dec1(s)
    k = I.f1[u]
    right = I.Hm[I.Hm[I.A[I.Gm[k, qs], I.Hi[Gm_]], Lp], I.A[I.Gm[fs, qs], Gm_]]
    ok = right == I.label2(I.enc2(I.tensor1(s, m), I.tensor1(u, m)))
    ok &= right == Lp
    rep.add("whisker_2cell_right_label", ok.all(), first_false(ok, p, m))
    left = I.A[I.Gm[I.f1[m], qm], Lp]
    ok = left == I.label2(I.enc2(I.tensor1(m, s), I.tensor1(m, u)))
    rep.add("whisker_2cell_left_label", ok.all(), first_false(ok, p, m))

    # tensor of two 2-cells
    ok_t, w_t = True, None
    r = np.arange(n2)[None, :]
    sr, ur = I.src2(r), I.tgt2(r)
    Lr = I.label2(r)
    for lo, hi in _chunks(n2, max(1, (1 << 21) // n2)):
        pc = p[lo:hi]
        sc, uc = s[lo:hi], u[lo:hi]
        lab = I.tensor_label(Lp[lo:hi], Lr, I.f1[sc], I.q1[sc])
        ok = lab == I.label2(I.enc2(I.tensor1(sc, sr), I.tensor1(uc, ur)))
        if not ok.all():
            ok_t, w_t = False, first_false(ok, pc, r)
            break
    rep.add("tensor_label", ok_t, w_t)
    return rep


def pi0(inn):
    """(number of components, connecting 1-cell from object 0 to each q)."""
    parent = list(range(inn.nG))
    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for i in range(inn.n1):
        a, b = find(int(inn.q1[i])), find(int(inn.tgt[i]))
        if a != b:
            parent[max(a, b)] = min(a, b)
    count = len({find(x) for x in range(inn.nG)})
    return count, [connecting_cell(inn, inn.eG, q) for q in inn.G]


def connecting_cell(inn, q, q2):
    """The 1-cell q -> q2 with trivial H-part: f = q2·q^-1."""
    G = inn.G
    return InnCell1(G.op(q2, G.inverse(q)), inn.eH, q)


def check_connected(inn):
    rep = ValidationReport("inn")
    count, _ = pi0(inn)
    rep.add("pi0_is_1", count == 1, None if count == 1 else (count,))
    bad = None
    for q in inn.G:
        for q2 in inn.G:
            m = connecting_cell(inn, q, q2)
            if inn.target(m).g != q2:
                bad = (q, q2)
                break
    rep.add("connecting_cells", bad is None, bad)
    return rep


def check_codiscrete(inn):
    """Exactly one 2-cell for each ordered pair of parallel 1-cells.

    A 2-cell (f, F) => (k, K) is an L in H with t(L)·f = k and F = K·L;
    solutions are counted by brute force over L.
    """
    I = inn
    rep = ValidationReport("inn")
    s = np.arange(I.n1)[:, None]
    j = np.arange(I.nG * I.nH)[None, :]
    u = I.out1(I.q1[s], j)          # every 1-cell with the same source object
    fs, Fs, _ = I.dec1(s)
    fu, Fu, _ = I.dec1(u)
    count = np.zeros(u.shape, dtype=np.int64)
    for L in range(I.nH):
        count += (I.Gm[I.t[L], fs] == fu) & (I.Hm[Fu, L] == Fs)
    par = I.parallel(s, u)
    ok = np.where(par, count == 1, count == 0)
    rep.add("one_2cell_per_parallel_pair", ok.all(), first_false(ok, s, u))
    # the numbering of 2-cells covers each parallel pair once
    n_par = int(par.sum())
    rep.add("2cell_count", n_par == I.n2, None if n_par == I.n2 else (n_par, I.n2))
    return rep


def check_exact_sequence(X, budget=10_000):
    """G(2) -> INN0 -> BG(2): injective, surjective, image = preimage of identities."""
    I = Inn0(X, budget)
    nG, nH = I.nG, I.nH
    rep = ValidationReport("inn")

    # inclusion: 1-cell (g, h): g -> t(h)g of G(2) goes to (e, h; g); 2-cells are identities
    g = np.arange(nG)[:, None]
    h = np.arange(nH)[None, :]
    inc1 = I.enc1(I.eG, h, g)
    inc2 = I.enc2(inc1, inc1)
    ok = I.tgt[inc1] == I.Gm[I.t[h], g]
    rep.add("inclusion_on_boundaries", ok.all(), first_false(ok, g, h))
    h2 = np.arange(nH)[None, None, :]
    lhs = I.comp1(inc1[:, :, None], I.enc1(I.eG, h2, I.Gm[I.t[h[:, :, None]], g[:, :, None]]))
    rhs = I.enc1(I.eG, I.Hm[h2, h[:, :, None]], g[:, :, None])
    ok = lhs == rhs
    rep.add("inclusion_functorial", ok.all(), first_false(ok))
    flat = inc2.ravel()
    rep.add("injective", np.unique(flat).size == flat.size)

    # projection: 2-cell ((f,F) => (k,K), L) goes to the 2-cell (f, L) of BG(2)
    p = np.arange(I.n2)
    s = I.src2(p)
    proj = I.f1[s] * nH + I.label2(p)
    ok = np.bincount(proj, minlength=nG * nH) > 0
    rep.add("surjective", ok.all(), first_false(ok))
    # target 1-cell is preserved: t(L)·f = k
    ok = I.Gm[I.t[I.label2(p)], I.f1[s]] == I.f1[I.tgt2(p)]
    rep.add("projection_on_boundaries", ok.all(), first_false(ok, p))
    # horizontal functoriality: image of p then r is hcompose in BG(2)
    r = np.arange(I.nG * I.nH * nH)[None, :]
    p_ = p[:, None]
    sp = I.src2(p_)
    r_ = I.out1(I.tgt[sp], r // nH) * nH + r % nH
    sr = I.src2(r_)
    comp = I.enc2(I.comp1(sp, sr), I.comp1(I.tgt2(p_), I.tgt2(r_)))
    lhs_f = I.f1[I.src2(comp)]
    lhs_L = I.label2(comp)
    rhs_f = I.Gm[I.f1[sr], I.f1[sp]]
    rhs_L = I.Hm[I.label2(r_), I.A[I.f1[sr], I.label2(p_)]]
    ok = (lhs_f == rhs_f) & (lhs_L == rhs_L)
    rep.add("projection_functorial", ok.all(), first_false(ok, p_, r_))

    unit = I.eG * nH + I.eH
    pre = set(np.flatnonzero(proj == unit).tolist())
    img = set(flat.tolist())
    diff = sorted(pre ^ img)
    rep.add("image_is_kernel", pre == img, tuple(diff[:1]) or None)
    return rep


def contractibility_witness(inn):
    """Transformation from the identity to the constant 3-functor.

    Returns (components, fillers, report): components[q] is the connecting
    1-cell q -> e; fillers[m] is the 2-cell filling the naturality square of
    the 1-cell m (from c_tgt ∘ m to c_src).
    """
    I = inn
    rep = ValidationReport("inn")
    e = I.eG
    comp = np.array([I.index1(connecting_cell(I, q, e)) for q in I.G])
    ok = I.tgt[comp] == e
    rep.add("component_targets", ok.all(), first_false(ok))
    m = np.arange(I.n1)
    around = I.comp1(m, comp[I.tgt[m]])      # m then c_{tgt m}
    direct = comp[I.q1[m]]
    par = I.parallel(around, direct)
    rep.add("naturality_squares_fill", par.all(), first_false(par, m))
    fill = I.enc2(around, direct)

    # composite 1-cells: filler(m then m2) = (filler(m2) pre-whiskered by m) ; filler(m)
    mm = m[:, None]
    j = np.arange(I.nG * I.nH)[None, :]
    m2 = I.out1(I.tgt[mm], j)
    mc = I.comp1(mm, m2)
    pasted = I.vlabel(I.label2(fill[m2]), I.label2(fill[mm]))
    ok = pasted == I.label2(fill[mc])
    rep.add("naturality_composition", ok.all(), first_false(ok, mm, m2))
    # identity 1-cells get identity fillers
    ids = I.id1(np.arange(I.nG))
    ok = I.label2(fill[ids]) == I.eH
    rep.add("naturality_identity", ok.all(), first_false(ok))
    # 2-cells p: m => n. (p then c) ; filler(n) = filler(m)
    p = np.arange(I.n2)
    sm, sn = I.src2(p), I.tgt2(p)
    whisk = I.A[I.f1[comp[I.tgt[sm]]], I.label2(p)]
    ok = I.vlabel(whisk, I.label2(fill[sn])) == I.label2(fill[sm])
    rep.add("modification", ok.all(), first_false(ok, p))
    return comp, fill, rep


def peiffer_witness(inn):
    """A pair of 1-cells m = (h,H;e), m2 = (f,F;e) whose conjugate m·m2·m^-1
    differs from the object action of t(H)h on m2, with the label of the
    2-cell between them.

    Returns (m, m2, conjugate, action, label) for the first such pair or None.
    """
    I = inn
    G, H = I.G, I.H
    for i in I.G:
        for Hh in I.H:
            m = InnCell1(i, Hh, I.eG)
            d = I.target(m).g
            for f in I.G:
                for F in I.H:
                    m2 = InnCell1(f, F, I.eG)
                    mi = I.inverse_mor1(m)
                    mi = InnCell1(mi.f, mi.F, I.eG)
                    c = I.tensor_mor1(I.tensor_mor1(m, m2), mi)
                    a = I.whisker_obj_left(G.inverse(d), I.whisker_obj_right(m2, d))
                    if c != a:
                        return m, m2, c, a, I.label(I.two_cell(c, a))
    return None


def peiffer_via_cells(inn, m, m2):
    """Label of the 2-cell from the unit 1-cell to (m m2 m^-1)·(^{d m}m2)^-1."""
    I = inn
    G = I.G
    d = I.target(m).g
    mi = I.inverse_mor1(m)
    mi = InnCell1(mi.f, mi.F, I.eG)
    c = I.tensor_mor1(I.tensor_mor1(m, m2), mi)
    a = I.whisker_obj_left(G.inverse(d), I.whisker_obj_right(m2, d))
    ai = I.inverse_mor1(a)
    ai = InnCell1(ai.f, ai.F, I.eG)
    return I.label(I.two_cell(I.identity_1(I.eG), I.tensor_mor1(c, ai)))


def check_inn(X, budget=10_000):
    """Strictness, connectedness, codiscreteness, exactness, contractibility."""
    I = Inn0(X, budget)
    rep = ValidationReport("inn")
    rep.merge(check_strictness(I), "strict.")
    rep.merge(check_label_formulas(I), "labels.")
    rep.merge(check_connected(I), "connected.")
    rep.merge(check_codiscrete(I), "codiscrete.")
    rep.merge(check_exact_sequence(X, budget), "exact.")
    rep.merge(contractibility_witness(I)[2], "contractible.")
    return rep
