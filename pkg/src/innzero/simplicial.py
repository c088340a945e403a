"""Finite categories, truncated (bi)simplicial sets, nerves and décalage.

Composition in a category is written "a then b". In the delooping BG this
is the product b·a.
"""

import numpy as np

from .errors import BudgetExceeded, DepthExhausted
from .groups import make_group
from .report import ValidationReport, first_false


class FiniteCategory:
    """Objects 0..n-1, morphisms 0..m-1 with ``comp[a, b]`` the composite
    a then b (-1 when tgt(a) != src(b))."""

    def __init__(self, n_objects, src, tgt, comp, ident, object_labels=None,
                 morphism_labels=None, name=None):
        self.n_objects = int(n_objects)
        self.src = np.asarray(src, dtype=np.int64)
        self.tgt = np.asarray(tgt, dtype=np.int64)
        self.comp = np.asarray(comp, dtype=np.int64).reshape(len(self.src), len(self.src))
        self.ident = np.asarray(ident, dtype=np.int64)
        self.object_labels = object_labels
        self.morphism_labels = morphism_labels
        self.name = name

    @property
    def n_morphisms(self):
        return len(self.src)

    def __repr__(self):
        return f"FiniteCategory({self.name or '?'}, {self.n_objects} objects, {self.n_morphisms} morphisms)"

    def then(self, a, b):
        c = int(self.comp[a, b])
        if c < 0:
            raise ValueError(f"morphisms {a}, {b} are not composable")
        return c

    def hom(self, x, y):
        return [int(m) for m in np.flatnonzero((self.src == x) & (self.tgt == y))]

    def is_groupoid(self):
        return all(any(self.comp[a, b] == self.ident[self.src[a]] and self.comp[b, a] == self.ident[self.tgt[a]]
                       for b in self.hom(int(self.tgt[a]), int(self.src[a])))
                   for a in range(self.n_morphisms))

    def is_codiscrete(self):
        return all(len(self.hom(x, y)) == 1 for x in range(self.n_objects) for y in range(self.n_objects))


def validate_category(C):
    rep = ValidationReport("simplicial")
    a = np.arange(C.n_morphisms)[:, None]
    b = np.arange(C.n_morphisms)[None, :]
    composable = C.tgt[a] == C.src[b]
    ok = np.where(composable, C.comp >= 0, C.comp < 0)
    rep.add("composition_domain", ok.all(), first_false(ok, a, b))
    c = C.comp.clip(0)
    ok = ~composable | ((C.src[c] == C.src[a]) & (C.tgt[c] == C.tgt[b]))
    rep.add("composite_boundary", ok.all(), first_false(ok, a, b))
    ok = (C.src[C.ident] == np.arange(C.n_objects)) & (C.tgt[C.ident] == np.arange(C.n_objects))
    rep.add("identity_boundary", ok.all(), first_false(ok))
    m = np.arange(C.n_morphisms)
    ok = (C.comp[C.ident[C.src[m]], m] == m) & (C.comp[m, C.ident[C.tgt[m]]] == m)
    rep.add("unit_laws", ok.all(), first_false(ok, m))
    x = a[:, :, None]
    y = b[:, :, None]
    z = np.arange(C.n_morphisms)[None, None, :]
    xy = C.comp[x, y]
    yz = C.comp[y, z]
    defined = (xy >= 0) & (yz >= 0) & (C.tgt[y] == C.src[z])
    ok = ~defined | (C.comp[xy.clip(0), z] == C.comp[x, yz.clip(0)])
    rep.add("associativity", ok.all(), first_false(ok, x, y, z))
    return rep


def category_from_rule(objects, morphisms, src, tgt, then, ident, name=None):
    """Build a FiniteCategory from hashable objects/morphisms and python callables."""
    opos = {o: i for i, o in enumerate(objects)}
    mpos = {m: i for i, m in enumerate(morphisms)}
    n = len(morphisms)
    comp = np.full((n, n), -1, dtype=np.int64)
    for i, a in enumerate(morphisms):
        for j, b in enumerate(morphisms):
            if tgt(a) == src(b):
                comp[i, j] = mpos[then(a, b)]
    return FiniteCategory(len(objects), [opos[src(m)] for m in morphisms],
                          [opos[tgt(m)] for m in morphisms], comp,
                          [mpos[ident(o)] for o in objects],
                          [str(o) for o in objects], [str(m) for m in morphisms], name)


def point_category():
    return FiniteCategory(1, [0], [0], [[0]], [0], ["*"], ["id"], "point")


def delooping(G):
    """BG: one object, morphisms the elements, g then h = h·g."""
    g = np.arange(G.order)
    comp = G.mul[g[None, :], g[:, None]]
    return FiniteCategory(1, np.zeros(G.order), np.zeros(G.order), comp, [G.identity],
                          ["*"], list(G.labels) if G.labels else None, f"B{G.name}")


def linear_poset(n):
    """0 < 1 < ... < n-1."""
    mors = [(i, j) for i in range(n) for j in range(i, n)]
    return category_from_rule(list(range(n)), mors, lambda m: m[0], lambda m: m[1],
                              lambda a, b: (a[0], b[1]), lambda o: (o, o), f"poset{n}")


def codiscrete_groupoid(n):
    mors = [(i, j) for i in range(n) for j in range(n)]
    return category_from_rule(list(range(n)), mors, lambda m: m[0], lambda m: m[1],
                              lambda a, b: (a[0], b[1]), lambda o: (o, o), f"codisc{n}")


def tangent_category(C):
    """Objects are morphisms f of C; a morphism f -> h∘f is a pair (f, h)."""
    objs = list(range(C.n_morphisms))
    mors = [(f, h) for f in objs for h in range(C.n_morphisms) if C.src[h] == C.tgt[f]]
    return category_from_rule(
        objs, mors,
        src=lambda m: m[0],
        tgt=lambda m: int(C.comp[m[0], m[1]]),
        then=lambda a, b: (a[0], int(C.comp[a[1], b[1]])),
        ident=lambda f: (f, int(C.ident[C.tgt[f]])),
        name=f"T{C.name}")


class Functor:
    def __init__(self, C, D, on_objects, on_morphisms):
        self.C, self.D = C, D
        self.on_objects = np.asarray(on_objects, dtype=np.int64)
        self.on_morphisms = np.asarray(on_morphisms, dtype=np.int64)


def validate_functor(Fn):
    rep = ValidationReport("simplicial")
    C, D = Fn.C, Fn.D
    fo, fm = Fn.on_objects, Fn.on_morphisms
    ok = (D.src[fm] == fo[C.src]) & (D.tgt[fm] == fo[C.tgt])
    rep.add("boundaries", ok.all(), first_false(ok))
    ok = fm[C.ident] == D.ident[fo]
    rep.add("identities", ok.all(), first_false(ok))
    a, b = np.nonzero(C.comp >= 0)
    ok = fm[C.comp[a, b]] == D.comp[fm[a], fm[b]]
    rep.add("composition", ok.all(), first_false(ok, a, b))
    return rep


# truncated simplicial sets

class TruncatedSimplicialSet:
    """Levels 0..depth with faces[n][i]: X_n -> X_{n-1} and
    degens[n][i]: X_n -> X_{n+1} (n < depth) as index arrays."""

    def __init__(self, simplices, faces, degens, name=None):
        self.simplices = simplices
        self.faces = faces
        self.degens = degens
        self.name = name

    @property
    def depth(self):
        return len(self.simplices) - 1

    def size(self, n):
        return len(self.simplices[n])

    def sizes(self):
        return [len(s) for s in self.simplices]

    def d(self, n, i):
        return self.faces[n][i]

    def s(self, n, i):
        return self.degens[n][i]


def from_rules(simplices, face, degen, name=None):
    """Tabulate face(n, i, x) and degen(n, i, x) over explicit simplex lists."""
    pos = [{x: j for j, x in enumerate(level)} for level in simplices]
    k = len(simplices) - 1
    faces = [[]] + [[np.array([pos[n - 1][face(n, i, x)] for x in simplices[n]], dtype=np.int64)
                     for i in range(n + 1)] for n in range(1, k + 1)]
    degens = [[np.array([pos[n + 1][degen(n, i, x)] for x in simplices[n]], dtype=np.int64)
               for i in range(n + 1)] for n in range(k)] + [[]]
    return TruncatedSimplicialSet(simplices, faces, degens, name)


def check_simplicial_identities(X, prefix=""):
    rep = ValidationReport("simplicial")
    k = X.depth
    bad = None
    for n in range(2, k + 1):
        for j in range(n + 1):
            for i in range(j):
                lhs = X.d(n - 1, i)[X.d(n, j)]
                rhs = X.d(n - 1, j - 1)[X.d(n, i)]
                if not np.array_equal(lhs, rhs):
                    bad = bad or (n, i, j, int(np.flatnonzero(lhs != rhs)[0]))
    rep.add(prefix + "face_face", bad is None, bad)
    bad = None
    for n in range(0, k):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = X.d(n + 1, i)[X.s(n, j)]          # d_i s_j on X_n
                if i < j:
                    rhs = X.s(n - 1, j - 1)[X.d(n, i)]
                elif i in (j, j + 1):
                    rhs = np.arange(X.size(n))
                else:
                    rhs = X.s(n - 1, j)[X.d(n, i - 1)]
                if not np.array_equal(lhs, rhs):
                    bad = bad or (n, i, j, int(np.flatnonzero(lhs != rhs)[0]))
    rep.add(prefix + "face_degeneracy", bad is None, bad)
    bad = None
    for n in range(0, k - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                lhs = X.s(n + 1, i)[X.s(n, j)]
                rhs = X.s(n + 1, j + 1)[X.s(n, i)]
                if not np.array_equal(lhs, rhs):
                    bad = bad or (n, i, j, int(np.flatnonzero(lhs != rhs)[0]))
    rep.add(prefix + "degeneracy_degeneracy", bad is None, bad)
    return rep


def nerve(C, k=4):
    """Composable chains (m1, ..., mn); level 0 holds (x,) for objects x."""
    levels = [[(x,) for x in range(C.n_objects)]]
    if k >= 1:
        levels.append([(m,) for m in range(C.n_morphisms)])
    out = {}
    for x in range(C.n_objects):
        out[x] = [int(m) for m in np.flatnonzero(C.src == x)]
    for n in range(2, k + 1):
        levels.append([c + (m,) for c in levels[-1] for m in out[int(C.tgt[c[-1]])]])

    def face(n, i, c):
        if n == 1:
            return (int(C.tgt[c[0]]),) if i == 0 else (int(C.src[c[0]]),)
        if i == 0:
            return c[1:]
        if i == n:
            return c[:-1]
        return c[:i - 1] + (int(C.comp[c[i - 1], c[i]]),) + c[i + 1:]

    def degen(n, i, c):
        if n == 0:
            return (int(C.ident[c[0]]),)
        obj = int(C.src[c[i]]) if i < n else int(C.tgt[c[-1]])
        return c[:i] + (int(C.ident[obj]),) + c[i:]

    return from_rules(levels, face, degen, f"N{C.name}")


def decalage(X):
    """(Dec X)_n = X_{n+1}, dropping the first face and first degeneracy."""
    if X.depth < 1:
        raise DepthExhausted("décalage needs depth >= 1")
    k = X.depth - 1
    faces = [[]] + [[X.faces[n + 1][i + 1] for i in range(n + 1)] for n in range(1, k + 1)]
    degens = [[X.degens[n + 1][i + 1] for i in range(n + 1)] for n in range(k)] + [[]]
    return TruncatedSimplicialSet(X.simplices[1:], faces, degens, f"Dec{X.name}")


def extra_degeneracy_check(X, prefix=""):
    """For Dec X, s_{-1} := s_0 of X is a contracting extra degeneracy:
    d_0 s_{-1} = id and d_{i+1} s_{-1} = s_{-1} d_i."""
    rep = ValidationReport("simplicial")
    bad = None
    for n in range(0, X.depth - 1):       # Dec level n = X level n+1
        s = X.s(n + 1, 0)
        if not np.array_equal(X.d(n + 2, 1)[s], np.arange(X.size(n + 1))):
            bad = bad or (n, 0)
        for i in range(1, n + 2):
            lhs = X.d(n + 2, i + 1)[s]
            rhs = X.s(n, 0)[X.d(n + 1, i)]
            if not np.array_equal(lhs, rhs):
                bad = bad or (n, i)
    rep.add(prefix + "extra_degeneracy", bad is None, bad)
    return rep


def check_simplicial_map(X, Y, maps, upto=None, prefix=""):
    """maps[n]: X_n -> Y_n commutes with all faces and degeneracies."""
    rep = ValidationReport("simplicial")
    k = min(X.depth, Y.depth) if upto is None else upto
    bad = None
    for n in range(1, k + 1):
        for i in range(n + 1):
            if not np.array_equal(maps[n - 1][X.d(n, i)], Y.d(n, i)[maps[n]]):
                bad = bad or ("d", n, i)
    for n in range(0, k):
        for i in range(n + 1):
            if not np.array_equal(maps[n + 1][X.s(n, i)], Y.s(n, i)[maps[n]]):
                bad = bad or ("s", n, i)
    rep.add(prefix + "commutes", bad is None, bad)
    return rep


def is_bijection(a, size):
    a = np.asarray(a)
    return a.size == size and np.unique(a).size == size


def nerve_map(Fn, X, Y):
    """Simplicial map N(C) -> N(D) induced by a functor; X, Y the nerves."""
    maps = []
    ypos = [{s: i for i, s in enumerate(level)} for level in Y.simplices]
    for n, level in enumerate(X.simplices):
        if n == 0:
            maps.append(np.array([ypos[0][(int(Fn.on_objects[c[0]]),)] for c in level]))
        else:
            maps.append(np.array([ypos[n][tuple(int(Fn.on_morphisms[m]) for m in c)] for c in level]))
    return maps


def check_tangent_vs_decalage(C, k=4):
    """N(TC)_n -> N(C)_{n+1}, (f; h1..hn) |-> (f, h1, ..., hn)."""
    rep = ValidationReport("simplicial")
    TC = tangent_category(C)
    NT = nerve(TC, k)
    D = decalage(nerve(C, k + 1))
    rep.merge(check_simplicial_identities(NT), "tangent.")
    rep.merge(check_simplicial_identities(D), "decalage.")
    tmor = [tuple(int(v) for v in TC.morphism_labels[m].strip("()").split(","))
            for m in range(TC.n_morphisms)]
    dpos = [{s: i for i, s in enumerate(level)} for level in D.simplices]
    maps = []
    for n, level in enumerate(NT.simplices):
        if n == 0:
            img = [dpos[0][(c[0],)] for c in level]
        else:
            img = [dpos[n][(tmor[c[0]][0],) + tuple(tmor[m][1] for m in c)] for c in level]
        maps.append(np.array(img, dtype=np.int64))
    ok = all(is_bijection(maps[n], D.size(n)) for n in range(k + 1))
    rep.add("levelwise_bijection", ok, None if ok else tuple(NT.sizes()))
    rep.merge(check_simplicial_map(NT, D, maps))
    return rep


# W-bar and W for a constant simplicial group

def _tuples(G, n):
    if n == 0:
        return [()]
    grid = np.indices((G.order,) * n).reshape(n, -1).T
    return [tuple(int(v) for v in row) for row in grid]


def wbar(G, k):
    """Level n = G^n; d_0 and d_n drop an end, d_i multiplies entries i-1 and i
    as x_{i-1}·x_i, s_i inserts e at position i."""
    e = G.identity
    levels = [_tuples(G, n) for n in range(k + 1)]

    def face(n, i, x):
        if i == 0:
            return x[1:]
        if i == n:
            return x[:-1]
        return x[:i - 1] + (G.op(x[i - 1], x[i]),) + x[i + 1:]

    def degen(n, i, x):
        return x[:i] + (e,) + x[i:]

    return from_rules(levels, face, degen, f"Wbar{G.name}")


def w_construction(G, k):
    """Level n = G^{n+1}; d_i multiplies entries i and i+1 (i < n), d_n drops
    the last entry, s_i inserts e at position i+1."""
    e = G.identity
    levels = [_tuples(G, n + 1) for n in range(k + 1)]

    def face(n, i, x):
        if i == n:
            return x[:-1]
        return x[:i] + (G.op(x[i], x[i + 1]),) + x[i + 2:]

    def degen(n, i, x):
        return x[:i + 1] + (e,) + x[i + 1:]

    return from_rules(levels, face, degen, f"W{G.name}")


def _same_simplicial_set(X, Y, upto):
    if X.sizes()[:upto + 1] != Y.sizes()[:upto + 1]:
        return False
    for n in range(upto + 1):
        if X.simplices[n] != Y.simplices[n]:
            return False
        if n >= 1 and any(not np.array_equal(X.d(n, i), Y.d(n, i)) for i in range(n + 1)):
            return False
        if n < upto and any(not np.array_equal(X.s(n, i), Y.s(n, i)) for i in range(n + 1)):
            return False
    return True


def check_W_identifications(G, k=3):
    rep = ValidationReport("simplicial")
    W1 = wbar(G, k + 1)
    BG = delooping(G)
    NB = nerve(BG, k + 1)
    rep.merge(check_simplicial_identities(W1), "wbar.")
    # W-bar -> N(BG): invert each entry; level 0 is the point
    npos = [{s: i for i, s in enumerate(level)} for level in NB.simplices]
    maps = [np.array([0])] + [
        np.array([npos[n][tuple(G.inverse(x) for x in s)] for s in W1.simplices[n]])
        for n in range(1, k + 2)]
    ok = all(is_bijection(maps[n], NB.size(n)) for n in range(k + 1))
    rep.add("wbar_levels_are_nerve_levels", ok)
    rep.merge(check_simplicial_map(W1, NB, maps, upto=k), "wbar_to_nerve.")

    DW = decalage(W1)
    W = w_construction(G, k)
    rep.add("W_equals_dec_wbar", _same_simplicial_set(W, DW, k))
    rep.merge(check_simplicial_identities(W), "W.")

    # Dec W-bar -> N(INN G) = N(T BG): invert entries, then (f, h1..hn) -> chain
    TB = tangent_category(BG)
    NT = nerve(TB, k)
    tpos_m = {tuple(int(v) for v in TB.morphism_labels[m].strip("()").split(",")): m
              for m in range(TB.n_morphisms)}
    tpos = [{s: i for i, s in enumerate(level)} for level in NT.simplices]
    dmaps = []
    for n in range(k + 1):
        img = []
        for s in DW.simplices[n]:
            inv = [G.inverse(x) for x in s]
            if n == 0:
                img.append(tpos[0][(inv[0],)])
            else:
                f = inv[0]
                chain = []
                for h in inv[1:]:
                    chain.append(tpos_m[(f, h)])
                    f = int(BG.comp[f, h])
                img.append(tpos[n][tuple(chain)])
        dmaps.append(np.array(img, dtype=np.int64))
    ok = all(is_bijection(dmaps[n], NT.size(n)) for n in range(k + 1))
    rep.add("dec_wbar_levels_are_inn_nerve_levels", ok)
    rep.merge(check_simplicial_map(DW, NT, dmaps, upto=k), "dec_wbar_to_inn_nerve.")
    return rep


# double nerve of a crossed module

class TruncatedBisimplicialSet:
    """Grid of levels (k, n) with row maps (in k) and column maps (in n).

    Simplices are integer codes; subclasses supply the maps as vectorized
    functions on code arrays.
    """

    depth = (0, 0)

    def size(self, k, n):
        raise NotImplementedError

    def row_face(self, k, n, i, x):
        raise NotImplementedError

    def row_degen(self, k, n, i, x):
        raise NotImplementedError

    def col_face(self, k, n, i, x):
        raise NotImplementedError

    def col_degen(self, k, n, i, x):
        raise NotImplementedError


class NerveOfChains:
    """(NG(2))_n: chains (g; h1..hn) of 2-cells under vertical composition,
    a group under componentwise horizontal composition."""

    def __init__(self, X, n):
        G, H = X.G, X.H
        self.n = n
        nh = H.order
        self.order = G.order * nh ** n
        idx = np.arange(self.order)
        self.g = idx // nh ** n
        self.h = [(idx // nh ** (n - 1 - j)) % nh for j in range(n)]
        # running sources g_0 = g, g_j = t(h_j) g_{j-1}
        src = [self.g]
        for j in range(n):
            src.append(G.mul[X.t.map[self.h[j]], src[-1]])
        self.sources = src

    def encode(self, g, hs, nh):
        code = g
        for h in hs:
            code = code * nh + h
        return code


def chain_group(X, n):
    """The group (NG(2))_n with x·y = (g_x g_y; h_x,j · ^{g_x,j-1} h_y,j)."""
    G, H, A = X.G, X.H, X.alpha.table
    c = NerveOfChains(X, n)
    x = np.arange(c.order)[:, None]
    y = np.arange(c.order)[None, :]
    code = G.mul[c.g[x], c.g[y]]
    for j in range(n):
        code = code * H.order + H.mul[c.h[j][x], A[c.sources[j][x], c.h[j][y]]]
    return make_group(code, name=f"NG{n}"), c


class DoubleNerve(TruncatedBisimplicialSet):
    """(N)_{kn} = ((NG(2))_n)^k: rows are nerves of B((NG(2))_n), columns
    apply the nerve maps of NG(2) componentwise."""

    def __init__(self, X, depth, budget=20_000_000):
        K, Nn = depth
        self.depth = (K, Nn)
        self.X = X
        big = max((X.G.order * X.H.order ** n) ** K for n in range(Nn + 1))
        budget = min(budget, 2**31 - 1)         # codes are decoded as int32
        if big > budget:
            raise BudgetExceeded(big, budget)
        self.groups = []
        self.chains = []
        for n in range(Nn + 1):
            Gn, c = chain_group(X, n)
            self.groups.append(Gn)
            self.chains.append(c)
        self._col_faces = [[]] + [[self._chain_face(n, i) for i in range(n + 1)] for n in range(1, Nn + 1)]
        self._col_degens = [[self._chain_degen(n, i) for i in range(n + 1)] for n in range(Nn)] + [[]]

    def _chain_face(self, n, i):
        X = self.X
        H = X.H
        c = self.chains[n]
        nh = H.order
        if i == 0:
            g, hs = c.sources[1], c.h[1:]
        elif i == n:
            g, hs = c.g, c.h[:-1]
        else:
            merged = H.mul[c.h[i], c.h[i - 1]]
            g, hs = c.g, c.h[:i - 1] + [merged] + c.h[i + 1:]
        return self.chains[n].encode(g, hs, nh)

    def _chain_degen(self, n, i):
        c = self.chains[n]
        e = np.full(c.order, self.X.H.identity)
        return c.encode(c.g, c.h[:i] + [e] + c.h[i:], self.X.H.order)

    def base(self, n):
        return self.groups[n].order

    def size(self, k, n):
        return self.base(n) ** k

    def decode(self, k, n, x):
        b = self.base(n)
        x = np.asarray(x, dtype=np.int32)      # codes stay below the budget < 2**31
        out = []
        for _ in range(k):
            x, r = np.divmod(x, b)
            out.append(r)
        return out[::-1]

    def encode(self, n, comps):
        b = self.base(n)
        if not comps:
            return 0
        code = np.asarray(comps[0], dtype=np.int64)
        for c in comps[1:]:
            code = code * b + c
        return code

    def identity(self, n):
        return self.groups[n].identity

    def row_face(self, k, n, i, x):
        comps = self.decode(k, n, x)
        if k == 1:
            return np.zeros_like(x)
        if i == 0:
            comps = comps[1:]
        elif i == k:
            comps = comps[:-1]
        else:
            mul = self.groups[n].mul
            comps = comps[:i - 1] + [mul[comps[i], comps[i - 1]]] + comps[i + 1:]
        return self.encode(n, comps)

    def row_degen(self, k, n, i, x):
        comps = self.decode(k, n, x)
        e = np.full(np.shape(x), self.identity(n), dtype=np.int64)
        return self.encode(n, comps[:i] + [e] + comps[i:])

    def col_face(self, k, n, i, x):
        f = self._col_faces[n][i]
        return self.encode(n - 1, [f[c] for c in self.decode(k, n, x)]) if k else np.zeros_like(x)

    def col_degen(self, k, n, i, x):
        f = self._col_degens[n][i]
        return self.encode(n + 1, [f[c] for c in self.decode(k, n, x)]) if k else np.zeros_like(x)


class RowDecalage(TruncatedBisimplicialSet):
    """Dec¹ applied to every row: level (k, n) is level (k+1, n) of B."""

    def __init__(self, B):
        self.B = B
        self.depth = (B.depth[0] - 1, B.depth[1])
        if self.depth[0] < 0:
            raise DepthExhausted("row décalage needs row depth >= 1")

    def size(self, k, n):
        return self.B.size(k + 1, n)

    def row_face(self, k, n, i, x):
        return self.B.row_face(k + 1, n, i + 1, x)

    def row_degen(self, k, n, i, x):
        return self.B.row_degen(k + 1, n, i + 1, x)

    def col_face(self, k, n, i, x):
        return self.B.col_face(k + 1, n, i, x)

    def col_degen(self, k, n, i, x):
        return self.B.col_degen(k + 1, n, i, x)


def double_nerve(X, k=4, budget=20_000_000):
    return DoubleNerve(X, (k, k), budget)


def _ranges(size, chunk=1 << 20):
    for lo in range(0, size, chunk):
        yield np.arange(lo, min(size, lo + chunk), dtype=np.int64)


def check_bisimplicial(B, upto=None, prefix=""):
    """Row and column simplicial identities and commutation of row with column maps."""
    rep = ValidationReport("simplicial")
    K, Nn = upto or B.depth
    bad = {}

    def note(kind, w):
        bad.setdefault(kind, w)

    for k in range(K + 1):
        for n in range(Nn + 1):
            for x in _ranges(B.size(k, n)):
                # row identities at (k, n)
                for j in range(k + 1):
                    for i in range(j):
                        if k >= 2 and not np.array_equal(B.row_face(k - 1, n, i, B.row_face(k, n, j, x)),
                                                         B.row_face(k - 1, n, j - 1, B.row_face(k, n, i, x))):
                            note("row_face_face", (k, n, i, j))
                if k < K:
                    for j in range(k + 1):
                        sx = B.row_degen(k, n, j, x)
                        for i in range(k + 2):
                            lhs = B.row_face(k + 1, n, i, sx)
                            if i < j:
                                rhs = B.row_degen(k - 1, n, j - 1, B.row_face(k, n, i, x))
                            elif i in (j, j + 1):
                                rhs = x
                            else:
                                rhs = B.row_degen(k - 1, n, j, B.row_face(k, n, i - 1, x))
                            if not np.array_equal(lhs, rhs):
                                note("row_face_degeneracy", (k, n, i, j))
                if k < K - 1:
                    for j in range(k + 1):
                        for i in range(j + 1):
                            if not np.array_equal(B.row_degen(k + 1, n, i, B.row_degen(k, n, j, x)),
                                                  B.row_degen(k + 1, n, j + 1, B.row_degen(k, n, i, x))):
                                note("row_degeneracy_degeneracy", (k, n, i, j))
                # column identities
                for j in range(n + 1):
                    for i in range(j):
                        if n >= 2 and not np.array_equal(B.col_face(k, n - 1, i, B.col_face(k, n, j, x)),
                                                         B.col_face(k, n - 1, j - 1, B.col_face(k, n, i, x))):
                            note("col_face_face", (k, n, i, j))
                if n < Nn:
                    for j in range(n + 1):
                        sx = B.col_degen(k, n, j, x)
                        for i in range(n + 2):
                            lhs = B.col_face(k, n + 1, i, sx)
                            if i < j:
                                rhs = B.col_degen(k, n - 1, j - 1, B.col_face(k, n, i, x))
                            elif i in (j, j + 1):
                                rhs = x
                            else:
                                rhs = B.col_degen(k, n - 1, j, B.col_face(k, n, i - 1, x))
                            if not np.array_equal(lhs, rhs):
                                note("col_face_degeneracy", (k, n, i, j))
                if n < Nn - 1:
                    for j in range(n + 1):
                        for i in range(j + 1):
                            if not np.array_equal(B.col_degen(k, n + 1, i, B.col_degen(k, n, j, x)),
                                                  B.col_degen(k, n + 1, j + 1, B.col_degen(k, n, i, x))):
                                note("col_degeneracy_degeneracy", (k, n, i, j))
                # row maps commute with column maps
                for i in range(k + 1 if k >= 1 else 0):
                    for j in range(n + 1 if n >= 1 else 0):
                        if not np.array_equal(B.row_face(k, n - 1, i, B.col_face(k, n, j, x)),
                                              B.col_face(k - 1, n, j, B.row_face(k, n, i, x))):
                            note("faces_commute", (k, n, i, j))
                if k < K:
                    for i in range(k + 1):
                        for j in range(n + 1 if n >= 1 else 0):
                            if not np.array_equal(B.col_face(k + 1, n, j, B.row_degen(k, n, i, x)),
                                                  B.row_degen(k, n - 1, i, B.col_face(k, n, j, x))):
                                note("row_degen_col_face_commute", (k, n, i, j))
                if n < Nn:
                    for j in range(n + 1):
                        for i in range(k + 1 if k >= 1 else 0):
                            if not np.array_equal(B.row_face(k, n + 1, i, B.col_degen(k, n, j, x)),
                                                  B.col_degen(k - 1, n, j, B.row_face(k, n, i, x))):
                                note("col_degen_row_face_commute", (k, n, i, j))
    for kind in ("row_face_face", "row_face_degeneracy", "row_degeneracy_degeneracy",
                 "col_face_face", "col_face_degeneracy", "col_degeneracy_degeneracy",
                 "faces_commute", "row_degen_col_face_commute", "col_degen_row_face_commute"):
        rep.add(prefix + kind, kind not in bad, bad.get(kind))
    return rep


def check_bisimplicial_sequence(X, k=3, budget=20_000_000):
    """N' -> Dec¹N -> N levelwise up to (k, k), with N'_{kn} = (NG(2))_n."""
    rep = ValidationReport("simplicial")
    Nv = DoubleNerve(X, (k + 1, k), budget)
    D = RowDecalage(Nv)
    rep.merge(check_bisimplicial(Nv, (k, k)), "nerve.")
    rep.merge(check_bisimplicial(D, (k, k)), "decalage.")
    rep.add("point_row", all(Nv.size(0, n) == 1 for n in range(k + 1)))
    rep.add("row_one_is_chain_group", all(Nv.size(1, n) == Nv.groups[n].order for n in range(k + 1)))

    inj = surj = kern = commute = contract = True
    wit = {}
    for kk in range(k + 1):
        for n in range(k + 1):
            b = Nv.base(n)
            e = Nv.identity(n)
            # inclusion x -> (x, e, ..., e)
            x = np.arange(b, dtype=np.int64)
            inc = x * b ** kk + Nv.encode(n, [np.full(b, e)] * kk) if kk else x
            if np.unique(inc).size != b:
                inj = False
                wit.setdefault("inj", (kk, n))
            hit = np.zeros(Nv.size(kk, n), dtype=bool)
            zero_pre = []
            base_code = Nv.encode(n, [np.full(1, e)] * kk)[0] if kk else 0
            for y in _ranges(D.size(kk, n)):
                img = Nv.row_face(kk + 1, n, 0, y)
                hit[img] = True
                zero_pre.append(y[img == base_code])
            if not hit.all():
                surj = False
                wit.setdefault("surj", (kk, n))
            zero_pre = np.concatenate(zero_pre)
            if not np.array_equal(np.sort(zero_pre), np.sort(inc)):
                kern = False
                wit.setdefault("kern", (kk, n))
            # bisimplicial maps: projection commutes with row/column maps
            for y in _ranges(D.size(kk, n)):
                for i in range(kk + 1 if kk >= 1 else 0):
                    if not np.array_equal(Nv.row_face(kk, n, i, Nv.row_face(kk + 1, n, 0, y)),
                                          Nv.row_face(kk, n, 0, D.row_face(kk, n, i, y))):
                        commute = False
                        wit.setdefault("commute", ("row", kk, n, i))
                for j in range(n + 1 if n >= 1 else 0):
                    if not np.array_equal(Nv.col_face(kk, n, j, Nv.row_face(kk + 1, n, 0, y)),
                                          Nv.row_face(kk + 1, n - 1, 0, D.col_face(kk, n, j, y))):
                        commute = False
                        wit.setdefault("commute", ("col", kk, n, j))
                # extra degeneracy s_{-1} = s_0 of the undecked row
                if kk < k:
                    s = Nv.row_degen(kk + 1, n, 0, y)
                    if not np.array_equal(Nv.row_face(kk + 2, n, 1, s), y):
                        contract = False
                        wit.setdefault("contract", (kk, n, 0))
                    for i in range(kk + 1):
                        lhs = D.row_face(kk + 1, n, i + 1, s)
                        rhs = Nv.row_degen(kk, n, 0, D.row_face(kk, n, i, y)) if kk >= 1 else None
                        if kk >= 1 and not np.array_equal(lhs, rhs):
                            contract = False
                            wit.setdefault("contract", (kk, n, i + 1))
            # inclusion is a bisimplicial map (rows of N' are constant)
            for i in range(kk + 1 if kk >= 1 else 0):
                if not np.array_equal(D.row_face(kk, n, i, inc),
                                      (x * b ** (kk - 1) + Nv.encode(n, [np.full(b, e)] * (kk - 1))) if kk > 1 else x):
                    commute = False
                    wit.setdefault("commute", ("inc", kk, n, i))
    rep.add("inclusion_injective", inj, wit.get("inj"))
    rep.add("projection_surjective", surj, wit.get("surj"))
    rep.add("kernel_equals_image", kern, wit.get("kern"))
    rep.add("maps_bisimplicial", commute, wit.get("commute"))
    rep.add("rows_contractible", contract, wit.get("contract"))
    return rep
