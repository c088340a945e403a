"""Finite groups as Cayley tables over dense indices 0..n-1.

Permutations compose right-to-left throughout: (a*b)(x) = a(b(x)).
"""

import itertools
from collections import deque

import numpy as np

from .errors import (ActionInvalid, NoIdentity, NoInverse, NotAction,
                     NotAssociative, NotHomomorphism)


def _frozen(a):
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class FiniteGroup:
    """A validated finite group. Build with :func:`make_group`."""

    def __init__(self, table, identity, inv, labels=None, name=None):
        self.mul = _frozen(table)
        self.order = int(self.mul.shape[0])
        self.identity = int(identity)
        self.inv = _frozen(inv)
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        self._rows = self.mul.tolist()
        self._inv = self.inv.tolist()
        self._index = {s: i for i, s in enumerate(self.labels)} if self.labels else {}

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return (self.order == other.order and np.array_equal(self.mul, other.mul)
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.order, self.mul.tobytes()))

    def op(self, *xs):
        """Product of the arguments, left to right."""
        r = self.identity
        rows = self._rows
        for x in xs:
            r = rows[r][x]
        return r

    def inverse(self, x):
        return self._inv[x]

    def conj(self, g, x):
        """g x g^-1."""
        rows = self._rows
        return rows[rows[g][x]][self._inv[g]]

    def commutator(self, x, y):
        return self.op(x, y, self._inv[x], self._inv[y])

    def power(self, x, k):
        if k < 0:
            x, k = self._inv[x], -k
        r = self.identity
        for _ in range(k):
            r = self._rows[r][x]
        return r

    def element_order(self, x):
        k, y = 1, x
        while y != self.identity:
            y = self._rows[y][x]
            k += 1
        return k

    def label(self, x):
        return self.labels[x] if self.labels else str(x)

    def index(self, label):
        """Element index from a label (or from an integer string)."""
        if label in self._index:
            return self._index[label]
        if isinstance(label, (int, np.integer)):
            return int(label)
        return int(label)

    def is_abelian(self):
        return bool(np.array_equal(self.mul, self.mul.T))

    def generated(self, gens):
        """Sorted elements of the subgroup generated by ``gens``."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self._rows[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def generators(self):
        """A small generating set, chosen greedily and deterministically."""
        gens = []
        span = {self.identity}
        by_order = sorted(range(self.order), key=lambda x: (-self.element_order(x), x))
        for x in by_order:
            if x not in span:
                gens.append(x)
                span = set(self.generated(gens))
            if len(span) == self.order:
                break
        return gens


class GroupHom:
    def __init__(self, dom, cod, mapping):
        self.dom = dom
        self.cod = cod
        self.map = _frozen(mapping)
        self._map = self.map.tolist()

    def __call__(self, x):
        return self._map[x]

    def __repr__(self):
        return f"GroupHom({self.dom!r} -> {self.cod!r})"

    def __eq__(self, other):
        if not isinstance(other, GroupHom):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and np.array_equal(self.map, other.map)

    __hash__ = None

    def kernel(self):
        return [x for x in self.dom if self._map[x] == self.cod.identity]

    def image(self):
        return sorted(set(self._map))

    def is_injective(self):
        return len(set(self._map)) == self.dom.order

    def is_surjective(self):
        return len(set(self._map)) == self.cod.order

    def then(self, other):
        """Composite: apply self, then other."""
        return GroupHom(self.dom, other.cod, other.map[self.map])


class GroupAction:
    """Left action of ``actor`` on ``target`` by automorphisms.

    ``table[a, x]`` is the element a acting on x.
    """

    def __init__(self, actor, target, table):
        self.actor = actor
        self.target = target
        self.table = _frozen(table).reshape(actor.order, target.order)
        self._rows = self.table.tolist()

    def __call__(self, a, x):
        return self._rows[a][x]

    def __repr__(self):
        return f"GroupAction({self.actor!r} on {self.target!r})"

    def __eq__(self, other):
        if not isinstance(other, GroupAction):
            return NotImplemented
        return (self.actor == other.actor and self.target == other.target
                and np.array_equal(self.table, other.table))

    __hash__ = None

    def pullback(self, hom):
        """The action of hom.dom obtained through hom: dom -> actor."""
        return GroupAction(hom.dom, self.target, self.table[hom.map])


# construction and validation

def make_group(table, labels=None, name=None):
    T = np.asarray(table, dtype=np.int64)
    if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
        raise ValueError("table must be a non-empty square array")
    n = T.shape[0]
    if T.min() < 0 or T.max() >= n:
        raise ValueError("table entries out of range")
    if labels is not None:
        labels = [str(s) for s in labels]
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError("labels must be pairwise distinct, one per element")

    ar = np.arange(n)
    units = [e for e in range(n) if np.array_equal(T[e], ar) and np.array_equal(T[:, e], ar)]
    if not units:
        raise NoIdentity("no two-sided identity element")
    e = units[0]

    inv = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        hits = np.flatnonzero((T[x] == e) & (T[:, x] == e))
        if hits.size == 0:
            raise NoInverse(f"element {x} has no two-sided inverse", (x,))
        inv[x] = hits[0]

    # associativity, a row block at a time
    for a in range(n):
        lhs = T[T[a]]            # (ab)c for all b, c
        rhs = T[a][T]            # a(bc)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = (int(v) for v in bad[0])
            raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})", (a, b, c))
    return FiniteGroup(T, e, inv, labels, name)


def check_hom(dom, cod, mapping):
    """First (x, y) with map(xy) != map(x)map(y), or None."""
    m = np.asarray(mapping, dtype=np.int64)
    lhs = m[dom.mul]
    rhs = cod.mul[m[:, None], m[None, :]]
    bad = np.argwhere(lhs != rhs)
    return tuple(int(v) for v in bad[0]) if bad.size else None


def make_hom(dom, cod, mapping):
    m = np.asarray(mapping, dtype=np.int64)
    if m.shape != (dom.order,):
        raise ValueError("map length must equal |dom|")
    if m.min() < 0 or m.max() >= cod.order:
        raise ValueError("map values out of range")
    w = check_hom(dom, cod, m)
    if w is not None:
        raise NotHomomorphism(f"map({w[0]}*{w[1]}) != map({w[0]})*map({w[1]})", w)
    return GroupHom(dom, cod, m)


def action_witness(actor, target, table):
    """Describe the first violated action law, or None if the table is an action."""
    A = np.asarray(table, dtype=np.int64).reshape(actor.order, target.order)
    ar = np.arange(target.order)
    if not np.array_equal(A[actor.identity], ar):
        x = int(np.flatnonzero(A[actor.identity] != ar)[0])
        return "unit", (actor.identity, x)
    for a in range(actor.order):
        if len(set(A[a].tolist())) != target.order:
            return "bijective", (a,)
        w = check_hom(target, target, A[a])
        if w is not None:
            return "automorphism", (a,) + w
    # act(ab, x) = act(a, act(b, x))
    lhs = A[actor.mul]                      # [a, b, x]
    rhs = A[np.arange(actor.order)[:, None, None], A[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        return "composition", tuple(int(v) for v in bad[0])
    return None


def make_action(actor, target, table):
    A = np.asarray(table, dtype=np.int64)
    if A.size != actor.order * target.order:
        raise ValueError("action table must be |actor| x |target|")
    A = A.reshape(actor.order, target.order)
    if A.min() < 0 or A.max() >= target.order:
        raise ValueError("action values out of range")
    w = action_witness(actor, target, A)
    if w is not None:
        raise NotAction(f"action law '{w[0]}' fails", w[1])
    return GroupAction(actor, target, A)


def trivial_action(actor, target):
    return GroupAction(actor, target, np.tile(np.arange(target.order), (actor.order, 1)))


def conjugation_action(G):
    g = np.arange(G.order)
    table = G.mul[G.mul[g[:, None], g[None, :]], G.inv[g][:, None]]
    return GroupAction(G, G, table)


# standard groups

def _cycle_label(p):
    n = len(p)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + 1))
            j = p[j]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def permutation_group(perms, name=None, labels=None):
    """Group on the given (closed) list of permutations, composed right-to-left."""
    perms = [tuple(int(v) for v in p) for p in perms]
    pos = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = [[pos[tuple(a[b[x]] for x in range(len(a)))] for b in perms] for a in perms]
    if labels is None:
        labels = [_cycle_label(p) for p in perms]
    return make_group(table, labels, name)


def generate_permutations(gens, degree):
    """All permutations generated by ``gens``, identity first then sorted."""
    ident = tuple(range(degree))
    seen = {ident}
    queue = deque([ident])
    gens = [tuple(g) for g in gens]
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(g[p[x]] for x in range(degree))
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return sorted(seen)


def trivial_group():
    return make_group([[0]], ["e"], "1")


def cyclic_group(n):
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return make_group(table, [str(i) for i in range(n)], f"Z{n}")


def symmetric_group(n):
    return permutation_group(sorted(itertools.permutations(range(n))), f"S{n}")


def alternating_group(n):
    def even(p):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        return inv % 2 == 0
    return permutation_group([p for p in sorted(itertools.permutations(range(n))) if even(p)], f"A{n}")


def dihedral_group(n):
    """Symmetries of the regular n-gon, order 2n, as permutations of its vertices."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group(generate_permutations([rot, ref], n), f"D{n}")


def direct_product(A, B):
    return semidirect_product(B, A, trivial_action(B, A), name=f"{A.name}x{B.name}")


def semidirect_product(G, H, alpha, name=None):
    """G ⋉ H on pairs (f, F), index f*|H| + F, with
    (f2, F2)(f1, F1) = (f2 f1, F2 · ^{f2}F1).
    """
    w = action_witness(G, H, alpha.table)
    if w is not None:
        raise ActionInvalid(f"action law '{w[0]}' fails", w[1])
    ng, nh = G.order, H.order
    idx = np.arange(ng * nh)
    f, F = idx // nh, idx % nh
    f2, f1 = f[:, None], f[None, :]
    F2, F1 = F[:, None], F[None, :]
    table = G.mul[f2, f1] * nh + H.mul[F2, alpha.table[f2, F1]]
    labels = None
    if G.labels and H.labels:
        labels = [f"({G.labels[a]},{H.labels[b]})" for a in range(ng) for b in range(nh)]
    return make_group(table, labels, name or f"{G.name}|x{H.name}")


def pair_index(H, f, F):
    """Index of (f, F) in a semidirect product with kernel factor H."""
    return f * H.order + F


def subgroup(G, elements, name=None):
    """The subgroup on ``elements`` with its inclusion hom."""
    elems = sorted(set(int(x) for x in elements))
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[G._rows[a][b]] for b in elems] for a in elems]
    labels = [G.label(x) for x in elems] if G.labels else None
    S = make_group(table, labels, name)
    return S, GroupHom(S, G, elems)


def center(G):
    """(Z(G), inclusion into G)."""
    comm = G.mul == G.mul.T
    z = [x for x in G if comm[x].all()]
    return subgroup(G, z, f"Z({G.name})")


def normal_closure(G, elements):
    gens = set(int(x) for x in elements)
    gens |= {G.conj(g, x) for g in G for x in list(gens)}
    while True:
        H = G.generated(sorted(gens))
        closed = all(G.conj(g, x) in set(H) for g in G for x in H)
        if closed:
            return H
        gens = set(H) | {G.conj(g, x) for g in G for x in H}


def is_normal(G, elements):
    s = set(elements)
    return all(G.conj(g, x) in s for g in G for x in s)


def quotient(G, normal, name=None):
    """(G/N, projection) for a normal subgroup given by its elements.

    Cosets are numbered by their smallest element.
    """
    N = sorted(set(int(x) for x in normal))
    if not is_normal(G, N):
        raise ValueError("subgroup is not normal")
    coset_of = [-1] * G.order
    reps = []
    for x in G:
        if coset_of[x] < 0:
            k = len(reps)
            reps.append(x)
            for n in N:
                coset_of[G._rows[x][n]] = k
    table = [[coset_of[G._rows[a][b]] for b in reps] for a in reps]
    labels = None
    if G.labels:
        labels = [G.labels[r] if len(N) == 1 else f"[{G.labels[r]}]" for r in reps]
    Q = make_group(table, labels, name)
    return Q, GroupHom(G, Q, coset_of)


# isomorphisms

def _extend(A, B, gens, images):
    """Extend generator images to a map A -> B, or None on conflict."""
    m = [-1] * A.order
    m[A.identity] = B.identity
    queue = deque([A.identity])
    while queue:
        x = queue.popleft()
        for g, h in zip(gens, images):
            y = A._rows[x][g]
            v = B._rows[m[x]][h]
            if m[y] < 0:
                m[y] = v
                queue.append(y)
            elif m[y] != v:
                return None
    return m


def isomorphisms(A, B):
    """Yield every isomorphism A -> B as an index array.

    Backtracking over images of a generating set of A, restricted to
    elements of matching order; the search is exhaustive.
    """
    if A.order != B.order:
        return
    gens = A.generators()
    b_orders = {}
    for y in B:
        b_orders.setdefault(B.element_order(y), []).append(y)
    pools = [b_orders.get(A.element_order(g), []) for g in gens]
    for images in itertools.product(*pools):
        m = _extend(A, B, gens, images)
        if m is None or len(set(m)) != A.order:
            continue
        if check_hom(A, B, m) is None:
            yield np.array(m, dtype=np.int64)


def find_isomorphism(A, B):
    return next(isomorphisms(A, B), None)


def automorphism_group(G):
    """(Aut(G), perms) where perms[i] realizes automorphism i.

    Index 0 is the identity; the table composes right-to-left.
    """
    perms = sorted(tuple(int(v) for v in m) for m in isomorphisms(G, G))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(a[b[x]] for x in G)] for b in perms] for a in perms]
    labels = [f"a{i}" for i in range(len(perms))]
    labels[0] = "id"
    Aut = make_group(table, labels, f"Aut({G.name})")
    return Aut, [np.array(p, dtype=np.int64) for p in perms]
