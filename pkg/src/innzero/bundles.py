"""Čech cocycles on finite covers and reconstruction of the principal G-set.

A cocycle value g(x, y) moves the x-trivialization to the y-trivialization:
(x, h) ~ (y, g(x, y)·h), and g(y, z)·g(x, y) = g(x, z).
"""

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import CocycleInvalid
from .report import ValidationReport
from .simplicial import Functor, category_from_rule, validate_category, validate_functor


@dataclass(frozen=True)
class FiniteCover:
    """Patch points are 0..n-1; ``patch[y]`` and ``base_of[y]`` say where each lives."""
    base: tuple
    patches: tuple                      # names of the patches
    patch: tuple                        # patch index of each patch point
    base_of: tuple                      # base index of each patch point
    adjacency: frozenset = field(default_factory=frozenset)   # unordered base pairs

    @property
    def n_points(self):
        return len(self.patch)

    def fiber(self, x):
        return [y for y in range(self.n_points) if self.base_of[y] == x]

    def point(self, patch, base_point):
        for y in range(self.n_points):
            if self.patch[y] == patch and self.base_of[y] == base_point:
                return y
        raise KeyError((patch, base_point))

    def point_label(self, y):
        return f"{self.patches[self.patch[y]]}:{self.base[self.base_of[y]]}"

    def fiber_pairs(self):
        return [(x, y) for x in range(self.n_points) for y in range(self.n_points)
                if self.base_of[x] == self.base_of[y]]

    def adjacent(self, a, b):
        return frozenset((a, b)) in self.adjacency


def make_cover(base, patches, adjacency=()):
    """``patches`` maps a patch name to the base points it covers."""
    base = tuple(base)
    bpos = {b: i for i, b in enumerate(base)}
    names = tuple(patches)
    patch, base_of = [], []
    for i, name in enumerate(names):
        for b in patches[name]:
            patch.append(i)
            base_of.append(bpos[b])
    if set(base_of) != set(range(len(base))):
        missing = [base[i] for i in range(len(base)) if i not in base_of]
        raise ValueError(f"base points not covered: {missing}")
    adj = frozenset(frozenset((bpos[a], bpos[b])) for a, b in adjacency)
    return FiniteCover(base, names, tuple(patch), tuple(base_of), adj)


def circle_cover(n=3):
    """Base c0..c{n-1} on a cycle; patch U_i covers c_i and c_{i+1}."""
    base = [f"c{i}" for i in range(n)]
    patches = {f"U{i}": [base[i], base[(i + 1) % n]] for i in range(n)}
    return make_cover(base, patches, [(base[i], base[(i + 1) % n]) for i in range(n)])


def single_patch_cover(base, adjacency=()):
    return make_cover(base, {"U": list(base)}, adjacency)


@dataclass(frozen=True)
class Cocycle:
    cover: FiniteCover
    G: object
    values: dict                         # (x, y) -> G-index for every fiber pair

    def __call__(self, x, y):
        return self.values[(x, y)]


def make_cocycle(cover, G, given=None):
    """Fill unspecified fiber pairs: e on the diagonal, inverses of given pairs,
    then composites; anything left becomes e (and fails validation if wrong)."""
    vals = {}
    for (x, y), g in (given or {}).items():
        vals[(x, y)] = int(g)
    for x in range(cover.n_points):
        vals.setdefault((x, x), G.identity)
    for (x, y), g in list(vals.items()):
        vals.setdefault((y, x), G.inverse(g))
    pairs = cover.fiber_pairs()
    changed = True
    while changed:
        changed = False
        for (x, y) in pairs:
            if (x, y) in vals:
                continue
            for z in cover.fiber(cover.base_of[x]):
                if (x, z) in vals and (z, y) in vals:
                    vals[(x, y)] = G.op(vals[(z, y)], vals[(x, z)])
                    changed = True
                    break
    for p in pairs:
        vals.setdefault(p, G.identity)
    return Cocycle(cover, G, {p: vals[p] for p in pairs})


def trivial_cocycle(cover, G):
    return make_cocycle(cover, G)


def circle_cocycle(G, overlap_values, n=3):
    """Transition on the overlap of U_i and U_{i+1} (over c_{i+1}) is overlap_values[i]."""
    cover = circle_cover(n)
    given = {}
    for i, v in enumerate(overlap_values):
        b = (i + 1) % n
        given[(cover.point(i, b), cover.point((i + 1) % n, b))] = v
    return make_cocycle(cover, G, given)


def loop_holonomy(c, n=None):
    """Product of the circle transitions in loop order: v_{n-1}···v_1·v_0."""
    cover, G = c.cover, c.G
    n = n or len(cover.patches)
    h = G.identity
    for i in range(n):
        b = (i + 1) % n
        h = G.op(c(cover.point(i, b), cover.point((i + 1) % n, b)), h)
    return h


def cech_groupoid(cover):
    """One morphism x -> y for every pair of patch points over one base point."""
    return category_from_rule(
        list(range(cover.n_points)), cover.fiber_pairs(),
        src=lambda m: m[0], tgt=lambda m: m[1],
        then=lambda a, b: (a[0], b[1]), ident=lambda y: (y, y),
        name="Y2")


def validate_cocycle(c):
    rep = ValidationReport("bundles")
    cover, G = c.cover, c.G
    w = next(((x, y) for (x, y) in cover.fiber_pairs() if (x, y) not in c.values), None)
    rep.add("defined_on_fiber_pairs", w is None, w)
    if w is not None:
        return rep
    w = next((x for x in range(cover.n_points) if c(x, x) != G.identity), None)
    rep.add("unit", w is None, w)
    w = next(((x, y, z) for (x, y) in cover.fiber_pairs() for z in cover.fiber(cover.base_of[x])
              if G.op(c(y, z), c(x, y)) != c(x, z)), None)
    rep.add("composition", w is None, w)
    w = next(((x, y) for (x, y) in cover.fiber_pairs() if c(y, x) != G.inverse(c(x, y))), None)
    rep.add("inverse", w is None, w)
    return rep


def _require_valid(c):
    rep = validate_cocycle(c)
    if not rep.ok:
        bad = rep.failures()[0]
        raise CocycleInvalid(f"cocycle fails {bad.name}", bad.witness)
    return rep


def pullback_groupoid(c):
    """Y2 x_g INN(G): objects (y, h); the morphism over y -> y' goes
    (y, h) -> (y', g(y, y')·h)."""
    _require_valid(c)
    cover, G = c.cover, c.G
    objects = [(y, h) for y in range(cover.n_points) for h in G]
    mors = [(x, y, h) for (x, y) in cover.fiber_pairs() for h in G]
    return category_from_rule(
        objects, mors,
        src=lambda m: (m[0], m[2]),
        tgt=lambda m: (m[1], G.op(c(m[0], m[1]), m[2])),
        then=lambda a, b: (a[0], b[1], a[2]),
        ident=lambda o: (o[0], o[0], o[1]),
        name="Y2xINN")


def check_pullback_groupoid(c):
    rep = ValidationReport("bundles")
    P = pullback_groupoid(c)
    Y2 = cech_groupoid(c.cover)
    rep.merge(validate_category(P), "pullback.")
    rep.add("pullback_is_groupoid", P.is_groupoid())
    rep.add("object_count", P.n_objects == c.cover.n_points * c.G.order, (P.n_objects,))
    ypos = {(x, y): i for i, (x, y) in enumerate(c.cover.fiber_pairs())}
    nG = c.G.order
    # objects (y, h) are enumerated y-major, morphisms (x, y, h) pair-major
    proj = Functor(P, Y2, [o // nG for o in range(P.n_objects)],
                   [ypos[m] for m in c.cover.fiber_pairs() for _ in range(nG)])
    rep.merge(validate_functor(proj), "projection.")
    return rep


def _components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = [find(x) for x in range(n)]
    relabel = {r: i for i, r in enumerate(sorted(set(roots)))}
    return np.array([relabel[r] for r in roots], dtype=np.int64)


@dataclass
class TotalSpace:
    """P with its projection, right G-action and the class of each (y, h)."""
    cocycle: Cocycle
    size: int
    cls: np.ndarray                     # cls[y, h] = element of P
    projection: np.ndarray              # P -> base index
    action: np.ndarray                  # action[p, k] = p·k

    def element(self, y, h):
        return int(self.cls[y, h])

    def sheet_edges(self):
        """Within each patch, join (y, h) and (y', h) over adjacent base points."""
        cover = self.cocycle.cover
        edges = set()
        for y in range(cover.n_points):
            for y2 in range(cover.n_points):
                if (cover.patch[y] == cover.patch[y2] and y != y2
                        and cover.adjacent(cover.base_of[y], cover.base_of[y2])):
                    for h in self.cocycle.G:
                        a, b = self.element(y, h), self.element(y2, h)
                        edges.add((min(a, b), max(a, b)))
        return sorted(edges)

    def component_count(self):
        return int(_components(self.size, self.sheet_edges()).max()) + 1


def reconstruct_total(c):
    """Glue the trivial pieces (y, h) along the pullback groupoid's morphisms."""
    _require_valid(c)
    cover, G = c.cover, c.G
    nG = G.order
    edges = [(x * nG + h, y * nG + G.op(c(x, y), h)) for (x, y) in cover.fiber_pairs() for h in G]
    comp = _components(cover.n_points * nG, edges)
    cls = comp.reshape(cover.n_points, nG)
    size = int(comp.max()) + 1
    projection = np.zeros(size, dtype=np.int64)
    action = np.zeros((size, nG), dtype=np.int64)
    for y in range(cover.n_points):
        for h in G:
            p = cls[y, h]
            projection[p] = cover.base_of[y]
            action[p] = cls[y, G.mul[h]]
    return TotalSpace(c, size, cls, projection, action)


def check_total(T):
    """Fibers have |G| elements and G acts freely and transitively on each."""
    rep = ValidationReport("bundles")
    c = T.cocycle
    G, cover = c.G, c.cover
    rep.add("size_is_base_times_group", T.size == len(cover.base) * G.order, (T.size,))
    act = T.action
    ok = np.array_equiv(act[:, G.identity], np.arange(T.size))
    ok &= all(np.array_equal(act[act[:, a], b], act[:, G.op(a, b)]) for a in G for b in G)
    rep.add("right_action", bool(ok))
    rep.add("action_preserves_fibers", bool((T.projection[act] == T.projection[:, None]).all()))
    w = None
    for x in range(len(cover.base)):
        fib = np.flatnonzero(T.projection == x)
        if len(fib) != G.order or any(len(set(act[p])) != G.order for p in fib):
            w = (x,)
            break
    rep.add("free_transitive_on_fibers", w is None, w)
    # the reconstruction is a pushout: (x, h) and (y, g(x,y)h) always agree
    w = next(((x, y, h) for (x, y) in cover.fiber_pairs() for h in G
              if T.element(x, h) != T.element(y, G.op(c(x, y), h))), None)
    rep.add("gluing_respected", w is None, w)
    return rep


def is_product_bundle(T):
    """P = X x G exactly: cls[y, h] depends only on (base, h), and the sheets
    are the slices X x {h}."""
    c = T.cocycle
    cover, G = c.cover, c.G
    for y in range(cover.n_points):
        for h in G:
            if T.element(y, h) != T.element(cover.fiber(cover.base_of[y])[0], h):
                return False
    return T.size == len(cover.base) * G.order


def local_sections(T):
    """Propagate a section through each patch along its sheet edges, starting
    from the first element of the fiber. Returns the section value at every
    patch point."""
    c = T.cocycle
    cover, G = c.cover, c.G
    section = {}
    for i in range(len(cover.patches)):
        pts = [y for y in range(cover.n_points) if cover.patch[y] == i]
        todo = list(pts)
        while todo:
            start = todo[0]
            p0 = int(np.flatnonzero(T.projection == cover.base_of[start])[0])
            h0 = next(h for h in G if T.element(start, h) == p0)
            stack = [start]
            seen = {start}
            while stack:
                y = stack.pop()
                section[y] = T.element(y, h0)
                for y2 in pts:
                    if y2 not in seen and cover.adjacent(cover.base_of[y], cover.base_of[y2]):
                        seen.add(y2)
                        stack.append(y2)
            todo = [y for y in todo if y not in seen]
    return section


def transitions_from_sections(T, section):
    """g'(x, y) = k with s_x = s_y·k."""
    c = T.cocycle
    G = c.G
    out = {}
    for (x, y) in c.cover.fiber_pairs():
        out[(x, y)] = next(k for k in G if T.action[section[y], k] == section[x])
    return Cocycle(c.cover, G, out)


def find_coboundary(a, b):
    """Per-patch constants c with b(x, y) = c(y)^-1·a(x, y)·c(x), or None."""
    cover, G = a.cover, a.G
    n = len(cover.patches)
    pairs = cover.fiber_pairs()
    for cs in itertools.product(range(G.order), repeat=n):
        if all(b(x, y) == G.op(G.inverse(cs[cover.patch[y]]), a(x, y), cs[cover.patch[x]])
               for (x, y) in pairs):
            return cs
    return None


def isomorphism_of_totals(T1, T2, cs):
    """(x, h) |-> (x, c(x)^-1·h), as a map P1 -> P2."""
    c1 = T1.cocycle
    cover, G = c1.cover, c1.G
    phi = np.full(T1.size, -1, dtype=np.int64)
    for y in range(cover.n_points):
        for h in G:
            img = T2.element(y, G.op(G.inverse(cs[cover.patch[y]]), h))
            p = T1.element(y, h)
            if phi[p] not in (-1, img):
                return None
            phi[p] = img
    return phi


def check_equivariant_iso(T1, T2, phi):
    rep = ValidationReport("bundles")
    ok = phi is not None and np.unique(phi).size == T2.size == T1.size
    rep.add("bijective", bool(ok))
    if ok:
        rep.add("over_base", bool((T2.projection[phi] == T1.projection).all()))
        rep.add("equivariant", bool((T2.action[phi] == phi[T1.action]).all()))
    return rep


def check_reextraction(c):
    """Transitions read off the reconstructed total space agree with c up to
    a coboundary."""
    rep = ValidationReport("bundles")
    T = reconstruct_total(c)
    g2 = transitions_from_sections(T, local_sections(T))
    rep.merge(validate_cocycle(g2), "reextracted.")
    cs = find_coboundary(c, g2)
    rep.add("matches_up_to_coboundary", cs is not None, None)
    return rep, cs


def all_cocycles(cover, G):
    """Every cocycle, by free choice on one representative pair per overlap
    point and closure. Only meaningful for fibers of size <= 2."""
    reps = [(x, y) for (x, y) in cover.fiber_pairs() if x < y]
    for vals in itertools.product(range(G.order), repeat=len(reps)):
        yield make_cocycle(cover, G, dict(zip(reps, vals)))


def cohomology_classes(cocycles):
    """Partition into coboundary classes; returns lists of indices."""
    classes = []
    for i, c in enumerate(cocycles):
        for cl in classes:
            if find_coboundary(cocycles[cl[0]], c) is not None:
                cl.append(i)
                break
        else:
            classes.append([i])
    return classes


def check_bundle(c):
    """Everything the bundle module asserts about one cocycle."""
    rep = ValidationReport("bundles")
    rep.merge(validate_cocycle(c), "cocycle.")
    if not rep.ok:
        return rep
    rep.merge(check_pullback_groupoid(c))
    T = reconstruct_total(c)
    rep.merge(check_total(T), "total.")
    rx, _ = check_reextraction(c)
    rep.merge(rx)
    return rep


def circle_family_report(G, n=3):
    """All cocycles on the n-patch circle: coboundary classes, holonomy and
    sheet component counts."""
    rep = ValidationReport("bundles")
    cover = circle_cover(n)
    cocycles = list(all_cocycles(cover, G))
    classes = cohomology_classes(cocycles)
    totals = [reconstruct_total(c) for c in cocycles]
    counts = [T.component_count() for T in totals]
    # holonomy is defined up to conjugation (the base point of the loop)
    hols = [min(G.conj(g, loop_holonomy(c, n)) for g in G) for c in cocycles]
    rep.add("all_valid", all(validate_cocycle(c).ok for c in cocycles))
    rep.add("classes_split_by_holonomy",
            all(len({hols[i] for i in cl}) == 1 for cl in classes)
            and len({hols[cl[0]] for cl in classes}) == len(classes))
    w = None
    for cl in classes:
        for i in cl[1:]:
            cs = find_coboundary(cocycles[cl[0]], cocycles[i])
            if not check_equivariant_iso(totals[cl[0]], totals[i],
                                         isomorphism_of_totals(totals[cl[0]], totals[i], cs)).ok:
                w = (cl[0], i)
    rep.add("coboundary_classes_have_isomorphic_totals", w is None, w)
    rep.add("components_constant_on_classes", all(len({counts[i] for i in cl}) == 1 for cl in classes))
    summary = [(hols[cl[0]], len(cl), counts[cl[0]]) for cl in classes]
    return rep, cocycles, classes, summary
