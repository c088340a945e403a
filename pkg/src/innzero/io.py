"""Line-oriented text formats for groups, crossed modules, 2-crossed modules,
covers and cocycles.

A document is a sequence of blocks, each opened by a header line
(``group``, ``xmod``, ``tcm``, ``cover``, ``cocycle``). Blank lines and lines
starting with ``#`` are ignored. Writers emit the canonical form, so parsing
canonical text and writing it back reproduces it byte for byte.
"""

from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from .bundles import Cocycle, make_cocycle, make_cover
from .errors import InnzeroError, ParseError
from .groups import GroupAction, GroupHom, make_group
from .tcm import TwoCrossedModule
from .xmod import crossed_module

HEADERS = ("group", "xmod", "tcm", "cover", "cocycle")


@dataclass
class Document:
    groups: dict = field(default_factory=dict)
    xmods: dict = field(default_factory=dict)
    tcms: dict = field(default_factory=dict)
    covers: dict = field(default_factory=dict)
    cocycles: dict = field(default_factory=dict)
    order: list = field(default_factory=list)      # (kind, name) in input order

    def add(self, kind, name, value):
        getattr(self, kind)[name] = value
        self.order.append((kind, name))


class _Lines:
    def __init__(self, text, source):
        self.items = []
        for n, raw in enumerate(text.splitlines(), 1):
            s = raw.strip()
            if s and not s.startswith("#"):
                self.items.append((n, s.split()))
        self.pos = 0
        self.source = source

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else (None, None)

    def next(self, what):
        if self.pos >= len(self.items):
            last = self.items[-1][0] if self.items else 0
            raise ParseError(f"unexpected end of input, expected {what}", last, self.source)
        item = self.items[self.pos]
        self.pos += 1
        return item

    def error(self, msg, line):
        return ParseError(msg, line, self.source)

    def keyword(self, kw, nargs=None):
        line, toks = self.next(kw)
        if toks[0] != kw:
            raise self.error(f"expected '{kw}', found '{toks[0]}'", line)
        if nargs is not None and len(toks) - 1 != nargs:
            raise self.error(f"'{kw}' takes {nargs} argument(s), got {len(toks) - 1}", line)
        return line, toks[1:]

    def ints(self, toks, line, count, bound):
        if len(toks) != count:
            raise self.error(f"expected {count} entries, got {len(toks)}", line)
        try:
            vals = [int(t) for t in toks]
        except ValueError as exc:
            raise self.error(f"not an integer: {exc}", line) from None
        bad = next((v for v in vals if not 0 <= v < bound), None)
        if bad is not None:
            raise self.error(f"index {bad} out of range 0..{bound - 1}", line)
        return vals

    def rows(self, count, width, bound):
        return [self.ints(*self._row(), width, bound) for _ in range(count)]

    def _row(self):
        line, toks = self.next("table row")
        if toks[0] in HEADERS:
            raise self.error(f"table ended early at '{toks[0]}'", line)
        return toks, line


def _lookup(table, name, line, lines, kind):
    if name not in table:
        raise lines.error(f"unknown {kind} '{name}'", line)
    return table[name]


def _parse_group(lines, doc):
    line, args = lines.keyword("group", 2)
    name = args[0]
    try:
        order = int(args[1])
    except ValueError:
        raise lines.error(f"group order must be an integer, got '{args[1]}'", line) from None
    if order < 1:
        raise lines.error("group order must be positive", line)
    lines.keyword("table", 0)
    table = lines.rows(order, order, order)
    labels = None
    if lines.peek()[1] and lines.peek()[1][0] == "labels":
        lline, labels = lines.keyword("labels")
        if len(labels) != order:
            raise lines.error(f"expected {order} labels, got {len(labels)}", lline)
    try:
        G = make_group(np.array(table), labels, name)
    except InnzeroError as exc:
        raise lines.error(f"invalid group '{name}': {exc} {getattr(exc, 'witness', '')}".rstrip(), line) from None
    doc.add("groups", name, G)


def _parse_xmod(lines, doc):
    line, args = lines.keyword("xmod", 1)
    name = args[0]
    gline, (hname, gname) = lines.keyword("groups", 2)
    H = _lookup(doc.groups, hname, gline, lines, "group")
    G = _lookup(doc.groups, gname, gline, lines, "group")
    tline, t = lines.keyword("t")
    t = lines.ints(t, tline, H.order, G.order)
    lines.keyword("alpha", 0)
    alpha = lines.rows(G.order, H.order, H.order)
    doc.add("xmods", name, crossed_module(H, G, np.array(t), np.array(alpha), name))


def _parse_tcm(lines, doc):
    line, args = lines.keyword("tcm", 1)
    name = args[0]
    gline, gn = lines.keyword("groups", 3)
    L, M, N = (_lookup(doc.groups, g, gline, lines, "group") for g in gn)
    l2, d2 = lines.keyword("d2")
    d2 = lines.ints(d2, l2, L.order, M.order)
    l1, d1 = lines.keyword("d1")
    d1 = lines.ints(d1, l1, M.order, N.order)
    lines.keyword("act_M", 0)
    act_M = lines.rows(N.order, M.order, M.order)
    lines.keyword("act_L", 0)
    act_L = lines.rows(N.order, L.order, L.order)
    lines.keyword("peiffer", 0)
    pf = lines.rows(M.order, M.order, L.order)
    doc.add("tcms", name, TwoCrossedModule(
        L, M, N, GroupHom(L, M, np.array(d2)), GroupHom(M, N, np.array(d1)),
        GroupAction(N, M, np.array(act_M)), GroupAction(N, L, np.array(act_L)),
        np.array(pf, dtype=np.int64), name))


def _parse_cover(lines, doc):
    line, args = lines.keyword("cover", 1)
    name = args[0]
    _, base = lines.keyword("base")
    patches = {}
    adjacency = []
    while lines.peek()[1] and lines.peek()[1][0] in ("patch", "adjacent"):
        pline, toks = lines.next("patch")
        if toks[0] == "patch":
            if len(toks) < 2:
                raise lines.error("patch needs a name", pline)
            bad = next((b for b in toks[2:] if b not in base), None)
            if bad is not None:
                raise lines.error(f"unknown base point '{bad}'", pline)
            patches[toks[1]] = toks[2:]
        else:
            if len(toks) != 3 or toks[1] not in base or toks[2] not in base:
                raise lines.error("adjacent takes two base points", pline)
            adjacency.append((toks[1], toks[2]))
    try:
        cover = make_cover(base, patches, adjacency)
    except ValueError as exc:
        raise lines.error(str(exc), line) from None
    doc.add("covers", name, (cover, adjacency))


def _point(cover, token, line, lines):
    try:
        patch, base = token.split(":")
        return cover.point(cover.patches.index(patch), cover.base.index(base))
    except (ValueError, KeyError):
        raise lines.error(f"unknown patch point '{token}'", line) from None


def _parse_cocycle(lines, doc):
    line, args = lines.keyword("cocycle", 1)
    name = args[0]
    cline, (cname,) = lines.keyword("cover", 1)
    cover, _ = _lookup(doc.covers, cname, cline, lines, "cover")
    gline, (gname,) = lines.keyword("in", 1)
    G = _lookup(doc.groups, gname, gline, lines, "group")
    given = {}
    while lines.peek()[1] and lines.peek()[1][0] == "value":
        vline, toks = lines.next("value")
        if len(toks) != 4:
            raise lines.error("value takes two patch points and a group index", vline)
        x, y = _point(cover, toks[1], vline, lines), _point(cover, toks[2], vline, lines)
        if cover.base_of[x] != cover.base_of[y]:
            raise lines.error(f"{toks[1]} and {toks[2]} lie over different base points", vline)
        given[(x, y)] = lines.ints(toks[3:], vline, 1, G.order)[0]
    c = make_cocycle(cover, G, given)
    doc.add("cocycles", name, (c, cname, gname, list(given)))


_PARSERS = {"group": _parse_group, "xmod": _parse_xmod, "tcm": _parse_tcm,
            "cover": _parse_cover, "cocycle": _parse_cocycle}


def parse(text, source=None, into=None):
    """Parse a document; names may refer to blocks already in ``into``."""
    doc = into if into is not None else Document()
    lines = _Lines(text, source)
    while lines.peek()[0] is not None:
        line, toks = lines.peek()
        if toks[0] not in _PARSERS:
            raise lines.error(f"unknown block '{toks[0]}'", line)
        _PARSERS[toks[0]](lines, doc)
    return doc


def load(path, into=None):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), str(path), into)


# writers

def _row(vals):
    return " ".join(str(int(v)) for v in vals)


def write_group(G, name=None):
    name = name or G.name
    out = [f"group {name} {G.order}", "table"]
    out += [_row(r) for r in G.mul]
    if G.labels:
        out.append("labels " + " ".join(G.labels))
    return "\n".join(out) + "\n"


def _group_names(groups, owner):
    """Names for a list of groups, writing a shared group object once."""
    names, seen, blocks = [], {}, []
    for i, (tag, G) in enumerate(groups):
        if id(G) in seen:
            names.append(seen[id(G)])
            continue
        nm = G.name if G.name and G.name not in seen.values() else f"{owner}.{tag}"
        seen[id(G)] = nm
        names.append(nm)
        blocks.append(write_group(G, nm))
    return names, blocks


def write_xmod(X, name=None, with_groups=True):
    name = name or X.name or "xmod"
    (hn, gn), blocks = _group_names([("H", X.H), ("G", X.G)], name)
    out = [f"xmod {name}", f"groups {hn} {gn}", "t " + _row(X.t.map), "alpha"]
    out += [_row(r) for r in X.alpha.table]
    return "".join(blocks if with_groups else []) + "\n".join(out) + "\n"


def write_tcm(T, name=None, group_names=None):
    """Three group blocks (named <name>.L, .M, .N) followed by the tcm block.
    With ``group_names`` only the tcm block is written, referring to them."""
    name = name or T.name or "tcm"
    if group_names is None:
        group_names = [f"{name}.{tag}" for tag in "LMN"]
        blocks = [write_group(G, n) for G, n in zip((T.L, T.M, T.N), group_names)]
    else:
        blocks = []
    out = [f"tcm {name}", "groups " + " ".join(group_names),
           "d2 " + _row(T.d2.map), "d1 " + _row(T.d1.map), "act_M"]
    out += [_row(r) for r in T.act_M.table]
    out.append("act_L")
    out += [_row(r) for r in T.act_L.table]
    out.append("peiffer")
    out += [_row(r) for r in np.asarray(T.peiffer)]
    return "".join(blocks) + "\n".join(out) + "\n"


def write_cover(cover, name, adjacency=None):
    out = [f"cover {name}", "base " + " ".join(cover.base)]
    for i, p in enumerate(cover.patches):
        pts = [cover.base[cover.base_of[y]] for y in range(cover.n_points) if cover.patch[y] == i]
        out.append(f"patch {p} " + " ".join(pts))
    if adjacency is None:
        adjacency = sorted(tuple(sorted(cover.base[i] for i in e)) for e in cover.adjacency)
    out += [f"adjacent {a} {b}" for a, b in adjacency]
    return "\n".join(out) + "\n"


def write_cocycle(c: Cocycle, name, cover_name, group_name, pairs=None):
    """Values for ``pairs`` (default: every off-diagonal pair x < y)."""
    cover = c.cover
    if pairs is None:
        pairs = [(x, y) for (x, y) in cover.fiber_pairs() if x < y]
    out = [f"cocycle {name}", f"cover {cover_name}", f"in {group_name}"]
    out += [f"value {cover.point_label(x)} {cover.point_label(y)} {c(x, y)}" for x, y in pairs]
    return "\n".join(out) + "\n"


def write_document(doc):
    out = []
    for kind, name in doc.order:
        if kind == "groups":
            out.append(write_group(doc.groups[name], name))
        elif kind == "xmods":
            out.append(write_xmod(doc.xmods[name], name, with_groups=False))
        elif kind == "tcms":
            T = doc.tcms[name]
            out.append(write_tcm(T, name, [T.L.name, T.M.name, T.N.name]))
        elif kind == "covers":
            cover, adjacency = doc.covers[name]
            out.append(write_cover(cover, name, adjacency))
        else:
            c, cname, gname, pairs = doc.cocycles[name]
            out.append(write_cocycle(c, name, cname, gname, pairs))
    return "".join(out)


def data_path(name):
    """Path of a bundled input file."""
    return resources.files("innzero") / "data" / name


def bundled_inputs():
    return sorted(p.name for p in (resources.files("innzero") / "data").iterdir()
                  if p.name.endswith(".txt"))
