"""The strict 2-group of a crossed module.

One object; 1-cells are elements g of G; a 2-cell (g, h) goes from g to
t(h)·g. Composition order: "a then b" is written b·a.
"""

from typing import NamedTuple

import numpy as np

from .errors import BudgetExceeded, NotComposable
from .report import ValidationReport, first_false


class OneCell(NamedTuple):
    g: int


class TwoCell(NamedTuple):
    g: int
    h: int


class Strict2Group:
    def __init__(self, X):
        self.X = X
        self.G, self.H = X.G, X.H

    def target(self, a: TwoCell) -> OneCell:
        return OneCell(self.G.op(self.X.t(a.h), a.g))

    def source(self, a: TwoCell) -> OneCell:
        return OneCell(a.g)

    def identity_2(self, g) -> TwoCell:
        return TwoCell(g, self.H.identity)

    def compose_1(self, a: OneCell, b: OneCell) -> OneCell:
        return OneCell(self.G.op(b.g, a.g))

    def vcompose(self, a: TwoCell, b: TwoCell) -> TwoCell:
        """a then b, stacked along the 1-cell target(a) = source(b)."""
        if self.target(a).g != b.g:
            raise NotComposable("target(a) != source(b)", (a, b))
        return TwoCell(a.g, self.H.op(b.h, a.h))

    def hcompose(self, a: TwoCell, b: TwoCell) -> TwoCell:
        """a then b side by side: source g_b g_a, label h_b · ^{g_b}h_a."""
        return TwoCell(self.G.op(b.g, a.g), self.H.op(b.h, self.X.act(b.g, a.h)))

    def vinverse(self, a: TwoCell) -> TwoCell:
        return TwoCell(self.target(a).g, self.H.inverse(a.h))

    def hinverse(self, a: TwoCell) -> TwoCell:
        gi = self.G.inverse(a.g)
        return TwoCell(gi, self.X.act(gi, self.H.inverse(a.h)))

    def cells(self):
        return [TwoCell(g, h) for g in self.G for h in self.H]


def compose_1(X, a, b):
    return Strict2Group(X).compose_1(a, b)


def vcompose_2(X, a, b):
    return Strict2Group(X).vcompose(a, b)


def hcompose_2(X, a, b):
    return Strict2Group(X).hcompose(a, b)


def check_2group_axioms(X, budget=10_000):
    """Exhaustive strict 2-group axioms for ``X`` (or a :class:`Strict2Group`).

    ``budget`` bounds the number of 2-cells |G|·|H|.
    """
    B = X if isinstance(X, Strict2Group) else Strict2Group(X)
    G, H = B.G, B.H
    n = G.order * H.order
    if n > budget:
        raise BudgetExceeded(n, budget)
    rep = ValidationReport("g2")
    cells = B.cells()
    e1 = OneCell(G.identity)

    w = next((a for a in G for b in G for c in G
              if B.compose_1(B.compose_1(OneCell(a), OneCell(b)), OneCell(c))
              != B.compose_1(OneCell(a), B.compose_1(OneCell(b), OneCell(c)))), None)
    rep.add("assoc_1cells", w is None, w)
    w = next((g for g in G if B.compose_1(e1, OneCell(g)).g != g
              or B.compose_1(OneCell(g), e1).g != g), None)
    rep.add("unit_1cells", w is None, w)

    # vertical structure
    out_of = {}
    for a in cells:
        out_of.setdefault(a.g, []).append(a)
    def after(a):
        return out_of[B.target(a).g]
    w = next((a for a in cells
              if B.vcompose(B.identity_2(a.g), a) != a
              or B.vcompose(a, B.identity_2(B.target(a).g)) != a), None)
    rep.add("unit_vertical", w is None, w)
    w = next(((a, b, c) for a in cells for b in after(a) for c in after(b)
              if B.vcompose(B.vcompose(a, b), c) != B.vcompose(a, B.vcompose(b, c))), None)
    rep.add("assoc_vertical", w is None, w)

    # horizontal structure
    idc = B.identity_2(G.identity)
    w = next((a for a in cells if B.hcompose(idc, a) != a or B.hcompose(a, idc) != a), None)
    rep.add("unit_horizontal", w is None, w)
    w = next(((a, b) for a in cells for b in cells
              if B.hcompose(B.identity_2(a.g), B.identity_2(b.g)) != B.identity_2(B.compose_1(OneCell(a.g), OneCell(b.g)).g)),
             None)
    rep.add("horizontal_preserves_identities", w is None, w)
    w = next(((a, b, c) for a in cells for b in cells for c in cells
              if B.hcompose(B.hcompose(a, b), c) != B.hcompose(a, B.hcompose(b, c))), None)
    rep.add("assoc_horizontal", w is None, w)
    w = next(((a, b) for a in cells for b in cells
              if B.target(B.hcompose(a, b)) != B.compose_1(B.target(a), B.target(b))), None)
    rep.add("target_functorial", w is None, w)

    # interchange: (a;b) * (c;d) = (a*c);(b*d)
    pairs = [(a, b) for a in cells for b in after(a)]
    w = None
    for a, b in pairs:
        ab = B.vcompose(a, b)
        for c, d in pairs:
            lhs = B.hcompose(ab, B.vcompose(c, d))
            try:
                rhs = B.vcompose(B.hcompose(a, c), B.hcompose(b, d))
            except NotComposable:
                rhs = None
            if lhs != rhs:
                w = (a, b, c, d)
                break
        if w:
            break
    rep.add("interchange", w is None, w)

    w = next((a for a in cells
              if B.vcompose(a, B.vinverse(a)) != B.identity_2(a.g)
              or B.vcompose(B.vinverse(a), a) != B.identity_2(B.target(a).g)), None)
    rep.add("vertical_inverse", w is None, w)
    w = next((a for a in cells
              if B.hcompose(a, B.hinverse(a)) != idc or B.hcompose(B.hinverse(a), a) != idc), None)
    rep.add("horizontal_inverse", w is None, w)
    return rep
