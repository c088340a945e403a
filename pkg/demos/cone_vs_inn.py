"""The mapping cone of the identity crossed square is the 2-crossed module
of INN0, entry by entry, for every crossed module tried here."""

from innzero.groups import cyclic_group, dihedral_group, symmetric_group
from innzero.tcm import compare_cone_inn, homology, mapping_cone
from innzero.xmod import aut_crossed_module, identity_square, inn_crossed_module

for G in (cyclic_group(4), symmetric_group(3), dihedral_group(4)):
    for X in (inn_crossed_module(G), aut_crossed_module(G)):
        C = mapping_cone(identity_square(X))
        rep = compare_cone_inn(X)
        orders = [p.order for p in homology(C)]
        print(f"{X.name:10} cone |L|,|M|,|N| = {C.L.order},{C.M.order},{C.N.order}  "
              f"homology orders {orders}  identical to INN0 data: {rep.ok}")
