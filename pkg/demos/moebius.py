"""Principal Z/2 bundles over a three-patch circle: every cocycle, its
reconstructed total space and the number of sheets."""

from innzero.bundles import circle_cocycle, circle_family_report, loop_holonomy, reconstruct_total
from innzero.groups import cyclic_group, symmetric_group

Z2 = cyclic_group(2)
for vals in ([0, 0, 0], [1, 0, 0], [1, 1, 0], [1, 1, 1]):
    c = circle_cocycle(Z2, vals)
    T = reconstruct_total(c)
    print(f"transitions {vals}: holonomy {loop_holonomy(c)}, {T.size} points, "
          f"{T.component_count()} sheet component(s)")

for G in (Z2, symmetric_group(3)):
    rep, cocycles, classes, summary = circle_family_report(G, 3)
    print(f"\n{G.name}: {len(cocycles)} cocycles, {len(classes)} classes, checks {'pass' if rep.ok else 'FAIL'}")
    for hol, size, comps in sorted(summary):
        print(f"  holonomy class of {G.label(hol)}: {size} cocycles, {comps} component(s)")
