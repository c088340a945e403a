"""Nerves of tangent categories against décalage, and the W-bar / W
constructions for a constant simplicial group."""

from innzero.groups import symmetric_group
from innzero.simplicial import (check_tangent_vs_decalage, check_W_identifications, decalage,
                                delooping, linear_poset, nerve, tangent_category)

S3 = symmetric_group(3)
BS3 = delooping(S3)
print("N(BS3) level sizes:", nerve(BS3, 4).sizes())
print("Dec N(BS3) level sizes:", decalage(nerve(BS3, 5)).sizes())
T = tangent_category(BS3)
print(f"tangent category of BS3: {T.n_objects} objects, {T.n_morphisms} morphisms, "
      f"codiscrete: {T.is_codiscrete()}")

for C in (BS3, linear_poset(3)):
    rep = check_tangent_vs_decalage(C, 4)
    print(f"N(T {C.name}) = Dec N({C.name}) to depth 4: {rep.ok}")

rep = check_W_identifications(S3, 3)
for c in rep.checks:
    if "." not in c.name:
        print(f"  {c.name}: {'pass' if c.passed else 'FAIL'}")
