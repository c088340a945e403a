"""Walk through the cells of INN0 for the identity crossed module on S3,
and show the Peiffer failure that the extracted 2-crossed module measures."""

from innzero.groups import symmetric_group
from innzero.inn import InnCell1, build_inn, peiffer_witness, pi0
from innzero.tcm import extract_from_inn, validate_2crossed
from innzero.xmod import inn_crossed_module


def show(I, m):
    G, H = I.G, I.H
    return (f"({G.label(m.f)}, {H.label(m.F)}; {G.label(m.src)}) : "
            f"{G.label(m.src)} -> {G.label(I.target(m).g)}")


S3 = symmetric_group(3)
X = inn_crossed_module(S3)
I = build_inn(X)
print(f"INN0(S3): {I.nG} objects, {I.n1} one-cells, {I.n2} two-cells")
print(f"connected components: {pi0(I)[0]}")

a = InnCell1(S3.index("(12)"), S3.index("(123)"), S3.identity)
b = InnCell1(S3.index("(13)"), S3.index("(12)"), I.target(a).g)
print("a      =", show(I, a))
print("b      =", show(I, b))
print("a ; b  =", show(I, I.compose_mor1(a, b)))
print("a ⊗ b  =", show(I, I.tensor_mor1(a, b)))

m, m2, conj, act, label = peiffer_witness(I)
print("\nconjugating", show(I, m2), "by", show(I, m))
print("  via tensor products:", show(I, conj))
print("  via the object action:", show(I, act))
print("  the 2-cell between them has label", X.H.label(label))

T = extract_from_inn(X)
rep = validate_2crossed(T)
print(f"\nextracted 2-crossed module: |L|={T.L.order} |M|={T.M.order} |N|={T.N.order}, "
      f"axioms {'hold' if rep.ok else 'FAIL'}")
