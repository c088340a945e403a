"""``innzero`` command-line driver.

Every command loads the ``--input`` documents, runs the matching checks on
each applicable object and prints a per-check table (or ``key=value`` lines
with ``--machine``). The exit status is 0 iff every check passed.
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import bundles, g2, inn, io, simplicial, tcm, xmod
from .errors import BudgetExceeded, InnzeroError, ParseError
from .report import ValidationReport

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    depth: int | None = None
    budget: int | None = None
    machine: bool = False

    def __post_init__(self):
        if self.depth is not None and self.depth < 1:
            raise ValueError("depth must be >= 1")
        if self.budget is not None and self.budget < 1:
            raise ValueError("budget must be >= 1")


class Output:
    def __init__(self, machine):
        self.machine = machine
        self.lines = []
        self.ok = True

    def section(self, title):
        if not self.machine:
            self.lines.append(f"== {title}")

    def value(self, key, val):
        if self.machine:
            self.lines.append(f"value.{key}={val}")
        else:
            self.lines.append(f"  {key}: {val}")

    def text(self, block):
        if not self.machine:
            self.lines.extend(block.rstrip("\n").split("\n"))

    def report(self, rep, scope):
        prefixed = ValidationReport(rep.module).merge(rep, f"{scope}.")
        self.lines.extend(prefixed.machine_lines() if self.machine else rep.text_lines())
        self.ok &= rep.ok


def _budget(cfg, default):
    return cfg.budget if cfg.budget is not None else default


def _depth(cfg, default=4):
    return cfg.depth if cfg.depth is not None else default


def _xmods(doc):
    return list(doc.xmods.items())


def _groups(doc):
    return list(doc.groups.items())


def _tcms_or_extracted(doc):
    if doc.tcms:
        return [(n, T, False) for n, T in doc.tcms.items()]
    return [(f"inn0_{n}", tcm.extract_from_inn(X), True) for n, X in doc.xmods.items()]


def cmd_validate_xmod(doc, cfg, out):
    for name, X in _xmods(doc):
        out.section(f"crossed module {name}")
        rep = xmod.validate_crossed_module(X)
        if rep.ok:
            rep.merge(xmod.classical_consequences(X))
        out.report(rep, name)
    return bool(doc.xmods)


def cmd_check_2group(doc, cfg, out):
    for name, X in _xmods(doc):
        out.section(f"strict 2-group of {name}")
        out.report(g2.check_2group_axioms(X, _budget(cfg, 10_000)), name)
    return bool(doc.xmods)


def cmd_build_inn(doc, cfg, out):
    for name, X in _xmods(doc):
        out.section(f"INN0 of {name}")
        I = inn.build_inn(X, _budget(cfg, 10_000))
        nG, nH = X.G.order, X.H.order
        out.value(f"{name}.objects", I.nG)
        out.value(f"{name}.one_cells", I.n1)
        out.value(f"{name}.two_cells", I.n2)
        rep = ValidationReport("inn")
        rep.add("object_count", I.nG == nG)
        rep.add("one_cell_count", I.n1 == nG * nG * nH)
        rep.merge(inn.check_codiscrete(I))
        out.report(rep, name)
    return bool(doc.xmods)


def cmd_check_inn(doc, cfg, out):
    for name, X in _xmods(doc):
        out.section(f"INN0 propositions for {name}")
        out.report(inn.check_inn(X, _budget(cfg, 10_000)), name)
    return bool(doc.xmods)


def cmd_extract_tcm(doc, cfg, out):
    for name, X in _xmods(doc):
        out.section(f"2-crossed module extracted from INN0({name})")
        T = tcm.extract_from_inn(X)
        rep = tcm.validate_2crossed(T)
        I = inn.build_inn(X, _budget(cfg, 10_000))
        T2, maps = tcm.from_cells(I)
        rep.merge(tcm.check_isomorphism(T2, T, *maps), "from_cells.")
        out.value(f"{name}.orders", f"L={T.L.order},M={T.M.order},N={T.N.order}")
        out.report(rep, name)
        out.text(io.write_tcm(T, f"inn0_{name}"))
    return bool(doc.xmods)


def cmd_validate_tcm(doc, cfg, out):
    for name, T, _ in _tcms_or_extracted(doc):
        out.section(f"2-crossed module {name}")
        out.report(tcm.validate_2crossed(T), name)
    return bool(doc.tcms or doc.xmods)


def cmd_mapping_cone(doc, cfg, out):
    for name, X in _xmods(doc):
        out.section(f"mapping cone of the identity square on {name}")
        S = xmod.identity_square(X)
        rep = ValidationReport("tcm")
        rep.merge(xmod.validate_crossed_square(S), "square.")
        C = tcm.mapping_cone(S)
        rep.merge(tcm.validate_2crossed(C), "cone.")
        out.value(f"{name}.orders", f"L={C.L.order},M={C.M.order},N={C.N.order}")
        out.report(rep, name)
        out.text(io.write_tcm(C, f"cone_{name}"))
    return bool(doc.xmods)


def cmd_compare_cone_inn(doc, cfg, out):
    for name, X in _xmods(doc):
        out.section(f"mapping cone vs INN0 for {name}")
        lg = X.G.name or "G"
        lh = X.H.name or "H"
        out.value(f"{name}.L", f"{lh} = 2-cells out of the unit 1-cell (identity map)")
        out.value(f"{name}.M", f"{lg}x|{lh} = 1-cells out of the unit object (identity map)")
        out.value(f"{name}.N", f"{lg} = objects (identity map)")
        out.report(tcm.compare_cone_inn(X), name)
    return bool(doc.xmods)


def cmd_homology(doc, cfg, out):
    for name, T, extracted in _tcms_or_extracted(doc):
        out.section(f"homology of {name}")
        pi0, pi1, pi2 = tcm.homology(T)
        out.value(f"{name}.pi0_order", pi0.order)
        out.value(f"{name}.pi1_order", pi1.order)
        out.value(f"{name}.pi2_order", pi2.order)
        rep = ValidationReport("tcm")
        rep.add("image_d1_normal", tcm.image_d1_normal(T))
        if extracted:
            rep.merge(tcm.check_trivial_homology(T), "trivial.")
        out.report(rep, name)
    return bool(doc.tcms or doc.xmods)


def cmd_nerve_decalage(doc, cfg, out):
    k = _depth(cfg)
    for name, G in _groups(doc):
        out.section(f"nerve of the tangent category vs decalage, B{name}, depth {k}")
        out.report(simplicial.check_tangent_vs_decalage(simplicial.delooping(G), k), f"B{name}")
    return bool(doc.groups)


def cmd_double_nerve(doc, cfg, out):
    k = _depth(cfg, 2)
    for name, X in _xmods(doc):
        out.section(f"double nerve sequence for {name}, depth ({k},{k})")
        out.report(simplicial.check_bisimplicial_sequence(X, k, _budget(cfg, 20_000_000)), name)
    return bool(doc.xmods)


def cmd_w_check(doc, cfg, out):
    k = _depth(cfg)
    for name, G in _groups(doc):
        out.section(f"W-bar and W identifications for {name}, depth {k}")
        out.report(simplicial.check_W_identifications(G, k), name)
    return bool(doc.groups)


def cmd_bundle_reconstruct(doc, cfg, out):
    for name, (c, _, _, _) in doc.cocycles.items():
        out.section(f"principal bundle of cocycle {name}")
        T = bundles.reconstruct_total(c)
        out.value(f"{name}.total_size", T.size)
        out.value(f"{name}.sheet_components", T.component_count())
        out.value(f"{name}.product", "yes" if bundles.is_product_bundle(T) else "no")
        out.report(bundles.check_bundle(c), name)
    return bool(doc.cocycles)


def cmd_tower(doc, cfg, out):
    for name, G in _groups(doc):
        out.section(f"tower Z -> INN -> AUT -> OUT for {name}")
        T = xmod.one_group_tower(G)
        out.value(f"{name}.orders", ",".join(f"{X.H.order}->{X.G.order}" for X in T.modules))
        out.report(T.report, name)
    return bool(doc.groups)


COMMANDS = {
    "validate-xmod": cmd_validate_xmod,
    "check-2group": cmd_check_2group,
    "build-inn": cmd_build_inn,
    "check-inn": cmd_check_inn,
    "extract-tcm": cmd_extract_tcm,
    "validate-tcm": cmd_validate_tcm,
    "mapping-cone": cmd_mapping_cone,
    "compare-cone-inn": cmd_compare_cone_inn,
    "homology": cmd_homology,
    "nerve-decalage": cmd_nerve_decalage,
    "double-nerve": cmd_double_nerve,
    "w-check": cmd_w_check,
    "bundle-reconstruct": cmd_bundle_reconstruct,
    "tower": cmd_tower,
}


def resolve_input(path):
    """A filesystem path, or the name of a bundled input."""
    p = Path(path)
    if p.exists():
        return p
    bundled = io.data_path(path)
    if bundled.is_file():
        return bundled
    raise ParseError(f"no such input file: {path}")


def load_inputs(paths):
    doc = io.Document()
    for path in paths:
        p = resolve_input(path)
        io.parse(p.read_text(encoding="utf-8"), str(path), doc)
    return doc


def run(cfg):
    """Returns (exit status, output lines, error message or None)."""
    out = Output(cfg.machine)
    try:
        doc = load_inputs(cfg.inputs)
        applicable = COMMANDS[cfg.command](doc, cfg, out)
    except ParseError as exc:
        return EXIT_INPUT, out.lines, f"parse error: {exc}"
    except BudgetExceeded as exc:
        return EXIT_BUDGET, out.lines, f"budget exceeded: {exc}"
    except InnzeroError as exc:
        return EXIT_FAILED, out.lines, f"error: {exc}"
    if not applicable:
        return EXIT_INPUT, out.lines, f"{cfg.command}: no applicable object in the inputs"
    return (EXIT_OK if out.ok else EXIT_FAILED), out.lines, None


def build_parser():
    ap = argparse.ArgumentParser(prog="innzero", description=__doc__.split("\n")[0])
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--input", action="append", default=[], metavar="PATH",
                    help="input document (repeatable); bundled names such as s3_identity.txt work too")
    ap.add_argument("--depth", type=int, default=None,
                    help="truncation depth (default 4; double-nerve defaults to 2)")
    ap.add_argument("--budget", type=int, default=None, help="enumeration budget in cells")
    ap.add_argument("--machine", action="store_true", help="emit key=value lines")
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if not args.input:
        ap.error("at least one --input is required")
    try:
        cfg = RunConfig(args.command, args.input, args.depth, args.budget, args.machine)
    except ValueError as exc:
        ap.error(str(exc))
    status, lines, err = run(cfg)
    if lines:
        sys.stdout.write("\n".join(lines) + "\n")
    if err:
        sys.stderr.write(err + "\n")
    elif not cfg.machine:
        sys.stdout.write("all checks passed\n" if status == EXIT_OK else "some checks FAILED\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
