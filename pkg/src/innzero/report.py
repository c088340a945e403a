"""Per-axiom validation reports."""

from dataclasses import dataclass, field

import numpy as np

from .errors import CheckFailed


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""


def _fmt(value):
    if isinstance(value, (tuple, list)):
        return "(" + ",".join(_fmt(v) for v in value) + ")"
    if isinstance(value, np.integer):
        return str(int(value))
    return str(value)


@dataclass
class ValidationReport:
    module: str
    checks: list = field(default_factory=list)

    def add(self, name, passed, witness=None, detail=""):
        if witness is not None and not isinstance(witness, tuple):
            witness = (witness,)
        if witness is not None:
            witness = tuple(int(w) if isinstance(w, np.integer) else w for w in witness)
        self.checks.append(Check(name, bool(passed), None if passed else witness, detail))
        return bool(passed)

    def merge(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.detail))
        return self

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def raise_if_failed(self):
        if not self.ok:
            raise CheckFailed(self)
        return self

    def text_lines(self):
        width = max((len(c.name) for c in self.checks), default=0)
        out = []
        for c in self.checks:
            line = f"  {c.name.ljust(width)}  {'pass' if c.passed else 'FAIL'}"
            if c.witness is not None:
                line += f"  witness={_fmt(c.witness)}"
            if c.detail:
                line += f"  {c.detail}"
            out.append(line)
        return out

    def machine_lines(self):
        out = []
        for c in self.checks:
            out.append(f"check.{self.module}.{c.name}={'pass' if c.passed else 'fail'}")
            if c.witness is not None:
                out.append(f"witness.{c.name}={_fmt(c.witness)}")
        return out


def first_false(mask, *coords):
    """Witness tuple at the first False entry of a boolean array, or None.

    ``coords`` are arrays broadcastable to ``mask``; with none given the
    multi-index of the entry is returned.
    """
    mask = np.asarray(mask)
    bad = np.flatnonzero(~mask.ravel())
    if bad.size == 0:
        return None
    i = bad[0]
    if not coords:
        return tuple(int(v) for v in np.unravel_index(i, mask.shape))
    return tuple(int(np.broadcast_to(c, mask.shape).ravel()[i]) for c in coords)
