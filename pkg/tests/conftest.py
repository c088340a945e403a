import sys
import numpy as np
import pytest

from innzero.groups import cyclic_group, dihedral_group, symmetric_group, trivial_group
from innzero.xmod import (aut_crossed_module, crossed_module, inclusion_crossed_module,
                          inn_crossed_module, trivial_crossed_module)


@pytest.fixture(scope="session")
def S3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def Z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def Z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def D4():
    return dihedral_group(4)


def z2_in_z4():
    Z2, Z4 = cyclic_group(2), cyclic_group(4)
    return crossed_module(Z2, Z4, np.array([0, 2]), np.tile(np.arange(2), (4, 1)), "Z2inZ4")


@pytest.fixture(scope="session")
def Z2Z4():
    return z2_in_z4()


@pytest.fixture(scope="session")
def innS3(S3):
    return inn_crossed_module(S3)


def corpus():
    """Every crossed module the suite treats as the standard corpus."""
    S3, D4 = symmetric_group(3), dihedral_group(4)
    Z2, Z4 = cyclic_group(2), cyclic_group(4)
    out = {"trivial": trivial_crossed_module(), "Z2inZ4": z2_in_z4()}
    for name, G in (("Z2", Z2), ("Z4", Z4), ("S3", S3), ("D4", D4)):
        out[f"inn{name}"] = inn_crossed_module(G)
        out[f"aut{name}"] = aut_crossed_module(G)
    out["A3inS3"] = inclusion_crossed_module(S3, [S3.index(x) for x in ("e", "(123)", "(132)")])
    return out


CORPUS = corpus()


def el(G, *labels):
    """Indices of the named elements."""
    idx = [G.index(x) for x in labels]
    return idx[0] if len(idx) == 1 else idx


@pytest.fixture(scope="session")
def one():
    return trivial_group()


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[number])
