import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from innzero import io
from innzero.bundles import circle_cocycle, validate_cocycle
from innzero.errors import ParseError
from innzero.groups import cyclic_group, dihedral_group, symmetric_group
from innzero.tcm import extract_from_inn, validate_2crossed
from innzero.xmod import validate_crossed_module

from conftest import CORPUS


@pytest.mark.parametrize("name", io.bundled_inputs())
def test_bundled_files_round_trip(name):
    text = io.data_path(name).read_text(encoding="utf-8")
    assert io.write_document(io.parse(text)) == text


def test_bundled_contents():
    doc = io.load(io.data_path("s3_identity.txt"))
    assert validate_crossed_module(doc.xmods["idS3"]).ok
    doc = io.load(io.data_path("z2_in_z4_extracted.txt"))
    (T,) = doc.tcms.values()
    assert validate_2crossed(T).ok
    doc = io.load(io.data_path("circle_z2.txt"))
    assert set(doc.cocycles) == {"trivial", "moebius"}
    assert all(validate_cocycle(c).ok for c, *_ in doc.cocycles.values())


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_xmod_round_trip(name):
    X = CORPUS[name]
    text = io.write_xmod(X, "X")
    Y = io.parse(text).xmods["X"]
    assert Y == X
    assert io.write_xmod(Y, "X") == text


@pytest.mark.parametrize("name", ["Z2inZ4", "innS3", "A3inS3"])
def test_tcm_round_trip(name):
    T = extract_from_inn(CORPUS[name])
    text = io.write_tcm(T, "T")
    doc = io.parse(text)
    assert doc.tcms["T"] == T
    assert io.write_document(doc) == text


def test_cocycle_round_trip():
    S3 = symmetric_group(3)
    c = circle_cocycle(S3, [1, 3, 5])
    doc = io.parse(io.write_group(S3, "S3") + io.write_cover(c.cover, "circ")
                   + io.write_cocycle(c, "k", "circ", "S3"))
    c2 = doc.cocycles["k"][0]
    assert c2.values == c.values


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([cyclic_group(5), dihedral_group(3), symmetric_group(3), cyclic_group(1)]),
       st.booleans())
def test_group_round_trip_property(G, labelled):
    text = io.write_group(G, "G") if labelled else "\n".join(io.write_group(G, "G").splitlines()[:-1]) + "\n"
    H = io.parse(text).groups["G"]
    assert np.array_equal(H.mul, G.mul)


def test_comments_and_blank_lines():
    doc = io.parse("# a comment\n\ngroup Z2 2\n  table\n0 1\n\n1 0\n")
    assert doc.groups["Z2"].order == 2


BAD = [
    ("group Z2 2\ntable\n0 1\n1 2\n", 4, "out of range"),
    ("group Z2 2\ntable\n0 1\n", 3, "end of input"),
    ("group Z2 2\ntable\n0 1\nxmod X\n", 4, "ended early"),
    ("xmod X\ngroups A B\n", 2, "unknown group"),
    ("group Z2 2\ntable\n0 1\n1 1\n", None, ""),
    ("frobnicate\n", 1, "unknown block"),
    ("group Z2 2\ntable\n0 x\n1 0\n", 3, "not an integer"),
]


@pytest.mark.parametrize("text,line,msg", BAD)
def test_parse_errors_carry_line_numbers(text, line, msg):
    with pytest.raises(ParseError) as info:
        io.parse(text, "doc.txt")
    if line is not None:
        assert info.value.line == line
        assert f"doc.txt:{line}:" in str(info.value) and msg in str(info.value)


def test_bad_xmod_parses_and_is_reported():
    # structure is loaded as written so the validator can name the witness
    text = io.write_group(cyclic_group(2), "Z2") + "xmod X\ngroups Z2 Z2\nt 0 0\nalpha\n0 1\n1 0\n"
    X = io.parse(text).xmods["X"]
    assert not validate_crossed_module(X).ok
