import subprocess
import sys

import pytest

from innzero import io
from innzero.cli import COMMANDS, EXIT_BUDGET, EXIT_INPUT, RunConfig, main, run

CHEAP = ["validate-xmod", "check-2group", "build-inn", "extract-tcm", "validate-tcm",
         "mapping-cone", "compare-cone-inn", "homology", "nerve-decalage", "w-check",
         "bundle-reconstruct", "tower"]


def corrupt_alpha(tmp_path):
    text = io.data_path("s3_identity.txt").read_text(encoding="utf-8")
    lines = text.splitlines()
    i = lines.index("alpha") + 2
    row = lines[i].split()
    row[1], row[2] = row[2], row[1]
    lines[i] = " ".join(row)
    p = tmp_path / "bad.txt"
    p.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return p


def test_validate_xmod_s3(capsys):
    assert main(["validate-xmod", "--input", "s3_identity.txt"]) == 0
    out = capsys.readouterr().out
    assert "fail" not in out.replace("FAILED", "") and out.rstrip().endswith("all checks passed")


def test_compare_cone_inn_prints_identification(capsys):
    assert main(["compare-cone-inn", "--input", "s3_identity.txt"]) == 0
    out = capsys.readouterr().out
    assert "idS3.L: S3 = 2-cells out of the unit 1-cell" in out
    assert "idS3.M: S3x|S3 = 1-cells out of the unit object" in out
    assert "idS3.N: S3 = objects" in out


def test_corrupted_alpha_fails_with_witness(tmp_path, capsys):
    bad = corrupt_alpha(tmp_path)
    assert main(["validate-xmod", "--input", str(bad), "--machine"]) != 0
    out = capsys.readouterr().out
    assert any(line.startswith("witness.") and "=(" in line for line in out.splitlines())
    assert "=fail" in out


def test_parse_error_exit(tmp_path, capsys):
    p = tmp_path / "broken.txt"
    p.write_text("group Z2 2\ntable\n0 1\n1 7\n", encoding="utf-8")
    assert main(["validate-xmod", "--input", str(p)]) == EXIT_INPUT
    assert f"{p}:4:" in capsys.readouterr().err


def test_no_applicable_object():
    status, _, err = run(RunConfig("bundle-reconstruct", ["s3_identity.txt"]))
    assert status == EXIT_INPUT and "no applicable object" in err


def test_budget_exit():
    status, _, err = run(RunConfig("build-inn", ["s3_identity.txt"], budget=10))
    assert status == EXIT_BUDGET and "budget" in err


def test_run_config_validates():
    with pytest.raises(ValueError):
        RunConfig("tower", [], depth=0)
    with pytest.raises(ValueError):
        RunConfig("tower", [], budget=0)


@pytest.mark.parametrize("command", CHEAP)
def test_machine_output_is_byte_stable(command):
    a = run(RunConfig(command, ["z2_in_z4.txt", "circle_z2.txt"], machine=True))
    b = run(RunConfig(command, ["z2_in_z4.txt", "circle_z2.txt"], machine=True))
    assert a == b and a[0] == 0
    assert all("=" in line for line in a[1])
    assert all(line.split("=")[0].split(".")[0] in ("check", "witness", "value") for line in a[1])


def test_machine_golden_lines():
    status, lines, _ = run(RunConfig("homology", ["z2_in_z4_extracted.txt"], machine=True))
    assert status == 0
    assert lines[:4] == ["value.innZ2inZ4.pi0_order=1", "value.innZ2inZ4.pi1_order=1",
                         "value.innZ2inZ4.pi2_order=1", "check.tcm.innZ2inZ4.image_d1_normal=pass"]


def test_console_script_subprocess():
    r = subprocess.run([sys.executable, "-m", "innzero.cli", "tower", "--input", "s3_identity.txt",
                        "--machine"], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "value.S3.orders=1->1,6->6,6->6,1->1"
