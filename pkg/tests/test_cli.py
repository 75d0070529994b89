import json
import shutil
import subprocess

import pytest

from quivfix.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from quivfix.fixtures import build_fixture


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_aut(capsys):
    code, out = run(capsys, "aut", "k2", "--json")
    assert code == EXIT_OK
    assert len(json.loads(out)["automorphisms"]) >= 2


def test_orbits(capsys):
    code, out = run(capsys, "orbits", "k2", "--field", "Fp:5", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["stable"] == 6 and len(data["stable_representatives"]) == 6
    assert data["fixed_stable"] == 2


@pytest.mark.parametrize("mode, uncovered", [("closed", 2), ("field", 0)])
def test_decompose_c2(capsys, mode, uncovered):
    code, out = run(capsys, "decompose", "c2", "--type-classes", mode, "--json")
    assert code == EXIT_OK
    assert len(json.loads(out)["uncovered"]) == uncovered


def test_cohomology_gl2(capsys):
    code, out = run(capsys, "cohomology", "--group", "Z2", "--coefficients", "GL:2", "--field", "Fp:3",
                    "--json")
    assert code == EXIT_OK
    assert json.loads(out)["class_sizes"] == [1, 12, 1]


def test_brane_star3(capsys):
    code, out = run(capsys, "brane", "star3-double", "--auto", "canonical-star", "--conjugate", "--json")
    assert code == EXIT_OK
    assert "AAB" in out


def test_verify_fixture(capsys):
    code, out = run(capsys, "verify", "k2", "--field", "Fp:5")
    assert code == EXIT_OK
    assert "PASS" in out


def test_verify_detects_corrupted_expectation(capsys, tmp_path):
    obj = build_fixture("k2").to_json()
    obj["extra"]["expected"]["components"] = 3
    path = tmp_path / "k2-bad.json"
    path.write_text(json.dumps(obj))
    code, out = run(capsys, "verify", str(path))
    assert code == EXIT_MISMATCH
    assert "FAIL" in out


def test_verify_filter_is_deterministic(capsys, monkeypatch):
    outputs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("QUIVFIX_THREADS", threads)
        code, out = run(capsys, "verify", "--filter", "polygons", "--json")
        assert code == EXIT_OK
        outputs.append(out)
    assert outputs[0] == outputs[1]


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["orbits", "no-such-fixture"],
    ["verify", "--filter", "no-such-suite"],
    ["orbits", "star3-double"],
    ["decompose", "k2", "--type-classes", "sideways"],
])
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == EXIT_USAGE


def test_bad_thread_count(capsys, monkeypatch):
    monkeypatch.setenv("QUIVFIX_THREADS", "zero")
    assert main(["verify", "k2"]) == EXIT_USAGE


@pytest.mark.skipif(shutil.which("quivfix") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["quivfix", "aut", "k2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout
