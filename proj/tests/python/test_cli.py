import json
import os
import subprocess

import pytest

CLI = os.environ.get("TWISTCODE_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="TWISTCODE_CLI not set")


def run(*args, check_code=None):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    if check_code is not None:
        assert proc.returncode == check_code, proc.stderr
    return proc


@pytest.fixture
def k8(tmp_path):
    path = tmp_path / "k8.txt"
    run("gen-graph", "complete", 8, "-o", path, check_code=0)
    return path


def test_gen_graph(k8):
    lines = k8.read_text().splitlines()
    assert lines[0] == "p 8 28"
    assert len(lines) == 29


def test_gen_graph_is_deterministic():
    a = run("gen-graph", "random-regular", 16, 3, "--seed", 7, check_code=0).stdout
    b = run("gen-graph", "random-regular", 16, 3, "--seed", 7, check_code=0).stdout
    assert a == b


def test_gen_graph_parity_error():
    proc = run("gen-graph", "random-regular", 5, 3)
    assert proc.returncode == 3
    assert "even" in proc.stderr


def test_spectrum(k8, tmp_path):
    out = json.loads(run("spectrum", k8, check_code=0).stdout)
    assert out["lambda1"] == pytest.approx(7.0)
    assert out["lambda2"] == pytest.approx(-1.0, abs=1e-9)
    cycle = tmp_path / "c6.txt"
    run("gen-graph", "cycle", 6, "-o", cycle, check_code=0)
    assert json.loads(run("spectrum", cycle, check_code=0).stdout)["girth"] == 6
    tree = tmp_path / "path.txt"
    run("gen-graph", "path", 5, "-o", tree, check_code=0)
    assert json.loads(run("spectrum", tree, check_code=0).stdout)["girth"] is None


def test_report_flagship(k8):
    out = json.loads(run("report", k8, "--local-code", "hamming74", check_code=0).stdout)
    assert out["N"] == 28
    assert out["distance"] is not None
    assert out["proposition"]["holds"] is True
    same = run("report", k8, "--local-code", "hamming74", "--threads", 4, check_code=0).stdout
    assert json.loads(same) == out


def test_report_cap_and_text(tmp_path):
    k4 = tmp_path / "k4.txt"
    run("gen-graph", "complete", 4, "-o", k4, check_code=0)
    assert json.loads(run("report", k4, "--local-code", "parity", check_code=0).stdout)["dimension"] == 3
    capped = json.loads(
        run("report", k4, "--local-code", "full", "--max-bruteforce-dim", 2, check_code=0).stdout
    )
    assert capped["distance"] is None
    assert capped["rate_bound"] is not None
    text = run("report", k4, "--local-code", "parity", "--format", "text", check_code=0).stdout
    assert "dimension: 3" in text


def test_verify_exit_codes(k8, tmp_path):
    out = json.loads(run("verify", k8, "--local-code", "hamming74", check_code=0).stdout)
    assert out["code_dimension"] == out["homology_dimension"]

    corrupt = tmp_path / "corrupt.txt"
    corrupt.write_text("v 0 1 7\n11x1111\n")
    assert run("verify", k8, corrupt).returncode == 2

    mismatched = tmp_path / "short.txt"
    mismatched.write_text("".join(f"v {u} 1 6\n111111\n" for u in range(8)))
    proc = run("verify", k8, mismatched)
    assert proc.returncode == 3
    assert "vertex 0" in proc.stderr

    assert run("verify", tmp_path / "missing.txt", "--local-code", "parity").returncode == 2
    assert run("verify").returncode == 2


def test_homology_and_distance(tmp_path):
    sphere = tmp_path / "sphere.txt"
    sphere.write_text("dim 2\ns 0 1 2\ns 0 1 3\ns 0 2 3\ns 1 2 3\n")
    out = json.loads(run("homology", sphere, "-k", 2, check_code=0).stdout)
    assert out["dimension"] == 1
    code = tmp_path / "ham.txt"
    code.write_text("parity\n3 7\n1010101\n0110011\n0001111\n")
    out = json.loads(run("distance", code, check_code=0).stdout)
    assert (out["dimension"], out["distance"]) == (4, 3)
