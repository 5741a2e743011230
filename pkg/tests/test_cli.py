import json
import os
import subprocess
import sys

import pytest

R3_TEXT = "0 0\n1 0\n2 0\n0 1\n2 1\n0 2\n1 2\n2 2\n"


def poly(*args, env_extra=None, cwd=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "polyomino_ideals.cli", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=cwd,
    )


@pytest.fixture()
def r3_file(tmp_path):
    f = tmp_path / "r3.cells"
    f.write_text(R3_TEXT)
    return str(f)


def test_classify(r3_file):
    res = poly("classify", r3_file)
    assert res.returncode == 0
    obj = json.loads(res.stdout)
    assert obj["rank"] == 8 and obj["vertices"] == 16
    assert obj["simple"] is False and obj["thin"] is True
    assert obj["closed_path"] is True and obj["prime"] is True
    assert obj["holes"] == [[[1, 1]]]


def test_minors(r3_file):
    res = poly("minors", r3_file)
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert len(lines) == 20
    assert "x(0,0)*x(1,1) - x(0,1)*x(1,0)" in lines


def test_gb_and_orders(r3_file):
    res = poly("gb", r3_file, "--certify")
    assert res.returncode == 0
    obj = json.loads(res.stdout)
    assert obj["reduced"] is True and obj["certified"] is True
    res2 = poly("gb", r3_file, "--order", "yset:0,0;3,3")
    assert res2.returncode == 0
    res3 = poly("dim", r3_file, "--order", "lexT")
    assert res3.returncode == 0 and json.loads(res3.stdout)["dim"] == 8


def test_dim_height(r3_file):
    for cmd in ("dim", "height"):
        res = poly(cmd, r3_file)
        assert res.returncode == 0
        obj = json.loads(res.stdout)
        assert obj == {"vertices": 16, "rank": 8, "dim": 8, "height": 8, "order": "lex1"}


def test_dim_weights_order(r3_file, tmp_path):
    wf = tmp_path / "w.json"
    wf.write_text(json.dumps({"weights": [["x(0,0)", 1, 2], ["x(3,3)", 5, 1]]}))
    res = poly("dim", r3_file, "--order", f"weights:{wf}")
    assert res.returncode == 0
    assert json.loads(res.stdout)["dim"] == 8


def test_koenig_search_verify_roundtrip(r3_file, tmp_path):
    cert = tmp_path / "cert.json"
    res = poly("koenig", r3_file, "--search", "--out", str(cert))
    assert res.returncode == 0
    assert json.loads(res.stdout)["status"] == "certificate"
    res2 = poly("verify", r3_file, str(cert))
    assert res2.returncode == 0
    assert json.loads(res2.stdout)["ok"] is True


def test_koenig_walk(r3_file):
    res = poly("koenig", r3_file, "--walk")
    assert res.returncode == 0
    obj = json.loads(res.stdout)
    assert obj["status"] == "certificate" and obj["fallback"] is False


def test_verify_tampered_certificate_fails(r3_file, tmp_path):
    cert_path = tmp_path / "cert.json"
    poly("koenig", r3_file, "--search", "--out", str(cert_path))
    obj = json.loads(cert_path.read_text())
    obj["entries"] = obj["entries"][:-1]
    cert_path.write_text(json.dumps(obj))
    res = poly("verify", r3_file, str(cert_path))
    assert res.returncode == 1
    assert json.loads(res.stdout)["ok"] is False


def test_enumerate_prints_cells():
    res = poly("enumerate", "--max-rank", "3")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert len(lines) == 4  # 1 + 1 + 2 free polyominoes
    assert json.loads(lines[0]) == [[0, 0]]


def test_enumerate_harness_and_resume(tmp_path):
    log = tmp_path / "log.jsonl"
    res = poly(
        "enumerate", "--max-rank", "7", "--filter", "non-simple", "--filter", "thin",
        "--out", str(log),
    )
    assert res.returncode == 0
    summary = json.loads(res.stdout)
    assert summary["tested"] == 1
    res2 = poly(
        "enumerate", "--max-rank", "7", "--filter", "non-simple", "--filter", "thin",
        "--out", str(log),
    )
    assert res2.returncode == 1  # refuses to touch an existing log without --resume
    res3 = poly(
        "enumerate", "--max-rank", "7", "--filter", "non-simple", "--filter", "thin",
        "--out", str(log), "--resume",
    )
    assert res3.returncode == 0
    assert json.loads(res3.stdout)["new_records"] == 0


def test_enumerate_figures(tmp_path):
    log = tmp_path / "log.jsonl"
    figs = tmp_path / "figs"
    res = poly(
        "enumerate", "--max-rank", "7", "--filter", "non-simple",
        "--out", str(log), "--figures", str(figs),
    )
    assert res.returncode == 0
    assert (figs / "summary.png").exists()


def test_render_text(r3_file, tmp_path):
    res = poly("render", r3_file)
    assert res.returncode == 0
    assert res.stdout == "███\n█·█\n███\n"
    png = tmp_path / "r3.png"
    res2 = poly("render", r3_file, "--png", str(png))
    assert res2.returncode == 0 and png.exists()


def test_render_domino(tmp_path):
    f = tmp_path / "d.cells"
    f.write_text("0 0\n1 0\n")
    res = poly("render", str(f))
    assert res.stdout == "██\n"


def test_exit_code_validation_error(tmp_path):
    f = tmp_path / "bad.cells"
    f.write_text("0 0\n2 0\n")  # disconnected
    res = poly("classify", str(f))
    assert res.returncode == 1
    assert "disconnected" in res.stderr


def test_exit_code_budget(r3_file):
    res = poly("gb", r3_file, env_extra={"POLY_BUDGET": "3"})
    assert res.returncode == 2
    assert "budget" in res.stderr


def test_exit_code_io():
    res = poly("classify", "/nonexistent/path.cells")
    assert res.returncode == 3


def test_usage_error_is_validation():
    res = poly("frobnicate")
    assert res.returncode == 1


def test_render_single_cell():
    from polyomino_ideals import build, render_text

    assert render_text(build([(0, 0)])) == "█"
