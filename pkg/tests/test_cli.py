import json
import math

import numpy as np
import pytest

from convexmeans.bodyfile import read_body
from convexmeans.cli import main
from convexmeans.constructions import bm_pentagon

S3 = math.sqrt(3)


@pytest.fixture
def triangle_files(tmp_path):
    k, nk = tmp_path / "K.json", tmp_path / "nK.json"
    assert main(["example", "triangle", "--out", str(k)]) == 0
    assert main(["example", "triangle", "--negate", "--out", str(nk)]) == 0
    return str(k), str(nk)


def test_validate(triangle_files, tmp_path, capsys):
    assert main(["validate", triangle_files[0]]) == 0
    assert "3 vertices" in capsys.readouterr().out
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "vertices": [[1, 1], [2, 1], [2, 2]]}')
    assert main(["validate", str(bad)]) == 1
    assert "origin" in capsys.readouterr().err
    assert main(["validate", str(tmp_path / "missing.json")]) == 1


def test_mean_reproduces_the_hexagon(triangle_files, tmp_path):
    out = tmp_path / "m.json"
    assert main(["mean", *triangle_files, "--p", "1", "--out", str(out)]) == 0
    body, name = read_body(out)
    assert name == "upper_1"
    want = np.array([(-S3, 0), (-S3 / 2, -1.5), (S3 / 2, -1.5), (S3, 0), (S3 / 2, 1.5), (-S3 / 2, 1.5)])
    assert np.allclose(body.vertices, want, atol=1e-12)
    assert main(["mean", *triangle_files, "--p", "0", "--kind", "lower", "--out", str(out)]) == 0
    assert len(read_body(out)[0]) == 6
    assert main(["mean", *triangle_files, "--p", "3", "--kind", "upper", "--grid", "512", "--out", str(out)]) == 0
    assert main(["mean", *triangle_files, "--p=-inf", "--out", str(out)]) == 0


def test_mean_errors(triangle_files, tmp_path):
    # p = 0 has no dispatch side
    assert main(["mean", *triangle_files, "--p", "0"]) == 1
    cube = tmp_path / "cube.json"
    main(["example", "shifted-cube", "--dim", "3", "--out", str(cube)])
    assert main(["mean", triangle_files[0], str(cube), "--p", "1"]) == 1
    with pytest.raises(SystemExit):
        main(["mean", *triangle_files, "--p", "nan"])


def test_gmean(triangle_files, tmp_path, capsys):
    out = tmp_path / "g.json"
    assert main(["gmean", *triangle_files, "--trace", "--out", str(out)]) == 0
    err = capsys.readouterr().err
    assert err.count("step") >= 10
    G, _ = read_body(out)
    assert np.max(np.abs(np.linalg.norm(G.vertices, axis=1) - math.sqrt(2))) < 0.2
    assert main(["gmean", *triangle_files, "--p", "2"]) == 1
    assert main(["gmean", *triangle_files, "--tol", "1e-12", "--max-iter", "2"]) == 2


def test_radius_and_asymmetry(triangle_files, capsys):
    assert main(["radius", *triangle_files]) == 0
    out = capsys.readouterr().out
    assert "R0max = 2" in out
    assert main(["asymmetry", triangle_files[0]]) == 0
    out = capsys.readouterr().out.splitlines()
    assert float(out[0].split("=")[1]) == pytest.approx(2.0)


def test_plot(triangle_files, tmp_path):
    out = tmp_path / "fig.svg"
    assert main(["plot", *triangle_files, "--out", str(out), "--labels", "K,-K"]) == 0
    assert out.read_text().count("<polygon") == 2
    assert main(["plot", *triangle_files, "--out", str(out), "--labels", "K"]) == 1
    cube = tmp_path / "cube.json"
    main(["example", "cross", "--dim", "3", "--out", str(cube)])
    assert main(["plot", str(cube), "--out", str(out)]) == 1


def test_suite_subcommand(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["suite", "--filter", "asymmetry", "--report", "json", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert [r["id"] for r in report] == ["asymmetry-lp"] and report[0]["status"] == "pass"
    assert main(["suite", "--filter", "translated"]) == 0
    assert "1/1 checks passed" in capsys.readouterr().out
    assert main(["suite", "--filter", "no-such-check"]) == 1
    assert "asymmetry-lp" in capsys.readouterr().err


def test_example_bodies_validate(tmp_path):
    for which in ("pentagon", "cross", "triangle-family", "boxes-outer", "boxes-inner", "b1", "binf", "b2"):
        path = tmp_path / f"{which}.json"
        assert main(["example", which, "--out", str(path)]) == 0
        assert main(["validate", str(path)]) == 0
    assert read_body(tmp_path / "pentagon.json")[0].almost_equal(bm_pentagon())
    assert main(["example", "triangle-family", "--param", "3"]) == 1
