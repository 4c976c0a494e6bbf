import json
import subprocess
import sys

import numpy as np
import pytest

from tracegeo.cli import main

I2_DOC = '{"n":2,"data":[[1,0],[0,1]]}'
E12_DOC = '{"n":2,"data":[[0,1],[0,0]]}'


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMetricCommand:
    def test_identity_value(self, capsys):
        code, out, _ = run_cli(capsys, "metric", "--at", I2_DOC, "--x", I2_DOC, "--y", I2_DOC)
        assert code == 0
        assert json.loads(out) == {"value": 2.0}

    def test_null_direction(self, capsys):
        code, out, _ = run_cli(capsys, "metric", "--at", I2_DOC, "--x", E12_DOC, "--y", E12_DOC)
        assert code == 0
        assert json.loads(out) == {"value": 0.0}

    def test_file_inputs(self, capsys, tmp_path):
        p = tmp_path / "m.json"
        p.write_text(I2_DOC)
        code, out, _ = run_cli(capsys, "metric", "--at", str(p), "--x", str(p), "--y", str(p))
        assert code == 0
        assert json.loads(out)["value"] == 2.0

    def test_malformed_json(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("not json at all")
        code, _, err = run_cli(capsys, "metric", "--at", str(p), "--x", I2_DOC, "--y", I2_DOC)
        assert code == 1
        assert json.loads(err)["error"] == "parse"

    def test_wrong_shape(self, capsys):
        code, _, err = run_cli(capsys, "metric", "--at", '{"n":2,"data":[[1,0]]}', "--x", I2_DOC, "--y", I2_DOC)
        assert code == 1
        assert json.loads(err)["error"] == "parse"

    def test_singular_base(self, capsys):
        code, _, err = run_cli(
            capsys, "metric", "--at", '{"n":2,"data":[[1,0],[0,0]]}', "--x", I2_DOC, "--y", I2_DOC
        )
        assert code == 1
        assert json.loads(err)["error"] == "singular"

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(I2_DOC))
        code, out, _ = run_cli(capsys, "metric", "--at", "-", "--x", I2_DOC, "--y", I2_DOC)
        assert code == 0
        assert json.loads(out)["value"] == 2.0


class TestSignatureCommand:
    def test_identity(self, capsys):
        code, out, _ = run_cli(capsys, "signature", "--at", '{"n":3,"data":[[1,0,0],[0,1,0],[0,0,1]]}')
        assert code == 0
        assert json.loads(out) == {"positive": 6, "negative": 3}


class TestClassifyCommand:
    def test_unique(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--k0", I2_DOC, "--k1", '{"n":2,"data":[[1,0],[0,2]]}')
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "unique"
        assert "witness" in doc
        assert doc["profile"]["clusters"][0]["block_sizes"] == [1]

    def test_no_arc_exit_two(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--k0", I2_DOC, "--k1", '{"n":2,"data":[[-1,0],[0,2]]}')
        assert code == 2
        doc = json.loads(out)
        assert doc["verdict"] == "no-arc"
        assert "witness" not in doc

    def test_continuum_with_witness(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--k0", I2_DOC, "--k1", '{"n":2,"data":[[-1,0],[0,-1]]}')
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "continuum"
        c = np.array(doc["witness"]["c"]["data"])
        assert np.allclose(c, [[0.0, -np.pi], [np.pi, 0.0]])


class TestArcCommand:
    def test_arc_payload(self, capsys):
        code, out, _ = run_cli(capsys, "arc", "--k0", I2_DOC, "--k1", '{"n":2,"data":[[1,0],[0,4]]}')
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "unique"
        assert np.allclose(np.array(doc["c"]["data"]), np.diag([0.0, np.log(4.0)]))

    def test_arc_no_arc(self, capsys):
        code, out, _ = run_cli(capsys, "arc", "--k0", I2_DOC, "--k1", '{"n":2,"data":[[-1,0],[0,2]]}')
        assert code == 2
        assert json.loads(out) == {"verdict": "no-arc"}


class TestGeodesicCommand:
    def test_constant(self, capsys):
        code, out, _ = run_cli(
            capsys, "geodesic", "--k", I2_DOC, "--c", '{"n":2,"data":[[0,0],[0,0]]}', "--samples", "3"
        )
        assert code == 0
        docs = json.loads(out)
        assert len(docs) == 3
        for d in docs:
            assert np.allclose(np.array(d["data"]), np.eye(2))

    def test_diagonal_endpoint_and_unimodular_track(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "geodesic",
            "--k", I2_DOC,
            "--c", '{"n":2,"data":[[1,0],[0,-1]]}',
            "--t-from", "0", "--t-to", "1", "--samples", "5",
        )
        assert code == 0
        docs = json.loads(out)
        last = np.array(docs[-1]["data"])
        assert np.allclose(last, np.diag([np.e, 1.0 / np.e]))
        for d in docs:
            assert d["det"] == pytest.approx(1.0, abs=1e-8)

    def test_velocity_input(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "geodesic",
            "--k", '{"n":2,"data":[[4,0],[0,1]]}',
            "--velocity", json.dumps({"n": 2, "data": [[4 * np.log(4.0), 0.0], [0.0, 0.0]]}),
            "--t-from", "1", "--t-to", "1", "--samples", "1",
        )
        assert code == 0
        doc = json.loads(out)[0]
        assert np.allclose(np.array(doc["data"]), np.diag([16.0, 1.0]))


class TestBrokenArcCommand:
    def test_half_turn(self, capsys):
        code, out, _ = run_cli(
            capsys, "broken-arc", "--k1", I2_DOC, "--k2", '{"n":2,"data":[[-1,0],[0,-1]]}'
        )
        assert code == 0
        doc = json.loads(out)
        assert np.allclose(np.array(doc["joint"]["data"]), np.eye(2))
        assert np.allclose(np.array(doc["second"]["c"]["data"]), [[0.0, -np.pi], [np.pi, 0.0]])

    def test_component_mismatch(self, capsys):
        code, _, err = run_cli(
            capsys, "broken-arc", "--k1", I2_DOC, "--k2", '{"n":2,"data":[[-1,0],[0,1]]}'
        )
        assert code == 1
        assert json.loads(err)["error"] == "different-components"


class TestCurvatureCommand:
    def test_scalar(self, capsys):
        code, out, _ = run_cli(
            capsys, "curvature", "--at", '{"n":3,"data":[[2,0,0],[0,1,1],[0,0,3]]}', "--kind", "scalar"
        )
        assert code == 0
        assert json.loads(out)["value"] == pytest.approx(-12.0, abs=1e-9)

    def test_sectional(self, capsys):
        s12 = json.dumps({"n": 2, "data": [[0.0, 2**-0.5], [2**-0.5, 0.0]]})
        a12 = json.dumps({"n": 2, "data": [[0.0, 2**-0.5], [-(2**-0.5), 0.0]]})
        code, out, _ = run_cli(capsys, "curvature", "--at", I2_DOC, "--kind", "sectional", "--x", s12, "--y", a12)
        assert code == 0
        assert json.loads(out)["value"] == pytest.approx(-0.5, abs=1e-12)

    def test_linearly_dependent(self, capsys):
        code, _, err = run_cli(capsys, "curvature", "--at", I2_DOC, "--kind", "sectional", "--x", E12_DOC, "--y", E12_DOC)
        assert code == 1
        assert json.loads(err)["error"] == "linearly-dependent"

    def test_riemann04_arity(self, capsys):
        code, _, err = run_cli(capsys, "curvature", "--at", I2_DOC, "--kind", "riemann04", "--x", E12_DOC, "--y", E12_DOC)
        assert code == 1
        assert json.loads(err)["error"] == "parse"


class TestVerifyCommand:
    def test_each_suite_passes(self, capsys):
        for suite in ("metric", "geodesic", "curvature", "foliation", "product"):
            code, out, _ = run_cli(
                capsys, "verify", "--suite", suite, "--n", "2", "--seed", "42", "--cases", "8"
            )
            assert code == 0, f"{suite} failed: {out}"
            report = json.loads(out)
            assert report["failures"] == []
            assert report["seed"] == 42

    def test_all_lists_every_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--n", "2", "--seed", "1", "--cases", "4")
        assert code == 0
        report = json.loads(out)
        assert report["suites"] == ["metric", "geodesic", "curvature", "foliation", "product"]

    def test_deterministic_output(self, capsys):
        args = ("verify", "--suite", "product", "--n", "3", "--seed", "7", "--cases", "6")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_env_tolerance_override(self, capsys, monkeypatch):
        monkeypatch.setenv("TRACEGEO_TOL", "1e-6")
        code, out, _ = run_cli(capsys, "verify", "--suite", "metric", "--n", "2", "--seed", "3", "--cases", "4")
        assert code == 0
        assert json.loads(out)["tolerances"]["assert"] == 1e-6

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("TRACEGEO_TOL", "1e-6")
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "metric", "--n", "2", "--seed", "3", "--cases", "4",
            "--tol-assert", "1e-9",
        )
        assert code == 0
        assert json.loads(out)["tolerances"]["assert"] == 1e-9


class TestInstalledEntryPoint:
    def test_subprocess_roundtrip(self):
        proc = subprocess.run(
            [sys.executable, "-m", "tracegeo.cli", "metric", "--at", I2_DOC, "--x", I2_DOC, "--y", I2_DOC],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == {"value": 2.0}
