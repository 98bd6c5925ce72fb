"""CLI behavior: golden equivalence with the library, exit codes, batch stdin."""

import io
import json
import math

import numpy as np
import pytest

from realtwoqubit import (
    RealState,
    apply,
    bell_basis_state,
    classify,
    concurrence,
    cz_connect,
    entropy_from_distance,
    prepare,
    sign_residual,
    to_bell,
)
from realtwoqubit.cli import main

ISQ2 = 1.0 / math.sqrt(2.0)
V3_ARGS = [repr(ISQ2), "0", "0", repr(ISQ2)]


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_golden_equivalence_with_library(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "1", "0", "0", "0")
        assert code == 0
        report = json.loads(out)
        state = RealState(1, 0, 0, 0)
        orbit = classify(state)
        coords = to_bell(state)
        assert report["class"] == orbit.kind == "product"
        assert report["sheet"] == orbit.sheet == "BOTH"
        assert report["d"] == orbit.d
        assert report["entropy"] == entropy_from_distance(orbit.d) == 0.0
        assert report["concurrence"] == concurrence(state)
        assert report["bell"] == [coords.x1, coords.x2, coords.x3, coords.x4]

    def test_bell_state(self, capsys):
        code, out, _ = run_cli(capsys, "classify", *V3_ARGS)
        assert code == 0
        report = json.loads(out)
        assert report["class"] == "max_entangled"
        assert report["sheet"] == "V34"
        assert report["entropy"] == 1.0

    def test_full_precision_round_trip(self, capsys):
        _, out, _ = run_cli(capsys, "classify", *V3_ARGS)
        assert json.loads(out)["bell"][2] == 1.0

    def test_stdin_batch(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1 0 0 0\n0 1 0 0\n\n"))
        code, out, _ = run_cli(capsys, "classify")
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 2
        assert json.loads(lines[0])["class"] == "product"
        assert json.loads(lines[1])["class"] == "product"

    def test_malformed_stdin_line(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1 0 0 zero\n"))
        code, _, err = run_cli(capsys, "classify")
        assert code == 2
        assert "error" in err

    def test_wrong_arity(self, capsys):
        code, _, err = run_cli(capsys, "classify", "1", "0", "0")
        assert code == 2
        assert "expected 4" in err

    def test_non_unit_norm(self, capsys):
        code, _, err = run_cli(capsys, "classify", "2", "0", "0", "0")
        assert code == 2
        assert "norm" in err

    def test_non_numeric_argument_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify", "a", "b", "c", "d"])
        assert exc.value.code == 2

    def test_tolerance_must_be_positive(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--tol", "0", "1", "0", "0", "0")
        assert code == 2
        assert "tolerance" in err


class TestPrepare:
    def test_circuit_matches_library(self, capsys):
        code, out, _ = run_cli(capsys, "prepare", *V3_ARGS)
        assert code == 0
        data = json.loads(out)
        expect = prepare(bell_basis_state(3)).to_dict()
        assert data["gates"] == expect["gates"]
        assert data["residual"] < 1e-10

    def test_stdin_batch(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1 0 0 0\n0.5 0.5 0.5 0.5\n"))
        code, out, _ = run_cli(capsys, "prepare")
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 2
        for line in lines:
            assert json.loads(line)["residual"] < 1e-10


class TestConnect:
    def test_cross_orbit_plan(self, capsys):
        code, out, _ = run_cli(capsys, "connect", "1", "0", "0", "0", *V3_ARGS)
        assert code == 0
        data = json.loads(out)
        assert data["cz_count"] == 1
        assert data["residual"] < 1e-9
        np.testing.assert_allclose(data["intermediate"]["w"], [0.5, 0.5, -0.5, 0.5], atol=1e-12)
        expect = cz_connect(RealState(1, 0, 0, 0), bell_basis_state(3)).to_dict()
        assert data == json.loads(json.dumps(expect))

    def test_local_only_same_orbit(self, capsys):
        code, out, _ = run_cli(capsys, "connect", "--local-only", *V3_ARGS, "0", ".7071067811865476", ".7071067811865476", "0")
        assert code == 0
        data = json.loads(out)
        assert data["cz_count"] == 0
        assert data["residual"] < 1e-10

    def test_local_only_cross_orbit_exits_3(self, capsys):
        code, _, err = run_cli(capsys, "connect", "--local-only", "1", "0", "0", "0", *V3_ARGS)
        assert code == 3
        assert "ORBIT_MISMATCH" in err

    def test_wrong_arity(self, capsys):
        code, _, _ = run_cli(capsys, "connect", "1", "0", "0", "0")
        assert code == 2

    def test_stdin_pairs(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1 0 0 0 0 1 0 0\n"))
        code, out, _ = run_cli(capsys, "connect")
        assert code == 0
        assert json.loads(out)["cz_count"] == 0


class TestMesh:
    def test_csv_output(self, capsys):
        code, out, _ = run_cli(capsys, "mesh", "--d", "0", "--na", "4", "--nb", "8", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "u1,u2,u3,d,sheet"
        assert len(lines) == 1 + 8 + (8 // 2 + 1)

    def test_json_output(self, capsys):
        d = math.pi / 6
        code, out, _ = run_cli(capsys, "mesh", "--d", repr(d), "--na", "6", "--nb", "6")
        assert code == 0
        data = json.loads(out)
        assert data["d"] == d
        assert all(set(p) == {"u", "sheet"} for p in data["points"])
        for p in data["points"]:
            assert sum(c * c for c in p["u"]) <= 1.0 + 1e-12

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "mesh.csv"
        code, out, _ = run_cli(capsys, "mesh", "--d", "0.3", "--na", "4", "--nb", "4", "--format", "csv", "--out", str(path))
        assert code == 0
        assert out == ""
        assert path.read_text().startswith("u1,u2,u3,d,sheet")

    def test_domain_error(self, capsys):
        code, _, err = run_cli(capsys, "mesh", "--d", "1.0")
        assert code == 2
        assert "outside" in err

    def test_grid_validation(self, capsys):
        code, _, _ = run_cli(capsys, "mesh", "--d", "0.3", "--na", "1")
        assert code == 2


class TestSample:
    def test_deterministic_under_seed(self, capsys):
        code1, out1, _ = run_cli(capsys, "sample", "--d", "0.5", "--count", "4", "--seed", "7")
        code2, out2, _ = run_cli(capsys, "sample", "--d", "0.5", "--count", "4", "--seed", "7")
        assert code1 == code2 == 0
        assert out1 == out2

    def test_sampled_states_on_orbit(self, capsys):
        d = 0.5235987755982988
        code, out, _ = run_cli(capsys, "sample", "--d", repr(d), "--count", "6", "--seed", "3")
        assert code == 0
        data = json.loads(out)
        assert data["d"] == d
        assert len(data["states"]) == 6
        for entry in data["states"]:
            s = RealState.from_vector(entry["w"])
            assert abs(classify(s).d - d) < 1e-10

    def test_domain_error(self, capsys):
        code, _, _ = run_cli(capsys, "sample", "--d", "2.0")
        assert code == 2

    def test_negative_count(self, capsys):
        code, _, _ = run_cli(capsys, "sample", "--d", "0.1", "--count", "-1")
        assert code == 2


class TestParser:
    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_prepare_residual_verified_against_simulator(self, capsys):
        # the reported residual is exactly the simulator's, not a recomputation
        _, out, _ = run_cli(capsys, "prepare", "0", "0", "1", "0")
        data = json.loads(out)
        state = RealState(0, 0, 1, 0)
        circ = prepare(state)
        assert data["residual"] == sign_residual(apply(circ, RealState(1, 0, 0, 0)), state)
