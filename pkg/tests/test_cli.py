import json
import os
from unittest.mock import patch

import pytest

from src.main import EXIT_CODES, dispatch, exit_code_for, main
from src.errors import InvalidDiagramError, OracleBudgetExceeded, SpinnetError
from tests.conftest import CORPUS_DIR


def _corpus(name: str) -> str:
    return os.path.join(CORPUS_DIR, name)


class TestRecouplingCommand:
    def test_delta(self, capsys):
        assert dispatch(["recoupling", "delta", "2"]) == 0
        assert capsys.readouterr().out.strip() == "1*A^-4 + 1*A^0 + 1*A^4"

    def test_inadmissible_theta_is_zero(self, capsys):
        assert dispatch(["recoupling", "theta", "1", "2", "4"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["0", "note: inadmissible triple (1, 2, 4)"]

    def test_lambda_inadmissible_exits_3(self, capsys):
        assert dispatch(["recoupling", "lambda", "1", "1", "4"]) == 3
        assert "inadmissible triple (1, 1, 4)" in capsys.readouterr().err

    def test_wrong_arity(self, capsys):
        assert dispatch(["recoupling", "theta", "1", "1"]) == 2
        assert "theta takes 3 labels, got 2" in capsys.readouterr().err

    def test_negative_label(self, capsys):
        with pytest.raises(SystemExit) as info:
            dispatch(["recoupling", "delta", "-1"])
        assert info.value.code == 2
        assert "non-negative" in capsys.readouterr().err

    def test_internal_value_error_exits_1(self, capsys):
        with patch("src.recoupling.delta", side_effect=ValueError("boom")):
            assert dispatch(["recoupling", "delta", "2"]) == 1
        assert "internal error: ValueError: boom" in capsys.readouterr().err

    def test_sixj(self, capsys):
        assert dispatch(["recoupling", "sixj", "1", "1", "0", "1", "1", "2"]) == 0
        assert capsys.readouterr().out.strip() == "1*A^0"

    def test_json_envelope(self, capsys):
        assert dispatch(["--json", "recoupling", "twist", "1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["command"] == "recoupling"
        assert data["input"] == {"query": "twist", "labels": [1]}
        assert data["value"]["text"] == "-1*A^3"
        assert data["value"]["numerator"]


class TestExpandVertex:
    def test_barrett_crane_boundary(self, capsys):
        assert dispatch(["expand-vertex", "--labels", "1,1/1,1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["spec"] == "1,1/1,1"
        assert data["tree"] == "((0,1),2)"
        assert data["internal_edges"] == 1
        assert [t["labels"] for t in data["terms"]] == [[0], [2]]

    def test_explicit_tree(self, capsys):
        assert dispatch(["expand-vertex", "--labels", "1,1/1,1,2", "--tree", "((0,1),(2,3))"]) == 0
        assert json.loads(capsys.readouterr().out)["tree"] == "((0,1),(2,3))"

    def test_bad_labels(self, capsys):
        assert dispatch(["expand-vertex", "--labels", "1,1"]) == 2
        assert capsys.readouterr().err.startswith("spinnet expand-vertex: error:")


class TestEvalCommand:
    def test_theta_odd_label(self, capsys):
        assert dispatch(["eval", "--file", _corpus("theta.json"), "--j", "1"]) == 0
        assert capsys.readouterr().out.strip() == "0"

    def test_colors_file(self, capsys):
        assert dispatch(["eval", "--file", _corpus("theta.json"), "--colors", _corpus("theta-colors.json")]) == 0
        assert capsys.readouterr().out.strip() == "1*A^0"

    def test_network_file(self, capsys):
        assert dispatch(["eval", "--file", _corpus("loop-2.json")]) == 0
        assert capsys.readouterr().out.strip() == "1*A^-4 + 1*A^0 + 1*A^4"

    def test_engines_agree(self, capsys):
        dispatch(["eval", "--file", _corpus("unknot-2v.json"), "--j", "2"])
        fast = capsys.readouterr().out
        dispatch(["eval", "--file", _corpus("unknot-2v.json"), "--j", "2", "--engine", "oracle"])
        assert capsys.readouterr().out == fast

    def test_engine_metadata(self, capsys):
        assert dispatch(["--json", "eval", "--file", _corpus("theta.json"), "--j", "2", "--threads", "2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["engine"] == {"name": "fast", "threads": 2, "oracle_budget": None}
        assert data["input"]["kind"] == "graph"

    def test_missing_file(self, capsys, tmp_path):
        assert dispatch(["eval", "--file", str(tmp_path / "absent.json"), "--j", "1"]) == 2

    def test_schema_error(self, capsys, write_file):
        path = write_file("bad.json", '{"format": "spinnet-diagram/1", "kind": "knot", "slices": []}')
        assert dispatch(["eval", "--file", path, "--j", "1"]) == 2
        assert "$.kind" in capsys.readouterr().err

    def test_syntax_error(self, capsys, write_file):
        path = write_file("bad.txt", "cup 0\nfoo 1\n")
        assert dispatch(["eval", "--file", path, "--j", "1"]) == 2
        assert "line 2, column 1:" in capsys.readouterr().err

    def test_invalid_diagram(self, capsys, write_file):
        path = write_file("open.txt", "kind network\ncup 0\ncup 0\ncap 0\n")
        assert dispatch(["eval", "--file", path, "--j", "1"]) == 4

    def test_bad_colors_file(self, capsys, write_file):
        colors = write_file("colors.json", '{"e0": -1}')
        assert dispatch(["eval", "--file", _corpus("theta.json"), "--colors", colors]) == 2

    def test_colors_file_not_json(self, capsys, write_file):
        colors = write_file("colors.json", "{e0: 1")
        assert dispatch(["eval", "--file", _corpus("theta.json"), "--colors", colors]) == 2
        assert "not JSON" in capsys.readouterr().err

    def test_negative_j(self):
        with pytest.raises(SystemExit) as info:
            dispatch(["eval", "--file", _corpus("theta.json"), "--j", "-1"])
        assert info.value.code == 2

    def test_bad_setting_is_usage_error(self, capsys, monkeypatch):
        monkeypatch.setenv("SPINNET_THREADS", "many")
        assert dispatch(["eval", "--file", _corpus("theta.json"), "--j", "1"]) == 2
        assert "bad SPINNET_* setting" in capsys.readouterr().err

    def test_threads_must_be_positive(self):
        with pytest.raises(SystemExit) as info:
            dispatch(["eval", "--file", _corpus("theta.json"), "--j", "1", "--threads", "0"])
        assert info.value.code == 2


class TestJonesCommand:
    def test_bracket(self, capsys):
        assert dispatch(["jones", "--file", _corpus("trefoil.txt")]) == 0
        assert capsys.readouterr().out.strip() == "-1*A^-9 + 1*A^-1 + 1*A^3 + 1*A^7"

    def test_normalized(self, capsys):
        assert dispatch(["jones", "--file", _corpus("trefoil.txt"), "--normalized"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "1*A^-18 - 1*A^-10 - 1*A^-6 - 1*A^-2"
        assert out[1] == "note: writhe 3"

    def test_graph_rejected(self, capsys):
        assert dispatch(["jones", "--file", _corpus("theta.json")]) == 4


class TestOracleCommand:
    def test_loop(self, capsys):
        assert dispatch(["oracle", "--file", _corpus("loop-2.json")]) == 0
        assert capsys.readouterr().out.strip() == "1*A^-4 + 1*A^0 + 1*A^4"

    def test_budget_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("SPINNET_ORACLE_BUDGET", "1")
        assert dispatch(["oracle", "--file", _corpus("loop-2.json")]) == 5
        assert "oracle too large" in capsys.readouterr().err

    def test_graph_is_usage_error(self, capsys):
        assert dispatch(["oracle", "--file", _corpus("theta.json")]) == 2
        assert "eval --engine oracle" in capsys.readouterr().err


class TestVerifyCommand:
    def test_single_suite(self, capsys):
        assert dispatch(["verify", "--suite", "qpoly", "--max-label", "1"]) == 0
        out = capsys.readouterr().out
        assert "Suite qpoly — Laurent polynomials" in out
        assert "All checks passed." in out

    def test_json(self, capsys):
        assert dispatch(["--json", "verify", "--suite", "qpoly", "--max-label", "1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["suites"] == [{"suite": "qpoly", "max_label": 1, "violations": []}]

    def test_negative_max_label(self, capsys):
        with pytest.raises(SystemExit) as info:
            dispatch(["verify", "--suite", "qpoly", "--max-label", "-1"])
        assert info.value.code == 2
        assert "non-negative" in capsys.readouterr().err

    def test_unknown_suite(self):
        with pytest.raises(SystemExit) as info:
            dispatch(["verify", "--suite", "knots"])
        assert info.value.code == 2


class TestOutputFile:
    def test_json_output(self, capsys, tmp_path):
        path = tmp_path / "result.json"
        assert dispatch(["--output", str(path), "recoupling", "delta", "1"]) == 0
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["command"] == "recoupling"
        assert data["value"]["text"] == "-1*A^-2 - 1*A^2"

    def test_text_output(self, capsys, tmp_path):
        path = tmp_path / "result.txt"
        assert dispatch(["--output", str(path), "recoupling", "delta", "1"]) == 0
        assert path.read_text(encoding="utf-8") == "-1*A^-2 - 1*A^2\n"

    def test_unsupported_extension(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as info:
            dispatch(["--output", str(tmp_path / "result.csv"), "recoupling", "delta", "1"])
        assert info.value.code == 2
        assert not (tmp_path / "result.csv").exists()


class TestExitCodes:
    def test_subclass_lookup(self):
        assert exit_code_for(InvalidDiagramError("x")) == 4
        assert exit_code_for(OracleBudgetExceeded(1, 2)) == 5
        assert exit_code_for(SpinnetError("x")) == 1

    def test_codes_are_distinct_from_success(self):
        assert 0 not in EXIT_CODES.values()


class TestMain:
    def test_exits_with_dispatch_code(self, capsys):
        with patch("sys.argv", ["spinnet", "recoupling", "delta", "0"]):
            with pytest.raises(SystemExit) as info:
                main()
        assert info.value.code == 0
        assert capsys.readouterr().out.strip() == "1*A^0"

    def test_verbose_sets_debug(self, capsys, monkeypatch):
        monkeypatch.setenv("SPINNET_DEBUG", "")
        with patch("sys.argv", ["spinnet", "--verbose", "recoupling", "delta", "0"]):
            with pytest.raises(SystemExit):
                main()
        assert os.environ.get("SPINNET_DEBUG") == "1"

    def test_missing_command(self):
        with patch("sys.argv", ["spinnet"]):
            with pytest.raises(SystemExit) as info:
                main()
        assert info.value.code == 2
