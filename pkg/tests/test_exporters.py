import json

import pytest

from src.models.schemas import CommandResult, PolyValue
from src.qpoly import LOOP_VALUE
from src.utils.exporters import _get_extension, export_json, export_to_file, strip_ansi
from src.utils.formatters import GREEN, RESET


@pytest.fixture
def sample_result():
    return CommandResult(
        command="recoupling",
        input={"query": "delta", "labels": [1]},
        value=PolyValue.of(LOOP_VALUE),
    )


class TestStripAnsi:
    def test_removes_codes(self):
        assert strip_ansi(f"{GREEN}All checks passed.{RESET}") == "All checks passed."

    def test_plain_text(self):
        assert strip_ansi("1*A^0") == "1*A^0"


class TestExportJson:
    def test_round_trips(self, sample_result):
        data = json.loads(export_json(sample_result))
        assert data["command"] == "recoupling"
        assert data["value"]["text"] == "-1*A^-2 - 1*A^2"
        assert CommandResult.model_validate(data) == sample_result

    def test_keeps_unicode(self):
        result = CommandResult(command="verify", notes=["θ(1,1,2) ok"])
        assert "θ" in export_json(result)


class TestExportToFile:
    def test_json(self, sample_result, tmp_path):
        path = tmp_path / "out.json"
        export_to_file(sample_result, "ignored", str(path))
        assert json.loads(path.read_text(encoding="utf-8"))["input"]["labels"] == [1]

    def test_text_is_stripped(self, sample_result, tmp_path):
        path = tmp_path / "out.txt"
        export_to_file(sample_result, f"{GREEN}ok{RESET}", str(path))
        assert path.read_text(encoding="utf-8") == "ok\n"

    def test_unsupported_extension(self, sample_result, tmp_path):
        with pytest.raises(ValueError, match="Unsupported file extension '.html'"):
            export_to_file(sample_result, "", str(tmp_path / "out.html"))


class TestGetExtension:
    def test_extension(self):
        assert _get_extension("runs/trefoil.json") == ".json"

    def test_none(self):
        assert _get_extension("result") == ""
