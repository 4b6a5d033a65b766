import json
import re

from pydantic import BaseModel

ANSI_RE = re.compile(r"\033\[[0-9;]*m")


def strip_ansi(text: str) -> str:
    return ANSI_RE.sub("", text)


def export_json(record: BaseModel) -> str:
    return json.dumps(record.model_dump(mode="json"), indent=2, ensure_ascii=False)


EXPORTERS = {
    ".json": lambda record, _text: export_json(record),
    ".txt": lambda _record, text: strip_ansi(text),
}


def export_to_file(record: BaseModel, text: str, path: str) -> None:
    """Write ``record`` as JSON or ``text`` as plain text, chosen by the file extension."""
    ext = _get_extension(path)
    exporter = EXPORTERS.get(ext)
    if exporter is None:
        raise ValueError(f"Unsupported file extension '{ext}'. Supported: {', '.join(EXPORTERS)}")
    content = exporter(record, text)
    with open(path, "w", encoding="utf-8") as f:
        f.write(content if content.endswith("\n") else content + "\n")


def _get_extension(path: str) -> str:
    dot = path.rfind(".")
    if dot == -1:
        return ""
    return path[dot:]
