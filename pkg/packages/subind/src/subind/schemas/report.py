"""The report every CLI command produces, and its two renderings."""

import json
from typing import Any

from pydantic import BaseModel, Field


# ANSI color codes
class C:
    RED = "\033[91m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    CYAN = "\033[96m"
    BOLD = "\033[1m"
    DIM = "\033[2m"
    RESET = "\033[0m"


class Report(BaseModel):
    """Command echo, input digests, results, warnings and exit status."""

    command: list[str]
    inputs: dict[str, str] = Field(default_factory=dict)
    results: dict[str, Any] = Field(default_factory=dict)
    warnings: list[str] = Field(default_factory=list)
    exit_status: int = 0

    def warn(self, message: str) -> None:
        if message not in self.warnings:
            self.warnings.append(message)


def render_json(report: Report) -> str:
    return json.dumps(report.model_dump(), indent=2, ensure_ascii=False)


def _status_color(value: Any) -> str | None:
    if value is True or value in ("holds", "PASS"):
        return C.GREEN
    if value is False or value in ("fails", "FAIL"):
        return C.RED
    return None


class _TextRenderer:
    def __init__(self, color: bool) -> None:
        self.color = color
        self.lines: list[str] = []

    def paint(self, text: str, color: str | None) -> str:
        return f"{color}{text}{C.RESET}" if self.color and color else text

    def scalar(self, value: Any) -> str:
        if value is None:
            text = "null"
        else:
            text = str(value).lower() if isinstance(value, bool) else str(value)
        return self.paint(text, _status_color(value))

    def walk(self, value: Any, indent: int) -> None:
        pad = "  " * indent
        if isinstance(value, dict):
            for key, item in value.items():
                if isinstance(item, dict | list) and item:
                    self.lines.append(f"{pad}{self.paint(str(key), C.BOLD)}:")
                    self.walk(item, indent + 1)
                else:
                    shown = self.scalar(item) if not isinstance(item, dict | list) else "-"
                    self.lines.append(f"{pad}{key}: {shown}")
        elif isinstance(value, list):
            for i, item in enumerate(value):
                if isinstance(item, dict | list):
                    self.lines.append(f"{pad}[{i}]")
                    self.walk(item, indent + 1)
                else:
                    self.lines.append(f"{pad}- {self.scalar(item)}")
        else:
            self.lines.append(f"{pad}{self.scalar(value)}")


def render_text(report: Report, color: bool = False) -> str:
    """Human-readable form of ``report``; carries the same facts as the JSON form."""
    out = _TextRenderer(color)
    rule = "=" * 60
    out.lines.append(out.paint(rule, C.DIM))
    out.lines.append(out.paint(f"  subind {' '.join(report.command)}", C.BOLD))
    out.lines.append(out.paint(rule, C.DIM))
    if report.inputs:
        out.lines.append(out.paint("inputs", C.BOLD) + ":")
        for name, digest in report.inputs.items():
            out.lines.append(f"  {name}: {out.paint(digest, C.CYAN)}")
    out.lines.append(out.paint("results", C.BOLD) + ":")
    out.walk(report.results, 1)
    if report.warnings:
        out.lines.append(out.paint("warnings", C.BOLD) + ":")
        for message in report.warnings:
            out.lines.append(f"  - {out.paint(message, C.YELLOW)}")
    out.lines.append(f"exit_status: {report.exit_status}")
    return "\n".join(out.lines)
