"""Deterministic CSV/JSON emission for the command-line front end.

Every number is printed with 9 significant digits (enough to expose
quadrature regressions, short enough for stable goldens); identical
invocations produce byte-identical output.  CSV carries the provenance
(tool version, command echo, tolerances) as leading # comments so the
data payload stays round-trippable; JSON nests it under "meta".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np


def fmt9(value: Any) -> str:
    """Canonical text form: floats at 9 significant digits, bools lowercase."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.9g}"
    if value is None:
        return ""
    return str(value)


def _json_value(value: Any) -> Any:
    if value is None:
        return None
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, float):
        return float(fmt9(value))
    return value


@dataclass
class OutputRecord:
    """One command's payload plus provenance."""

    command: str
    params: dict[str, Any]
    columns: list[str]
    rows: list[list[Any]]
    meta: dict[str, Any] = field(default_factory=dict)

    def to_csv(self) -> str:
        lines = [f"# mrosc {self.meta.get('version', '')}".rstrip(),
                 f"# command: {self.command}"]
        for key, val in self.params.items():
            lines.append(f"# {key}: {fmt9(val)}")
        for key, val in self.meta.items():
            if key != "version":
                lines.append(f"# {key}: {fmt9(val)}")
        lines.append(",".join(self.columns))
        for row in self.rows:
            lines.append(",".join(fmt9(v) for v in row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        meta = {"tool": "mrosc", "version": self.meta.get("version", ""),
                "command": self.command,
                "params": {k: _json_value(v) for k, v in self.params.items()}}
        meta.update({k: _json_value(v) for k, v in self.meta.items() if k != "version"})
        data = {
            "columns": self.columns,
            "rows": [[_json_value(v) for v in row] for row in self.rows],
        }
        return json.dumps({"meta": meta, "data": data}, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")


def parse_csv(text: str) -> tuple[list[str], list[list[str]]]:
    """Read back an emitted CSV: (columns, rows of strings), comments skipped."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    columns = lines[0].split(",")
    return columns, [ln.split(",") for ln in lines[1:]]
