"""Render a directory of search certificates as CSV or Markdown tables."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .errors import DomainError, ParseError
from .search import SCHEMA, Certificate

COLUMNS = ("file", "n", "connectivity", "constraint", "pruning", "classes", "winners", "rho_lo", "rho_hi", "unique", "gap")


def load_certificates(directory: str | Path) -> list[tuple[str, Certificate]]:
    """All ``*.json`` certificates under ``directory``, sorted by file name.

    A file with a schema other than the supported one is an error, not a skip.
    """
    root = Path(directory)
    if not root.is_dir():
        raise DomainError(f"not a directory: {root}")
    out = []
    for path in sorted(root.glob("*.json")):
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path.name}: invalid JSON ({exc.msg})", exc.pos) from None
        if not isinstance(data, dict) or data.get("schema") != SCHEMA:
            found = data.get("schema") if isinstance(data, dict) else None
            raise DomainError(f"{path.name}: unsupported certificate schema {found!r}; expected {SCHEMA}")
        out.append((path.name, Certificate.from_dict(data)))
    return out


def rows(certs: list[tuple[str, Certificate]]) -> list[dict]:
    table = []
    for name, c in certs:
        table.append(
            {
                "file": name,
                "n": c.spec.get("n"),
                "connectivity": c.spec.get("connectivity"),
                "constraint": c.spec.get("constraint"),
                "pruning": c.spec.get("pruning"),
                "classes": c.classes_examined,
                "winners": " ".join(c.winners) if c.winners else "(none)",
                "rho_lo": c.rho["lo"] if c.rho else "",
                "rho_hi": c.rho["hi"] if c.rho else "",
                "unique": "yes" if c.unique else "no",
                "gap": c.gap_lower_bound or "",
            }
        )
    return table


def to_csv(table: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(table)
    return buf.getvalue()


def to_markdown(table: list[dict]) -> str:
    lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
    for r in table:
        lines.append("| " + " | ".join(str(r[c]).replace("|", "\\|") for c in COLUMNS) + " |")
    return "\n".join(lines) + "\n"


def render(directory: str | Path, fmt: str = "markdown") -> str:
    if fmt not in ("csv", "markdown"):
        raise DomainError(f"format must be csv or markdown, got {fmt!r}")
    table = rows(load_certificates(directory))
    return to_csv(table) if fmt == "csv" else to_markdown(table)
