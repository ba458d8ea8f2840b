"""Verification reports shared by every checker, and their serialisation."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .scalars import GaussianRational, format_rational

PASS, FAIL, INFO = "pass", "fail", "info"


@dataclass
class Item:
    name: str
    status: str
    window: Any = None
    witness: Any = None

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> dict:
        out = {"name": self.name}
        if self.window is not None:
            out["window"] = self.window
        out["status"] = self.status
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    check: str
    params: dict = field(default_factory=dict)
    items: list[Item] = field(default_factory=list)
    data: Any = None
    table: tuple[list[str], list[list]] | None = None

    def add(self, name, ok, window=None, witness=None) -> Item:
        """Record a pass/fail item; ``ok=None`` records an informational one."""
        status = INFO if ok is None else (PASS if ok else FAIL)
        item = Item(name, status, window, None if status == PASS else witness)
        self.items.append(item)
        return item

    def extend(self, other: "Report", prefix: str = "") -> None:
        for item in other.items:
            self.items.append(Item(prefix + item.name, item.status, item.window, item.witness))

    @property
    def status(self) -> str:
        return PASS if all(i.passed for i in self.items) else FAIL

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def item(self, name: str) -> Item:
        for i in self.items:
            if i.name == name:
                return i
        raise KeyError(name)

    def failures(self) -> list[Item]:
        return [i for i in self.items if not i.passed]

    def as_dict(self) -> dict:
        out = {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "items": [i.as_dict() for i in self.items],
        }
        if self.data is not None:
            out["data"] = self.data
        return out


def _plain(obj):
    """Make report payloads JSON-safe: exact numbers become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, GaussianRational):
        return format_rational(obj.re) if obj.is_real() else str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, float):
        raise TypeError("floats never leave the process")
    return str(obj)


def emit_report(report: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(_plain(report.as_dict()), separators=(",", ":")) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if report.table is not None:
            header, rows = report.table
            writer.writerow(header)
            writer.writerows(_plain(rows))
        else:
            writer.writerow(["name", "window", "status", "witness"])
            for i in report.items:
                d = _plain(i.as_dict())
                witness = d.get("witness")
                writer.writerow([
                    d["name"],
                    "" if i.window is None else json.dumps(d["window"], separators=(",", ":")),
                    d["status"],
                    "" if witness is None else json.dumps(witness, separators=(",", ":")),
                ])
        return buf.getvalue().encode()
    raise ValueError(f"unknown output format {fmt!r}")
