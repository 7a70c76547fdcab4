"""Brute-force reproduction of the three published tables and diffing against golden data."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .counter import theta
from .search import min_over_parikh
from .words import parikh, parse_word

MATCH = "match"
MISPRINT = "misprint"
REGRESSION = "regression"


def load_golden(which: int) -> dict:
    if which not in (1, 2, 3):
        raise ValueError(f"no table {which}")
    text = resources.files("abelsq").joinpath(f"data/table{which}.json").read_text()
    return json.loads(text)


@dataclass(frozen=True)
class DiffEntry:
    row: int
    field: str
    expected: object
    computed: object
    status: str
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "row": self.row,
            "field": self.field,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "note": self.note,
        }


@dataclass
class TableResult:
    which: int
    rows: list[dict]
    diff: list[DiffEntry] = field(default_factory=list)

    @property
    def regressions(self) -> list[DiffEntry]:
        return [d for d in self.diff if d.status == REGRESSION]

    @property
    def misprints(self) -> list[DiffEntry]:
        return [d for d in self.diff if d.status == MISPRINT]

    @property
    def ok(self) -> bool:
        return not self.regressions


def compute_table(which: int, workers: Optional[int] = None) -> list[dict]:
    gold = load_golden(which)
    if which in (1, 2):
        x = gold["x"]
        rows = []
        for row in gold["rows"]:
            mr = min_over_parikh(x, row["n"], workers=workers)
            rows.append({"n": row["n"], "number": mr.min_theta, "words": [w.text for w in mr.minimizers]})
        return rows
    n = gold["n"]
    rows = []
    for row in gold["rows"]:
        mr = min_over_parikh(row["x"], n, workers=workers)
        rows.append({"x": row["x"], "number": mr.min_theta, "minimizers": len(mr.minimizers)})
    return rows


def _diff_word_table(gold: dict, rows: list[dict]) -> list[DiffEntry]:
    misprints = {(m["n"], m["printed"]): m for m in gold["misprints"]}
    out = []
    for exp, got in zip(gold["rows"], rows):
        n = exp["n"]
        status = MATCH if exp["number"] == got["number"] else REGRESSION
        out.append(DiffEntry(n, "number", exp["number"], got["number"], status))
        listed_only = sorted(set(exp["words"]) - set(got["words"]))
        computed_only = set(got["words"]) - set(exp["words"])
        for word in listed_only:
            m = misprints.get((n, word))
            if m and m["corrected"] in computed_only:
                computed_only.discard(m["corrected"])
                out.append(DiffEntry(n, "words", word, m["corrected"], MISPRINT, m["note"]))
            else:
                out.append(DiffEntry(n, "words", word, None, REGRESSION, "listed word is not a minimizer"))
        for word in sorted(computed_only):
            out.append(DiffEntry(n, "words", None, word, REGRESSION, "minimizer missing from table"))
        if not listed_only and not computed_only:
            out.append(DiffEntry(n, "words", len(exp["words"]), len(got["words"]), MATCH))
    return out


def _diff_table3(gold: dict, rows: list[dict]) -> list[DiffEntry]:
    n = gold["n"]
    misprints = {m["x"]: m for m in gold["misprints"]}
    out = []
    for exp, got in zip(gold["rows"], rows):
        x, number = exp["x"], exp["number"]
        status = MATCH if number == got["number"] else REGRESSION
        out.append(DiffEntry(x, "number", number, got["number"], status))
        sample = parse_word(exp["sample"])
        in_class = len(sample) == n and parikh(sample).count_a == x
        m = misprints.get(x)
        if in_class and m is None:
            t = theta(sample)
            out.append(DiffEntry(x, "sample", number, t, MATCH if t == number else REGRESSION))
            continue
        if m is None or m["printed"] != exp["sample"]:
            out.append(DiffEntry(x, "sample", exp["sample"], None, REGRESSION, "sample is not in the class"))
            continue
        fixed = parse_word(m["corrected"])
        t = theta(fixed)
        ok = len(fixed) == n and parikh(fixed).count_a == x and t == number and not in_class
        out.append(
            DiffEntry(
                x,
                "sample",
                exp["sample"],
                f"{m['corrected']} (theta={t})",
                MISPRINT if ok else REGRESSION,
                f"{m['note']}; theta of the printed sample is {theta(sample)}",
            )
        )
    return out


def reproduce(which: int, workers: Optional[int] = None) -> TableResult:
    gold = load_golden(which)
    rows = compute_table(which, workers)
    diff = _diff_table3(gold, rows) if which == 3 else _diff_word_table(gold, rows)
    return TableResult(which, rows, diff)


def render(result: TableResult, fmt: str = "text", diff: bool = False) -> str:
    gold = load_golden(result.which)
    key = "x" if result.which == 3 else "n"
    if fmt == "json":
        payload = {"table": result.which, "rows": result.rows}
        if diff:
            payload["diff"] = [d.as_dict() for d in result.diff if d.status != MATCH]
            payload["regressions"] = len(result.regressions)
            payload["misprints"] = len(result.misprints)
        return json.dumps(payload, indent=2)

    if result.which == 3:
        samples = {r["x"]: r["sample"] for r in gold["rows"]}
        header = ["x", "number", "minimizers", "listed sample"]
        body = [[r["x"], r["number"], r["minimizers"], samples[r["x"]]] for r in result.rows]
    else:
        header = ["n", "number", "words"]
        body = [[r["n"], r["number"], " ".join(r["words"])] for r in result.rows]

    if fmt == "csv":
        lines = [",".join(header)] + [",".join(f'"{c}"' if " " in str(c) else str(c) for c in row) for row in body]
    elif fmt == "md":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in body]
    else:
        lines = [f"Table {result.which}: {gold['title']}"]
        lines += ["  ".join(f"{str(c):>3}" if i < len(header) - 1 else str(c) for i, c in enumerate(row)) for row in [header] + body]

    if diff:
        lines.append("")
        flagged = [d for d in result.diff if d.status != MATCH]
        if not flagged:
            lines.append("diff: all cells match")
        for d in flagged:
            lines.append(
                f"{d.status.upper()}: {key}={d.row} {d.field}: listed={d.expected} computed={d.computed}"
                + (f" ({d.note})" if d.note else "")
            )
        lines.append(f"regressions={len(result.regressions)} misprints={len(result.misprints)}")
    return "\n".join(lines)


__all__ = ["DiffEntry", "TableResult", "compute_table", "load_golden", "render", "reproduce"]
