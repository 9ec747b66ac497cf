"""Serialization of verdicts and reports, and the suspension/Wecken table."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .analyzer import AnalysisReport
from .classifier import verdict_cell, wecken
from .ehp import DimPair, e_injective, e_surjective, kernel_of_E
from .knowledge import KnowledgeBase, TableTranscription, default_kb
from .verdict import Verdict

SCHEMA_VERSION = "1"


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "value": v.value.value,
        "condition": v.condition,
        "provenance": [c.rule_id for c in v.provenance],
    }


def report_to_dict(r: AnalysisReport) -> dict:
    return {
        "nielsen": "unknown" if r.nielsen is None else r.nielsen,
        "mcc": "unknown" if r.mcc is None else r.mcc,
        "mc": "unknown" if r.mc is None else r.mc,
        "loose": verdict_to_dict(r.loose),
        "loose_by_small_deformation": verdict_to_dict(r.loose_by_small_deformation),
        "seven_conditions": verdict_to_dict(r.seven_conditions),
        "wecken": verdict_to_dict(r.wecken),
    }


def flat_provenance(*groups) -> list[dict]:
    """Ordered, de-duplicated ``{rule_id, anchor}`` entries."""
    seen: dict[str, str] = {}
    for group in groups:
        for c in group:
            seen.setdefault(c.rule_id, c.anchor)
    return [{"rule_id": k, "anchor": v} for k, v in seen.items()]


@dataclass(frozen=True)
class ReportDocument:
    query: dict
    results: dict
    provenance: list = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "query": self.query,
            "results": self.results,
            "provenance": self.provenance,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        raw = json.loads(text)
        return cls(
            query=raw["query"],
            results=raw["results"],
            provenance=raw["provenance"],
            schema_version=raw["schema_version"],
        )

    def to_text(self) -> str:
        lines = ["query: " + " ".join(f"{k}={v}" for k, v in self.query.items() if v is not None)]
        for k, v in self.results.items():
            if isinstance(v, dict) and "value" in v:
                shown = v["value"] if v["condition"] is None else f"{v['value']} ({v['condition']})"
            else:
                shown = v
            lines.append(f"{k}: {shown}")
        lines.append("provenance:")
        lines.extend(f"  {p['rule_id']}: {p['anchor']}" for p in self.provenance)
        return "\n".join(lines) + "\n"


def analysis_document(d: DimPair, group: str, facts: dict, report: AnalysisReport) -> ReportDocument:
    query = {"command": "analyze", "m": d.m, "n": d.n, "q": d.q, "group": group, "facts": facts}
    prov = flat_provenance(
        report.fired_rules,
        report.loose.provenance,
        report.loose_by_small_deformation.provenance,
        report.seven_conditions.provenance,
        report.wecken.provenance,
    )
    return ReportDocument(query, report_to_dict(report), prov)


def verdict_document(command: str, d: DimPair, results: dict[str, Verdict], extra: dict | None = None) -> ReportDocument:
    query = {"command": command, "m": d.m, "n": d.n, "q": d.q}
    body = {k: verdict_to_dict(v) for k, v in results.items()}
    body.update(extra or {})
    return ReportDocument(query, body, flat_provenance(*(v.provenance for v in results.values())))


# --- the table -------------------------------------------------------------

TABLE_FIELDS = ("q", "m", "n", "injective", "surjective", "kernel", "wecken", "wecken_condition")


def table_row(q: int, n: int, kb: KnowledgeBase | None = None) -> dict:
    kb = kb or default_kb()
    d = DimPair.from_q(q, n)
    w = wecken(d, kb)
    return {
        "q": q,
        "m": d.m,
        "n": n,
        "injective": "Y" if e_injective(d, kb).as_bool() else "N",
        "surjective": "Y" if e_surjective(d, kb).as_bool() else "N",
        "kernel": str(kernel_of_E(d, kb)),
        "wecken": verdict_cell(w),
        "wecken_condition": w.condition or "",
    }


def table_rows(q_min: int, q_max: int, n_min: int, n_max: int, kb: KnowledgeBase | None = None) -> list[dict]:
    """One row per (q, even n) with ``m = 2n - 3 + q >= 1``, ordered by q then n."""
    n_lo = n_min + (n_min % 2)
    return [
        table_row(q, n, kb)
        for q in range(q_min, q_max + 1)
        for n in range(max(n_lo, 2), n_max + 1, 2)
        if 2 * n - 3 + q >= 1
    ]


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def render_json(rows: list[dict]) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, "rows": rows}, indent=2, ensure_ascii=False) + "\n"


_WEC_WORDS = {"HOLDS": "holds", "FAILS": "fails", "OPEN": "open"}


def render_markdown(rows: list[dict], transcription: TableTranscription | None = None) -> str:
    out = []
    for q in sorted({r["q"] for r in rows}):
        out.append(f"## q = {q}")
        if transcription is not None:
            for col, title in (("INJ", "E injective iff"), ("SURJ", "E onto iff"), ("WEC", "Wecken condition")):
                note = transcription.note(q, col)
                if note:
                    out.append(f"- {title}: {note}")
        out.append("")
        out.append("| m | n | E injective | E onto | ker E | WeC(m,n) |")
        out.append("|---|---|---|---|---|---|")
        for r in (r for r in rows if r["q"] == q):
            wec = _WEC_WORDS.get(r["wecken"]) or f"fails if {r['wecken_condition']}"
            inj = "yes" if r["injective"] == "Y" else "no"
            surj = "yes" if r["surjective"] == "Y" else "no"
            out.append(f"| {r['m']} | {r['n']} | {inj} | {surj} | {r['kernel']} | {wec} |")
        out.append("")
    return "\n".join(out)


@dataclass(frozen=True)
class CellMismatch:
    q: int
    n: int
    column: str
    derived: str
    transcribed: str

    def __str__(self) -> str:
        return f"(q={self.q}, n={self.n}) {self.column}: derived {self.derived}, transcribed {self.transcribed}"


def diff_against_transcription(
    transcription: TableTranscription,
    q_range: range,
    n_range: range,
    kb: KnowledgeBase | None = None,
) -> list[CellMismatch]:
    """Cells where derived injectivity, surjectivity or Wecken verdict disagree with the transcription."""
    kb = kb or default_kb()
    out = []
    for q in q_range:
        for n in n_range:
            if n % 2 or 2 * n - 3 + q < 1:
                continue
            row = table_row(q, n, kb)
            for col, key in (("INJ", "injective"), ("SURJ", "surjective"), ("WEC", "wecken")):
                want = transcription.lookup(q, n, col)
                if row[key] != want:
                    out.append(CellMismatch(q, n, col, row[key], want))
    return out


__all__ = [
    "CellMismatch",
    "ReportDocument",
    "analysis_document",
    "diff_against_transcription",
    "render_csv",
    "render_json",
    "render_markdown",
    "report_to_dict",
    "table_rows",
    "verdict_document",
    "verdict_to_dict",
]
