"""Loading the bundled fact files into immutable lookup structures."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .facts import Condition, FactFileError, iter_tagged, parse_facts

FACTS_ENV = "WECKEN_FACTS_DIR"
HOMOTOPY_FILE = "homotopy.facts"
TABLE_FILE = "table.facts"

# fixed structure of the low stable stems; orders come from the fact file
STEM_GENERATORS = {0: "iota", 1: "eta", 2: "eta2", 3: "nu", 4: None, 5: None, 6: "nu2", 7: "sigma"}


@dataclass(frozen=True, eq=False)
class KnowledgeBase:
    """Parsed contents of ``homotopy.facts``. Compared and hashed by identity."""

    stems: dict            # k -> (gen token | None, order | None)
    wp_rules: dict         # gen -> tuple[(Condition, order | None), ...]
    exceptions: dict       # (q, n) -> (injective, surjective)
    kervaire: dict         # n -> "Y" | "N" | "OPEN"
    halve_rules: dict      # gen -> tuple[(Condition, value, div4), ...]
    source: str = "<memory>"


@dataclass(frozen=True, eq=False)
class TableTranscription:
    """Parsed ``table.facts``: per (q, column) ordered rules and notes."""

    rules: dict            # (q, column) -> tuple[(Condition, value), ...]
    notes: dict            # (q, column) -> str
    source: str = "<memory>"

    def lookup(self, q: int, n: int, column: str) -> str:
        key = (max(q, 0), column)
        for cond, value in self.rules.get(key, ()):
            if cond(n):
                return value
        raise LookupError(f"no transcribed {column} value for q={q}, n={n}")

    def note(self, q: int, column: str) -> str:
        return self.notes.get((max(q, 0), column), "")


def build_kb(text: str, source: str = "<string>") -> KnowledgeBase:
    records = parse_facts(text, source)
    stems: dict = {}
    for r in iter_tagged(records, "STEM"):
        k, gen, order = r.fields
        if k not in STEM_GENERATORS:
            raise FactFileError(f"stem {k} out of range 0..7", source, r.lineno)
        if gen != STEM_GENERATORS[k]:
            raise FactFileError(f"stem {k} must carry {STEM_GENERATORS[k] or 'none'}", source, r.lineno)
        if (gen is None) != (order == 0):
            raise FactFileError("order 0 exactly for vanishing stems", source, r.lineno)
        if k in stems:
            raise FactFileError(f"duplicate stem {k}", source, r.lineno)
        stems[k] = (gen, order)
    missing = set(STEM_GENERATORS) - set(stems)
    if missing:
        raise FactFileError(f"missing STEM records {sorted(missing)}", source)

    wp: dict = {}
    for r in iter_tagged(records, "WPORDER"):
        gen, cond, order = r.fields
        wp.setdefault(gen, []).append((cond, order))

    exc: dict = {}
    for r in iter_tagged(records, "EXC"):
        q, n, inj, surj = r.fields
        if (q, n) in exc:
            raise FactFileError(f"duplicate exception ({q}, {n})", source, r.lineno)
        exc[(q, n)] = (inj, surj)

    ki: dict = {}
    for r in iter_tagged(records, "KI"):
        n, value = r.fields
        ki[n] = value

    halve: dict = {}
    for r in iter_tagged(records, "HALVE"):
        gen, cond, value, div4 = r.fields
        halve.setdefault(gen, []).append((cond, value, div4))

    stray = {r.tag for r in records} - {"STEM", "WPORDER", "EXC", "KI", "HALVE"}
    if stray:
        raise FactFileError(f"records {sorted(stray)} do not belong in {HOMOTOPY_FILE}", source)
    return KnowledgeBase(
        stems=stems,
        wp_rules={g: tuple(v) for g, v in wp.items()},
        exceptions=exc,
        kervaire=ki,
        halve_rules={g: tuple(v) for g, v in halve.items()},
        source=source,
    )


def build_table(text: str, source: str = "<string>") -> TableTranscription:
    records = parse_facts(text, source)
    rules: dict = {}
    notes: dict = {}
    for r in records:
        if r.tag == "TAB":
            q, col, cond, value = r.fields
            rules.setdefault((q, col), []).append((cond, value))
        elif r.tag == "NOTE":
            q, col, text_ = r.fields
            notes[(q, col)] = text_
        else:
            raise FactFileError(f"record {r.tag} does not belong in {TABLE_FILE}", source, r.lineno)
    return TableTranscription({k: tuple(v) for k, v in rules.items()}, notes, source)


def _read(name: str, facts_dir: str | os.PathLike | None) -> tuple[str, str]:
    if facts_dir is None:
        facts_dir = os.environ.get(FACTS_ENV) or None
    if facts_dir is not None:
        path = Path(facts_dir) / name
        return path.read_text(encoding="utf-8"), str(path)
    res = resources.files("wecken") / "data" / name
    return res.read_text(encoding="utf-8"), f"wecken/data/{name}"


def load_kb(facts_dir: str | os.PathLike | None = None) -> KnowledgeBase:
    text, source = _read(HOMOTOPY_FILE, facts_dir)
    return build_kb(text, source)


def load_table(facts_dir: str | os.PathLike | None = None) -> TableTranscription:
    text, source = _read(TABLE_FILE, facts_dir)
    return build_table(text, source)


@lru_cache(maxsize=None)
def _cached_kb(facts_dir: str | None) -> KnowledgeBase:
    return load_kb(facts_dir)


def default_kb() -> KnowledgeBase:
    """The knowledge base in use: bundled, or from ``$WECKEN_FACTS_DIR``."""
    return _cached_kb(os.environ.get(FACTS_ENV) or None)


__all__ = [
    "Condition",
    "FACTS_ENV",
    "KnowledgeBase",
    "TableTranscription",
    "build_kb",
    "build_table",
    "default_kb",
    "load_kb",
    "load_table",
]
