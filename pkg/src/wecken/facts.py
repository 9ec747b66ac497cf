"""Line-oriented fact files and the dimension-condition mini-language.

A fact file holds one record per line. Fields are separated by a single
TAB character; the first field is the record tag. Blank lines and lines
starting with ``#`` are ignored. Files are UTF-8 with LF line endings.

Record tags::

    STEM     <k>  <gen|none>  <order|0>
    WPORDER  <gen>  <condition>  <order>
    EXC      <q>  <n>  <Y|N>  <Y|N>
    KI       <n>  <Y|N|OPEN>
    HALVE    <gen>  <condition>  <Y|N|OPEN|KI>  [div4]
    TAB      <q>  <INJ|SURJ|WEC>  <condition>  <value>
    NOTE     <q>  <INJ|SURJ|WEC>  <text>

``<gen>`` is one of ``iota eta eta2 nu nu2 sigma``; ``<order>`` is a
positive integer or ``INF``.

Condition grammar (``v`` is the record's variable, ``j`` or ``n``)::

    condition := atom ("&" atom)*
    atom      := v "=" INT                    equality
               | v "%" INT "=" INT            residue class
               | v ">=" INT                   lower bound
               | v "=2^i-" INT ",i>=" INT     v = 2**i - K for some i >= I

Rules sharing a key are tried in file order; the first matching condition
wins. No whitespace is allowed inside a condition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class FactFileError(ValueError):
    """Malformed fact file content."""

    def __init__(self, message: str, source: str = "<string>", lineno: int | None = None):
        where = source if lineno is None else f"{source}:{lineno}"
        super().__init__(f"{where}: {message}")
        self.source = source
        self.lineno = lineno


_INT = r"(0|[1-9][0-9]*)"
_ATOM_PATTERNS = [
    ("pow2", re.compile(rf"(?P<var>[a-z])=2\^i-(?P<k>{_INT}),i>=(?P<i>{_INT})")),
    ("mod", re.compile(rf"(?P<var>[a-z])%(?P<m>{_INT})=(?P<r>{_INT})")),
    ("ge", re.compile(rf"(?P<var>[a-z])>=(?P<k>{_INT})")),
    ("eq", re.compile(rf"(?P<var>[a-z])=(?P<k>{_INT})")),
]


@dataclass(frozen=True)
class Atom:
    kind: str
    a: int
    b: int = 0

    def holds(self, v: int) -> bool:
        if self.kind == "eq":
            return v == self.a
        if self.kind == "ge":
            return v >= self.a
        if self.kind == "mod":
            return v % self.a == self.b
        # pow2: v + a == 2**i with i >= b
        t = v + self.a
        return t > 0 and t & (t - 1) == 0 and t.bit_length() - 1 >= self.b

    def render(self, var: str) -> str:
        if self.kind == "eq":
            return f"{var}={self.a}"
        if self.kind == "ge":
            return f"{var}>={self.a}"
        if self.kind == "mod":
            return f"{var}%{self.a}={self.b}"
        return f"{var}=2^i-{self.a},i>={self.b}"


@dataclass(frozen=True)
class Condition:
    """A conjunction of atoms over one integer variable."""

    var: str
    atoms: tuple[Atom, ...]

    def __call__(self, v: int) -> bool:
        return all(a.holds(v) for a in self.atoms)

    def __str__(self) -> str:
        return "&".join(a.render(self.var) for a in self.atoms)


def parse_condition(text: str, var: str) -> Condition:
    """Parse ``text`` into a :class:`Condition` over the variable ``var``.

    >>> parse_condition("j%8=1&j>=9", "j")(17)
    True
    >>> parse_condition("j=2^i-3,i>=3", "j")(13)
    True
    """
    if not text:
        raise ValueError("empty condition")
    atoms = []
    for part in text.split("&"):
        for kind, pat in _ATOM_PATTERNS:
            mt = pat.fullmatch(part)
            if mt is None:
                continue
            if mt["var"] != var:
                raise ValueError(f"condition variable {mt['var']!r}, expected {var!r}")
            if kind == "mod":
                m, r = int(mt["m"]), int(mt["r"])
                if m == 0 or r >= m:
                    raise ValueError(f"bad residue class {part!r}")
                atoms.append(Atom("mod", m, r))
            elif kind == "pow2":
                atoms.append(Atom("pow2", int(mt["k"]), int(mt["i"])))
            else:
                atoms.append(Atom(kind, int(mt["k"])))
            break
        else:
            raise ValueError(f"unknown condition token {part!r}")
    return Condition(var, tuple(atoms))


GEN_TOKENS = ("iota", "eta", "eta2", "nu", "nu2", "sigma")
COLUMNS = ("INJ", "SURJ", "WEC")


@dataclass(frozen=True)
class Record:
    tag: str
    fields: tuple
    lineno: int


def _order(tok: str, *, allow_zero: bool = False) -> int | None:
    """``INF`` -> None, otherwise a positive integer."""
    if tok == "INF":
        return None
    if not re.fullmatch(_INT, tok):
        raise ValueError(f"bad order {tok!r}")
    k = int(tok)
    if k == 0 and not allow_zero:
        raise ValueError("order must be >= 1")
    return k


def _int(tok: str) -> int:
    if not re.fullmatch(r"-?" + _INT, tok):
        raise ValueError(f"bad integer {tok!r}")
    return int(tok)


def _gen(tok: str, *, allow_none: bool = False) -> str | None:
    if allow_none and tok == "none":
        return None
    if tok not in GEN_TOKENS:
        raise ValueError(f"unknown generator {tok!r}")
    return tok


def _choice(tok: str, options: Iterable[str]) -> str:
    options = tuple(options)
    if tok not in options:
        raise ValueError(f"expected one of {'|'.join(options)}, got {tok!r}")
    return tok


def _wec_value(tok: str) -> str:
    if tok in ("HOLDS", "FAILS", "OPEN"):
        return tok
    if tok.startswith("COND:"):
        _gen(tok[5:])
        return tok
    raise ValueError(f"bad Wecken value {tok!r}")


def _parse_fields(tag: str, raw: list[str]) -> tuple:
    if tag == "STEM":
        _arity(raw, 3)
        k, gen, order = raw
        return (_int(k), _gen(gen, allow_none=True), _order(order, allow_zero=True))
    if tag == "WPORDER":
        _arity(raw, 3)
        return (_gen(raw[0]), parse_condition(raw[1], "j"), _order(raw[2]))
    if tag == "EXC":
        _arity(raw, 4)
        return (_int(raw[0]), _int(raw[1]), _choice(raw[2], "YN") == "Y", _choice(raw[3], "YN") == "Y")
    if tag == "KI":
        _arity(raw, 2)
        return (_int(raw[0]), _choice(raw[1], ("Y", "N", "OPEN")))
    if tag == "HALVE":
        if len(raw) == 4:
            _choice(raw[3], ("div4",))
        else:
            _arity(raw, 3)
        div4 = len(raw) == 4
        value = _choice(raw[2], ("Y", "N", "OPEN", "KI"))
        if div4 and value != "Y":
            raise ValueError("div4 requires value Y")
        return (_gen(raw[0]), parse_condition(raw[1], "j"), value, div4)
    if tag == "TAB":
        _arity(raw, 4)
        col = _choice(raw[1], COLUMNS)
        cond = parse_condition(raw[2], "n")
        value = _wec_value(raw[3]) if col == "WEC" else _choice(raw[3], "YN")
        return (_int(raw[0]), col, cond, value)
    if tag == "NOTE":
        _arity(raw, 3)
        if not raw[2]:
            raise ValueError("empty note")
        return (_int(raw[0]), _choice(raw[1], COLUMNS), raw[2])
    raise ValueError(f"unknown record tag {tag!r}")


def _arity(raw: list[str], k: int) -> None:
    if len(raw) != k:
        raise ValueError(f"expected {k} fields, got {len(raw)}")


def parse_facts(text: str, source: str = "<string>") -> list[Record]:
    """Parse fact-file text into typed records, rejecting anything unknown."""
    records = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            raise FactFileError("CR line ending", source, lineno)
        if not line.strip() or line.startswith("#"):
            continue
        tag, *raw = line.split("\t")
        try:
            fields = _parse_fields(tag, raw)
        except ValueError as exc:
            raise FactFileError(str(exc), source, lineno) from None
        records.append(Record(tag, fields, lineno))
    return records


def iter_tagged(records: Iterable[Record], tag: str) -> Iterator[Record]:
    return (r for r in records if r.tag == tag)
