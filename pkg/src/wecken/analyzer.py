"""Selfcoincidence invariants of maps ``f: S^m -> S^n/G`` that lift to ``S^n``.

Everything hinges on two predicates about a lift ``[f~]``: whether
``boundary([f~])`` vanishes (loose by small deformation) and whether its
suspension ``E(boundary([f~]))`` vanishes (Nielsen number zero). The
caller supplies what it knows about ``[f~]`` as :class:`MapFacts`; the
dimension-specific rules turn those into the two predicates, and the
implication ladder turns the predicates into the reported numbers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields

from .classifier import wecken
from .ehp import MAX_Q, DimPair, e_surjective
from .kervaire import ki_vanishes_identically
from .knowledge import KnowledgeBase, default_kb
from .verdict import Citation, DomainError, InconsistentFactsError, Truth, Verdict, cite


@dataclass(frozen=True)
class GroupContext:
    """The group G acting freely on S^n: trivial, Z2, or another nontrivial group."""

    kind: str
    order: int | None = None

    def __post_init__(self):
        if self.kind not in ("trivial", "Z2", "other"):
            raise DomainError(f"unknown group kind {self.kind!r}")
        if self.kind != "other" and self.order is not None:
            raise DomainError(f"{self.kind} group takes no order")
        if self.kind == "other" and self.order is not None and (self.order < 3):
            raise DomainError("other nontrivial group must have order >= 3")

    @classmethod
    def parse(cls, text: str) -> GroupContext:
        """``trivial``, ``z2``, ``other`` or ``other:<order>``."""
        t = text.strip().lower()
        if t == "trivial":
            return cls("trivial")
        if t == "z2":
            return cls("Z2")
        if t == "other":
            return cls("other")
        if t.startswith("other:"):
            try:
                order = int(t[6:])
            except ValueError:
                raise DomainError(f"bad group order in {text!r}") from None
            return cls("other", order)
        raise DomainError(f"unknown group {text!r}")

    @property
    def nontrivial(self) -> bool:
        return self.kind != "trivial"

    def __str__(self) -> str:
        if self.kind == "other":
            return f"other:{self.order}" if self.order else "other"
        return self.kind.lower()


TRIVIAL = GroupContext("trivial")
Z2 = GroupContext("Z2")


@dataclass(frozen=True)
class MapFacts:
    """What is known about the lift ``[f~] in pi_m(S^n)``; ``None`` = unknown.

    ``double_zero``         2[f~] = 0
    ``torsion_le_2``        torsion part of [f~] has order <= 2 (q = 2)
    ``hopf_half_even``      Hopf invariant H(f~) divisible by 4 (q = 2)
    ``kervaire_one``        Kervaire invariant of [f~] is 1 (q = 1)
    ``desusp_double_zero``  2 E^{-1}[f~] = 0 (q = 3)
    ``h0_of_class_zero``    h_0([f~]) = 0
    ``condition_vi``        2[f~] = [iota_n, iota_n] o h_0([f~])
    ``boundary_zero``       boundary([f~]) = 0, direct override
    ``e_boundary_zero``     E(boundary([f~])) = 0, direct override
    """

    double_zero: bool | None = None
    torsion_le_2: bool | None = None
    hopf_half_even: bool | None = None
    kervaire_one: bool | None = None
    desusp_double_zero: bool | None = None
    h0_of_class_zero: bool | None = None
    condition_vi: bool | None = None
    boundary_zero: bool | None = None
    e_boundary_zero: bool | None = None

    def __post_init__(self):
        if self.boundary_zero is True and self.e_boundary_zero is False:
            raise InconsistentFactsError("boundary_zero=True", "e_boundary_zero=False")

    @classmethod
    def names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def known(self) -> dict[str, bool]:
        return {k: v for k in self.names() if (v := getattr(self, k)) is not None}


@dataclass(frozen=True)
class AnalysisReport:
    nielsen: int | None
    mcc: int | None
    loose: Verdict
    loose_by_small_deformation: Verdict
    seven_conditions: Verdict
    wecken: Verdict
    fired_rules: tuple[Citation, ...]

    @property
    def mc(self) -> int | None:
        return self.mcc

    def undetermined(self) -> list[str]:
        """Names of report fields the supplied facts leave open."""
        out = [k for k in ("nielsen", "mcc") if getattr(self, k) is None]
        for k in ("loose", "loose_by_small_deformation", "seven_conditions"):
            if not getattr(self, k).determined:
                out.append(k)
        return out


def _and(a: bool | None, b: bool | None) -> bool | None:
    if a is False or b is False:
        return False
    if a is True and b is True:
        return True
    return None


class _Propagator:
    """Two tri-state predicates, ``bz`` (boundary zero) and ``ebz`` (E boundary zero)."""

    def __init__(self):
        self.val: dict[str, bool | None] = {"bz": None, "ebz": None}
        self.src: dict[str, str] = {}
        self.fired: list[str] = []

    def put(self, key: str, value: bool | None, rule: str, why: str) -> None:
        if value is None:
            return
        cur = self.val[key]
        if cur is None:
            self.val[key] = value
            self.src[key] = why
            if rule not in self.fired:
                self.fired.append(rule)
        elif cur != value:
            raise InconsistentFactsError(self.src[key], why, f"{key} forced both ways")

    def close(self, linked: bool) -> None:
        for _ in range(3):
            bz, ebz = self.val["bz"], self.val["ebz"]
            if bz is True:
                self.put("ebz", True, "ana.implication", f"{self.src['bz']} (boundary zero)")
            if ebz is False:
                self.put("bz", False, "ana.implication", f"{self.src['ebz']} (E boundary nonzero)")
            if linked:
                if bz is not None:
                    self.put("ebz", bz, "ana.wecken_link", f"{self.src['bz']} via Wecken condition")
                if ebz is not None:
                    self.put("bz", ebz, "ana.wecken_link", f"{self.src['ebz']} via Wecken condition")


def _fact(mf: MapFacts, *names: str) -> str:
    return ", ".join(f"{k}={getattr(mf, k)}" for k in names)


def _derive(d: DimPair, mf: MapFacts, kb: KnowledgeBase, p: _Propagator) -> None:
    m, n, q = d.m, d.n, d.q
    dz = mf.double_zero

    if n == 2 and m >= 3:
        p.put("bz", True, "ana.n2", "pi_{m-1}(S^1) = 0")
        return
    if q == 3 and n == 6:
        if dz is False:
            raise InconsistentFactsError("double_zero=False", "pi_12(S^6) = Z2")
        p.put("bz", True, "ana.small_group", "pi_12(S^6) = Z2")

    if q == 1:
        p.put("ebz", dz, "ana.q1_e", _fact(mf, "double_zero"))
        if n in (2, 4, 8):
            p.put("bz", dz, "ana.q1_small", _fact(mf, "double_zero"))
        else:
            ki = mf.kervaire_one
            if ki_vanishes_identically(n):
                if ki is True:
                    raise InconsistentFactsError("kervaire_one=True", f"KI vanishes identically for n={n}")
                ki = False
                p.fired.append("ana.ki_zero")
            p.put("bz", _and(dz, None if ki is None else not ki), "ana.q1_ki",
                  _fact(mf, "double_zero", "kervaire_one"))
    elif q == 2:
        t = mf.torsion_le_2
        if n % 4 == 2:
            p.put("ebz", t, "ana.q2_e", _fact(mf, "torsion_le_2"))
            p.put("bz", _and(t, mf.hopf_half_even), "ana.q2_hopf", _fact(mf, "torsion_le_2", "hopf_half_even"))
        elif n in (4, 8):
            p.fired.append("ana.q2_excluded")
        else:
            p.put("ebz", t, "ana.q2_e", _fact(mf, "torsion_le_2"))
            p.put("bz", t, "ana.q2_inj", _fact(mf, "torsion_le_2"))
    elif q == 3:
        if n % 4 == 0:
            h0 = mf.h0_of_class_zero
            vi = None
            if dz is not None and h0 is not None:
                vi = dz and h0 if (dz or h0) else None
            p.put("ebz", vi, "ana.q3_vi", _fact(mf, "double_zero", "h0_of_class_zero"))
            p.put("bz", vi, "ana.q3_vi", _fact(mf, "double_zero", "h0_of_class_zero"))
        elif n >= 10:
            p.put("ebz", dz, "ana.q3_e", _fact(mf, "double_zero"))
            p.put("bz", _and(dz, mf.desusp_double_zero), "ana.q3_desusp",
                  _fact(mf, "double_zero", "desusp_double_zero"))
    elif q == 6:
        p.put("ebz", dz, "ana.q6", _fact(mf, "double_zero"))
        p.put("bz", dz, "ana.q6", _fact(mf, "double_zero"))

    if q <= MAX_Q and e_surjective(d, kb).value is Truth.YES:
        p.put("ebz", dz, "ana.onto", _fact(mf, "double_zero"))
    p.put("ebz", mf.condition_vi, "ana.vi", _fact(mf, "condition_vi"))
    if dz is True and mf.h0_of_class_zero is True:
        p.put("ebz", True, "ana.vi", _fact(mf, "double_zero", "h0_of_class_zero"))


def analyze_self(d: DimPair, g: GroupContext, mf: MapFacts | None = None,
                 kb: KnowledgeBase | None = None) -> AnalysisReport:
    """Nielsen number, minimum numbers and looseness of ``(f, f)``."""
    kb = kb or default_kb()
    mf = mf or MapFacts()
    wec = wecken(d, kb)
    p = _Propagator()
    if d.n % 2:
        p.put("bz", True, "ana.n_odd", "n odd")
    else:
        p.put("bz", mf.boundary_zero, "ana.override", _fact(mf, "boundary_zero"))
        p.put("ebz", mf.e_boundary_zero, "ana.override", _fact(mf, "e_boundary_zero"))
        _derive(d, mf, kb, p)
    p.close(linked=wec.value is Truth.YES)
    bz, ebz = p.val["bz"], p.val["ebz"]

    unknown = Verdict.of(None, "ana.unknown")
    lbsd = Verdict.of(bz, "ana.small_deformation") if bz is not None else unknown
    if g.kind == "Z2":
        loose = Verdict.of(bz, "ana.small_deformation", "ana.loose_z2") if bz is not None else unknown
    else:
        loose = Verdict.of(ebz, "ana.nielsen", "ana.loose_not_z2") if ebz is not None else unknown

    if g.kind == "trivial":
        seven = Verdict.of(False, "ana.seven_trivial_group")
    elif g.kind == "other":
        seven = Verdict.of(False, "ana.seven_not_z2")
    elif bz is True or ebz is False:
        seven = Verdict.of(False, "ana.seven")
    elif bz is False and ebz is True:
        seven = Verdict.of(True, "ana.seven")
    else:
        seven = unknown

    nielsen = None if ebz is None else (0 if ebz else 1)
    mcc = {Truth.YES: 0, Truth.NO: 1}.get(loose.value)
    fired = tuple(cite(r) for r in dict.fromkeys(p.fired + ["ana.nielsen", "ana.mc_mcc"]))
    return AnalysisReport(nielsen, mcc, loose, lbsd, seven, wec, fired)


class PairOutcome(enum.Enum):
    MCC_EQUALS_NIELSEN = "MccEqualsNielsen"
    REDUCE_TO_SELF_CASE = "ReduceToSelfCase"


def analyze_pair(d: DimPair, g: GroupContext, homotopic: bool) -> PairOutcome:
    """Nonhomotopic pairs always have MCC = N#; homotopic ones reduce to ``analyze_self``."""
    if homotopic:
        return PairOutcome.REDUCE_TO_SELF_CASE
    return PairOutcome.MCC_EQUALS_NIELSEN


def pair_provenance(homotopic: bool) -> tuple[Citation, ...]:
    return (cite("pair.self" if homotopic else "pair.not_homotopic"),)


__all__ = [
    "AnalysisReport",
    "GroupContext",
    "MapFacts",
    "PairOutcome",
    "TRIVIAL",
    "Z2",
    "analyze_pair",
    "analyze_self",
]
