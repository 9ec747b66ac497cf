"""Self-check: derived table vs transcription, module invariants, worked examples.

Each check yields :class:`Failure` records and stops at its first one. The
fact files come from ``facts_dir`` (or ``$WECKEN_FACTS_DIR``), so a
tampered copy can be checked against the code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from . import oracle
from .analyzer import TRIVIAL, Z2, GroupContext, MapFacts, analyze_self
from .classifier import wecken
from .ehp import DimPair, ElementFacts, boundary_of_suspension, e_injective, e_surjective, kernel_of_E
from .kervaire import halvability, strong_kervaire
from .knowledge import KnowledgeBase, TableTranscription, load_kb, load_table
from .report import diff_against_transcription
from .tables import Generator, WhiteheadProduct, generator_sym, whitehead_order, whitehead_vanishes
from .verdict import InconsistentFactsError, Truth


@dataclass(frozen=True)
class Failure:
    rule_id: str
    where: str
    expected: object
    actual: object

    def __str__(self) -> str:
        return f"FAIL {self.rule_id} at {self.where}: expected {self.expected}, got {self.actual}"


Check = Callable[[KnowledgeBase, TableTranscription], Iterator[Failure]]
CHECKS: list[tuple[str, Check]] = []


def check(name: str):
    def deco(fn: Check) -> Check:
        CHECKS.append((name, fn))
        return fn

    return deco


EVEN_N = range(2, 257, 2)


@check("table")
def _table(kb, table):
    for mm in diff_against_transcription(table, range(-2, 9), EVEN_N, kb):
        yield Failure(f"table.{mm.column.lower()}", f"(q={mm.q}, n={mm.n})", mm.transcribed, mm.derived)


@check("tables")
def _tables(kb, table):
    for g in Generator:
        gen_order = generator_sym(g, kb).order
        for j in range(g.min_base_dim, 2049):
            o = whitehead_order(g, j, kb)
            if g is Generator.IOTA:
                ok = (o.is_finite and o.k in (1, 2)) or (not o.is_finite and j % 2 == 0)
            else:
                ok = o.is_finite and o.divides(gen_order)
            if not ok:
                yield Failure("tables.order_divides", f"{g.token}, j={j}", f"divisor of {gen_order}", o)
                return
            if whitehead_vanishes(g, j, kb) != (o.k == 1):
                yield Failure("tables.vanish_iff_order1", f"{g.token}, j={j}", o.k == 1, not o.k == 1)
                return


@check("oracle")
def _oracle(kb, table):
    for g in Generator:
        for j in range(g.min_base_dim, 1025):
            want = oracle.raw_order(g.token, j)
            got = whitehead_order(g, j, kb)
            if (got.k if got.is_finite else None) != want:
                yield Failure("oracle.whitehead_order", f"{g.token}, j={j}", want, got)
                return
    for q in range(1, 9):
        for n in range(q + 2 + (q % 2), 1025, 2):
            d = DimPair.from_q(q, n)
            for rule, fn, ref in (
                ("oracle.injective", e_injective, oracle.brute_injective(q, n)),
                ("oracle.surjective", e_surjective, oracle.brute_surjective(q, n, kb)),
            ):
                got = fn(d, kb).as_bool()
                if got != ref:
                    yield Failure(rule, f"(q={q}, n={n})", ref, got)
                    return


@check("ehp")
def _ehp(kb, table):
    for q, n in itertools.product(range(-2, 9), EVEN_N):
        if 2 * n - 3 + q < 1:
            continue
        d = DimPair.from_q(q, n)
        inj, surj = e_injective(d, kb), e_surjective(d, kb)
        if q <= 0 and not (inj.value is surj.value is Truth.YES):
            yield Failure("ehp.stable", str(d), "yes/yes", f"{inj}/{surj}")
            return
        if q == 1 and surj.value is not Truth.YES:
            yield Failure("ehp.q1_onto", str(d), "yes", surj)
            return
        k = kernel_of_E(d, kb)
        if k.is_trivial != (inj.value is Truth.YES):
            yield Failure("ehp.kernel_iff_injective", str(d), inj, k)
            return
        if k.generator is not None:
            o = whitehead_order(k.generator.right, n - 1, kb)
            if o.k != 2:
                yield Failure("ehp.kernel_generator_order", str(d), 2, o)
                return
    for n, m in itertools.product(range(1, 40, 2), range(1, 80)):
        r = boundary_of_suspension(DimPair(m, n), ElementFacts(h0_is_zero=False, double_is_zero=False))
        if r.is_zero is not True:
            yield Failure("ehp.boundary_odd", f"(m={m}, n={n})", True, r.is_zero)
            return


@check("kervaire")
def _kervaire(kb, table):
    values = {n: strong_kervaire(n, kb).value for n in range(2, 4097, 2)}
    yes = sorted(n for n, v in values.items() if v is Truth.YES)
    open_ = sorted(n for n, v in values.items() if v is Truth.OPEN)
    if yes != [16, 32, 64]:
        yield Failure("ki.table", "strong Kervaire yes-set", [16, 32, 64], yes)
    if open_ != [128]:
        yield Failure("ki.table", "strong Kervaire open-set", [128], open_)
    for g in Generator:
        for j in range(g.min_base_dim | 1, 300, 2):
            h = halvability(WhiteheadProduct(g, j), kb)
            if g is Generator.ETA and h.halvable.value is Truth.YES:
                yield Failure("halve.eta", f"j={j}", "not yes", h.halvable)
                return
            if h.divisible_by_4 and h.halvable.value is not Truth.YES:
                yield Failure("halve.div4", f"{g.token}, j={j}", "yes", h.halvable)
                return


@check("wecken")
def _wecken(kb, table):
    for q, n in itertools.product(range(-2, 12), range(1, 257)):
        m = 2 * n - 3 + q
        if m < 1:
            continue
        d = DimPair(m, n)
        w = wecken(d, kb)
        if not w.provenance:
            yield Failure("wec.provenance", str(d), "non-empty", "empty")
            return
        w_full = wecken(d, kb, use_low_rule=False)
        if w.value is not w_full.value or w.condition != w_full.condition:
            yield Failure("wec.low_rule_redundant", str(d), w_full, w)
            return
        if n % 2 or q > 8:
            continue
        if e_injective(d, kb).value is Truth.YES and w.value is not Truth.YES:
            yield Failure("wec.injective_holds", str(d), "holds", w)
            return
        if w.value is Truth.NO and kernel_of_E(d, kb).kind != "Z2":
            yield Failure("wec.fails_needs_kernel", str(d), "Z2", kernel_of_E(d, kb))
            return
    got = sorted(n for n in range(2, 4097, 2) if wecken(DimPair(2 * n - 2, n), kb).value is Truth.NO)
    if got != [16, 32, 64]:
        yield Failure("wec.q1", "fails-set for m=2n-2", [16, 32, 64], got)


_FACT_GRID = [None, True, False]
_GROUPS = [TRIVIAL, Z2, GroupContext("other", 3)]


@check("ladder")
def _ladder(kb, table):
    names = ("double_zero", "kervaire_one", "torsion_le_2", "hopf_half_even", "desusp_double_zero", "h0_of_class_zero")
    for q, n in itertools.product(range(-1, 10), (2, 3, 4, 6, 8, 10, 12, 16)):
        m = 2 * n - 3 + q
        if m < 1:
            continue
        d = DimPair(m, n)
        for vals in itertools.product(_FACT_GRID, repeat=len(names)):
            mf = MapFacts(**dict(zip(names, vals)))
            for g in _GROUPS:
                try:
                    r = analyze_self(d, g, mf, kb)
                except InconsistentFactsError:
                    continue
                bad = _ladder_violation(r, g)
                if bad:
                    yield Failure(f"ladder.{bad}", f"{d}, {g}, {mf.known()}", "consistent report", r)
                    return


def _ladder_violation(r, g: GroupContext) -> str | None:
    if r.nielsen not in (0, 1, None) or r.mcc not in (0, 1, None):
        return "range"
    if r.loose_by_small_deformation.value is Truth.YES and r.loose.value is not Truth.YES:
        return "small_implies_loose"
    if r.loose.value is Truth.YES and r.nielsen not in (0, None):
        return "loose_implies_nielsen0"
    if r.nielsen == 1 and r.mcc == 0:
        return "nielsen1_implies_mcc1"
    if r.wecken.value is Truth.YES and None not in (r.nielsen, r.mcc) and r.nielsen != r.mcc:
        return "wecken_equal"
    if g.kind == "other" and r.seven_conditions.value is Truth.YES:
        return "seven_not_z2"
    if g.nontrivial and None not in (r.nielsen, r.mcc) and r.seven_conditions.determined:
        if (r.seven_conditions.value is Truth.YES) != (r.mcc != r.nielsen):
            return "seven_iff_gap"
    return None


def _example(rule: str, d: DimPair, g: GroupContext, mf: MapFacts, kb, **want) -> Iterator[Failure]:
    r = analyze_self(d, g, mf, kb)
    for k, v in want.items():
        got = getattr(r, k)
        got = got.value.value if hasattr(got, "value") and hasattr(got.value, "value") else got
        if got != v:
            yield Failure(rule, f"{d} {k}", v, got)


@check("examples")
def _examples(kb, table):
    yield from _example("example.kervaire", DimPair(30, 16), Z2, MapFacts(double_zero=True, kervaire_one=True), kb,
                        nielsen=0, mcc=1, seven_conditions="yes")
    yield from _example("example.hopf_mod4", DimPair(11, 6), Z2, MapFacts(torsion_le_2=True, hopf_half_even=False), kb,
                        nielsen=0, mcc=1, seven_conditions="yes")
    yield from _example("example.desuspension", DimPair(20, 10), Z2,
                        MapFacts(double_zero=True, desusp_double_zero=False), kb, nielsen=0, mcc=1)
    yield from _example("example.q6", DimPair(31, 14), Z2, MapFacts(double_zero=False), kb, nielsen=1, mcc=1)
    yield from _example("example.q6", DimPair(31, 14), Z2, MapFacts(double_zero=True), kb, nielsen=0, mcc=0)
    yield from _example("example.n6_small", DimPair(12, 6), Z2, MapFacts(), kb, loose_by_small_deformation="yes")
    yield from _example("example.n2_small", DimPair(4, 2), Z2, MapFacts(), kb, loose_by_small_deformation="yes")
    for n in (4, 8, 12, 16):
        yield from _example("example.h0_criterion", DimPair(2 * n, n), TRIVIAL,
                            MapFacts(double_zero=True, h0_of_class_zero=False), kb, loose="no")
        yield from _example("example.h0_criterion", DimPair(2 * n, n), TRIVIAL,
                            MapFacts(double_zero=True, h0_of_class_zero=True), kb, loose="yes")
    for q in range(1, 3):
        if not kernel_of_E(DimPair.from_q(q, 4), kb).is_trivial:
            yield Failure("example.n4_kernel", f"n=4, q={q}", "trivial", kernel_of_E(DimPair.from_q(q, 4), kb))
    if wecken(DimPair(254, 128), kb).value is not Truth.OPEN:
        yield Failure("example.n128", "(254, 128)", "open", wecken(DimPair(254, 128), kb))
    if wecken(DimPair(11, 6), kb).value is not Truth.NO:
        yield Failure("example.eleven_six", "(11, 6)", "fails", wecken(DimPair(11, 6), kb))


def run_selftest(facts_dir=None, only: list[str] | None = None) -> list[Failure]:
    kb = load_kb(facts_dir)
    table = load_table(facts_dir)
    failures = []
    for name, fn in CHECKS:
        if only and name not in only:
            continue
        failures.extend(fn(kb, table))
    return failures
