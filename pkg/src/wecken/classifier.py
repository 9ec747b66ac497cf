"""The Wecken condition ``WeC(m, n)``: ``boundary(pi_m(S^n))`` meets ``ker E`` trivially.

``wecken`` returns a :class:`Verdict` whose ``YES`` means the condition
holds and ``NO`` means it fails. ``CONDITIONAL`` names the kernel generator
whose halvability would make it fail.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .ehp import DimPair, MAX_Q, e_surjective, h0_range_vanishes, kernel_of_E
from .kervaire import strong_kervaire
from .knowledge import KnowledgeBase, default_kb
from .verdict import Truth, Verdict

HOLDS = "HOLDS"
FAILS = "FAILS"
OPEN = "OPEN"


def _q7_filter(n: int) -> bool:
    t = n + 4
    pow2_minus_4 = t & (t - 1) == 0 and t >= 16
    return n % 8 in (2, 4) and n >= 10 and not pow2_minus_4


def wecken(d: DimPair, kb: KnowledgeBase | None = None, *, use_low_rule: bool = True) -> Verdict:
    """Decide ``WeC(m, n)``; the first matching rule wins.

    ``use_low_rule=False`` skips the independent ``m <= n + 5`` early-out,
    which must not change any answer.
    """
    return _wecken(d.m, d.n, kb or default_kb(), use_low_rule)


@lru_cache(maxsize=65536)
def _wecken(m: int, n: int, kb: KnowledgeBase, use_low_rule: bool) -> Verdict:
    d = DimPair(m, n)
    q = d.q
    if n % 2:
        return Verdict.of(True, "wec.odd")
    if q <= 0:
        return Verdict.of(True, "wec.stable")
    if n == 2 and m >= 2:
        return Verdict.of(True, "wec.n2")
    if use_low_rule and m <= n + 5 and (m, n) != (11, 6):
        return Verdict.of(True, "wec.low")
    if q > MAX_Q:
        return Verdict.of(Truth.OPEN, "wec.out_of_scope")

    kernel = kernel_of_E(d, kb)
    if kernel.is_trivial:
        return Verdict.of(True, "wec.kernel_trivial", "ehp.kernel")
    if q == 1:
        ki = strong_kervaire(n, kb)
        if ki.value is Truth.OPEN:
            return Verdict(Truth.OPEN, ki.provenance).cite("wec.q1")
        return Verdict(Truth.NO if ki.value is Truth.YES else Truth.YES, ki.provenance).cite("wec.q1")
    if q == 2:
        return Verdict.of(not (n % 4 == 2 and n >= 6), "wec.q2")
    if q == 3:
        return Verdict.of(not (n % 4 == 2 and n >= 10), "wec.q3")
    if q in (5, 6):
        return Verdict.of(True, "wec.q56")

    # q in {4, 7, 8}, ker E = Z2
    if q == 7 and not _q7_filter(n):
        return Verdict.of(Truth.OPEN, "wec.q7_filter", "wec.unsettled")
    h0 = h0_range_vanishes(d, kb)
    if h0.value is not Truth.YES or kernel.generator is None:
        return Verdict(Truth.OPEN, h0.provenance).cite("wec.unsettled")
    onto = e_surjective(d, kb).value is Truth.YES
    half = kernel.generator.halved_status
    rules = ("wec.halving", "wec.halving_onto") if onto else ("wec.halving",)
    prov = h0.provenance + half.provenance
    if half.value is Truth.YES:
        return Verdict(Truth.NO, prov).cite(*rules)
    if half.value is Truth.NO:
        if onto:
            return Verdict(Truth.YES, prov).cite(*rules)
        return Verdict(Truth.OPEN, prov).cite("wec.halving", "wec.unsettled")
    return Verdict(Truth.CONDITIONAL, prov, f"halvable({kernel.generator})").cite(*rules)


_COND_GEN = re.compile(r"halvable\(\[iota_\d+,(?P<tok>[a-z0-9]+)_\d+\]\)")


def verdict_cell(v: Verdict) -> str:
    """Table code of a Wecken verdict: HOLDS, FAILS, OPEN or COND:<gen>."""
    if v.value is Truth.YES:
        return HOLDS
    if v.value is Truth.NO:
        return FAILS
    if v.value is Truth.CONDITIONAL:
        mt = _COND_GEN.fullmatch(v.condition or "")
        return f"COND:{mt['tok']}" if mt else f"COND:{v.condition}"
    return OPEN
