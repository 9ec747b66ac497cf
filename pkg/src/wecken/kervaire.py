"""Kervaire invariant one existence and halvability of kernel generators."""

from __future__ import annotations

from dataclasses import dataclass

from .knowledge import KnowledgeBase, default_kb
from .tables import WhiteheadProduct
from .verdict import DomainError, Truth, Verdict


@dataclass(frozen=True)
class KervaireStatus:
    n: int
    strong_ki_one_exists: Verdict


@dataclass(frozen=True)
class HalvabilityFact:
    product: WhiteheadProduct
    halvable: Verdict
    divisible_by_4: bool | None = None

    def __post_init__(self):
        if self.divisible_by_4 and self.halvable.value is not Truth.YES:
            raise ValueError("divisible by 4 implies halvable")


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def strong_kervaire(n: int, kb: KnowledgeBase | None = None) -> Verdict:
    """Does an order-2 Kervaire invariant one element exist in ``pi_{2n-2}(S^n)``?"""
    if n < 2 or n % 2:
        raise DomainError(f"strong Kervaire question needs even n >= 2, got {n}")
    kb = kb or default_kb()
    value = kb.kervaire.get(n, "N")
    if value == "Y":
        return Verdict.of(True, "ki.table")
    if value == "OPEN":
        return Verdict.of(Truth.OPEN, "ki.table", "ki.n128")
    if n in (2, 4, 8):
        return Verdict.of(False, "ki.e_iso")
    if not _is_power_of_two(n):
        return Verdict.of(False, "ki.browder")
    if n > 128:
        return Verdict.of(False, "ki.hhr")
    return Verdict.of(False, "ki.table")


def kervaire_status(n: int, kb: KnowledgeBase | None = None) -> KervaireStatus:
    return KervaireStatus(n, strong_kervaire(n, kb))


def ki_vanishes_identically(n: int) -> bool:
    """KI is zero on all of ``pi_{2n-2}(S^n)`` (n even).

    True for n = 2 (no Kervaire invariant in that stem), for n not a power
    of 2, and for n > 128.
    """
    return n == 2 or not _is_power_of_two(n) or n > 128


def halvability(p: WhiteheadProduct, kb: KnowledgeBase | None = None) -> HalvabilityFact:
    kb = kb or default_kb()
    for cond, value, div4 in kb.halve_rules.get(p.right.token, ()):
        if not cond(p.left_dim):
            continue
        if value == "KI":
            v = strong_kervaire(p.left_dim + 1, kb).cite("halve.whitehead_square")
            return HalvabilityFact(p, v)
        if value == "OPEN":
            return HalvabilityFact(p, Verdict.of(Truth.OPEN, "halve.open"))
        rule = {"eta": "halve.eta", "eta2": "halve.eta2"}.get(p.right.token, "halve.open")
        return HalvabilityFact(p, Verdict.of(value == "Y", rule), True if div4 else None)
    return HalvabilityFact(p, Verdict.of(Truth.OPEN, "halve.open"))


def halvable(p: WhiteheadProduct, kb: KnowledgeBase | None = None) -> Verdict:
    """Can the Whitehead product ``p`` be written as ``2u``?"""
    return halvability(p, kb).halvable
