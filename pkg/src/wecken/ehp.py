"""Injectivity, surjectivity and kernel of the suspension
``E: pi_{m-1}(S^{n-1}) -> pi_m(S^n)`` for even n and q <= 8.

Where ``m <= 3n - 5`` the EHP sequence reduces both questions to
Whitehead products of ``iota_{n-1}`` with a stable generator; the finitely
many remaining dimension pairs are read from the fact file.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .kervaire import halvable
from .knowledge import KnowledgeBase, default_kb
from .tables import Generator, WhiteheadProduct, generator_sym, stem_generator, whitehead_order
from .verdict import (
    Citation,
    DomainError,
    PreconditionError,
    Truth,
    UnsupportedRangeError,
    Verdict,
    cite,
)

MAX_Q = 8


@dataclass(frozen=True)
class DimPair:
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise DomainError("m and n must be integers")
        if self.m < 1 or self.n < 1:
            raise DomainError(f"need m, n >= 1, got ({self.m}, {self.n})")

    @property
    def q(self) -> int:
        """Degree of nonstability ``m - 2n + 3``."""
        return self.m - 2 * self.n + 3

    @property
    def in_ehp_range(self) -> bool:
        """``m <= 3n - 5``, equivalently ``n >= q + 2``."""
        return self.n >= self.q + 2

    @classmethod
    def from_q(cls, q: int, n: int) -> DimPair:
        return cls(2 * n - 3 + q, n)

    def __str__(self) -> str:
        return f"(m={self.m}, n={self.n}, q={self.q})"


@dataclass(frozen=True)
class KernelDesc:
    """``ker E``: ``trivial``, ``Z2`` (generator may be unknown), or ``unknown``."""

    kind: str
    generator: WhiteheadProduct | None = None

    @property
    def is_trivial(self) -> bool:
        return self.kind == "trivial"

    def __str__(self) -> str:
        if self.kind == "Z2":
            return f"Z2({self.generator})" if self.generator else "Z2(?)"
        return self.kind


TRIVIAL_KERNEL = KernelDesc("trivial")


def _check_range(d: DimPair) -> None:
    if d.n % 2:
        raise UnsupportedRangeError(f"suspension engine covers even n only, got n={d.n}")
    if d.q > MAX_Q:
        raise UnsupportedRangeError(f"q={d.q} exceeds {MAX_Q}")


def _exception(d: DimPair, kb: KnowledgeBase) -> tuple[bool, bool]:
    try:
        return kb.exceptions[(d.q, d.n)]
    except KeyError:
        raise UnsupportedRangeError(f"no exceptional entry for q={d.q}, n={d.n}") from None


def e_injective(d: DimPair, kb: KnowledgeBase | None = None) -> Verdict:
    _check_range(d)
    return _injective(d.m, d.n, kb or default_kb())


@lru_cache(maxsize=65536)
def _injective(m: int, n: int, kb: KnowledgeBase) -> Verdict:
    d = DimPair(m, n)
    if d.q <= 0:
        return Verdict.of(True, "ehp.stable")
    if not d.in_ehp_range:
        return Verdict.of(_exception(d, kb)[0], "ehp.exception")
    g = stem_generator(d.q - 1, kb)
    if g is None:
        return Verdict.of(True, "ehp.inj_trivial_stem", "tables.stem")
    vanishes = whitehead_order(g, n - 1, kb).k == 1
    return Verdict.of(vanishes, "ehp.inj_derived", "tables.wp_order")


def e_surjective(d: DimPair, kb: KnowledgeBase | None = None) -> Verdict:
    _check_range(d)
    return _surjective(d.m, d.n, kb or default_kb())


@lru_cache(maxsize=65536)
def _surjective(m: int, n: int, kb: KnowledgeBase) -> Verdict:
    d = DimPair(m, n)
    if d.q <= 0:
        return Verdict.of(True, "ehp.stable")
    if not d.in_ehp_range:
        return Verdict.of(_exception(d, kb)[1], "ehp.exception")
    g = stem_generator(d.q - 2, kb)
    if g is None:
        return Verdict.of(True, "ehp.surj_trivial_stem", "tables.stem")
    same = generator_sym(g, kb).order == whitehead_order(g, n - 1, kb)
    return Verdict.of(same, "ehp.surj_derived", "tables.wp_order")


def kernel_of_E(d: DimPair, kb: KnowledgeBase | None = None) -> KernelDesc:
    kb = kb or default_kb()
    if e_injective(d, kb).value is Truth.YES:
        return TRIVIAL_KERNEL
    if not d.in_ehp_range:
        return KernelDesc("Z2")
    g = stem_generator(d.q - 1, kb)
    p = WhiteheadProduct(g, d.n - 1)
    return KernelDesc("Z2", replace(p, halved_status=halvable(p, kb)))


def kernel_generator_name(d: DimPair, kb: KnowledgeBase | None = None) -> Generator | None:
    k = kernel_of_E(d, kb)
    return k.generator.right if k.generator else None


def h0_range_vanishes(d: DimPair, kb: KnowledgeBase | None = None) -> Verdict:
    """Does ``h_0`` vanish on all of ``pi_{m-1}(S^{n-1})``? Requires ``ker E != 0``."""
    if kernel_of_E(d, kb).is_trivial:
        raise PreconditionError(f"ker E = 0 at {d}; h_0 criterion needs a nontrivial kernel")
    q, n = d.q, d.n
    if q == 4 and n % 8 == 4 and n >= 12:
        return Verdict.of(False, "ehp.h0_q4")
    if q == 8 and n in (6, 10):
        return Verdict.of(Truth.OPEN, "ehp.h0_q8")
    return Verdict.of(True, "ehp.h0_general")


@dataclass(frozen=True)
class ElementFacts:
    """Predicates about ``multiple * name`` in ``pi_{m-1}(S^{n-1})``.

    ``None`` means unknown. Only predicates are tracked, never elements.
    """

    name: str = "alpha"
    multiple: int = 1
    is_zero: bool | None = None
    double_is_zero: bool | None = None
    h0_is_zero: bool | None = None
    h1_is_zero: bool | None = None
    provenance: tuple[Citation, ...] = ()

    @property
    def label(self) -> str:
        if self.multiple == 0:
            return "0"
        return self.name if self.multiple == 1 else f"{self.multiple}*{self.name}"


def boundary_of_suspension(d: DimPair, alpha: ElementFacts) -> ElementFacts:
    """Facts about ``boundary(E(alpha))`` from the expansion of ``(2 iota) o alpha``."""
    if d.n % 2:
        return ElementFacts("0", 0, True, True, True, True, (cite("ehp.boundary_odd"),))
    h1_gone = d.m <= 3 * d.n - 5 or alpha.h1_is_zero is True
    if alpha.h0_is_zero is True and h1_gone:
        prov = [cite("ehp.boundary_formula")]
        if d.m <= 3 * d.n - 5:
            prov.append(cite("ehp.boundary_h1_range"))
        return ElementFacts(
            name=alpha.name,
            multiple=2 * alpha.multiple,
            is_zero=True if alpha.is_zero else alpha.double_is_zero,
            double_is_zero=True if alpha.double_is_zero else None,
            h0_is_zero=True,
            h1_is_zero=True,
            provenance=tuple(prov),
        )
    prov = [cite("ehp.boundary_formula")]
    if alpha.h0_is_zero is not True:
        prov.append(cite("ehp.boundary_h0_term"))
    if not h1_gone:
        prov.append(cite("ehp.boundary_h1_term"))
    return ElementFacts(name=f"boundary(E {alpha.label})", provenance=tuple(prov))
