"""Stable-stem generators and orders of Whitehead products ``[iota_j, g_j]``."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .knowledge import KnowledgeBase, default_kb
from .verdict import DomainError, ElemOrder, Verdict, order_from_fact


class Generator(enum.Enum):
    """Generators of the stable stems 0..7, with their stem and lowest sphere."""

    IOTA = ("iota", 0, 1)
    ETA = ("eta", 1, 2)
    ETA_SQ = ("eta2", 2, 2)
    NU = ("nu", 3, 4)
    NU_SQ = ("nu2", 6, 4)
    SIGMA = ("sigma", 7, 8)

    def __init__(self, token: str, stem: int, min_base_dim: int):
        self.token = token
        self.stem = stem
        self.min_base_dim = min_base_dim

    @classmethod
    def from_token(cls, token: str) -> Generator:
        for g in cls:
            if g.token == token:
                return g
        raise DomainError(f"unknown generator {token!r}")

    def label(self, j: int) -> str:
        return f"{self.token}_{j}"


@dataclass(frozen=True)
class GeneratorSym:
    name: Generator
    min_base_dim: int
    stem: int
    order: ElemOrder


@dataclass(frozen=True)
class StemEntry:
    stem_index: int
    generator: GeneratorSym | None
    group_is_trivial: bool


@dataclass(frozen=True)
class WhiteheadProduct:
    """``[iota_{left_dim}, right_{left_dim}]``; the left factor is always iota."""

    right: Generator
    left_dim: int
    halved_status: Verdict | None = None
    left: Generator = Generator.IOTA

    def __post_init__(self):
        if self.left is not Generator.IOTA:
            raise ValueError("only products with iota on the left are housed")
        if self.left_dim < self.right.min_base_dim:
            raise DomainError(f"{self.right.token}_{self.left_dim} does not exist")

    def __str__(self) -> str:
        return f"[iota_{self.left_dim},{self.right.label(self.left_dim)}]"


def generator_sym(g: Generator, kb: KnowledgeBase | None = None) -> GeneratorSym:
    kb = kb or default_kb()
    _, order = kb.stems[g.stem]
    return GeneratorSym(g, g.min_base_dim, g.stem, order_from_fact(order))


def stem_entry(k: int, kb: KnowledgeBase | None = None) -> StemEntry:
    """Row ``k`` of the stable stem table.

    Only stems 0..7 are housed; stem 8 is never consumed and raises.
    """
    if not isinstance(k, int) or not 0 <= k <= 7:
        raise DomainError(f"stem index {k!r} outside the housed range 0..7")
    kb = kb or default_kb()
    token, _ = kb.stems[k]
    if token is None:
        return StemEntry(k, None, True)
    return StemEntry(k, generator_sym(Generator.from_token(token), kb), False)


def stem_generator(k: int, kb: KnowledgeBase | None = None) -> Generator | None:
    """Generator of stem ``k`` (``None`` when the stem vanishes or ``k < 0``)."""
    if k < 0:
        return None
    entry = stem_entry(k, kb)
    return entry.generator.name if entry.generator else None


def whitehead_order(g: Generator, j: int, kb: KnowledgeBase | None = None) -> ElemOrder:
    """Order of ``[iota_j, g_j]`` in ``pi_{2j-1+stem}(S^j)``.

    Where only a vanishing criterion is known the answer is 1 or 2, since
    the generator itself then has order 2.
    """
    return order_from_fact(_wp_order(g, j, kb or default_kb()))


@lru_cache(maxsize=65536)
def _wp_order(g: Generator, j: int, kb: KnowledgeBase) -> int | None:
    if not isinstance(j, int) or j < g.min_base_dim:
        raise DomainError(f"{g.token}_{j} requires j >= {g.min_base_dim}")
    for cond, order in kb.wp_rules.get(g.token, ()):
        if cond(j):
            return order
    raise DomainError(f"no Whitehead order rule for {g.token} at j={j}")


def whitehead_vanishes(g: Generator, j: int, kb: KnowledgeBase | None = None) -> bool:
    return _wp_order(g, j, kb or default_kb()) == 1


def euler_char_sphere(n: int) -> int:
    if n < 1:
        raise DomainError("sphere dimension must be >= 1")
    return 1 + (-1) ** n
