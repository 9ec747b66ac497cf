"""Brute-force reference for Whitehead product orders and the suspension.

Hand-written from the published case splits, one predicate per branch,
with ``2^i - K`` membership checked by enumerating ``i``. Shares nothing
with the fact-file parser or the condition language, so it can check
``tables`` and ``ehp`` independently. Generator orders are the only input
taken from a knowledge base.
"""

from __future__ import annotations

from .knowledge import KnowledgeBase, default_kb

INF = None
STEM_GEN = {0: "iota", 1: "eta", 2: "eta2", 3: "nu", 6: "nu2", 7: "sigma"}
MIN_J = {"iota": 1, "eta": 2, "eta2": 2, "nu": 4, "nu2": 4, "sigma": 8}


def _pow2_minus(j: int, k: int, i_min: int) -> bool:
    return any(j == 2**i - k for i in range(i_min, 80))


def _branches(gen: str, j: int) -> list[tuple[str, int | None]]:
    """Every branch of the case split whose condition holds at ``j``."""
    odd = j % 2 == 1
    if gen == "iota":
        return [
            (label, order)
            for label, ok, order in [
                ("j in 1,3,7", j in (1, 3, 7), 1),
                ("odd, not 1,3,7", odd and j not in (1, 3, 7), 2),
                ("even", not odd, INF),
            ]
            if ok
        ]
    if gen == "eta":
        zero = j % 4 == 3 or j in (2, 6)
        return [("vanishes", 1)] if zero else [("nonzero", 2)]
    if gen == "eta2":
        zero = j % 4 in (2, 3) or j == 5
        return [("vanishes", 1)] if zero else [("nonzero", 2)]
    if gen == "nu":
        p = _pow2_minus(j, 3, 3)
        return [
            (label, order)
            for label, ok, order in [
                ("7 mod 8 or 2^i-3", j % 8 == 7 or p, 1),
                ("1,3,5 mod 8, >= 9, not 2^i-3", j % 8 in (1, 3, 5) and j >= 9 and not p, 2),
                ("2 mod 4 >= 6, or 4, 12", (j % 4 == 2 and j >= 6) or j in (4, 12), 12),
                ("0 mod 4 >= 8, not 12", j % 4 == 0 and j >= 8 and j != 12, 24),
            ]
            if ok
        ]
    if gen == "nu2":
        zero = j % 8 in (4, 5, 7) or _pow2_minus(j, 5, 4)
        return [("vanishes", 1)] if zero else [("nonzero", 2)]
    if gen == "sigma":
        special = j == 11 or j % 16 == 15
        return [
            (label, order)
            for label, ok, order in [
                ("11 or 15 mod 16", special, 1),
                ("odd >= 9, not 11 or 15 mod 16", odd and j >= 9 and not special, 2),
                ("8", j == 8, 120),
                ("even >= 10", not odd and j >= 10, 240),
            ]
            if ok
        ]
    raise ValueError(f"unknown generator {gen!r}")


def branches(gen: str, j: int) -> list[str]:
    return [label for label, _ in _branches(gen, j)]


def raw_order(gen: str, j: int) -> int | None:
    """Order of ``[iota_j, gen_j]``; ``None`` for infinite. Branches must be unique."""
    if j < MIN_J[gen]:
        raise ValueError(f"{gen}_{j} does not exist")
    hits = _branches(gen, j)
    if len(hits) != 1:
        raise AssertionError(f"{gen} at j={j}: branches {[h[0] for h in hits]}")
    return hits[0][1]


def brute_injective(q: int, n: int) -> bool:
    """E injective for even n >= q + 2 (or q <= 0)."""
    if q <= 0:
        return True
    gen = STEM_GEN.get(q - 1)
    return gen is None or raw_order(gen, n - 1) == 1


def brute_surjective(q: int, n: int, kb: KnowledgeBase | None = None) -> bool:
    if q <= 0:
        return True
    gen = STEM_GEN.get(q - 2)
    if gen is None:
        return True
    kb = kb or default_kb()
    gen_order = kb.stems[next(k for k, g in STEM_GEN.items() if g == gen)][1]
    return gen_order == raw_order(gen, n - 1)
