"""Verdicts with provenance, element orders, and the rule registry."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class DomainError(ValueError):
    """Argument outside an operation's domain."""


class UnsupportedRangeError(DomainError):
    """Dimensions the engine deliberately does not cover (odd n, q > 8)."""


class PreconditionError(ValueError):
    """Operation called without its stated hypothesis."""


class InconsistentFactsError(ValueError):
    """Two supplied or derived facts contradict each other."""

    def __init__(self, first: str, second: str, detail: str = ""):
        msg = f"inconsistent facts: {first} vs {second}"
        super().__init__(msg + (f" ({detail})" if detail else ""))
        self.first = first
        self.second = second


# rule id -> anchor: what the rule asserts, in one line
RULES: dict[str, str] = {
    # homotopy tables
    "tables.stem": "stable stems pi^s_k for k <= 7 are cyclic on the listed generator, pi^s_4 = pi^s_5 = 0",
    "tables.wp_order": "order of [iota_j, g_j] by the case split of the Whitehead product tables",
    "tables.euler": "chi(S^n) = 1 + (-1)^n",
    # suspension
    "ehp.stable": "q <= 0: E is bijective in the stable range (Freudenthal)",
    "ehp.inj_derived": "m <= 3n-5: E injective iff [iota_{n-1}, generator of stem q-1] = 0",
    "ehp.inj_trivial_stem": "m <= 3n-5: stem q-1 vanishes, so E is injective",
    "ehp.surj_derived": "m <= 3n-5: E onto iff the generator of stem q-2 has the order of its Whitehead product with iota_{n-1}",
    "ehp.surj_trivial_stem": "m <= 3n-5: stem q-2 vanishes, so E is onto",
    "ehp.exception": "m > 3n-5: value read from the transcribed exceptional dimensions",
    "ehp.kernel": "q <= 8, n even: ker E is 0 or Z2, generated by [iota_{n-1}, generator of stem q-1] when m <= 3n-5",
    "ehp.h0_general": "ker E != 0: h_0 vanishes on pi_{m-1}(S^{n-1}) away from the listed exceptions",
    "ehp.h0_q4": "q = 4, n = 4 mod 8, n >= 12: h_0 on pi_{m-1}(S^{n-1}) is nonzero",
    "ehp.h0_q8": "q = 8, n in {6, 10}: vanishing of h_0 on pi_{m-1}(S^{n-1}) is undecided",
    "ehp.boundary_odd": "n odd: a nowhere-zero vector field on S^n makes the boundary map vanish",
    "ehp.boundary_formula": "n even: boundary(E alpha) = 2 alpha + [iota,iota] h_0(alpha) - [[iota,iota],iota] h_1(alpha)",
    "ehp.boundary_h1_range": "m <= 3n-5: h_1(alpha) lands in a zero group",
    "ehp.boundary_h0_term": "h_0(alpha) not known to vanish: the term [iota_{n-1},iota_{n-1}] o h_0(alpha) obstructs",
    "ehp.boundary_h1_term": "m > 3n-5 and h_1(alpha) not known to vanish: the h_1 term obstructs",
    # Kervaire invariant and halving
    "ki.table": "order-2 Kervaire invariant one elements exist for n = 16, 32, 64; n = 128 undecided",
    "ki.browder": "KI vanishes on pi_{2n-2}(S^n) unless n is a power of 2 (Browder)",
    "ki.hhr": "KI vanishes for n > 128 (Hill-Hopkins-Ravenel)",
    "ki.e_iso": "n = 2, 4, 8: E is an isomorphism, no halving question arises",
    "ki.n128": "n = 128 is equivalent to the existence of a suspended class loose but not by small deformation",
    "halve.whitehead_square": "[iota_{n-1}, iota_{n-1}] halvable iff an order-2 Kervaire invariant one element exists",
    "halve.eta": "[iota_{n-1}, eta_{n-1}] is never halvable",
    "halve.eta2": "[iota_{n-1}, eta^2_{n-1}] is divisible by 4 for n = 2 mod 4, n >= 10",
    "halve.open": "halvability of this Whitehead product is not decided",
    # Wecken condition
    "wec.odd": "n odd: boundary of pi_m(S^n) is zero",
    "wec.stable": "q <= 0: ker E = 0",
    "wec.n2": "n = 2 <= m: E injective",
    "wec.low": "m <= n+5 and (m, n) != (11, 6): condition holds",
    "wec.kernel_trivial": "ker E = 0 forces the condition",
    "wec.q1": "q = 1: fails iff the Whitehead square can be halved, i.e. n = 16, 32, 64 (128 open)",
    "wec.q2": "q = 2: fails iff n = 2 mod 4, n >= 6",
    "wec.q3": "q = 3: fails iff n = 2 mod 4, n >= 10",
    "wec.q56": "q = 5, 6: ker E = 0",
    "wec.halving": "h_0 = 0 and ker E = Z2: a halvable generator makes the condition fail",
    "wec.halving_onto": "E onto as well: the condition fails precisely when the generator halves",
    "wec.q7_filter": "q = 7: failure requires n = 2, 4 mod 8, n >= 10, n != 2^i - 4 (i >= 4)",
    "wec.unsettled": "no rule settles this dimension pair",
    "wec.out_of_scope": "q > 8: outside the covered range",
    # selfcoincidence analysis
    "ana.n_odd": "n odd: boundary vanishes, every pair is loose by small deformation",
    "ana.n2": "n = 2 <= m-1: boundary lands in pi_{m-1}(S^1) = 0",
    "ana.small_group": "pi_{2n}(S^n) = Z2 for n = 2, 6: every map is loose by small deformation",
    "ana.q1_e": "q = 1: N# = 0 iff 2[f] = 0",
    "ana.q1_ki": "q = 1, n != 2, 4, 8: boundary agrees with KI on classes with 2[f] = 0",
    "ana.q1_small": "q = 1, n = 2, 4, 8: boundary vanishes iff 2[f] = 0",
    "ana.q2_e": "q = 2: N# = 0 iff the torsion part of [f] has order <= 2",
    "ana.q2_hopf": "q = 2, n = 2 mod 4, n >= 6: boundary vanishes iff N# = 0 and H(f) = 0 mod 4",
    "ana.q2_excluded": "q = 2, n = 4, 8: torsion criterion for N# not available",
    "ana.q2_inj": "q = 2, n = 0 mod 4: boundary vanishes iff N# = 0",
    "ana.q3_vi": "q = 3, n = 0 mod 4: N# = 0 iff 2[f] = [iota_n,iota_n] h_0(f), and [iota_n,iota_n]_* is injective",
    "ana.q3_e": "q = 3, n = 2 mod 4, n >= 10: N# = 0 iff 2[f] = 0",
    "ana.q3_desusp": "q = 3, n = 2 mod 4, n >= 10: boundary vanishes iff 2 E^{-1}[f] = 0",
    "ana.q6": "q = 6: all three numbers vanish iff 2[f] = 0",
    "ana.onto": "E onto: N# = 0 iff 2[f] = 0",
    "ana.vi": "N# = 0 iff 2[f] = [iota_n,iota_n] h_0(f)",
    "ana.wecken_link": "Wecken condition holds: boundary vanishes iff its suspension does",
    "ana.ki_zero": "KI is identically zero in this dimension",
    "ana.override": "value supplied directly by the caller",
    "ana.implication": "boundary zero implies suspended boundary zero",
    "ana.nielsen": "N# = 0 iff E(boundary) = 0",
    "ana.small_deformation": "loose by small deformation iff boundary = 0",
    "ana.loose_z2": "G nontrivial: loose iff loose by small deformation",
    "ana.loose_not_z2": "G not Z2: loose iff N# = 0",
    "ana.mc_mcc": "MC = MCC, both 0 or 1",
    "ana.seven": "G nontrivial: the seven conditions hold iff boundary != 0 and E(boundary) = 0",
    "ana.seven_trivial_group": "G trivial: the seven conditions require a nontrivial group",
    "ana.seven_not_z2": "G not Z2: the seven conditions cannot hold",
    "ana.unknown": "facts supplied do not decide this value",
    "pair.not_homotopic": "MCC != N# forces f1 ~ f2, so nonhomotopic pairs have MCC = N#",
    "pair.self": "homotopic pairs reduce to the selfcoincidence case",
}


@dataclass(frozen=True)
class Citation:
    rule_id: str
    anchor: str

    def __str__(self) -> str:
        return f"{self.rule_id}: {self.anchor}"


def cite(rule_id: str) -> Citation:
    return Citation(rule_id, RULES[rule_id])


class Truth(enum.Enum):
    YES = "yes"
    NO = "no"
    OPEN = "open"
    CONDITIONAL = "conditional"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """A logic value with the chain of rules that produced it.

    ``OPEN`` marks questions the mathematics leaves undecided; ``UNKNOWN``
    marks values the supplied facts do not determine. ``CONDITIONAL``
    carries exactly one named undecided premise in ``condition``.
    """

    value: Truth
    provenance: tuple[Citation, ...] = ()
    condition: str | None = None

    def __post_init__(self):
        if (self.value is Truth.CONDITIONAL) != (self.condition is not None):
            raise ValueError("condition is required exactly for CONDITIONAL verdicts")
        if self.value is not Truth.UNKNOWN and not self.provenance:
            raise ValueError(f"{self.value.name} verdict needs provenance")

    @classmethod
    def of(cls, value: Truth | bool | None, *rules: str, condition: str | None = None) -> Verdict:
        if value is None:
            value = Truth.UNKNOWN
        elif isinstance(value, bool):
            value = Truth.YES if value else Truth.NO
        return cls(value, tuple(cite(r) for r in rules), condition)

    def cite(self, *rules: str) -> Verdict:
        return Verdict(self.value, self.provenance + tuple(cite(r) for r in rules), self.condition)

    @property
    def determined(self) -> bool:
        return self.value in (Truth.YES, Truth.NO)

    def as_bool(self) -> bool | None:
        return {Truth.YES: True, Truth.NO: False}.get(self.value)

    def __str__(self) -> str:
        if self.value is Truth.CONDITIONAL:
            return f"conditional on {self.condition}"
        return self.value.value


@dataclass(frozen=True)
class ElemOrder:
    """Order of a group element: finite ``k >= 1``, infinite, or unknown."""

    kind: str
    k: int | None = field(default=None)

    def __post_init__(self):
        if self.kind == "finite":
            if not isinstance(self.k, int) or self.k < 1:
                raise ValueError("finite order must be a positive integer")
        elif self.kind in ("infinite", "unknown"):
            if self.k is not None:
                raise ValueError(f"{self.kind} order carries no value")
        else:
            raise ValueError(f"unknown order kind {self.kind!r}")

    @classmethod
    def finite(cls, k: int) -> ElemOrder:
        return cls("finite", k)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def divides(self, other: ElemOrder) -> bool:
        """Whether self | other, with every finite order dividing infinity."""
        if self.kind == "unknown" or other.kind == "unknown":
            raise ValueError("divisibility of an unknown order")
        if other.kind == "infinite":
            return True
        return self.is_finite and other.k % self.k == 0

    def __str__(self) -> str:
        return str(self.k) if self.is_finite else ("inf" if self.kind == "infinite" else "?")


INFINITE = ElemOrder("infinite")
UNKNOWN_ORDER = ElemOrder("unknown")


def order_from_fact(k: int | None) -> ElemOrder:
    return INFINITE if k is None else ElemOrder.finite(k)

