"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` or as a script.
"""

import csv
import io
import random
import subprocess
import sys
import time


from wecken import oracle
from wecken.analyzer import TRIVIAL, Z2, GroupContext, MapFacts, analyze_self
from wecken.classifier import wecken
from wecken.ehp import DimPair, e_injective, e_surjective
from wecken.knowledge import load_kb, load_table
from wecken.verdict import InconsistentFactsError, Truth

RESULTS: dict[str, tuple[bool, str]] = {}


def report(capsys, key: str, ok: bool, detail: str) -> None:
    RESULTS[key] = (ok, detail)
    line = f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


# 1 ------------------------------------------------------------------------

def test_criterion_1_table_reproduction(capsys):
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "wecken", "table", "--q-min", "1", "--q-max", "8",
         "--n-min", "2", "--n-max", "256", "--format", "csv"],
        capture_output=True, text=True,
    )
    elapsed = time.perf_counter() - t0
    table = load_table()
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    bad = [
        (r["q"], r["n"], col)
        for r in rows
        for col, key in (("INJ", "injective"), ("SURJ", "surjective"), ("WEC", "wecken"))
        if r[key] != table.lookup(int(r["q"]), int(r["n"]), col)
    ]
    ok = proc.returncode == 0 and len(rows) == 8 * 128 and not bad and elapsed < 1.0
    report(capsys, "1 table reproduction", ok,
           f"{len(rows)} rows, {len(bad)} mismatching cells, {elapsed:.3f}s (limit 1s)"
           + (f", first mismatch {bad[0]}" if bad else ""))


# 2 ------------------------------------------------------------------------

def test_criterion_2_kervaire_row(capsys):
    kb = load_kb()
    got = {n: wecken(DimPair(2 * n - 2, n), kb).value for n in range(2, 4097, 2)}
    fails = sorted(n for n, v in got.items() if v is Truth.NO)
    opens = sorted(n for n, v in got.items() if v is Truth.OPEN)
    other = sorted(n for n, v in got.items() if v not in (Truth.NO, Truth.OPEN, Truth.YES))
    ok = fails == [16, 32, 64] and opens == [128] and not other
    report(capsys, "2 Kervaire row", ok,
           f"fails at {fails}, open at {opens}, holds at the other {len(got) - len(fails) - len(opens)} even n <= 4096")


# 3 ------------------------------------------------------------------------

def test_criterion_3_hopf_suite(capsys):
    bad = []
    for n in range(6, 63, 4):
        d = DimPair(2 * n - 1, n)
        r = analyze_self(d, Z2, MapFacts(torsion_le_2=True, hopf_half_even=False))
        if (r.nielsen, r.mcc, r.seven_conditions.value) != (0, 1, Truth.YES):
            bad.append((n, "hopf_half_even=false", r.nielsen, r.mcc))
        r = analyze_self(d, Z2, MapFacts(torsion_le_2=True, hopf_half_even=True))
        if r.mcc != 0:
            bad.append((n, "hopf_half_even=true", r.mcc))
    checked, linked_only = 0, set()
    for n in range(8, 63, 4):
        d = DimPair(2 * n - 1, n)
        for t in (True, False):
            for h in (True, False):
                r = analyze_self(d, Z2, MapFacts(torsion_le_2=t, hopf_half_even=h))
                checked += 1
                if r.mcc is None and r.nielsen is None and r.wecken.value is Truth.YES:
                    # the torsion formula for N# excludes n = 8; equality still follows from WeC
                    linked_only.add(n)
                elif r.mcc is None or r.mcc != r.nielsen:
                    bad.append((n, t, h, r.nielsen, r.mcc))
    report(capsys, "3 q=2 suite", not bad,
           f"15 values n = 2 (4) x 2 fact sets, {checked} n = 0 (4) combinations, {len(bad)} violations"
           + (f"; at n in {sorted(linked_only)} values stay unknown, equal via WeC holds" if linked_only else "")
           + (f", first {bad[0]}" if bad else ""))


# 4 ------------------------------------------------------------------------

def test_criterion_4_desuspension_suite(capsys):
    bad = []
    ns = list(range(10, 63, 4))
    for n in ns:
        d = DimPair(2 * n, n)
        r = analyze_self(d, Z2, MapFacts(double_zero=True, desusp_double_zero=False))
        if r.mcc is None or r.nielsen is None or r.mcc == r.nielsen:
            bad.append((n, "true,false", r.nielsen, r.mcc))
        r = analyze_self(d, Z2, MapFacts(double_zero=True, desusp_double_zero=True))
        if (r.nielsen, r.mcc) != (0, 0):
            bad.append((n, "true,true", r.nielsen, r.mcc))
        for dd in (None, True, False):
            r = analyze_self(d, Z2, MapFacts(double_zero=False, desusp_double_zero=dd))
            if (r.nielsen, r.mcc) != (1, 1):
                bad.append((n, f"false,{dd}", r.nielsen, r.mcc))
    report(capsys, "4 q=3 suite", not bad,
           f"n in {ns[0]}..{ns[-1]} step 4, {len(bad)} violations" + (f", first {bad[0]}" if bad else ""))


# 5 ------------------------------------------------------------------------

_FACT_NAMES = ("double_zero", "kervaire_one", "torsion_le_2", "hopf_half_even",
               "desusp_double_zero", "h0_of_class_zero", "condition_vi")
_GROUPS = (TRIVIAL, Z2, GroupContext("other"), GroupContext("other", 4))


def _random_query(rng: random.Random):
    n = rng.randint(1, 300)
    if rng.random() < 0.5:
        # concentrate on the interesting band q in -2..10
        m = 2 * n - 3 + rng.randint(-2, 10)
        if not 1 <= m <= 600:
            m = rng.randint(1, 600)
    else:
        m = rng.randint(1, 600)
    facts = {k: rng.choice((None, None, True, False)) for k in _FACT_NAMES}
    return DimPair(m, n), rng.choice(_GROUPS), facts


def _violations(r, g) -> list[str]:
    out = []
    if r.mc != r.mcc:
        out.append("mc != mcc")
    if r.nielsen not in (0, 1, None) or r.mcc not in (0, 1, None):
        out.append("value outside {0,1}")
    if r.loose_by_small_deformation.value is Truth.YES and r.loose.value is not Truth.YES:
        out.append("small deformation without loose")
    if r.loose.value is Truth.YES and r.nielsen not in (0, None):
        out.append("loose with nielsen 1")
    if r.wecken.value is Truth.YES and None not in (r.nielsen, r.mcc) and r.nielsen != r.mcc:
        out.append("wecken holds but mcc != nielsen")
    return out


def _monotone(before, after) -> bool:
    for k in ("nielsen", "mcc"):
        if getattr(before, k) is not None and getattr(after, k) != getattr(before, k):
            return False
    for k in ("loose", "loose_by_small_deformation", "seven_conditions"):
        if getattr(before, k).determined and getattr(after, k).value is not getattr(before, k).value:
            return False
    return True


def test_criterion_5_ladder_property(capsys):
    kb = load_kb()
    rng = random.Random(20261016)
    queries = 100_000
    violations, inconsistent, mono_checked = [], 0, 0
    t0 = time.perf_counter()
    for _ in range(queries):
        d, g, facts = _random_query(rng)
        try:
            r = analyze_self(d, g, MapFacts(**facts), kb)
        except InconsistentFactsError:
            inconsistent += 1
            continue
        for v in _violations(r, g):
            violations.append((d, g, facts, v))
        unset = [k for k, v in facts.items() if v is None]
        if unset:
            k = rng.choice(unset)
            try:
                r2 = analyze_self(d, g, MapFacts(**{**facts, k: rng.random() < 0.5}), kb)
            except InconsistentFactsError:
                continue
            mono_checked += 1
            if not _monotone(r, r2):
                violations.append((d, g, facts, f"adding {k} changed a determined field"))
    elapsed = time.perf_counter() - t0
    ok = not violations and elapsed < 30.0
    report(capsys, "5 ladder property", ok,
           f"{queries} queries ({inconsistent} rejected as inconsistent), {mono_checked} monotonicity pairs, "
           f"{len(violations)} violations, {elapsed:.1f}s (limit 30s)"
           + (f", first {violations[0]}" if violations else ""))


# 6 ------------------------------------------------------------------------

def test_criterion_6_oracle_equivalence(capsys):
    kb = load_kb()
    mismatches, cells = [], 0
    for q in range(-2, 9):
        start = max(2, q + 2)
        for n in range(start + start % 2, 1025, 2):
            if 2 * n - 3 + q < 1:
                continue
            d = DimPair.from_q(q, n)
            cells += 1
            inj, surj = e_injective(d, kb).as_bool(), e_surjective(d, kb).as_bool()
            if inj != oracle.brute_injective(q, n):
                mismatches.append((q, n, "injective"))
            if surj != oracle.brute_surjective(q, n, kb):
                mismatches.append((q, n, "surjective"))
    report(capsys, "6 oracle equivalence", not mismatches,
           f"{cells} cells with n >= q+2, {len(mismatches)} mismatches" + (f", first {mismatches[0]}" if mismatches else ""))


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(None)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
