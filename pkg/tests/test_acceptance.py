"""Acceptance suite: one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.

Two cells of the published reference table fail independent recomputation
and are documented here rather than matched: the actual count at p=907
(published 13674, recomputed 13764 by two unrelated sieves; a digit
transposition) and the corrected estimate at p=401 (published 3683, yet the
published row's own r x eq7 is 0.99050 x 3618 = 3583.6; recomputed 3583).
Strict xfail tests keep both defects visible.
"""

import time
from fractions import Fraction

import pytest

from twinsieve import (
    HALF_E_GAMMA,
    TABLE4_PRIMES,
    build_table4,
    build_wheel,
    count_actual_twins,
    estimate_eq7,
    exact_deletion_ledger,
    initial_wheel,
    sieve_primes,
    twin_product,
)
from twinsieve.cli import main as cli_main
from twinsieve.estimates import deleted_estimate_eq5_exact, estimate_eq7_exact
from twinsieve.report import format_r, round_half_away

from conftest import brute_twin_members, naive_primes

# reference table: p -> (actual, eq7 rounded, r at 5 decimals, eq15 rounded)
REFERENCE_TABLE = {
    101: (404, 394, "1.03975", 410),
    199: (1150, 1143, "1.01694", 1162),
    307: (2288, 2332, "0.99588", 2323),
    401: (3578, 3618, "0.99050", 3683),
    503: (5170, 5263, "0.98667", 5193),
    601: (6974, 7103, "0.98036", 6964),
    701: (8946, 9186, "0.97882", 8992),
    797: (11128, 11426, "0.97493", 11140),
    907: (13674, 14223, "0.97287", 13837),
    1009: (16556, 17053, "0.97038", 16548),
    1999: (53556, 55038, "0.96144", 52916),
    3001: (107610, 111342, "0.95734", 106592),
    4001: (176914, 184081, "0.95390", 175595),
    5003: (261086, 272412, "0.95202", 259343),
    6007: (358978, 375972, "0.95005", 357192),
    7001: (469528, 492326, "0.94945", 467437),
    8009: (594636, 625062, "0.94773", 592388),
}
ACTUAL_907_RECOMPUTED = 13764
EQ15_401_RECOMPUTED = 3583


def _criterion(name, ok, detail=""):
    print(f"\nACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"{name}: {detail}"


def test_reference_table_reproduction():
    started = time.monotonic()
    table = sieve_primes(8009 ** 2 + 2)
    report = build_table4(TABLE4_PRIMES, table)
    elapsed = time.monotonic() - started

    actual_ok, eq7_ok, r_strings, r_close = [], [], 0, []
    eq15_matched, eq15_fallback = 0, []
    eq15_401_ok = True
    for row in report.rows:
        ref_actual, ref_eq7, ref_r, ref_eq15 = REFERENCE_TABLE[row.p]
        expected_actual = ACTUAL_907_RECOMPUTED if row.p == 907 else ref_actual
        actual_ok.append(row.actual == expected_actual)
        eq7_ok.append(round_half_away(row.eq7) == ref_eq7)
        r_strings += format_r(row.r) == ref_r
        r_close.append(abs(row.r - float(ref_r)) < 1e-5)
        if row.p == 401:  # published cell contradicts its own row; hold to recomputation
            eq15_401_ok = round_half_away(row.eq15) == EQ15_401_RECOMPUTED
        elif round_half_away(row.eq15) == ref_eq15:
            eq15_matched += 1
        else:
            eq15_fallback.append((row.p, round_half_away(row.eq15) - ref_eq15))

    ok = (all(actual_ok) and all(eq7_ok) and all(r_close) and r_strings >= 16
          and eq15_401_ok and all(abs(d) <= 1 for _, d in eq15_fallback)
          and eq15_matched + len(eq15_fallback) == 16
          and elapsed < 300.0)
    _criterion(
        "reference table reproduction", ok,
        f"actual: 16/16 published rows + the 907 recomputation; "
        f"eq7: {sum(eq7_ok)}/17 exact; "
        f"r: {r_strings}/17 exact at 5dp, 17/17 within 1e-5 "
        f"(p=1999 computes 0.96143(496), published 0.96144); "
        f"eq15: {eq15_matched}/16 exact, +-1 fallback at {eq15_fallback}, "
        f"p=401 held to recomputation; runtime {elapsed:.1f}s")


@pytest.mark.xfail(strict=True, reason="published actual at p=907 is 13674; two "
                   "independent sieves both count 13764 (digit transposition)")
def test_published_actual_907(full_table):
    assert count_actual_twins(907, full_table) == REFERENCE_TABLE[907][0]


@pytest.mark.xfail(strict=True, reason="published eq15 at p=401 is 3683, but the "
                   "published row's own r x eq7 is 0.99050 x 3618 = 3583.6; "
                   "recomputation gives 3583")
def test_published_eq15_401(full_table):
    report = build_table4((401,), full_table)
    assert round_half_away(report.rows[0].eq15) == REFERENCE_TABLE[401][3]


def test_wheel_members_equal_brute_force_twin_sets():
    bad = []
    for level in (5, 7, 11, 13, 17, 19):
        members = list(build_wheel(level).members_below(level * level - 2))
        if members != brute_twin_members(level, level * level - 2):
            bad.append(level)
    _criterion("wheel members below level^2 - 2 are exactly the twin primes",
               not bad, f"levels 5..19, exact set equality{bad or ''}")


def test_small_wheel_table_regression():
    w5 = initial_wheel()
    w7 = build_wheel(7)
    w11 = build_wheel(11)
    step7 = w11.history[-1]
    ok = (list(w5.display_residues()) == [5, 7, 11, 13, 17, 19, 23, 25, 29, 31]
          and list(w7.display_residues()) == [11, 13, 17, 19, 29, 31]
          and list(w11.display_residues()) == [
              11, 13, 17, 19, 29, 31, 41, 43, 59, 61, 71, 73, 101, 103, 107, 109,
              137, 139, 149, 151, 167, 169, 179, 181, 191, 193, 197, 199, 209, 211]
          and list(step7.multiples) == [49, 77, 91, 119, 133, 161]
          and list(step7.twins) == [47, 79, 89, 121, 131, 163])
    _criterion("small wheel regression", ok,
               "initial wheel, two advances, and the twelve step-7 deletions")


def test_partition_identity(full_table):
    bad = []
    for p in naive_primes(1009):
        if p < 5:
            continue
        ledger = exact_deletion_ledger(p, full_table)
        pi_p2 = full_table.count_primes_up_to(p * p)
        if ledger.total_deleted + ledger.survivors != pi_p2 - 2:
            bad.append(p)
    _criterion("exact partition identity", not bad,
               f"pi(p^2) - 2 == deletions + survivors for all primes 5..1009{bad or ''}")


def test_telescoping_identity(full_table):
    sieving = [p for p in naive_primes(1000) if p >= 5]
    bad = []
    for p in sieving:
        pi_p2 = full_table.count_primes_up_to(p * p)
        total = sum(deleted_estimate_eq5_exact(p, p_k, pi_p2)
                    for p_k in sieving if p_k <= p)
        if total + estimate_eq7_exact(p, pi_p2) != pi_p2:
            bad.append(p)
    _criterion("telescoping identity in exact rationals", not bad,
               f"sum of step estimates + survivor estimate == pi(p^2), p <= 1000{bad or ''}")


def test_arithmetic_progression_share_sanity(full_table):
    p = 1009
    ledger = exact_deletion_ledger(p, full_table)
    exact_n5 = dict(ledger.steps)[5]
    predicted = full_table.count_primes_up_to(p * p) / 4 + 1
    rel_err = abs(exact_n5 - predicted) / exact_n5
    _criterion("first-step share sanity", rel_err < 0.03,
               f"exact {exact_n5} vs pi(p^2)/4 + 1 = {predicted:.1f}: "
               f"relative error {rel_err:.5%} (tolerance 3%)")


def test_convergence_diagnostics(full_table):
    report = build_table4(TABLE4_PRIMES, full_table)
    rs = [row.r for row in report.rows]
    decreasing = all(a > b for a, b in zip(rs, rs[1:]))
    above_limit = all(r > HALF_E_GAMMA for r in rs)
    product = twin_product(10 ** 6)
    in_bracket = 0.6601 <= product <= 0.6602
    _criterion("convergence diagnostics", decreasing and above_limit and in_bracket,
               f"r decreases {rs[0]:.5f} -> {rs[-1]:.5f} toward {HALF_E_GAMMA:.4f}; "
               f"truncated twin product {product:.7f} in [0.6601, 0.6602]")


def test_export_determinism(tmp_path):
    dirs = {name: tmp_path / name for name in ("t1", "t2", "f1", "f2")}
    assert cli_main(["table", "--out-dir", str(dirs["t1"])]) == 0
    assert cli_main(["table", "--out-dir", str(dirs["t2"])]) == 0
    assert cli_main(["figure", "--dat-only", "--out-dir", str(dirs["f1"])]) == 0
    assert cli_main(["figure", "--dat-only", "--out-dir", str(dirs["f2"])]) == 0
    same = ((dirs["t1"] / "table4.csv").read_bytes() == (dirs["t2"] / "table4.csv").read_bytes()
            and (dirs["f1"] / "eq7.dat").read_bytes() == (dirs["f2"] / "eq7.dat").read_bytes()
            and (dirs["f1"] / "eq15.dat").read_bytes() == (dirs["f2"] / "eq15.dat").read_bytes())
    _criterion("export determinism", same,
               "byte-identical table4.csv, eq7.dat, eq15.dat across fresh runs")
