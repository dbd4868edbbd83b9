"""End-to-end acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line per
criterion. Every comparison is exact; there are no tolerances anywhere.

Two criteria are expected to report failures, and are deliberately kept
faithful instead of being patched to pass:

* criterion 1: the reference table's f entry at n = 20 (264) disagrees with
  direct recomputation (261, confirmed by four independent methods); see
  reference_table.py. The other 79 values match.
* criterion 7: the asserted equinumerosity range includes the even-modulus
  boundary residue = modulus/2, where the equality is numerically false
  (first counterexample: modulus 4, residue 2, n = 2). It holds on residues
  strictly below modulus/2, which test_genfunc.py verifies separately.
"""

import subprocess
import sys
from pathlib import Path

from reference_table import REFERENCE_TABLE

from partition_bounds import (
    count_A,
    count_B,
    count_f_bruteforce,
    count_f_gf,
    count_fprime_bruteforce,
    count_fprime_gf,
    count_fprime_ranks,
    count_g,
    count_g_bruteforce,
    count_p,
    durfee_size,
    dyson_rank,
    enumerate_partitions,
    from_frobenius,
    from_raw,
    havel_hakimi_witness,
    is_graphical,
    leg_length_recurrence,
    successive_ranks,
    to_frobenius,
)

DATA = Path(__file__).parent / "data"


def _verdict(label: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {label}"
    if detail and not ok:
        line += f" :: {detail}"
    print(line)
    assert ok, line


def test_criterion_1_reference_table_reproduction():
    mismatches = []
    for n in sorted(REFERENCE_TABLE):
        expected = REFERENCE_TABLE[n]
        computed = (count_fprime_gf(n), count_g(n), count_f_gf(n), count_p(n))
        for name, got, ref in zip(("fprime", "g", "f", "p"), computed, expected):
            if got != ref:
                mismatches.append(f"n={n} {name}: computed {got}, reference {ref}")
    matched = 4 * len(REFERENCE_TABLE) - len(mismatches)
    _verdict(
        f"criterion 1: reference table reproduction, even n in 2..40 "
        f"({matched}/{4 * len(REFERENCE_TABLE)} values)",
        not mismatches,
        "; ".join(mismatches),
    )


def test_criterion_2_oracle_equivalence():
    bad = []
    for n in range(41):
        if count_f_gf(n) != count_f_bruteforce(n):
            bad.append(f"f at n={n}")
        if not count_fprime_gf(n) == count_fprime_ranks(n) == count_fprime_bruteforce(n):
            bad.append(f"fprime at n={n}")
        if count_g(n) != count_g_bruteforce(n):
            bad.append(f"g at n={n}")
    _verdict(
        "criterion 2: series engines equal brute-force oracles, 0 <= n <= 40",
        not bad,
        "; ".join(bad),
    )


def test_criterion_3_chain_and_inclusions():
    bad = []
    for n in range(2, 41, 2):
        fprime, g, f, p = count_fprime_gf(n), count_g(n), count_f_gf(n), count_p(n)
        if not fprime <= g <= f <= p:
            bad.append(f"chain broken at n={n}: {fprime}, {g}, {f}, {p}")
    for n in range(2, 31, 2):
        for q in enumerate_partitions(n):
            s = to_frobenius(q)
            ranks_negative = all(r <= -1 for r in successive_ranks(s))
            graphical = is_graphical(q)
            f_condition = s.columns + sum(s.top) <= sum(s.bottom)
            if ranks_negative and not graphical:
                bad.append(f"ranks<=-1 but not graphical: {q.parts}")
            if graphical and not f_condition:
                bad.append(f"graphical but f-condition fails: {q.parts}")
    _verdict(
        "criterion 3: f' <= g <= f <= p for even n <= 40, with set inclusions "
        "partition-by-partition for even n <= 30",
        not bad,
        "; ".join(bad[:5]),
    )


def test_criterion_4_dyson_rank_of_graphical_partitions():
    bad = []
    for n in range(2, 31, 2):
        for q in enumerate_partitions(n):
            if not is_graphical(q):
                continue
            rank = dyson_rank(q)
            first = successive_ranks(to_frobenius(q))[0]
            if rank > -1 or rank != first:
                bad.append(f"{q.parts}: dyson {rank}, first rank {first}")
    _verdict(
        "criterion 4: every graphical partition of even n <= 30 has "
        "dyson rank <= -1 equal to its first successive rank",
        not bad,
        "; ".join(bad[:5]),
    )


def test_criterion_5_bijection_and_leg_recursion():
    bad = []
    for n in range(15):
        for q in enumerate_partitions(n):
            s = to_frobenius(q)
            if from_frobenius(s) != q:
                bad.append(f"round trip failed for {q.parts}")
            legs = []
            for m in range(1, durfee_size(q) + 1):
                b = leg_length_recurrence(q, m, legs)
                if b != s.bottom[m - 1]:
                    bad.append(f"leg recursion differs for {q.parts} at m={m}")
                legs.append(b)
    _verdict(
        "criterion 5: Frobenius round trip and leg-recursion agreement, "
        "exhaustive for n <= 14",
        not bad,
        "; ".join(bad[:5]),
    )


def test_criterion_6_complement_identity():
    bad = [
        n
        for n in range(1, 101)
        if count_fprime_gf(n) != count_p(n) - count_p(n - 1)
    ]
    _verdict(
        "criterion 6: f'(n) = p(n) - p(n-1) for 1 <= n <= 100",
        not bad,
        f"failing n: {bad[:10]}",
    )


def test_criterion_7_rank_window_equals_residue_classes():
    bad = []
    for modulus in range(2, 9):
        for residue in range(2, modulus // 2 + 1):
            for n in range(26):
                a = count_A(modulus, residue, n)
                b = count_B(modulus, residue, n)
                if a != b:
                    bad.append(f"(M={modulus}, r={residue}, n={n}): A={a}, B={b}")
    _verdict(
        "criterion 7: residue-avoiding counts equal rank-window counts for "
        "2 <= M <= 8, 2 <= r <= M/2, n <= 25",
        not bad,
        f"{len(bad)} failing triples, all with r = M/2; first: {bad[0] if bad else ''}",
    )


def test_criterion_8_witness_soundness_and_completeness():
    bad = []
    for n in range(0, 25, 2):
        for q in enumerate_partitions(n):
            w = havel_hakimi_witness(q)
            if (w is not None) != is_graphical(q):
                bad.append(f"witness verdict differs for {q.parts}")
                continue
            if w is None:
                continue
            if w.degrees() != q.parts:
                bad.append(f"degree multiset differs for {q.parts}")
            if not all(1 <= u < v <= max(len(q.parts), 1) for u, v in w.edges):
                bad.append(f"edge outside vertex range for {q.parts}")
    _verdict(
        "criterion 8: Havel-Hakimi witness exists iff graphical, is simple, "
        "and realizes the exact degrees, for all partitions of even n <= 24",
        not bad,
        "; ".join(bad[:5]),
    )


def test_criterion_9_cli_golden_and_exit_codes():
    def run(*args):
        return subprocess.run(
            [sys.executable, "-m", "partition_bounds", *args], capture_output=True
        )

    problems = []
    res = run("bounds", "--max-n", "40", "--step", "2", "--format", "csv")
    golden = (DATA / "bounds_max40_step2.csv").read_bytes()
    if res.returncode != 0:
        problems.append(f"bounds exited {res.returncode}")
    if res.stdout != golden:
        problems.append("csv output differs from golden file")
    code = run("check", "4,2,2,2,2").returncode
    if code != 0:
        problems.append(f"check 4,2,2,2,2 exited {code}, want 0")
    code = run("check", "3,2,1").returncode
    if code != 1:
        problems.append(f"check 3,2,1 exited {code}, want 1")
    _verdict(
        "criterion 9: CLI csv output matches the golden file byte-for-byte "
        "and check exit codes are 0 / 1",
        not problems,
        "; ".join(problems),
    )
