"""The acceptance gate: one test per criterion, each exact (zero tolerance).

Run with ``pytest tests/test_acceptance.py -v`` for one line per criterion;
the same checks back the ``bisetkit accept`` subcommand.
"""

import pytest

from bisetkit import acceptance


def _run(number):
    entry = next(e for e in acceptance.CRITERIA if e[0] == number)
    report = entry[2]()
    status = "PASS" if report["passed"] else "FAIL"
    print(f"{status} criterion {number} ({entry[1]})")
    return report


def test_criterion_01_biset_oracle_equivalence():
    report = _run(1)
    assert report["passed"], report
    assert report["pairs"] > 10000


def test_criterion_02_bouc_roundtrip():
    report = _run(2)
    assert report["passed"], report
    assert report["checked"] > 5000


def test_criterion_03_rb_quotient_is_out():
    report = _run(3)
    assert report["passed"], report
    dims = {row["group"]: row["quotient_dim"] for row in report["rows"]}
    assert dims == {"C1": 1, "C2": 1, "C3": 2, "C4": 2, "V4": 6,
                    "C5": 4, "S3": 1}


def test_criterion_04_ell_kernel():
    report = _run(4)
    assert report["passed"], report
    by_m = {row["m"]: row for row in report["rows"]}
    assert by_m[4]["xn_ideal_dim"] == 1
    assert by_m[8]["quotient_dim"] == 2
    assert by_m[6]["quotient_dim"] == 0


def test_criterion_05_seed_counts():
    report = _run(5)
    assert report["passed"], report
    got = {row["m"]: row["seeds"] for row in report["rows"]}
    assert got == acceptance.EXPECTED_SEED_COUNTS


def test_criterion_06_crc_product_span():
    report = _run(6)
    assert report["passed"], report
    assert report["pairs"] >= 100


def test_criterion_07_coefficient_lemma():
    report = _run(7)
    assert report["passed"], report
    # 6 cyclic subgroups on each side, 2 automorphisms of C4
    assert report["checked"] == 72
    assert report["failures"] == []


def test_criterion_08_dress_oracle_equivalence():
    report = _run(8)
    assert report["passed"], report
    assert report["checked"] > 2000


def test_criterion_09_shifted_quotient_nonzero():
    report = _run(9)
    assert report["passed"], report
    assert all(not row["decomposable"] for row in report["rows"])


def test_criterion_10_no_bridge():
    report = _run(10)
    assert report["passed"], report


def test_criterion_11_counterexample():
    report = _run(11)
    assert report["passed"], report
    tr = report["transcript"]
    assert tr["T"]["order"] == 16
    assert tr["tau"]["kernel_order"] == 2
    assert len(tr["order4_candidates"]) == 4
    assert tr["admissible_kernels_bound7"] == []
    assert tr["verdict"] == "NOT DECOMPOSABLE"
