from __future__ import annotations

import time

import pytest

from ncpalgebra.errors import UnknownSuite
from ncpalgebra.verify import SUITES, Check, VerificationReport, forall, reference_rows, run_suite, table_values
from ncpalgebra.partition import parse_partition


def test_report_exit_status():
    good = VerificationReport("x", [Check("a", "s", True)])
    bad = VerificationReport("x", [Check("a", "s", True), Check("b", "s", False, "1|2: 1 != 2")])
    assert good.exit_status == 0 and bad.exit_status == 1
    assert bad.as_dict()["failed"] == 1
    assert "FAIL  b" in bad.render() and "witness: 1|2: 1 != 2" in bad.render()


def test_forall_reports_first_witness():
    check = forall("even", "0..9", range(10), lambda n: None if n < 3 else f"{n} too big")
    assert not check.passed and check.witness == "3: 3 too big"
    assert forall("ok", "none", [], lambda n: "never").passed


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass(suite):
    report = run_suite(suite, 4)
    failed = [c for c in report.checks if not c.passed]
    assert not failed, [c.as_dict() for c in failed]


def test_all_is_fast_and_deterministic():
    start = time.perf_counter()
    first = run_suite("all", 3)
    assert time.perf_counter() - start < 10
    assert first.ok
    assert first.as_dict() == run_suite("all", 3).as_dict()


def test_unknown_suite():
    with pytest.raises(UnknownSuite) as info:
        run_suite("nope")
    assert info.value.exit_code == 2


def test_tables_suite_flags_corrected_cells():
    notes = [c for c in run_suite("tables").checks if c.note]
    assert len(notes) == 9
    assert all(c.passed and c.note.startswith("erratum") for c in notes)


def test_corrected_cells_differ_from_reference():
    for row in reference_rows():
        computed = table_values(parse_partition(row["partition"]))
        for col, text in row.get("corrected", {}).items():
            assert str(computed[col]) == text
            assert text != row["reference"][col]
