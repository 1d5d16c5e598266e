from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from ncpalgebra.algebra import Monomial
from ncpalgebra.partition import enumerate_ncp

SEED = 1729

settings.register_profile(
    "repo", max_examples=60, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def partitions(min_legs: int = 1, max_legs: int = 5):
    """Uniform choice among all partitions with a leg count in range."""
    pool = [p for n in range(min_legs, max_legs + 1) for p in enumerate_ncp(n)]
    return st.sampled_from(pool)


def monomials(max_factors: int = 3, max_legs: int = 4):
    return st.lists(partitions(1, max_legs), min_size=0, max_size=max_factors).map(Monomial)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


# one summary line per acceptance criterion
_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    props = dict(report.user_properties)
    outcome = "PASS" if report.passed else "FAIL"
    _ACCEPTANCE[name] = props.get("criterion", f"{outcome}  {name}")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[name])
