"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the summary lines.
"""

import time

import pytest

from u1kepler.suites import TOLERANCES, run_suite

# (criterion number, suites, runtime budget in seconds)
CRITERIA = [
    (1, ["spectrum"], 0.001),
    (2, ["dimension-equality"], 5.0),
    (3, ["generating-function"], 2.0),
    (4, ["ktype-dimensions"], 2.0),
    (5, ["casimir"], 1.0),
    (6, ["radial"], 30.0),
    (7, ["orthonormality"], 30.0),
    (8, ["oscillator"], 60.0),
    (9, ["micz"], 30.0),
    (10, ["geometry"], 5.0),
    (11, ["hydrogen"], 0.001),
]


def test_tolerances_are_pinned():
    assert TOLERANCES == {"radial": 1e-7, "gram": 1e-8, "oscillator": 1e-7, "micz": 1e-6, "geometry": 1e-12}


@pytest.mark.parametrize("number, suites, budget", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, suites, budget):
    start = time.perf_counter()
    reports = [run_suite(name, dict(TOLERANCES)) for name in suites]
    elapsed = time.perf_counter() - start
    checks = sum(len(r.rows) for r in reports)
    failures = [f for r in reports for f in r.failures]
    ok = not failures and elapsed < budget
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:2d} {'+'.join(suites)}: "
          f"{checks} checks, {len(failures)} failures, {elapsed:.3f}s (budget {budget}s)")
    assert not failures, failures[:5]
    assert elapsed < budget
