"""The ten acceptance criteria, each run at its stated tolerance.

Each test prints one PASS/FAIL line; the lines are also collected into an
"acceptance criteria" section at the end of the pytest run.
"""
import pytest

from equidist.checks import CHECKS

LIMITS = {"domain": 3.0, "counterexample": 2.0, "oracle": 30.0}


@pytest.mark.parametrize("name", list(CHECKS))
def test_criterion(name, acceptance_line):
    res = CHECKS[name]()
    within = res.elapsed < LIMITS.get(name, float("inf"))
    if res.passed and not within:
        line = f"FAIL {name}: over the {LIMITS[name]} s limit ({res.elapsed:.2f} s)"
    else:
        line = res.line()
    print(line)
    acceptance_line(line)
    assert res.passed, res.detail
    assert within
