import hypothesis
import pytest

from upsilon_lab.exactmath import LaurentPoly

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

# filled in by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, desc = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key:>2}: {desc}")


@pytest.fixture
def trefoil():
    return LaurentPoly(0, (1, -1, 1))


@pytest.fixture
def k1_delta():
    # t^18 - t^17 + t^14 - t^13 + t^12 - t^11 + t^9 - t^7 + t^6 - t^5 + t^4 - t + 1
    return LaurentPoly.from_dict(
        {18: 1, 17: -1, 14: 1, 13: -1, 12: 1, 11: -1, 9: 1, 7: -1, 6: 1, 5: -1, 4: 1, 1: -1, 0: 1}
    )
