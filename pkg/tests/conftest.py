import pytest

from ilmc.semantics import monotonicity_audit

# One log for the whole run; the acceptance module reports on it.
SESSION = {}


@pytest.fixture(scope="session", autouse=True)
def session_audit():
    with monotonicity_audit() as log:
        SESSION["log"] = log
        yield log


@pytest.fixture(autouse=True)
def no_monotonicity_violations():
    with monotonicity_audit() as log:
        yield log
    assert not log.violations, f"satisfying set not upward closed: {log.violations[0][0]}"


def pytest_collection_modifyitems(items):
    # the invariant report must come after every other evaluation
    last = [it for it in items if it.name == "test_criterion_9"]
    items[:] = [it for it in items if it.name != "test_criterion_9"] + last
