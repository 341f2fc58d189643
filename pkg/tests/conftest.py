from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion.

    Usage: ``with criterion(3, "description"): <assertions>``.
    """
    results = request.config.stash.setdefault(ACCEPTANCE, {})

    class _Recorder:
        def __init__(self, number: int, text: str):
            self.key = (number, text)

        def __enter__(self):
            results[self.key] = False
            return self

        def __exit__(self, exc_type, exc, tb):
            results[self.key] = exc_type is None
            return False

    return _Recorder


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), ok in sorted(results.items()):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}")
