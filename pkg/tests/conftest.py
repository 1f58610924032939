import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from schubert_nabla.schubert import build_schubert_table  # noqa: E402

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def tables():
    """Schubert tables for n = 1..6, built once."""
    return {n: build_schubert_table(n) for n in range(1, 7)}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in results.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
