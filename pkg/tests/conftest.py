import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache(tmp_path_factory):
    """Keep the suite away from any cache directory in the working tree."""
    old = os.environ.get("NILRAT_CACHE")
    os.environ["NILRAT_CACHE"] = str(tmp_path_factory.mktemp("nilrat-cache"))
    yield
    if old is None:
        os.environ.pop("NILRAT_CACHE", None)
    else:
        os.environ["NILRAT_CACHE"] = old


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
