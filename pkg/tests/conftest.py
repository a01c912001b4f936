from pathlib import Path

import pytest
from hypothesis import settings

from genericity.parse import parse_bipoly

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"

# polynomial text, expected verdict, case
FIXTURES = [
    ("Y^2 - T", "Generic", "a"),
    ("Y^3 - T*Y^2 + (T - 3)*Y + 1", "Generic", "b"),
    ("Y^3 + T*Y + T", "Generic", "c"),
    ("Y^4 - T", "NotGeneric", None),
    ("Y^2 - (T^2 + 1)", "NotGeneric", None),
    ("Y^2 - (T^3 - T^2 - 7*T + 41/4)", "NotGeneric", None),
    ("Y^4 - T*Y - T", "NotGeneric", None),
]


@pytest.fixture(scope="session")
def fixture_polys():
    return [(parse_bipoly(s), verdict, case) for s, verdict, case in FIXTURES]


@pytest.fixture(scope="session")
def fixture_file():
    return DATA / "fixtures.txt"


# acceptance results, echoed in the terminal summary
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, desc = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {desc}")
