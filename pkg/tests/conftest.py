from math import gcd

import pytest

from lagconcord.dga_engine import build_dga
from lagconcord.diagram_builder import build_diagram


def coprime_pairs(qmax: int):
    return [(p, q) for q in range(2, qmax + 1) for p in range(1, q) if gcd(p, q) == 1]


@pytest.fixture(scope="session")
def dga_cache():
    cache = {}

    def get(p, q):
        if (p, q) not in cache:
            cache[(p, q)] = build_dga(build_diagram(p, q))
        return cache[(p, q)]

    return get


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line for an acceptance criterion."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"criterion {label}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
