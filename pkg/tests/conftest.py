import itertools
import sys

import pytest

from womcodes.f2linalg import BitMatrix


def row_space(M: BitMatrix) -> set[int]:
    """Every GF(2) combination of the rows, by enumeration."""
    out = set()
    for sel in itertools.product((0, 1), repeat=M.nrows):
        v = 0
        for bit, r in zip(sel, M.rows):
            if bit:
                v ^= r
        out.add(v)
    return out


def brute_rank(M: BitMatrix) -> int:
    return len(row_space(M)).bit_length() - 1


@pytest.fixture
def rng():
    import random
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
