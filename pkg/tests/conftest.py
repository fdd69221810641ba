import itertools

import pytest

from aslamcheck.matching import BipartiteGraph


def brute_permanent(bg: BipartiteGraph) -> int:
    """Sum over all n! permutations; the slowest, most obvious count."""
    n = bg.n
    return sum(
        all(bg.present[i][p[i]] for i in range(n)) for p in itertools.permutations(range(n))
    )


@pytest.fixture
def bg_prime():
    from aslamcheck.harness import build_bg_prime

    return build_bg_prime()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
