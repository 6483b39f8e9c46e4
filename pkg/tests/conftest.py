from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from capelli.combinatorics import partitions
from capelli.symgroup import Permutation

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def partition_strategy(max_weight: int, min_weight: int = 0, max_length: int | None = None):
    return st.integers(min_weight, max_weight).flatmap(
        lambda k: st.sampled_from(partitions(k, max_length=max_length) or [None])
    ).filter(lambda p: p is not None)


def permutation_strategy(k: int):
    return st.permutations(range(k)).map(Permutation)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
