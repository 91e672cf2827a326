import math

import numpy as np
import pytest

from isingnet import NetworkSpec


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_specs(rng, N, count):
    """Mix of constrained SU11, unconstrained SU11 and SU2 specs."""
    specs = []
    for i in range(count):
        kind = i % 3
        if kind == 0:
            specs.append(NetworkSpec.ising(N, float(rng.uniform(0.2, 1.8))))
        elif kind == 1:
            specs.append(NetworkSpec.su11(N, float(rng.uniform(0.05, 1.3)), float(rng.uniform(0.05, 1.3))))
        else:
            specs.append(NetworkSpec.su2(N, float(rng.uniform(0, math.pi)), float(rng.uniform(0, math.pi))))
    return specs


def random_state(rng, dim):
    return rng.normal(size=dim) + 1j * rng.normal(size=dim)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].split("-")[1].rstrip(":"))):
            terminalreporter.write_line(line)
