from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from surfcolor.embedding import euler_genus, random_embedding  # noqa: E402
from surfcolor.fixtures import planar_k4, projective_k5, toroidal_grid, toroidal_k7  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def k4():
    return planar_k4()


@pytest.fixture
def k7():
    return toroidal_k7()


@pytest.fixture
def grid():
    return toroidal_grid()


@pytest.fixture
def k5():
    return projective_k5()


@pytest.fixture
def positive_genus_fixtures():
    return {"toroidal K7": toroidal_k7(), "toroidal C3xC3": toroidal_grid(), "projective K5": projective_k5()}


def random_positive_genus(rng: random.Random, count: int, max_n: int = 12, max_extra: int = 20, genera=None):
    """``count`` random connected signed embeddings of positive genus (optionally restricted genus)."""
    out = []
    while len(out) < count:
        n = rng.randint(4, max_n)
        G = random_embedding(n, rng.randint(2, max_extra), rng)
        g = euler_genus(G)
        if g > 0 and (genera is None or g in genera):
            out.append(G)
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
