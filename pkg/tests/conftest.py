"""Shared fixtures for the deltamat test suite."""

from __future__ import annotations

from pathlib import Path

import pytest

from deltamat import GroundSet, SetSystem, SymmetricBitMatrix

DATA = Path(__file__).parent / "data"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def system(labels: str | list[str], members: list[str | list[str]]) -> SetSystem:
    """Build a set system from one-character labels written as strings."""
    ground = GroundSet(list(labels))
    return SetSystem.from_labels(ground, [list(m) for m in members])


# Running example: a binary delta-matroid on {1, 2, 3, 4} whose canonical
# form is D_{1,1,0,1}.
EXAMPLE_MEMBERS = ["1", "2", "123", "124", "134", "234"]

# Three-element subsets of {1..6} using at most one of {1, 2} and at most
# one of {5, 6}: the spanning trees of a four-cycle with two opposite
# edges doubled.
F1_MEMBERS = [
    "134", "135", "136", "145", "146",
    "234", "235", "236", "245", "246",
    "345", "346",
]

F2_EXTRAS = ["12345", "12346"]

# Adding the single set {1,2,3,4} on top of F2_EXTRAS breaks symmetric
# exchange: {1,2,3,4} against {1,3,5} with x = 4 has no completing swap.
F3_EXTRAS = F2_EXTRAS + ["1234"]

# The six further four-element sets below give the smallest binary
# delta-matroid with size window [3, 5] that contains all of F3_EXTRAS.
F3_COMPLETION = ["1235", "1245", "2345", "1236", "1246", "2346"]


@pytest.fixture
def example() -> SetSystem:
    return system("1234", EXAMPLE_MEMBERS)


@pytest.fixture
def u24() -> SetSystem:
    return system("1234", ["12", "13", "14", "23", "24", "34"])


@pytest.fixture
def f1() -> SetSystem:
    return system("123456", F1_MEMBERS)


@pytest.fixture
def f2() -> SetSystem:
    return system("123456", F1_MEMBERS + F2_EXTRAS)


@pytest.fixture
def f3() -> SetSystem:
    return system("123456", F1_MEMBERS + F3_EXTRAS)


@pytest.fixture
def f3_completed() -> SetSystem:
    return system("123456", F1_MEMBERS + F3_EXTRAS + F3_COMPLETION)


@pytest.fixture
def example_matrix() -> SymmetricBitMatrix:
    return SymmetricBitMatrix.from_bits(
        [
            [0, 1, 0, 0],
            [1, 0, 1, 1],
            [0, 1, 0, 1],
            [0, 1, 1, 0],
        ]
    )
