"""Pytest configuration and fixtures."""

import random

import pytest

from fcy_workbench._config import WorkbenchConfig
from fcy_workbench._dynkin import DynkinQuiver, dynkin_quiver
from fcy_workbench._quiver import Quiver, kronecker_quiver
from fcy_workbench._reps import KroneckerFamily
from fcy_workbench._suites import SuiteRegistry, default_registry
from fcy_workbench._wpl import TubularLattice, tubular_lattice


@pytest.fixture
def rng() -> random.Random:
    """Seeded random source."""
    return random.Random(1234)


@pytest.fixture
def k2() -> Quiver:
    """The Kronecker quiver."""
    return kronecker_quiver(2)


@pytest.fixture
def kronecker(k2: Quiver) -> KroneckerFamily:
    """Named Kronecker modules."""
    return KroneckerFamily(k2)


@pytest.fixture
def a2() -> DynkinQuiver:
    """A_2 with its arrow 0 -> 1."""
    return dynkin_quiver("A", 2)


@pytest.fixture(scope="session", params=[(2, 2, 2, 2), (3, 3, 3), (2, 4, 4), (2, 3, 6)], ids=str)
def lattice(request) -> TubularLattice:
    """Each tubular lattice in turn."""
    return tubular_lattice(request.param)


@pytest.fixture(scope="session")
def lattice_2222() -> TubularLattice:
    return tubular_lattice((2, 2, 2, 2))


@pytest.fixture
def registry() -> SuiteRegistry:
    """The built-in suites."""
    return default_registry()


@pytest.fixture
def small_config() -> WorkbenchConfig:
    """A configuration small enough for quick end-to-end runs."""
    return WorkbenchConfig.model_validate(
        {
            "seed": 7,
            "samples": 20,
            "suites": {
                "dynkin": {"diagrams": ["A2", "D4"], "orientation_check": ["A3"]},
                "tube": {"ranks": [1, 2], "max_length": 3},
                "kronecker": {"pairs": 3, "max_preprojective": 2},
                "wpl": {"weights": [[2, 2, 2, 2]], "max_sum": 9},
                "twist": {"max_r": 3, "l_range": 2},
                "torsion": {"pairs": 20},
            },
        }
    )
