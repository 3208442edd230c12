"""Shared fixtures for the pairrank test suite."""

import pathlib

import numpy as np
import pytest

from pairrank import ComparisonMatrix, validate_matrix

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent

# The 5x5 demonstration matrix used throughout the docs.  Its published
# priority table is the main external reference point for the suite.
SAATY_VARGAS_GRID = [
    [1.0, 1.0 / 6.0, 1.0 / 3.0, 1.0 / 8.0, 5.0],
    [6.0, 1.0, 2.0, 1.0, 8.0],
    [3.0, 1.0 / 2.0, 1.0, 1.0 / 2.0, 5.0],
    [8.0, 1.0, 2.0, 1.0, 5.0],
    [1.0 / 5.0, 1.0 / 8.0, 1.0 / 5.0, 1.0 / 5.0, 1.0],
]


@pytest.fixture
def saaty_vargas() -> ComparisonMatrix:
    return validate_matrix(SAATY_VARGAS_GRID)


@pytest.fixture
def saaty_vargas_path() -> pathlib.Path:
    return REPO_ROOT / "fixtures" / "saaty_vargas.csv"


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240911)


def random_reciprocal(rng: np.random.Generator, n: int, low: float = 1.0 / 9.0, high: float = 9.0) -> ComparisonMatrix:
    """Random reciprocal matrix with upper-triangle entries log-uniform in [low, high]."""
    grid = np.ones((n, n))
    logs = rng.uniform(np.log(low), np.log(high), size=(n, n))
    for i in range(n):
        for k in range(i + 1, n):
            grid[i, k] = np.exp(logs[i, k])
            grid[k, i] = 1.0 / grid[i, k]
    return validate_matrix(grid)


def random_positive_grid(rng: np.random.Generator, n: int, low: float = 1.0 / 9.0, high: float = 9.0) -> np.ndarray:
    """Random square grid, entries log-uniform in [low, high], no reciprocity."""
    return np.exp(rng.uniform(np.log(low), np.log(high), size=(n, n)))
