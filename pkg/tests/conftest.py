"""Shared fixtures: seeded polynomial corpora and tolerance helpers."""

import numpy as np
import pytest

from cesarolab.series import PowerSeries


def polynomial_corpus(count: int, degree: int, seed: int) -> list:
    """Deterministic random polynomials with uniform(-1,1) coefficients."""
    rng = np.random.default_rng(seed)
    return [PowerSeries(rng.uniform(-1.0, 1.0, degree + 1)) for _ in range(count)]


@pytest.fixture(scope="session")
def corpus20():
    return polynomial_corpus(20, 64, seed=20260818)


@pytest.fixture(scope="session")
def corpus50():
    return polynomial_corpus(50, 48, seed=50)
