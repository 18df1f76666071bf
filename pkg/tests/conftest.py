"""Shared fixtures for the test suite."""
from __future__ import annotations

import numpy as np
import pytest

from src.config import Settings
from src.generators import build_gadget_poset, incidence_poset, standard_example


@pytest.fixture
def settings() -> Settings:
    return Settings(timeout_s=120.0, gadget_max_k=2, seed=0, log_level="INFO", bdim_max_n=6, bdim_max_d=2)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0)


@pytest.fixture(scope="session")
def s3():
    return standard_example(3)


@pytest.fixture(scope="session")
def s4():
    return standard_example(4)


@pytest.fixture(scope="session")
def p4():
    return incidence_poset(4)


@pytest.fixture(scope="session")
def gadget2():
    return build_gadget_poset(2, settings=Settings(gadget_max_k=2))
