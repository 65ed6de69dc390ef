"""Shared fixtures: bundled scenarios, random instances, and a service client."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # makes `reference` importable

from tourplan.scenario import (
    RandomInstanceSpec,
    builtin_synth20,
    builtin_table3,
    generate_random,
)


@pytest.fixture(scope="session")
def table3():
    return builtin_table3()


@pytest.fixture(scope="session")
def synth20():
    return builtin_synth20()


def make_random(seed: int, **overrides):
    """A small random scenario; keyword overrides tweak the generator spec."""
    return generate_random(RandomInstanceSpec(seed=seed, **overrides))


def small_instances(count: int, *, start_seed: int = 0, triangle: bool = True):
    """Varied small instances for oracle comparisons: ≤ 5 spots, ≤ 6 slots."""
    shapes = [
        dict(n_spots=3, n_slots=4, travel_range=(10, 45)),
        dict(n_spots=4, n_slots=5, travel_range=(10, 45)),
        dict(n_spots=5, n_slots=6, travel_range=(10, 45)),
        dict(n_spots=4, n_slots=6, travel_range=(5, 25)),
        dict(n_spots=5, n_slots=5, travel_range=(5, 20)),
        dict(n_spots=3, n_slots=6, travel_range=(20, 60)),
    ]
    for i in range(count):
        shape = shapes[i % len(shapes)]
        yield make_random(start_seed + i, triangle=triangle, **shape)


@pytest.fixture()
def client():
    from fastapi.testclient import TestClient

    from tourplan.service import create_app

    with TestClient(create_app()) as c:
        yield c
