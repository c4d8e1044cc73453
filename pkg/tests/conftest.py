from pathlib import Path

import pytest

from circlegeom import GroundSet, build_record, enumerate_geometries, load_configuration

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def masks_by_n() -> dict[int, list[int]]:
    """Enumerated canonical family masks for n = 1..4 (cheap, shared)."""
    return {n: enumerate_geometries(GroundSet(n)) for n in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def masks_n5() -> list[int]:
    """Enumerated canonical family masks for n = 5 (built once per session)."""
    return enumerate_geometries(GroundSet(5))


@pytest.fixture(scope="session")
def catalog5(masks_n5):
    ground = GroundSet(5)
    return [
        build_record(ground, mask, f"G5-{k}")
        for k, mask in enumerate(masks_n5, start=1)
    ]


@pytest.fixture(scope="session")
def fixture_configurations() -> dict[str, object]:
    return {path.stem: load_configuration(path) for path in sorted(FIXTURES.glob("*.json"))}
