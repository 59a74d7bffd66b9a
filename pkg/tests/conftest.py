from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def sally_path(data_dir: Path) -> Path:
    return data_dir / "sally_gardens.abc"


@pytest.fixture(scope="session")
def extreme_reels_path(data_dir: Path) -> Path:
    return data_dir / "extreme_reels.abc"


@pytest.fixture(scope="session")
def jig_path(data_dir: Path) -> Path:
    return data_dir / "jig_and_truncated.abc"


@pytest.fixture(scope="session")
def dump_path(data_dir: Path) -> Path:
    return data_dir / "thesession_sample.json"
