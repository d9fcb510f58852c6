from pathlib import Path

import pytest

from szeta.zeros import ingest_zeros

DATA_FILE = Path(__file__).resolve().parent.parent / "data" / "zeros_below_70000.txt"

THREE_ZEROS = "14.134725142\n21.022039639\n25.010857580\n"


@pytest.fixture(scope="session")
def catalog():
    """The full shipped catalog, ingested once per test session."""
    return ingest_zeros(DATA_FILE)


@pytest.fixture
def three_zero_file(tmp_path):
    path = tmp_path / "three.txt"
    path.write_text(THREE_ZEROS)
    return path
