import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from matroidres.corpus import load_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()
