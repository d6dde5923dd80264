from pathlib import Path

import pytest

from matroidres.formats import dumps
from matroidres.golden import golden_examples, write_golden

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def fresh():
    return golden_examples()


def test_every_golden_file_reproduces(fresh):
    names = sorted(p.stem for p in GOLDEN.glob("*.json"))
    assert names == sorted(fresh)
    for name, doc in fresh.items():
        assert (GOLDEN / f"{name}.json").read_text() == dumps(doc), name


def test_golden_is_byte_stable(tmp_path):
    a = [p.read_bytes() for p in write_golden(tmp_path / "a")]
    b = [p.read_bytes() for p in write_golden(tmp_path / "b")]
    assert a == b
