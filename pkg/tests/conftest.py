import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reelcut.instances import table1, table2  # noqa: E402

DATA = Path(__file__).parent / "data"


@pytest.fixture
def pool1():
    return table1()


@pytest.fixture
def pool2():
    return table2()


@pytest.fixture
def data_dir():
    return DATA
