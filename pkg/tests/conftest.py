import shutil
from importlib import resources

import pytest

from wecken.knowledge import load_kb, load_table


@pytest.fixture(scope="session")
def kb():
    return load_kb()


@pytest.fixture(scope="session")
def table():
    return load_table()


@pytest.fixture
def facts_copy(tmp_path):
    """Writable copy of the bundled fact files."""
    src = resources.files("wecken") / "data"
    for name in ("homotopy.facts", "table.facts"):
        with resources.as_file(src / name) as p:
            shutil.copy(p, tmp_path / name)
    return tmp_path
