"""
Shared fixtures. Puts the repository root on sys.path so tests import the
package as `src`, the same way the scripts do.
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT))

from src.catalog import catalog_get  # noqa: E402
from src.config import Config  # noqa: E402


@pytest.fixture
def e1():
    return catalog_get("E1@3")


@pytest.fixture
def e2():
    return catalog_get("E2@3")


@pytest.fixture
def sl2():
    return catalog_get("sl2@3")


@pytest.fixture
def gl2split():
    return catalog_get("gl2split@3")


@pytest.fixture
def config():
    return Config(workers=1, closure="plain")


@pytest.fixture
def data_dir():
    return ROOT / "data" / "algebras"
