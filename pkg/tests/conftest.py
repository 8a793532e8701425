from __future__ import annotations

import sys
from pathlib import Path

import pytest

from steinmult import WeylGroup, build_root_datum, cartan_type

sys.path.insert(0, str(Path(__file__).resolve().parent))


def _group(label: str) -> WeylGroup:
    return WeylGroup(build_root_datum(cartan_type(label)))


@pytest.fixture(scope="session")
def a1() -> WeylGroup:
    return _group("A1")


@pytest.fixture(scope="session")
def a2() -> WeylGroup:
    return _group("A2")


@pytest.fixture(scope="session")
def a3() -> WeylGroup:
    return _group("A3")


@pytest.fixture(scope="session")
def b2() -> WeylGroup:
    return _group("B2")


@pytest.fixture(scope="session")
def b3() -> WeylGroup:
    return _group("B3")


@pytest.fixture(scope="session")
def g2() -> WeylGroup:
    return _group("G2")
