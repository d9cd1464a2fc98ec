"""Shared fixtures for the orbitkit tests."""

import os
from pathlib import Path
from typing import Optional

import pytest

from orbitkit.chevalley import structure_constants
from orbitkit.models import RootSystemId
from orbitkit.rootexpr import parse_roots
from orbitkit.rootsys import build_root_system

GOLDEN_DIR = Path(__file__).parent / "golden"


def system(label: str):
    return build_root_system(RootSystemId.parse(label))


@pytest.fixture
def get_system():
    """Cached root system by label, e.g. ``get_system("B3")``."""
    return system


@pytest.fixture
def get_table():
    """Cached Chevalley table by label."""
    return lambda label: structure_constants(system(label))


@pytest.fixture
def roots():
    """Positive roots from a comma-separated expression list."""
    return lambda label, text: parse_roots(system(label), text)


@pytest.fixture
def g2():
    return system("G2")


@pytest.fixture
def b3():
    return system("B3")


@pytest.fixture
def c2():
    return system("C2")


@pytest.fixture
def f4():
    return system("F4")


@pytest.fixture
def golden():
    """Text of a frozen file under tests/golden.

    ``golden(name, text)`` freezes ``text`` when the file does not exist yet
    (or ORBITKIT_UPDATE_GOLDEN is set) and skips; later runs compare against it.
    """

    def read(name: str, text: Optional[str] = None) -> str:
        path = GOLDEN_DIR / name
        if text is not None and (not path.exists() or os.environ.get("ORBITKIT_UPDATE_GOLDEN")):
            path.write_text(text, encoding="utf-8")
            pytest.skip(f"froze {name}")
        return path.read_text(encoding="utf-8")

    return read
