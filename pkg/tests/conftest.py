from __future__ import annotations

import pathlib

import pytest

REPO = pathlib.Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def quivers_dir() -> pathlib.Path:
    return REPO / "quivers"
