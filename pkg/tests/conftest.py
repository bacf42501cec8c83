"""Shared fixtures: reference fields and an end-to-end CLI runner."""

from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest

from gf2m import GF2m

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def field3() -> GF2m:
    return GF2m(3)


@pytest.fixture(scope="session")
def field4() -> GF2m:
    return GF2m(4)


@pytest.fixture(scope="session")
def cli():
    """Run the installed CLI via ``python -m gf2m`` and capture its output."""

    def run(*args: str, expect: int | None = 0) -> subprocess.CompletedProcess:
        proc = subprocess.run(
            [sys.executable, "-m", "gf2m", *args],
            capture_output=True, text=True, encoding="utf-8")
        if expect is not None:
            assert proc.returncode == expect, (
                f"gf2m {' '.join(args)} exited {proc.returncode}: "
                f"{proc.stderr}")
        return proc

    return run


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")
