from __future__ import annotations

import io
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_TSV = DATA_DIR / "doubling_seed10_rows30.tsv"


def run_cli(*argv: str) -> tuple[int, str, str]:
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    from sexagesimal.cli import main

    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cli():
    return run_cli


@pytest.fixture(scope="session")
def golden_text() -> str:
    return GOLDEN_TSV.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def golden_rows(golden_text: str) -> list[tuple[int, str, str]]:
    rows = []
    for line in golden_text.splitlines():
        index, value, reciprocal = line.split("\t")
        rows.append((int(index), value, reciprocal))
    return rows
