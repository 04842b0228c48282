from importlib import resources
from pathlib import Path

import pytest

from singknot.diagram import parse_diagram

CORPUS = Path(str(resources.files("singknot") / "corpus"))


def corpus_files() -> list[Path]:
    return sorted(CORPUS.glob("*.sd"))


def load(name: str):
    return parse_diagram((CORPUS / f"{name}.sd").read_text())


@pytest.fixture(params=[p.stem for p in corpus_files()])
def corpus_name(request):
    return request.param


@pytest.fixture
def T():
    return load("singular_trefoil_T")


# criterion number -> (description, passed); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {desc}")
