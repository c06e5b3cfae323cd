import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coderep.mutation import BugSeeder  # noqa: E402
from coderep.pipeline import MINI_CORPUS, extract_records, parse_corpus  # noqa: E402


def esprima_json(source):
    """ESTree JSON text from the reference parser (regex values are not serializable, so drop them)."""
    esprima = pytest.importorskip("esprima")
    return json.dumps(esprima.parseScript(source, {"range": True}).toDict(), default=lambda o: None)


@pytest.fixture(scope="session")
def mini_asts():
    asts, failures = parse_corpus(MINI_CORPUS)
    assert not failures
    return asts


@pytest.fixture(scope="session")
def records(mini_asts):
    return {b: extract_records(mini_asts, b, 0) for b in ("swapped_args", "wrong_binop", "wrong_operands")}


@pytest.fixture(scope="session")
def pairs(records):
    return {b: BugSeeder(b, 0).fit().transform(recs) for b, recs in records.items()}


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, text = RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {text}")
