from __future__ import annotations

import pytest

from topicmine import TokenizerConfig, process


@pytest.fixture(scope="session")
def tok_config() -> TokenizerConfig:
    return TokenizerConfig()


@pytest.fixture(scope="session")
def three_doc_texts() -> dict[str, str]:
    """A tiny corpus whose processed form is easy to trace by hand."""
    return {
        "d1": "hunger and famine",
        "d2": "green energy for food",
        "d3": "food food hunger",
    }


@pytest.fixture(scope="session")
def three_doc_processed(three_doc_texts, tok_config) -> list[list[str]]:
    return [process(text, tok_config) for text in three_doc_texts.values()]


@pytest.fixture()
def corpus_dir(tmp_path, three_doc_texts):
    docs = tmp_path / "docs"
    docs.mkdir()
    for doc_id, text in three_doc_texts.items():
        (docs / f"{doc_id}.txt").write_text(text + "\n", encoding="utf-8")
    return docs


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    lines = []
    for outcome in ("passed", "failed", "skipped"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" not in nodeid or "::" not in nodeid:
                continue
            if report.when == "call" or (outcome == "skipped" and report.when == "setup"):
                name = nodeid.split("::")[-1]
                lines.append((name, outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(set(lines)):
            terminalreporter.write_line(f"{outcome:7s} {name}")
