"""Acceptance bookkeeping: each criterion reports one PASS/FAIL line."""

from __future__ import annotations

import pytest

_RESULTS: dict[str, tuple[bool, str]] = {}
_TITLES: dict[str, str] = {}


class Criterion:
    def __init__(self, key: str, title: str):
        self.key = key
        self.title = title
        self.detail = ""

    def note(self, detail: str) -> None:
        self.detail = detail


@pytest.fixture
def criterion(request):
    """Yield a recorder; the outcome of the test decides PASS or FAIL."""
    marker = request.node.get_closest_marker("criterion")
    key, title = marker.args
    rec = Criterion(key, title)
    _TITLES[key] = title
    _RESULTS[key] = (False, "did not finish")
    yield rec
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    _RESULTS[key] = (not failed, rec.detail)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(key, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS, key=lambda k: int(k[1:])):
        ok, detail = _RESULTS[key]
        title = _TITLES.get(key, "")
        line = f"{key} {title}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
