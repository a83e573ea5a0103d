import pytest

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, title = marker.args
    entry = _CRITERIA.setdefault(n, {"title": title, "ok": True, "ran": False, "detail": []})
    if report.when == "call" or report.failed:
        entry["ran"] = entry["ran"] or report.when == "call"
        if report.failed:
            entry["ok"] = False
            entry["detail"].append(f"{item.name}: {report.when} failed")
        elif report.skipped:
            entry["ok"] = False
            entry["detail"].append(f"{item.name}: skipped")
    info = getattr(item, "acceptance_note", None)
    if report.when == "call" and info:
        entry["detail"].append(info)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        e = _CRITERIA[n]
        status = "PASS" if e["ok"] and e["ran"] else "FAIL"
        line = f"criterion {n:>2} [{status}] {e['title']}"
        if e["detail"]:
            line += " | " + "; ".join(e["detail"])
        tr.write_line(line)
