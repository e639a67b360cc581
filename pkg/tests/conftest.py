_markers = {}
_criteria = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _markers[item.nodeid] = tuple(m.args)


def pytest_runtest_logreport(report):
    if report.nodeid not in _markers:
        return
    if report.when == "call" or report.failed:
        number, title = _markers[report.nodeid]
        entry = _criteria.setdefault(number, {"ok": True, "titles": []})
        entry["ok"] = entry["ok"] and not report.failed
        if title not in entry["titles"]:
            entry["titles"].append(title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {'; '.join(entry['titles'])}")
