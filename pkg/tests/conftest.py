import pytest

_criteria: dict[int, dict] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            num, title = m.args
            _criteria.setdefault(num, {"title": title, "outcomes": []})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria[m.args[0]]["outcomes"].append(rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not any(c["outcomes"] for c in _criteria.values()):
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_criteria):
        c = _criteria[num]
        outs = c["outcomes"]
        if not outs:
            status = "NOT RUN"
        elif all(o == "passed" for o in outs):
            status = "PASS"
        else:
            status = "FAIL"
        tr.write_line(f"criterion {num:>2}: {status:<7} {c['title']}")
