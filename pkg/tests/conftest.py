import pytest

_criteria: list[tuple[str, bool, float, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if not item.nodeid.split("::")[0].endswith("test_acceptance.py"):
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        title = (item.function.__doc__ or item.name).strip().splitlines()[0]
        detail = dict(rep.user_properties).get("detail", "")
        _criteria.append((title, rep.passed, rep.duration, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for title, ok, duration, detail in _criteria:
        line = f"{'PASS' if ok else 'FAIL'}  {title}  [{duration:.2f} s]"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
