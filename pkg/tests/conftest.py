import pytest

_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if not item.module.__name__.endswith("test_acceptance"):
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        doc = item.function.__doc__ or item.name
        label = doc.strip().splitlines()[0]
        _acceptance.append(("PASS" if rep.passed else "FAIL", label))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for status, label in _acceptance:
        terminalreporter.write_line(f"{status}  {label}")
