import pytest

from satellite_kit import Poly, parse_poly

F_EX = "z1^2 + z2^3 + z3^3 + z1^3 + z2^4"
G_EX = "z1^2 + z2^3 + z3^3 + z1^4 + z2^6"

_criteria = {}


@pytest.fixture
def f_ex() -> Poly:
    return parse_poly(F_EX, 3)


@pytest.fixture
def g_ex() -> Poly:
    return parse_poly(G_EX, 3)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    number, title = mark.args
    ok = rep.passed if rep.when == "call" else not rep.failed
    prev = _criteria.get(number, (True, title))
    _criteria[number] = (prev[0] and ok, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        ok, title = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
