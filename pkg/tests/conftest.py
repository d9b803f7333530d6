import pytest

# Prime factorization of 1..25: exponents under 2, 3, 5, 7, 11, 13, 17, 19, 23,
# then the number of distinct primes.
TABLE_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)
TABLE_ROWS = {
    1: ((0, 0, 0, 0, 0, 0, 0, 0, 0), 0),
    2: ((1, 0, 0, 0, 0, 0, 0, 0, 0), 1),
    3: ((0, 1, 0, 0, 0, 0, 0, 0, 0), 1),
    4: ((2, 0, 0, 0, 0, 0, 0, 0, 0), 1),
    5: ((0, 0, 1, 0, 0, 0, 0, 0, 0), 1),
    6: ((1, 1, 0, 0, 0, 0, 0, 0, 0), 2),
    7: ((0, 0, 0, 1, 0, 0, 0, 0, 0), 1),
    8: ((3, 0, 0, 0, 0, 0, 0, 0, 0), 1),
    9: ((0, 2, 0, 0, 0, 0, 0, 0, 0), 1),
    10: ((1, 0, 1, 0, 0, 0, 0, 0, 0), 2),
    11: ((0, 0, 0, 0, 1, 0, 0, 0, 0), 1),
    12: ((2, 1, 0, 0, 0, 0, 0, 0, 0), 2),
    13: ((0, 0, 0, 0, 0, 1, 0, 0, 0), 1),
    14: ((1, 0, 0, 1, 0, 0, 0, 0, 0), 2),
    15: ((0, 1, 1, 0, 0, 0, 0, 0, 0), 2),
    16: ((4, 0, 0, 0, 0, 0, 0, 0, 0), 1),
    17: ((0, 0, 0, 0, 0, 0, 1, 0, 0), 1),
    18: ((1, 2, 0, 0, 0, 0, 0, 0, 0), 2),
    19: ((0, 0, 0, 0, 0, 0, 0, 1, 0), 1),
    20: ((2, 0, 1, 0, 0, 0, 0, 0, 0), 2),
    21: ((0, 1, 0, 1, 0, 0, 0, 0, 0), 2),
    22: ((1, 0, 0, 0, 1, 0, 0, 0, 0), 2),
    23: ((0, 0, 0, 0, 0, 0, 0, 0, 1), 1),
    24: ((3, 1, 0, 0, 0, 0, 0, 0, 0), 2),
    25: ((0, 0, 2, 0, 0, 0, 0, 0, 0), 1),
}


@pytest.fixture(scope="session")
def table1():
    return TABLE_PRIMES, TABLE_ROWS


_ACCEPTANCE: list[tuple[str, str, bool]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(tag, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and rep.when == "call":
        tag, title = marker.args
        _ACCEPTANCE.append((tag, title, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for tag, title, passed in sorted(_ACCEPTANCE, key=lambda r: int(r[0][2:])):
        terminalreporter.write_line(f"{tag} {'PASS' if passed else 'FAIL'}  {title}")
