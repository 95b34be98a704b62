import pytest

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "seconds": 0.0})
    entry["seconds"] += call.duration
    if call.excinfo is not None:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} ({e['seconds']:.2f}s) {e['title']}")


@pytest.fixture
def rng():
    import random

    from foldcat.chevalley import seed_from_env

    return random.Random(seed_from_env())
