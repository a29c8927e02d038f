import pytest

CRITERIA = {
    1: "orbit transducer diagrams reproduced exactly",
    2: "transducer identities hold on all words of length <= 10, n <= 4",
    3: "n = 2 iterated permutations map to depth-one swaps; images are plain",
    4: "row conjugation agrees with the pointwise oracle and is a homomorphism",
    5: "non-semiregular obstruction witnesses and fixed point trichotomy",
    6: "classification of V_n(G) for n = 2, 3, 4",
    7: "group axioms and canonical form idempotence",
}

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_runtest_logreport(report):
    k = getattr(report, "criterion", None)
    if k is None:
        return
    ok = not report.failed
    if report.when == "call" and report.skipped:
        ok = False
    _results.setdefault(k, []).append((report.nodeid, ok))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        entries = _results.get(k)
        if not entries:
            continue
        failed = [nodeid.split("::")[-1] for nodeid, ok in entries if not ok]
        status = "FAIL" if failed else "PASS"
        line = "criterion %d: %s  %s" % (k, status, CRITERIA[k])
        if failed:
            line += "  (failing: %s)" % ", ".join(sorted(set(failed)))
        terminalreporter.write_line(line)
