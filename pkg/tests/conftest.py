import pytest

TITLES = {
    1: "Y eigenvalue equations",
    2: "reference E-expansions of P and A",
    3: "cross-algorithm equality",
    4: "Weyl character formula",
    5: "principal specializations",
    6: "constant term",
    7: "norms",
    8: "orthogonality",
    9: "operator relations",
    10: "going up a level",
    11: "specialization identities",
    12: "boson-fermion",
    13: "hermitian, sesquilinear, adjoint",
}

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for n in getattr(report, "criteria", ()):
        _results.setdefault(n, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = [m.args[0] for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_results):
        status = "PASS" if all(_results[n]) else "FAIL"
        tr.write_line(f"criterion {n:2d} {status}  {TITLES.get(n, '')}")
