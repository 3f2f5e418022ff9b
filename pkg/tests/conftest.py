import pytest

CRITERIA = {
    1: "running instance by symmetrizer and recurrence",
    2: "n(R*) = 9 and mirrored polynomial",
    3: "rigged configurations on the running instance",
    4: "catabolizable tableaux and catabolism chain",
    5: "LR tableaux, orbit charge and minimal decomposition",
    6: "negative-coefficient example",
    7: "transpose symmetry instance",
    8: "monotonicity instance with RC inclusion",
    9: "bijection golden tableaux, cell for cell",
    10: "exhaustive property sweep",
    11: "Fishel specialization",
}

_outcomes: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        if hasattr(rep, "wasxfail"):
            status = "xfail: " + rep.wasxfail
        else:
            status = rep.outcome
        _outcomes.setdefault(mark.args[0], []).append((item.name, status))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, desc in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            tr.write_line(f"criterion {n}: NOT RUN  {desc}")
            continue
        bad = [(name, s) for name, s in results if s != "passed"]
        tr.write_line(f"criterion {n}: {'FAIL' if bad else 'PASS'}  {desc}")
        for name, s in bad:
            tr.write_line(f"    {name}: {s}")
