import pytest

ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; passes only if the test body finishes."""
    state = {}

    def start(number: int, name: str):
        state["key"] = (number, name)
        ACCEPTANCE[number] = (name, False)

    yield start
    if "key" in state:
        number, name = state["key"]
        failed = getattr(request.node, "rep_call", None)
        ACCEPTANCE[number] = (name, failed is not None and failed.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        name, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {name}")
