import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # expose the call-phase outcome so the acceptance fixture can print
    # a PASS/FAIL line per criterion
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
