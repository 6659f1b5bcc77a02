import pytest

CRITERIA = {
    "test_criterion_1_hom_formula": "1 Hom formula",
    "test_criterion_2_tensor_identity": "2 tensor identity",
    "test_criterion_3_ext1": "3 Ext^1 predicate vs branching oracle",
    "test_criterion_4_self_duality": "4 self-duality of multiplicities",
    "test_criterion_5_socle_and_support": "5 socle and support",
    "test_criterion_6_symmetric_group_kernel": "6 symmetric-group kernel",
    "test_criterion_7_finite_rank_evaluation": "7 finite-rank evaluation",
    "test_criterion_8_end_to_end_determinism": "8 end-to-end determinism",
}

_outcomes: dict[str, tuple[str, float]] = {}


@pytest.hookimpl
def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if name not in CRITERIA:
        return
    if report.when == "call" or report.failed:
        previous = _outcomes.get(name, ("PASS", 0.0))
        status = "FAIL" if report.failed or previous[0] == "FAIL" else "PASS"
        _outcomes[name] = (status, previous[1] + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, title in CRITERIA.items():
        if name in _outcomes:
            status, seconds = _outcomes[name]
            terminalreporter.write_line(f"criterion {title}: {status} ({seconds:.1f} s)")
        else:
            terminalreporter.write_line(f"criterion {title}: NOT RUN")
