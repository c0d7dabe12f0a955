"""Collects acceptance-criterion outcomes for the terminal summary.

The per-criterion PASS/FAIL lines are printed from the tests themselves
(visible under -s or on failure); recording them here as well makes the
one-line-per-criterion report appear after every run regardless of
capture settings.
"""

CRITERION_RESULTS: list[tuple[int, str, str, float]] = []


def record_criterion(number: int, description: str, outcome: str, elapsed: float) -> None:
    CRITERION_RESULTS.append((number, description, outcome, elapsed))


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, outcome, elapsed in sorted(CRITERION_RESULTS):
        terminalreporter.write_line(
            f"{outcome} criterion {number}: {description} ({elapsed:.2f}s)"
        )
