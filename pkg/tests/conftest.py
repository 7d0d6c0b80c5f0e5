import math

import pytest

# Reference values computed with mpmath at 40 digits; see test_reference_values.py.
S_CLOSED_ETA1 = 1.6198220928977023
GEOMETRIC_P_ETA1 = (
    0.41997434161402607,
    0.24359589399989140,
    0.14129186879740693,
    0.08195290922380060,
    0.04753479012918090,
)
ETA_AT_T1 = 0.7034145568736476
T_AT_ETA1 = 1.8359304662554755
THERMAL_S_X1 = 1.0406518522564083
TANH_1 = 0.7615941559557649


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(1969)


def trapezoid_1d(f, a, b, n):
    import numpy as np

    x = np.linspace(a, b, n)
    y = f(x)
    h = (b - a) / (n - 1)
    return h * (y.sum() - 0.5 * (y[0] + y[-1]))


def rel_close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


E = math.e


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, title: str, passed: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title} | {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
