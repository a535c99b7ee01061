import mpmath
import pytest

from hermk.characters import QuadChar


def class_number(disc):
    """h(disc) by counting reduced positive definite forms of discriminant disc < 0."""
    count = 0
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            if (b * b - disc) % (4 * a):
                continue
            c = (b * b - disc) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            count += 1
        a += 1
    return count


def hurwitz_l(k, d, dps=40):
    """L(k, chi_D) = f^-k sum_{a=1}^{f} chi(a) zeta(k, a/f), to `dps` digits."""
    char = QuadChar.of(d)
    f = char.conductor
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        for a in range(1, f + 1):
            c = char(a)
            if c:
                total += c * mpmath.zeta(k, mpmath.mpf(a) / f)
        return total / mpmath.mpf(f) ** k



ACCEPTANCE_RESULTS: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
