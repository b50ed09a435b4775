from hypothesis import strategies as st

from insertalg.coefficients import Coefficient
from insertalg.poly import Polynomial
from insertalg.words import Alphabet

AB = Alphabet("ab")
ABC = Alphabet("abc")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
coefficients = st.dictionaries(st.integers(-4, 4), rationals, max_size=3).map(Coefficient)
small_int_coeffs = st.integers(-3, 3).map(Coefficient.const)


def words(alphabet: Alphabet, max_size: int = 3):
    return st.text(alphabet=alphabet.letters, max_size=max_size)


def polynomials(alphabet: Alphabet, max_terms: int = 3, max_word: int = 3, coeffs=coefficients):
    return st.dictionaries(words(alphabet, max_word), coeffs, max_size=max_terms).map(
        lambda d: Polynomial(alphabet, d)
    )


# one PASS/FAIL line per acceptance criterion in the terminal summary
_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        name = report.nodeid.split("::")[-1]
        if _acceptance.get(name) != "FAIL":
            _acceptance[name] = "FAIL" if report.failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        terminalreporter.write_line(f"{_acceptance[name]}  {name}")
