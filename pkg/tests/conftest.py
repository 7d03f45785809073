import sys

import pytest

from bockstein.dimtype import DimensionType
from bockstein.theorems import UniverseConfig, enumerate_types


def T(text: str) -> DimensionType:
    return DimensionType.parse(text)


DSTAR = "{0:4, 2:3+, 3:2-, *:4}"
B = "{0:1, 2:2+, *:1}"

# A prime outside every test universe; stands in for "all other primes".
GENERIC_PRIME = 101


def sigma_values(D: DimensionType, primes=(2, 3, 5, 7, GENERIC_PRIME)) -> dict:
    """The function sigma -> N of ``D``, read off from the defining equations.

    Regular: Z_(p) = Z_p = Z_{p^inf} = Q.  p+: Z_{p^inf} = Z_p and
    Z_(p) = max(Q, Z_{p^inf} + 1).  p-: Z_{p^inf} = Z_p - 1, same Z_(p) rule.
    """
    a = D.at_zero
    out = {("Q", 0): a}
    for p in primes:
        d = D.at(p)
        if d.decoration.name == "NONE":
            zp = zinf = zloc = a
        else:
            zp = d.value
            zinf = zp if d.decoration.name == "PLUS" else zp - 1
            zloc = max(a, zinf + 1)
        out[("Z_p", p)] = zp
        out[("Z_p^inf", p)] = zinf
        out[("Z_(p)", p)] = zloc
    return out


@pytest.fixture(scope="session")
def small_universe():
    return enumerate_types(UniverseConfig((2, 3), 2))


@pytest.fixture(scope="session")
def mid_universe():
    return enumerate_types(UniverseConfig((2, 3), 3))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
