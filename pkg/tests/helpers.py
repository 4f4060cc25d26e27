"""Small module constructors shared by the tests."""

from fslab.modules import direct_sum, quotient, regular_module, submodule_generated
from fslab.rings import ring_cyclic


def zn(n):
    return regular_module(ring_cyclic(n))


def v22():
    """Z_2 x Z_2 over Z_2, coordinatewise."""
    M = zn(2)
    return direct_sum(M, M)


def cyclic_quotient(n, d):
    """Z_n / dZ_n as a Z_n-module."""
    M = zn(n)
    return quotient(M, submodule_generated(M, [d % n]))


def ids(sub):
    return set(sub.elements)


# acceptance criteria outcomes, printed at the end of the run by conftest
ACCEPTANCE: dict[int, tuple[bool, str]] = {}
