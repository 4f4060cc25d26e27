import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from fslab.rings import ring_cyclic, ring_poly_quotient, ring_product  # noqa: E402


@pytest.fixture(scope="session")
def small_rings():
    rings = [ring_cyclic(n) for n in range(1, 13)]
    rings.append(ring_product([ring_cyclic(2), ring_cyclic(2)]))
    rings.append(ring_product([ring_cyclic(2), ring_cyclic(3)]))
    rings.append(ring_poly_quotient(2, [0, 0, 1]))
    rings.append(ring_poly_quotient(2, [1, 1, 1]))
    return rings


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE

    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
