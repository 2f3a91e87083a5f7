"""Session-wide catalogs shared by the invariant sweeps and the acceptance suite.

The catalogs are computed once and timed, so the acceptance tests can both
reuse the results and assert the runtime bounds of the computation itself.
"""

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from antiatom import NumericalSemigroup, semigroups_by_frobenius, solve
from antiatom.enumerate import _genus_levels


class TimedCatalog:
    def __init__(self, items, seconds):
        self.items = items
        self.seconds = seconds


@pytest.fixture(scope="session")
def frobenius_catalog():
    """f -> list of semigroups with Frobenius number f, for f = 1..16."""
    t0 = time.monotonic()
    items = {f: list(semigroups_by_frobenius(f)) for f in range(1, 17)}
    return TimedCatalog(items, time.monotonic() - t0)


@pytest.fixture(scope="session")
def frobenius_solutions(frobenius_catalog):
    """(semigroup, solution) for every semigroup with F <= 16."""
    t0 = time.monotonic()
    items = [(s, solve(s)) for ss in frobenius_catalog.items.values() for s in ss]
    return TimedCatalog(items, time.monotonic() - t0)


@pytest.fixture(scope="session")
def genus_catalog():
    """g -> list of semigroups of genus g, for g = 0..12."""
    t0 = time.monotonic()
    items = dict(enumerate(_genus_levels(12)))
    return TimedCatalog(items, time.monotonic() - t0)


@pytest.fixture(scope="session")
def genus_solutions(genus_catalog):
    """(semigroup, solution) for every semigroup with 1 <= genus <= 12."""
    t0 = time.monotonic()
    items = [(s, solve(s)) for g in range(1, 13)
             for s in genus_catalog.items[g]]
    return TimedCatalog(items, time.monotonic() - t0)
