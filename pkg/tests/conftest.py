from __future__ import annotations

import pytest

from treebridges import bridges


@pytest.fixture(scope="session")
def graphical_bridges_by_n():
    """Exhaustive graphical bridge lists for small n, computed once."""
    return {n: tuple(bridges.enumerate_graphical_bridges(n)) for n in range(8)}
