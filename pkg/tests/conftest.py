import os

# the heavy value tables (pair-reader at 16 elements) exceed the conservative
# library default; give the whole test session a working budget up front,
# before any module builds a table
os.environ.setdefault("GAMMACALC_BUDGET", "2000000")

import pytest

from gammacalc.theories import suite_monads


@pytest.fixture(scope="session")
def monads():
    """One shared instance per monad so value tables are built once."""
    return dict(suite_monads())
