"""Element budget guard.

All potentially explosive enumerations (map spaces, coend tables, product
tables) route their size through :func:`guard` before materializing anything.
The ceiling is read from the ``GAMMACALC_BUDGET`` environment variable once
per lookup so tests can tighten it locally.
"""

import os

from .errors import SizeGuardExceeded

DEFAULT_BUDGET = 100_000


def current_budget() -> int:
    raw = os.environ.get("GAMMACALC_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_BUDGET
    return value if value > 0 else DEFAULT_BUDGET


def guard(n_elements: int, what: str = "enumeration") -> int:
    """Raise SizeGuardExceeded if ``n_elements`` exceeds the budget; else return it."""
    limit = current_budget()
    if n_elements > limit:
        raise SizeGuardExceeded(
            f"{what} needs {n_elements} elements; budget is {limit} "
            f"(set GAMMACALC_BUDGET to raise)"
        )
    return n_elements
