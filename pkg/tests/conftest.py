"""Shared test helpers.

Importing mpmath here warms its (several-second) one-time import cost before
any timed acceptance test runs, so runtime budgets measure computation only.
"""

import mpmath  # noqa: F401  (warm-up import, see module docstring)
import pytest


def rel(a, b):
    """Relative deviation used throughout: |a-b| / max(|a|,|b|,tiny)."""
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


@pytest.fixture
def relerr():
    return rel
