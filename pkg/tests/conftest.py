"""
`Conftest <https://docs.pytest.org/en/7.4.x/how-to/fixtures.html#conftest-py-sharing-fixtures-across-multiple-files>`_
allows the creation of local plugins for pytest. This module should never be imported as pytest reads it in for the
tests.

Contains the reference sequences shared by several test modules. They are embedded so that no test needs network
access.
"""
import pytest

TABLE_1: dict[int, list[int]] = {
    2: [1, 1, 2, 6, 20, 70],
    3: [1, 4, 29, 229, 1847, 14974],
    4: [2, 30, 604, 12168, 238848, 4569624],
    5: [5, 250, 13740, 699310, 33138675, 1484701075],
    6: [14, 2236, 332842, 42660740, 4872907670, 510909185422],
    7: [42, 20979, 8419334, 2711857491, 745727424435, 182814912101920],
}
"""tr(k, r) for k = 2..7 (keys) and r = 1..6 (list positions)."""

A086452_PREFIX: list[int] = [4, 30, 250, 2236, 20979, 203748]
"""OEIS A086452 from k = 3: the balanced count with one subdivision point per side, tr(k, 2)."""

A087809_PREFIX: list[int] = [1, 4, 29, 229, 1847, 14974, 121430, 983476]
"""OEIS A087809 from r = 1: the subdivided triangle with equal sides, tr(3, r)."""


@pytest.fixture(scope="session")
def table_1() -> dict[int, list[int]]:
    """The reference table of balanced counts, :data:`TABLE_1`."""
    return TABLE_1


@pytest.fixture(scope="session")
def a086452_prefix() -> list[int]:
    """:data:`A086452_PREFIX`."""
    return A086452_PREFIX


@pytest.fixture(scope="session")
def a087809_prefix() -> list[int]:
    """:data:`A087809_PREFIX`."""
    return A087809_PREFIX
