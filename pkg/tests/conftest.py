import itertools

import pytest
from hypothesis import strategies as st


def perms_of(n):
    return itertools.permutations(range(1, n + 1))


def perms_up_to(max_n, min_n=0):
    for n in range(min_n, max_n + 1):
        yield from perms_of(n)


def perm_strategy(max_n, min_n=0):
    return st.integers(min_value=min_n, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
    )


@pytest.fixture(scope="session")
def small_perms():
    """Every permutation of size 0..6, as a list."""
    return list(perms_up_to(6))
