"""
This module define the counting sequences the generated classes follow, and the
prefix sums A(i), B(i) whose parities drive the reversal pattern of the
recursive lists.
"""

import logging
from enum import Enum
from functools import lru_cache
from math import comb

import pandas as pd

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class CountFamily(str, Enum):
    CATALAN = "catalan"
    SCHRODER = "schroder"
    PELL = "pell"
    FIBONACCI_EVEN_INDEX = "fibonacci_even_index"
    CENTRAL_BINOMIAL = "central_binomial"
    POWER_OF_TWO = "power_of_two"


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def schroder(n: int) -> int:
    """
    Large Schroder number: r_0 = 1, r_n = r_{n-1} + sum_{k=1..n} r_{k-1} r_{n-k}.

    Evaluated bottom-up with the equivalent linear recurrence
    (n+1) r_n = 3(2n-1) r_{n-1} - (n-2) r_{n-2}.
    """
    previous, current = 1, 2
    if n == 0:
        return previous
    for m in range(2, n + 1):
        previous, current = current, (3 * (2 * m - 1) * current - (m - 2) * previous) // (m + 1)
    return current


@lru_cache(maxsize=None)
def pell(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def _fibonacci(m: int) -> int:
    # F_{-1} = 1, F_0 = 0, F_1 = 1
    a, b = 1, 0
    for _ in range(m + 1):
        a, b = b, a + b
    return a


def sequence_term(family: CountFamily, n: int) -> int:
    """
    Return the n-th term of a counting family.

    Conventions: catalan c_n, schroder r_n, pell P_n (0, 1, 2, 5, 12, ...),
    fibonacci_even_index F_{2n-1} (1, 1, 2, 5, 13, ...), central_binomial
    C(2n, n), power_of_two 2^n.

    :param family: counting family
    :param n: non-negative index
    :return: the term as an arbitrary precision integer
    """
    if n < 0:
        logger.error(f"Negative sequence index {n}")
        raise ValueError(f"Sequence index must be >= 0, got {n}")
    family = CountFamily(family)
    if family is CountFamily.CATALAN:
        return catalan(n)
    if family is CountFamily.SCHRODER:
        return schroder(n)
    if family is CountFamily.PELL:
        return pell(n)
    if family is CountFamily.FIBONACCI_EVEN_INDEX:
        return _fibonacci(2 * n - 1)
    if family is CountFamily.CENTRAL_BINOMIAL:
        return comb(2 * n, n)
    return 2 ** n


@lru_cache(maxsize=None)
def prefix_sum(family: CountFamily, i: int) -> int:
    """
    A(i) = c_0 + ... + c_{i-2} for catalan, B(i) = r_0 + ... + r_{i-2} for
    schroder, with A(1) = B(1) = 0.

    Only parities are consumed by the list builders; the values are exposed
    for checking.
    """
    family = CountFamily(family)
    if family not in (CountFamily.CATALAN, CountFamily.SCHRODER):
        logger.error(f"No prefix sum defined for {family.value}")
        raise ValueError(f"Prefix sums exist for catalan (A) and schroder (B), not {family.value}")
    if i < 1:
        logger.error(f"Prefix sum index {i} < 1")
        raise ValueError(f"Prefix sum index must be >= 1, got {i}")
    return sum(sequence_term(family, j) for j in range(i - 1))


def sequence_table(n_max: int) -> pd.DataFrame:
    """
    Tabulate every counting family for n = 0..n_max.

    :param n_max: last index
    :return: DataFrame indexed by n with one column per family
    """
    index = pd.RangeIndex(0, n_max + 1, name="n")
    table = pd.DataFrame(
        {family.value: [sequence_term(family, n) for n in index] for family in CountFamily},
        index=index,
    )
    return table
