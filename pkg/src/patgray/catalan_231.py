"""
Gray code for the 231-avoiding permutations.

The list D_n is defined recursively: for each position i of the maximum n, the
prefix tau runs through D_{i-1} and, for each tau, the suffix sigma runs through
D_{n-i} shifted by i-1. Both sublists alternate between forward and reversed
copies, and adjacent entries of D_n differ by a rotation of two, three or four
entries.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .count_sequence import catalan
from .perm_basics import Permutation, TransformKind, changed_positions, transform

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

PATTERN3_TRANSFORMS: dict[str, TransformKind | None] = {
    "231": None,
    "132": TransformKind.REVERSE,
    "213": TransformKind.COMPLEMENT,
    "312": TransformKind.REVERSE_COMPLEMENT,
}


@dataclass(frozen=True)
class DList:
    """An ordered Gray-code list of permutations of length n."""

    n: int
    entries: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.entries)

    def entry(self, j: int) -> Permutation:
        """One-indexed access, D_n(j)."""
        if not 1 <= j <= len(self.entries):
            raise IndexError(f"D_{self.n} has {len(self.entries)} entries, no entry {j}")
        return self.entries[j - 1]


def _oriented(entries: Sequence[Permutation], forward: bool) -> Iterator[Permutation]:
    # reversed copies are read backwards, never materialized
    return iter(entries) if forward else reversed(entries)


def _expand(n: int, lists: Sequence[tuple[Permutation, ...]]) -> Iterator[Permutation]:
    """
    Yield D_n from the already built D_0 .. D_{n-1}.

    tau runs forward when n+i-1 is odd; sigma runs forward when j+A(i)+1 is odd.
    Since A(i+1) = A(i) + c_{i-1}, the sigma parity is tracked by counting the
    taus emitted so far instead of computing A(i).
    """
    taus_seen = 0
    for i in range(1, n + 1):
        tau_forward = (n + i - 1) % 2 == 1
        shift = i - 1
        shifted_sigmas = [tuple(v + shift for v in sigma) for sigma in lists[n - i]]
        for tau in _oriented(lists[i - 1], tau_forward):
            sigma_forward = taus_seen % 2 == 1
            for sigma in _oriented(shifted_sigmas, sigma_forward):
                yield tau + (n,) + sigma
            taus_seen += 1


@lru_cache(maxsize=None)
def _d_lists(n: int) -> tuple[tuple[Permutation, ...], ...]:
    """D_0, ..., D_n built bottom-up."""
    if n == 0:
        return ((),),
    lists = _d_lists(n - 1)
    current = tuple(_expand(n, lists))
    logger.debug(f"Built D_{n} with {len(current)} entries")
    return lists + (current,)


def build_d_list(n: int) -> DList:
    """
    Build the Gray code D_n for S_n(231).

    :param n: permutation length, n >= 0
    :return: DList with catalan(n) entries
    """
    if n < 0:
        logger.error(f"Negative length {n}")
        raise ValueError(f"n must be >= 0, got {n}")
    return DList(n=n, entries=_d_lists(n)[n])


def iter_d_list(n: int) -> Iterator[Permutation]:
    """Stream D_n while only D_0 .. D_{n-1} are held in memory."""
    if n < 0:
        logger.error(f"Negative length {n}")
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        yield ()
        return
    yield from _expand(n, _d_lists(n - 1))


def d_successor_delta(n: int, q: int) -> frozenset[int]:
    """
    Positions where D_n(q) and D_n(q+1) differ.

    :param n: permutation length
    :param q: one-indexed position in D_n, 1 <= q < catalan(n)
    :return: set of one-indexed positions, of size 2, 3 or 4
    """
    size = catalan(n)
    if not 1 <= q < size:
        logger.error(f"Index {q} out of range for D_{n} of size {size}")
        raise IndexError(f"q must satisfy 1 <= q < {size}, got {q}")
    entries = _d_lists(n)[n]
    return frozenset(changed_positions(entries[q - 1], entries[q]))


def build_pattern3_list(n: int, pattern: str) -> DList:
    """
    Gray code for S_n(pattern), pattern one of 231, 132, 213, 312.

    The lists for 132, 213 and 312 are the pointwise reverse, complement and
    reverse-complement of D_n.
    """
    if pattern not in PATTERN3_TRANSFORMS:
        logger.error(f"Unsupported pattern {pattern}")
        raise ValueError(f"Pattern must be one of {sorted(PATTERN3_TRANSFORMS)}, got {pattern!r}")
    base = build_d_list(n)
    kind = PATTERN3_TRANSFORMS[pattern]
    if kind is None:
        return base
    return DList(n=n, entries=tuple(transform(perm, kind) for perm in base))


def iter_pattern3_list(n: int, pattern: str) -> Iterator[Permutation]:
    if pattern not in PATTERN3_TRANSFORMS:
        logger.error(f"Unsupported pattern {pattern}")
        raise ValueError(f"Pattern must be one of {sorted(PATTERN3_TRANSFORMS)}, got {pattern!r}")
    kind = PATTERN3_TRANSFORMS[pattern]
    for perm in iter_d_list(n):
        yield perm if kind is None else transform(perm, kind)
