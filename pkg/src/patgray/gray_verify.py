"""
Brute-force oracles and Gray-code checkers.

The oracle enumerates all n! permutations as a numpy array and removes, for
each pattern and each choice of positions, the rows whose restriction is
order-isomorphic to the pattern. The checkers report the realized adjacent
distances of a list, its duplicates and, on request, how it compares with the
oracle.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

import numpy as np
import pandas as pd

from .perm_basics import Pattern, Permutation, format_permutation, hamming_distance
from .schroder_path import SchroderPath, path_distance, semilength

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

DEFAULT_ORACLE_CAP = 8
MISMATCH_SAMPLE = 10


class OracleStatus(str, Enum):
    MATCHED = "matched"
    MISMATCHED = "mismatched"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class OracleMatch:
    status: OracleStatus
    missing: tuple[Permutation, ...] = ()
    extra: tuple[Permutation, ...] = ()
    missing_count: int = 0
    extra_count: int = 0


@dataclass
class GrayReport:
    """Outcome of a Gray-code check."""

    count: int
    max_adjacent_distance: int
    circular_distance: int
    duplicates: int
    oracle_match: OracleMatch = field(default_factory=lambda: OracleMatch(OracleStatus.SKIPPED))
    max_dist: Optional[int] = None
    circular: bool = False
    distance_histogram: dict[int, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        if self.duplicates:
            return False
        if self.oracle_match.status is OracleStatus.MISMATCHED:
            return False
        if self.max_dist is not None:
            if self.max_adjacent_distance > self.max_dist:
                return False
            if self.circular and self.circular_distance > self.max_dist:
                return False
        return True

    def render(self) -> str:
        lines = [
            f"count: {self.count}",
            f"max_adjacent_distance: {self.max_adjacent_distance}",
            f"circular_distance: {self.circular_distance}",
            f"duplicates: {self.duplicates}",
            f"distance_histogram: {' '.join(f'{d}:{c}' for d, c in sorted(self.distance_histogram.items()))}",
            f"oracle: {self.oracle_match.status.value}",
        ]
        match = self.oracle_match
        if match.status is OracleStatus.MISMATCHED:
            lines.append(f"missing_count: {match.missing_count}")
            lines.extend(f"missing: {format_permutation(perm)}" for perm in match.missing)
            lines.append(f"extra_count: {match.extra_count}")
            lines.extend(f"extra: {format_permutation(perm)}" for perm in match.extra)
        if self.max_dist is not None:
            lines.append(f"max_dist: {self.max_dist}")
        lines.append(f"circular: {str(self.circular).lower()}")
        lines.append(f"result: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines)


def brute_force_avoiders(
    patterns: Iterable[Sequence[int]],
    n: int,
    cap: int = DEFAULT_ORACLE_CAP,
    allow_above_cap: bool = False,
) -> frozenset[Permutation]:
    """
    All permutations of length n avoiding every pattern, by exhaustive filtering.

    :param patterns: the forbidden patterns
    :param n: permutation length
    :param cap: largest n accepted without opting in
    :param allow_above_cap: accept n > cap
    :return: the avoiders as a frozenset of tuples
    """
    if n < 0:
        logger.error(f"Negative length {n}")
        raise ValueError(f"n must be >= 0, got {n}")
    if n > cap and not allow_above_cap:
        logger.error(f"Oracle length {n} above cap {cap}")
        raise ValueError(f"n={n} exceeds the oracle cap {cap}; pass allow_above_cap=True to force it")
    if n == 0:
        return frozenset({()})
    candidates = np.array(list(permutations(range(1, n + 1))), dtype=np.int16)
    keep = np.ones(len(candidates), dtype=bool)
    for pattern in patterns:
        target = np.asarray(pattern, dtype=np.int16)
        if len(target) > n:
            continue
        for positions in combinations(range(n), len(target)):
            sub = candidates[:, positions]
            ranks = np.argsort(np.argsort(sub, axis=1), axis=1) + 1
            keep &= ~(ranks == target).all(axis=1)
    survivors = candidates[keep]
    logger.debug(f"Oracle kept {len(survivors)} of {len(candidates)} permutations of length {n}")
    return frozenset(tuple(int(v) for v in row) for row in survivors)


def distance_profile(perms: Sequence[Permutation]) -> pd.Series:
    """Hamming distance between each entry and the next, indexed by the first entry's position."""
    array = np.asarray(perms)
    if len(perms) < 2:
        return pd.Series([], dtype="int64", name="distance")
    return pd.Series((array[1:] != array[:-1]).sum(axis=1), name="distance", dtype="int64")


def _check_uniform(perms: Sequence[Permutation]) -> int:
    if not perms:
        logger.error("Empty list")
        raise ValueError("Cannot check an empty list")
    lengths = {len(perm) for perm in perms}
    if len(lengths) != 1:
        logger.error(f"Ragged list with lengths {sorted(lengths)}")
        raise ValueError(f"All permutations must have the same length, got lengths {sorted(lengths)}")
    return lengths.pop()


def _report(distances: pd.Series, count: int, circular_distance: int, duplicates: int,
            max_dist: Optional[int], circular: bool) -> GrayReport:
    return GrayReport(
        count=count,
        max_adjacent_distance=int(distances.max()) if len(distances) else 0,
        circular_distance=circular_distance,
        duplicates=duplicates,
        max_dist=max_dist,
        circular=circular,
        distance_histogram={int(d): int(c) for d, c in distances.value_counts().items()},
    )


def check_gray(perms: Sequence[Permutation], max_dist: Optional[int] = None, circular: bool = False) -> GrayReport:
    """
    Report the adjacent distances of a permutation list.

    :param perms: non-empty list of permutations of equal length
    :param max_dist: bound the adjacent distances must respect
    :param circular: also hold the last-to-first pair to the bound
    :return: GrayReport with the oracle skipped
    """
    perms = list(perms)
    _check_uniform(perms)
    return _report(
        distance_profile(perms),
        count=len(perms),
        circular_distance=hamming_distance(perms[0], perms[-1]),
        duplicates=len(perms) - len(set(perms)),
        max_dist=max_dist,
        circular=circular,
    )


def check_path_gray(paths: Sequence[SchroderPath], max_dist: Optional[int] = None, circular: bool = False) -> GrayReport:
    """Same report for a list of Schroder paths under the e -> rr distance."""
    paths = list(paths)
    if not paths:
        logger.error("Empty list")
        raise ValueError("Cannot check an empty list")
    sizes = {semilength(path) for path in paths}
    if len(sizes) != 1:
        logger.error(f"Paths of mixed semilengths {sorted(sizes)}")
        raise ValueError(f"All paths must have the same semilength, got {sorted(sizes)}")
    distances = pd.Series([path_distance(a, b) for a, b in zip(paths, paths[1:])], name="distance", dtype="int64")
    return _report(
        distances,
        count=len(paths),
        circular_distance=path_distance(paths[0], paths[-1]),
        duplicates=len(paths) - len(set(paths)),
        max_dist=max_dist,
        circular=circular,
    )


def _oracle_match(listed: set[Permutation], expected: frozenset[Permutation]) -> OracleMatch:
    missing = sorted(expected - listed)
    extra = sorted(listed - expected)
    if not missing and not extra:
        return OracleMatch(OracleStatus.MATCHED)
    return OracleMatch(
        OracleStatus.MISMATCHED,
        missing=tuple(missing[:MISMATCH_SAMPLE]),
        extra=tuple(extra[:MISMATCH_SAMPLE]),
        missing_count=len(missing),
        extra_count=len(extra),
    )


class GrayVerifier:
    """Checks with a configured oracle cap; lists longer than the cap skip the oracle."""

    def __init__(self, oracle_cap: int = DEFAULT_ORACLE_CAP):
        self.oracle_cap = oracle_cap

    def avoiders(self, patterns: Iterable[Pattern], n: int) -> frozenset[Permutation]:
        return brute_force_avoiders(patterns, n, cap=self.oracle_cap)

    def check_gray(self, perms: Sequence[Permutation], max_dist: Optional[int] = None, circular: bool = False) -> GrayReport:
        return check_gray(perms, max_dist=max_dist, circular=circular)

    def check_complete(self, perms: Sequence[Permutation], patterns: Iterable[Pattern],
                       max_dist: Optional[int] = None, circular: bool = False) -> GrayReport:
        """
        Distance report plus a comparison of the list, taken as a set, with the oracle.

        The oracle is skipped with a warning when the length is above the cap.
        """
        perms = list(perms)
        n = _check_uniform(perms)
        report = check_gray(perms, max_dist=max_dist, circular=circular)
        if n > self.oracle_cap:
            logger.warning(f"Length {n} above oracle cap {self.oracle_cap}, oracle skipped")
            return report
        report.oracle_match = _oracle_match(set(perms), self.avoiders(patterns, n))
        if report.oracle_match.status is OracleStatus.MISMATCHED:
            logger.info(
                f"Oracle mismatch: {report.oracle_match.missing_count} missing, {report.oracle_match.extra_count} extra"
            )
        return report


def check_complete(perms: Sequence[Permutation], patterns: Iterable[Pattern], cap: int = DEFAULT_ORACLE_CAP) -> GrayReport:
    return GrayVerifier(oracle_cap=cap).check_complete(perms, patterns)
