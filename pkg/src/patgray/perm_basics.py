"""
This module holds the shared vocabulary of the package: permutations, patterns,
pattern containment, the Hamming metric, the reverse/complement symmetries and
products of transpositions.

Permutations are plain tuples of positive integers and every public position is
one-indexed.
"""

import logging
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence, Union

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

Permutation = tuple[int, ...]
Pattern = tuple[int, ...]

EMPTY: Permutation = ()


class TransformKind(str, Enum):
    REVERSE = "reverse"
    COMPLEMENT = "complement"
    REVERSE_COMPLEMENT = "reverse_complement"


def validate_permutation(values: Iterable[int]) -> Permutation:
    """
    Check that the values form a bijection of {1, ..., n}.

    :param values: iterable of integers
    :return: the values as a permutation tuple
    """
    perm = tuple(values)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        logger.error(f"Not a permutation of 1..{len(perm)}: {perm}")
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
    return perm


def make_pattern(source: Union[str, Sequence[int]]) -> Pattern:
    """
    Build a pattern from a compact string ("231"), a space separated string
    ("10 1 2 3 4 5 6 7 8 9") or a sequence of integers.
    """
    if isinstance(source, str):
        text = source.strip()
        values = [int(tok) for tok in text.split()] if " " in text else [int(ch) for ch in text]
    else:
        values = list(source)
    pattern = validate_permutation(values)
    if len(pattern) < 2:
        logger.error(f"Pattern too short: {pattern}")
        raise ValueError(f"A pattern needs length >= 2, got {pattern}")
    return pattern


def standardize(values: Sequence[int]) -> Permutation:
    """Return the permutation order-isomorphic to a sequence of distinct integers."""
    ranks = {value: rank for rank, value in enumerate(sorted(values), start=1)}
    return tuple(ranks[value] for value in values)


def contains_pattern(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    """
    Check whether some subsequence of perm is order-isomorphic to pattern.

    Brute force over index subsets; it backs the oracles only.

    :param perm: permutation to search
    :param pattern: pattern to look for
    :return: True if perm contains pattern
    """
    m = len(pattern)
    if m > len(perm):
        return False
    target = tuple(pattern)
    for indices in combinations(range(len(perm)), m):
        if standardize([perm[i] for i in indices]) == target:
            return True
    return False


def avoids_all(perm: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains_pattern(perm, pattern) for pattern in patterns)


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """
    Count the positions at which two permutations of equal length differ.

    :param a: first permutation
    :param b: second permutation
    :return: number of positions i with a_i != b_i
    """
    if len(a) != len(b):
        logger.error(f"Length mismatch: {len(a)} vs {len(b)}")
        raise ValueError(f"Cannot compare permutations of lengths {len(a)} and {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def changed_positions(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """One-indexed positions where a and b differ, in increasing order."""
    if len(a) != len(b):
        logger.error(f"Length mismatch: {len(a)} vs {len(b)}")
        raise ValueError(f"Cannot compare permutations of lengths {len(a)} and {len(b)}")
    return tuple(i for i, (x, y) in enumerate(zip(a, b), start=1) if x != y)


def is_rotation(a: Sequence[int], b: Sequence[int]) -> bool:
    """
    Check that b is obtained from a by rotating the entries at the changed
    positions by one place, in either direction.
    """
    positions = changed_positions(a, b)
    if not positions:
        return True
    old = [a[i - 1] for i in positions]
    new = [b[i - 1] for i in positions]
    return new == old[-1:] + old[:-1] or new == old[1:] + old[:1]


def transform(perm: Sequence[int], kind: TransformKind) -> Permutation:
    """
    Apply reverse, complement or their composition to a permutation.

    Applied pointwise to a list, each transform keeps every adjacent Hamming
    distance unchanged.

    :param perm: permutation of {1, ..., n}
    :param kind: which symmetry to apply
    :return: transformed permutation
    """
    kind = TransformKind(kind)
    n = len(perm)
    if kind is TransformKind.REVERSE:
        return tuple(reversed(perm))
    if kind is TransformKind.COMPLEMENT:
        return tuple(n + 1 - v for v in perm)
    return tuple(n + 1 - v for v in reversed(perm))


def transform_patterns(patterns: Iterable[Sequence[int]], kind: TransformKind) -> frozenset[Pattern]:
    """The image of a pattern set: a permutation avoids T iff its transform avoids T^kind."""
    return frozenset(transform(pattern, kind) for pattern in patterns)


def apply_transposition(u: int, v: int, perm: Sequence[int]) -> Permutation:
    """
    Compute the product (u, v) o perm: the entries at positions u and v are exchanged.

    :param u: one-indexed position
    :param v: one-indexed position
    :param perm: permutation
    :return: new permutation with the two entries swapped
    """
    n = len(perm)
    if not (1 <= u <= n and 1 <= v <= n):
        logger.error(f"Transposition ({u},{v}) out of range for length {n}")
        raise IndexError(f"Positions ({u}, {v}) out of range 1..{n}")
    result = list(perm)
    result[u - 1], result[v - 1] = result[v - 1], result[u - 1]
    return tuple(result)


def apply_simple_transpositions(perm: Sequence[int], word: Sequence[int]) -> Permutation:
    """
    Apply the product s_{w1} s_{w2} ... s_{wm} to perm, where s_i exchanges the
    entries at positions i and i+1. The product is read right to left, so s_{wm}
    acts first.
    """
    result = list(perm)
    n = len(result)
    for i in reversed(word):
        if not 1 <= i < n:
            logger.error(f"s_{i} out of range for length {n}")
            raise IndexError(f"s_{i} is not defined on permutations of length {n}")
        result[i - 1], result[i] = result[i], result[i - 1]
    return tuple(result)


def format_permutation(perm: Sequence[int]) -> str:
    return " ".join(str(v) for v in perm)


def parse_permutation(line: str) -> Permutation:
    """Parse one line of the space separated format; an empty line is the empty permutation."""
    try:
        values = [int(tok) for tok in line.split()]
    except ValueError:
        logger.error(f"Malformed permutation line: {line!r}")
        raise ValueError(f"Malformed permutation line: {line!r}") from None
    return validate_permutation(values)
