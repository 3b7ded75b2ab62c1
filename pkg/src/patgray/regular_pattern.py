"""
Generating trees for regular pattern sets.

A node of the tree is a permutation avoiding T; its children are obtained by
inserting n+1 into its active sites, numbered from right to left. T is regular
when the active sites of every node are right justified and the number of
active sites of the i-th child depends only on i and the number k of active
sites of the parent. That number is the succession function chi(i, k).

The module holds the catalog of known regular sets, the constant amortized
time generator that walks the tree in tree order, and the Gray-ordered list
C_n in which adjacent permutations differ in at most five positions.
"""

import logging
from dataclasses import dataclass, field
from enum import IntEnum
from itertools import permutations
from typing import Callable, Iterator, Optional

from .count_sequence import CountFamily
from .perm_basics import (
    Pattern,
    Permutation,
    TransformKind,
    avoids_all,
    transform,
    transform_patterns,
)

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

Chi = Callable[[int, int], int]

PARAMETERIZED_CLASSES = ("avoid_a", "avoid_b", "avoid_c")


class Direction(IntEnum):
    DOWN = 0
    UP = 1

    def flipped(self) -> "Direction":
        return Direction.UP if self is Direction.DOWN else Direction.DOWN


@dataclass(frozen=True)
class SuccessionRule:
    """
    A regular pattern set and its succession function.

    |S_n(T)| = sequence_term(family, n - offset) when family is known.
    """

    name: str
    patterns: frozenset[Pattern]
    chi: Chi = field(compare=False)
    family: Optional[CountFamily] = None
    offset: int = 0
    p: Optional[int] = None
    root_k: int = 2

    def label(self) -> str:
        return self.name if self.p is None else f"{self.name}(p={self.p})"


@dataclass(frozen=True)
class DirectedPermutation:
    perm: Permutation
    direction: Direction
    k: int


@dataclass(frozen=True)
class CList:
    """The Gray-ordered list C_n of a rule, with directions and active-site counts."""

    class_name: str
    n: int
    entries: tuple[DirectedPermutation, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[DirectedPermutation]:
        return iter(self.entries)

    @property
    def perms(self) -> tuple[Permutation, ...]:
        return tuple(entry.perm for entry in self.entries)


def _patterns(*words: str) -> frozenset[Pattern]:
    return frozenset(tuple(int(ch) for ch in word) for word in words)


def _shifted_max_pattern(p: int) -> Pattern:
    """(p+1) 1 2 ... p"""
    return (p + 1,) + tuple(range(1, p + 1))


def _check_p(p: int) -> None:
    if p < 2:
        logger.error(f"Parameter p={p} < 2")
        raise ValueError(f"p must be >= 2, got {p}")


def _avoid_a(p: int) -> SuccessionRule:
    def chi(i: int, k: int) -> int:
        if i == 1:
            return k + 1 if k < p else p
        return i

    return SuccessionRule("avoid_a", frozenset({(3, 2, 1), _shifted_max_pattern(p)}), chi, p=p)


def _avoid_b(p: int) -> SuccessionRule:
    def chi(i: int, k: int) -> int:
        if i == 1:
            return k + 1 if k < p else p
        return 2

    return SuccessionRule("avoid_b", frozenset({(3, 2, 1), (3, 4, 1, 2), _shifted_max_pattern(p)}), chi, p=p)


def _avoid_c(p: int) -> SuccessionRule:
    def chi(i: int, k: int) -> int:
        if k < p or i > k - p + 1:
            return k + 1
        return i + p - 1

    patterns = frozenset((p + 1,) + tau + (p,) for tau in permutations(range(1, p)))
    return SuccessionRule("avoid_c", patterns, chi, p=p)


def catalog(p: int = 3) -> list[SuccessionRule]:
    """
    Every known regular set with its succession function.

    :param p: parameter shared by the parameterized classes avoid_a, avoid_b and avoid_c
    :return: the fixed rules followed by the three parameterized ones
    """
    _check_p(p)
    rules = [
        SuccessionRule("321_312", _patterns("321", "312"), lambda i, k: 2, CountFamily.POWER_OF_TWO, offset=1),
        SuccessionRule("321_3412_4123", _patterns("321", "3412", "4123"), lambda i, k: 3 if i == 1 else 2, CountFamily.PELL),
        SuccessionRule("321_3412", _patterns("321", "3412"), lambda i, k: k + 1 if i == 1 else 2, CountFamily.FIBONACCI_EVEN_INDEX),
        SuccessionRule("321_4123", _patterns("321", "4123"), lambda i, k: 3 if i == 1 else i, CountFamily.FIBONACCI_EVEN_INDEX),
        SuccessionRule("312", _patterns("312"), lambda i, k: i + 1, CountFamily.CATALAN),
        SuccessionRule("321", _patterns("321"), lambda i, k: k + 1 if i == 1 else i, CountFamily.CATALAN),
        SuccessionRule("4321_4312", _patterns("4321", "4312"), lambda i, k: k + 1 if i in (1, 2) else i, CountFamily.SCHRODER, offset=1),
        SuccessionRule("4231_4132", _patterns("4231", "4132"), lambda i, k: k + 1 if i in (1, k) else i + 1, CountFamily.SCHRODER, offset=1),
        SuccessionRule("4123_4213", _patterns("4123", "4213"), lambda i, k: k + 1 if i in (k - 1, k) else i + 2, CountFamily.SCHRODER, offset=1),
        SuccessionRule(
            "cbc_a",
            _patterns("4321", "4231", "4312", "4132"),
            lambda i, k: k + 1 if i == 1 else (3 if i == 2 else i),
            CountFamily.CENTRAL_BINOMIAL,
            offset=1,
        ),
        SuccessionRule(
            "cbc_b",
            _patterns("4231", "4132", "4213", "4123"),
            lambda i, k: 3 if i == 1 else i + 1,
            CountFamily.CENTRAL_BINOMIAL,
            offset=1,
        ),
    ]
    rules.extend([_avoid_a(p), _avoid_b(p), _avoid_c(p)])
    return rules


def lookup(name: str, p: Optional[int] = None) -> SuccessionRule:
    """
    Find a rule by class name.

    :param name: class name, e.g. "321" or "avoid_c"
    :param p: required for avoid_a, avoid_b and avoid_c, ignored otherwise
    :return: the matching SuccessionRule
    """
    if name in PARAMETERIZED_CLASSES:
        if p is None:
            logger.error(f"Class {name} needs a value for p")
            raise ValueError(f"Class {name} is parameterized, p is required")
        _check_p(p)
        rules = catalog(p)
    else:
        rules = catalog()
    for rule in rules:
        if rule.name == name:
            return rule
    logger.error(f"Unknown class {name}")
    raise KeyError(f"Unknown class {name!r}; known classes: {[rule.name for rule in rules]}")


def insert_at_site(perm: Permutation, site: int) -> Permutation:
    """
    Insert len(perm)+1 into a site; sites are numbered from right to left, so
    site 1 appends and site len(perm)+1 prepends.
    """
    n = len(perm)
    if not 1 <= site <= n + 1:
        logger.error(f"Site {site} out of range for length {n}")
        raise IndexError(f"Site must be in 1..{n + 1}, got {site}")
    index = n + 1 - site
    return perm[:index] + (n + 1,) + perm[index:]


def active_sites(perm: Permutation, patterns: frozenset[Pattern]) -> tuple[int, ...]:
    """Sites where inserting n+1 keeps perm avoiding every pattern, by direct testing."""
    return tuple(
        site for site in range(1, len(perm) + 2)
        if avoids_all(insert_at_site(perm, site), patterns)
    )


class AvoidGenerator:
    """
    Depth-first generation of S_n(T) in tree order.

    A single list is mutated in place: the first child appends n+1, every
    next child moves it one place left with an adjacent transposition, and a
    reverse sweep restores the parent afterwards. `calls` counts the
    recursive invocations of the last run.
    """

    def __init__(self, rule: SuccessionRule, n: int):
        if n < 1:
            logger.error(f"Length {n} < 1")
            raise ValueError(f"n must be >= 1, got {n}")
        self.rule = rule
        self.n = n
        self.calls = 0

    def __iter__(self) -> Iterator[Permutation]:
        self.calls = 0
        perm = [1]
        yield from self._gen(perm, self.rule.root_k)
        logger.debug(f"Generated {self.rule.label()} up to n={self.n} in {self.calls} calls")

    def _gen(self, perm: list[int], k: int) -> Iterator[Permutation]:
        self.calls += 1
        size = len(perm)
        if size == self.n:
            yield tuple(perm)
            return
        size += 1
        perm.append(size)
        chi = self.rule.chi
        for i in range(1, k + 1):
            yield from self._gen(perm, chi(i, k))
            if i < k:
                perm[size - i], perm[size - i - 1] = perm[size - i - 1], perm[size - i]
        for j in range(size - k, size - 1):
            perm[j], perm[j + 1] = perm[j + 1], perm[j]
        perm.pop()


def gen_avoid(rule: SuccessionRule, n: int) -> list[Permutation]:
    return list(AvoidGenerator(rule, n))


def l_sequence(k: int) -> tuple[int, ...]:
    """
    The unimodal site order: odd indices ascending, then even indices
    descending. l_sequence(5) == (1, 3, 5, 4, 2), l_sequence(4) == (1, 3, 4, 2).
    """
    if k < 1:
        logger.error(f"Site count {k} < 1")
        raise ValueError(f"k must be >= 1, got {k}")
    top_even = k if k % 2 == 0 else k - 1
    return tuple(range(1, k + 1, 2)) + tuple(range(top_even, 1, -2))


def successors(node: DirectedPermutation, rule: SuccessionRule) -> list[DirectedPermutation]:
    """
    Children of a directed node in Gray order.

    An up node inserts in the sites l_sequence(k) in turn; the first child is
    up and the others are down. A down node lists the same children reversed,
    each with its direction flipped.
    """
    if node.k < 2:
        logger.error(f"Node {node.perm} has k={node.k} < 2")
        raise ValueError(f"A regular node needs k >= 2, got {node.k}")
    children = [
        DirectedPermutation(
            perm=insert_at_site(node.perm, site),
            direction=Direction.UP if j == 0 else Direction.DOWN,
            k=rule.chi(site, node.k),
        )
        for j, site in enumerate(l_sequence(node.k))
    ]
    if node.direction is Direction.UP:
        return children
    return [
        DirectedPermutation(perm=child.perm, direction=child.direction.flipped(), k=child.k)
        for child in reversed(children)
    ]


def _root(rule: SuccessionRule) -> DirectedPermutation:
    return DirectedPermutation(perm=(1,), direction=Direction.UP, k=rule.root_k)


def build_c_list(rule: SuccessionRule, n: int) -> CList:
    """
    Build C_n level by level from C_1 = ((1) up).

    :param rule: regular set with its succession function
    :param n: permutation length, n >= 1
    :return: CList whose permutations form a Gray code with distance at most 5
    """
    if n < 1:
        logger.error(f"Length {n} < 1")
        raise ValueError(f"n must be >= 1, got {n}")
    level = [_root(rule)]
    for size in range(2, n + 1):
        level = [child for node in level for child in successors(node, rule)]
        logger.debug(f"C_{size} for {rule.label()} has {len(level)} entries")
    return CList(class_name=rule.label(), n=n, entries=tuple(level))


def iter_c_list(rule: SuccessionRule, n: int) -> Iterator[DirectedPermutation]:
    """C_n depth first; only one successor list per level is held at a time."""
    if n < 1:
        logger.error(f"Length {n} < 1")
        raise ValueError(f"n must be >= 1, got {n}")
    stack: list[Iterator[DirectedPermutation]] = [iter([_root(rule)])]
    while stack:
        node = next(stack[-1], None)
        if node is None:
            stack.pop()
            continue
        if len(node.perm) == n:
            yield node
        else:
            stack.append(iter(successors(node, rule)))


def build_transformed_list(
    rule: SuccessionRule, n: int, kind: TransformKind
) -> tuple[frozenset[Pattern], tuple[Permutation, ...]]:
    """
    Gray code for the reverse, complement or reverse-complement of a regular set.

    :return: the transformed pattern set and the transformed C_n, same distances
    """
    kind = TransformKind(kind)
    perms = tuple(transform(entry.perm, kind) for entry in iter_c_list(rule, n))
    return transform_patterns(rule.patterns, kind), perms
