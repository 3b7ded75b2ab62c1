"""
This module builds the circular Gray code S_n of Schroder paths, the bijection
phi from paths of semilength n to S_{n+1}(1243, 2143), and the list Phi_n
obtained by mapping phi over S_n.

Paths are words over u = (1, 1), d = (1, -1) and e = (2, 0). All geometry is
done in coordinates scaled by 4, so every dot and every path vertex sits on
the integer lattice: u and d span 4 units, e spans 8.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .count_sequence import schroder
from .perm_basics import Permutation, apply_simple_transpositions

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

SchroderPath = str

STEP_WIDTH = {"u": 4, "d": 4, "e": 8}
STEP_SLOPE = {"u": 1, "d": -1, "e": 0}


@dataclass(frozen=True)
class Dot:
    """A lattice point under a path, in coordinates scaled by 4."""

    x4: int
    y4: int
    label: int


@dataclass(frozen=True)
class SigmaFactor:
    """The product s_k s_{k-1} ... s_l read off one horizontal line of dots."""

    k: int
    l: int  # noqa: E741

    def word(self) -> tuple[int, ...]:
        return tuple(range(self.k, self.l - 1, -1))


def validate_path(word: str) -> SchroderPath:
    """
    Check that a word over u, d, e is a Schroder path.

    :param word: lowercase step letters without separators
    :return: the word itself
    """
    height = 0
    for position, step in enumerate(word, start=1):
        if step not in STEP_SLOPE:
            logger.error(f"Bad step {step!r} in path {word!r}")
            raise ValueError(f"Path letters must be u, d or e; got {step!r} at position {position}")
        height += STEP_SLOPE[step]
        if height < 0:
            logger.error(f"Path {word!r} goes below the axis at step {position}")
            raise ValueError(f"Path {word!r} goes below the x-axis at step {position}")
    if height != 0:
        logger.error(f"Path {word!r} ends at height {height}")
        raise ValueError(f"Path {word!r} must end at height 0, ends at {height}")
    return word


def semilength(word: SchroderPath) -> int:
    return word.count("u") + word.count("e")


@lru_cache(maxsize=None)
def _s_lists(n: int) -> tuple[tuple[SchroderPath, ...], ...]:
    """S_0, ..., S_n built bottom-up."""
    if n == 0:
        return ("",),
    lists = _s_lists(n - 1)
    current: list[SchroderPath] = ["e" + path for path in lists[n - 1]]
    # count of alphas emitted so far; beta runs forward when j + B(i) + 1 is odd
    alphas_seen = 0
    for i in range(1, n + 1):
        alphas = lists[i - 1] if (n + i) % 2 == 1 else lists[i - 1][::-1]
        betas = lists[n - i]
        for alpha in alphas:
            ordered = betas if alphas_seen % 2 == 1 else betas[::-1]
            current.extend("u" + alpha + "d" + beta for beta in ordered)
            alphas_seen += 1
    logger.debug(f"Built S_{n} with {len(current)} paths")
    return lists + (tuple(current),)


def build_s_paths(n: int) -> tuple[SchroderPath, ...]:
    """
    Build the circular Gray code S_n of all Schroder paths of semilength n.

    The list opens with e^n and closes with u e^{n-1} d.

    :param n: semilength, n >= 0
    :return: the r_n paths in Gray order
    """
    if n < 0:
        logger.error(f"Negative semilength {n}")
        raise ValueError(f"n must be >= 0, got {n}")
    return _s_lists(n)[n]


def count_s_paths(n: int) -> int:
    if n < 0:
        logger.error(f"Negative semilength {n}")
        raise ValueError(f"n must be >= 0, got {n}")
    return schroder(n)


def _expand_flat(word: SchroderPath) -> str:
    return word.replace("e", "rr")


def path_distance(a: SchroderPath, b: SchroderPath) -> int:
    """
    Hamming distance between two paths once every e is rewritten as rr.

    :param a: first path
    :param b: second path, same semilength
    :return: number of differing letters in the expanded words
    """
    if semilength(a) != semilength(b):
        logger.error(f"Semilength mismatch: {a!r} vs {b!r}")
        raise ValueError(f"Paths {a!r} and {b!r} have different semilengths")
    return sum(1 for x, y in zip(_expand_flat(a), _expand_flat(b)) if x != y)


def height_profile(word: SchroderPath) -> np.ndarray:
    """Scaled path height at every scaled abscissa 0 .. 8n."""
    validate_path(word)
    slopes = [STEP_SLOPE[step] for step in word for _ in range(STEP_WIDTH[step])]
    return np.concatenate(([0], np.cumsum(slopes, dtype=np.int64)))


def _dots_from_profile(n: int, heights: np.ndarray) -> list[Dot]:
    dots = []
    for m in range(n):
        for x4, y4 in ((8 * m + 1, 5), (8 * m + 5, 1)):
            while y4 < heights[x4]:
                dots.append(Dot(x4=x4, y4=y4, label=(4 + x4 - y4) // 8))
                y4 += 8
    return dots


def place_dots(word: SchroderPath) -> frozenset[Dot]:
    """
    Every dot of the two quarter-lattice families strictly below the path.

    Dots sit at (2m + 1/4, 2a + 5/4) and (2m + 5/4, 2a + 1/4); the dot at
    (x, y) carries the label (1 + x - y) / 2.
    """
    heights = height_profile(word)
    return frozenset(_dots_from_profile(semilength(word), heights))


def sigma_decomposition(word: SchroderPath) -> list[SigmaFactor]:
    """
    Cover the dots with horizontal lines, rightmost unlined dot first.

    Each line runs left from its starting dot through every dot it can reach
    while the path stays strictly above the line.

    :param word: Schroder path
    :return: the factors sigma_1, sigma_2, ... in selection order
    """
    heights = height_profile(word)
    dots = _dots_from_profile(semilength(word), heights)
    present = {(dot.x4, dot.y4) for dot in dots}
    lined: set[tuple[int, int]] = set()
    factors = []
    # equal abscissa: larger label first
    for dot in sorted(dots, key=lambda d: (d.x4, d.label), reverse=True):
        if (dot.x4, dot.y4) in lined:
            continue
        x4, y4 = dot.x4, dot.y4
        lined.add((x4, y4))
        while (x4 - 8, y4) in present and heights[x4 - 8:x4 + 1].min() > y4:
            x4 -= 8
            lined.add((x4, y4))
        factors.append(SigmaFactor(k=dot.label, l=(4 + x4 - y4) // 8))
    return factors


def phi(word: SchroderPath) -> Permutation:
    """
    Map a path of semilength n to a permutation of S_{n+1}(1243, 2143).

    sigma_1 acts first on (n+1, n, ..., 1), then sigma_2, and so on.
    """
    n = semilength(word)
    perm: Permutation = tuple(range(n + 1, 0, -1))
    for factor in sigma_decomposition(word):
        perm = apply_simple_transpositions(perm, factor.word())
    return perm


@lru_cache(maxsize=None)
def _phi_list(n: int) -> tuple[Permutation, ...]:
    return tuple(phi(word) for word in build_s_paths(n))


def build_phi_list(n: int) -> tuple[Permutation, ...]:
    """
    Phi_n: phi mapped over S_n, a Gray code for S_{n+1}(1243, 2143) in which
    adjacent permutations differ in at most 5 places.
    """
    if n < 0:
        logger.error(f"Negative semilength {n}")
        raise ValueError(f"n must be >= 0, got {n}")
    phis = _phi_list(n)
    logger.debug(f"Built Phi_{n} with {len(phis)} permutations")
    return phis


def iter_phi_list(n: int) -> Iterator[Permutation]:
    for word in build_s_paths(n):
        yield phi(word)
