from pathlib import Path

import pytest

from src.patgray.count_sequence import schroder
from src.patgray.gray_verify import brute_force_avoiders
from src.patgray.perm_basics import apply_simple_transpositions, hamming_distance
from src.patgray.schroder_path import (
    Dot,
    SigmaFactor,
    build_phi_list,
    build_s_paths,
    count_s_paths,
    height_profile,
    iter_phi_list,
    path_distance,
    phi,
    place_dots,
    semilength,
    sigma_decomposition,
    validate_path,
)

DATA_DIR = Path(__file__).parent / "data"

EXAMPLE_PATH = "uueudddued"

# Rows whose printed path repeats its neighbour; the value is the path the construction produces.
TABLE_PHI3_TYPOS = {13: "uede"}
TABLE_PHI4_TYPOS = {13: "euede", 32: "uduede", 78: "uueded"}


def read_table(name):
    rows = []
    for line in (DATA_DIR / name).read_text().splitlines():
        word, perm = line.split()
        rows.append((word, tuple(int(ch) for ch in perm)))
    return rows


def all_paths(n):
    """Independent enumeration by choosing u, e or d at every step."""
    def walk(prefix, height, remaining):
        if remaining == 0:
            yield prefix + "d" * height
            return
        yield from walk(prefix + "u", height + 1, remaining - 1)
        yield from walk(prefix + "e", height, remaining - 1)
        if height:
            yield from walk(prefix + "d", height - 1, remaining)

    return set(walk("", 0, n))


# Testing path validation
def test_validate_path():
    assert validate_path("eud") == "eud"
    assert validate_path("") == ""


@pytest.mark.parametrize("word", ["du", "uud", "ux", "euded", "U"])
def test_validate_path_rejects(word):
    with pytest.raises(ValueError):
        validate_path(word)


def test_semilength():
    assert semilength("") == 0
    assert semilength(EXAMPLE_PATH) == 6


# Testing the list S_n
def test_small_path_lists():
    assert build_s_paths(0) == ("",)
    assert build_s_paths(1) == ("e", "ud")
    assert build_s_paths(2) == ("ee", "eud", "udud", "ude", "uudd", "ued")


@pytest.mark.parametrize("n", range(0, 10))
def test_path_counts(n):
    assert len(build_s_paths(n)) == schroder(n) == count_s_paths(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_path_list_endpoints(n):
    paths = build_s_paths(n)
    assert paths[0] == "e" * n
    assert paths[-1] == "u" + "e" * (n - 1) + "d"


@pytest.mark.parametrize("n", range(0, 9))
def test_path_list_is_complete(n):
    paths = build_s_paths(n)
    assert len(set(paths)) == len(paths)
    assert set(paths) == all_paths(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_path_list_is_circular_gray_code(n):
    paths = build_s_paths(n)
    for a, b in zip(paths, paths[1:] + paths[:1]):
        assert path_distance(a, b) <= 5


def test_negative_semilength():
    with pytest.raises(ValueError):
        build_s_paths(-1)
    with pytest.raises(ValueError):
        count_s_paths(-1)
    with pytest.raises(ValueError):
        build_phi_list(-1)


# Testing the path distance
def test_path_distance():
    assert path_distance("e", "ud") == 2
    assert path_distance("ued", "eud") == 2
    assert path_distance(EXAMPLE_PATH, EXAMPLE_PATH) == 0


def test_path_distance_semilength_mismatch():
    with pytest.raises(ValueError):
        path_distance("e", "ee")


# Testing the geometry
def test_height_profile():
    assert list(height_profile("ud")) == [0, 1, 2, 3, 4, 3, 2, 1, 0]
    assert list(height_profile("e")) == [0] * 9
    assert list(height_profile("")) == [0]


def test_place_dots_flat_path():
    assert place_dots("eeee") == frozenset()


def test_place_dots_single_peak():
    assert place_dots("ud") == frozenset({Dot(x4=5, y4=1, label=1)})


def test_place_dots_example():
    dots = place_dots(EXAMPLE_PATH)
    assert len(dots) == 10
    rows = {}
    for dot in dots:
        rows.setdefault(dot.y4, set()).add(dot.label)
    # the lines s_6 s_5 and s_4 s_3 s_2 s_1 share the lowest row
    assert rows == {1: {1, 2, 3, 4, 5, 6}, 5: {1, 2, 3}, 9: {2}}


@pytest.mark.parametrize("word", ["uueudddued", "uuuddd", "ueuded", "uduudd"])
def test_dot_labels_follow_families(word):
    for dot in place_dots(word):
        if dot.x4 % 8 == 1:
            m, a = (dot.x4 - 1) // 8, (dot.y4 - 5) // 8
            assert dot.label == m - a
        else:
            m, a = (dot.x4 - 5) // 8, (dot.y4 - 1) // 8
            assert dot.label == m - a + 1
        assert dot.label >= 1


def test_sigma_decomposition_example():
    assert sigma_decomposition(EXAMPLE_PATH) == [SigmaFactor(6, 5), SigmaFactor(4, 1), SigmaFactor(3, 1), SigmaFactor(2, 2)]


def test_sigma_decomposition_flat_path():
    assert sigma_decomposition("eee") == []


def test_sigma_factor_word():
    assert SigmaFactor(4, 1).word() == (4, 3, 2, 1)
    assert SigmaFactor(2, 2).word() == (2,)


# Testing phi
def test_example_factors_applied_by_hand():
    perm = (7, 6, 5, 4, 3, 2, 1)
    for word in [(6, 5), (4, 3, 2, 1), (3, 2, 1), (2,)]:
        perm = apply_simple_transpositions(perm, word)
    assert perm == (5, 2, 4, 6, 7, 1, 3)


def test_phi_example():
    assert phi(EXAMPLE_PATH) == (5, 2, 4, 6, 7, 1, 3)


def test_phi_small():
    assert phi("") == (1,)
    assert phi("ududud") == (1, 4, 3, 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_phi_endpoints(n):
    assert phi("e" * n) == tuple(range(n + 1, 0, -1))
    assert phi("u" + "e" * (n - 1) + "d") == tuple(range(n, 0, -1)) + (n + 1,)


def test_phi_lists_small():
    assert build_phi_list(1) == ((2, 1), (1, 2))
    assert build_phi_list(2) == ((3, 2, 1), (3, 1, 2), (1, 3, 2), (2, 3, 1), (1, 2, 3), (2, 1, 3))


def test_iter_phi_list_matches_build():
    assert tuple(iter_phi_list(5)) == build_phi_list(5)


# Testing the published lists for n = 3 and n = 4
@pytest.mark.parametrize("n, table, typos", [
    (3, "table_phi3.txt", TABLE_PHI3_TYPOS),
    (4, "table_phi4.txt", TABLE_PHI4_TYPOS),
])
def test_phi_lists_match_tables(n, table, typos):
    rows = read_table(table)
    paths = build_s_paths(n)
    assert len(paths) == len(rows)
    assert list(build_phi_list(n)) == [perm for _, perm in rows]
    differing = {row: path for row, (path, (printed, _)) in enumerate(zip(paths, rows), start=1) if path != printed}
    assert differing == typos
    for row, (path, perm) in enumerate(rows, start=1):
        assert phi(typos.get(row, path)) == perm


# Testing the Gray property and the image of phi
@pytest.mark.parametrize("n", range(1, 9))
def test_phi_list_distance(n):
    perms = build_phi_list(n)
    assert max(hamming_distance(a, b) for a, b in zip(perms, perms[1:])) <= 5


@pytest.mark.parametrize("n", range(0, 8))
def test_phi_image_is_avoider_set(n):
    perms = build_phi_list(n)
    assert len(set(perms)) == len(perms)
    assert set(perms) == brute_force_avoiders([(1, 2, 4, 3), (2, 1, 4, 3)], n + 1)
