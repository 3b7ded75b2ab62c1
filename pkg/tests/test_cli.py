import io
from pathlib import Path

import pytest

from src.patgray.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, main

DATA_DIR = Path(__file__).parent / "data"


def run(argv, stdin_text=""):
    out = io.StringIO()
    status = main(argv, stdin=io.StringIO(stdin_text), stdout=out)
    return status, out.getvalue()


# Testing gen
def test_gen_s231_matches_table():
    status, output = run(["gen", "--family", "s231", "--n", "6"])
    assert status == EXIT_OK
    lines = output.splitlines()
    assert len(lines) == 132
    assert lines[0] == "6 1 2 3 4 5"
    assert lines == (DATA_DIR / "table_d6.txt").read_text().splitlines()


def test_gen_is_deterministic():
    assert run(["gen", "--family", "s312", "--n", "7"]) == run(["gen", "--family", "s312", "--n", "7"])


def test_gen_schroder_path():
    status, output = run(["gen", "--family", "schroder-path", "--n", "2"])
    assert status == EXIT_OK
    assert output.splitlines() == ["ee", "eud", "udud", "ude", "uudd", "ued"]


def test_gen_schroder_perm():
    status, output = run(["gen", "--family", "schroder-perm", "--n", "3"])
    assert output.splitlines() == ["3 2 1", "3 1 2", "1 3 2", "2 3 1", "1 2 3", "2 1 3"]


def test_gen_regular_with_directions():
    status, output = run(["gen", "--family", "regular", "--class", "321", "--n", "5", "--directions"])
    assert status == EXIT_OK
    assert output.splitlines() == (DATA_DIR / "table_c5_321.txt").read_text().splitlines()


def test_gen_regular_tree_order():
    status, output = run(["gen", "--family", "regular", "--class", "321_312", "--n", "4", "--order", "tree"])
    lines = output.splitlines()
    assert len(lines) == 8
    assert lines[0] == "1 2 3 4"


def test_gen_regular_transform():
    status, output = run(["gen", "--family", "regular", "--class", "321", "--n", "3", "--transform", "complement"])
    assert status == EXIT_OK
    assert output.splitlines()[0] == "3 2 1"


def test_gen_empty_permutation():
    status, output = run(["gen", "--family", "s231", "--n", "0"])
    assert status == EXIT_OK
    assert output == "\n"


# Testing verify
def test_verify_regular_gray():
    status, output = run(["verify", "--family", "regular", "--class", "321", "--n", "5", "--max-dist", "5", "--circular"])
    assert status == EXIT_OK
    assert "count: 42" in output.splitlines()
    assert "result: pass" in output.splitlines()


@pytest.mark.parametrize("family", ["s231", "s132", "schroder-perm", "schroder-path"])
def test_gen_then_verify_stdin(family):
    _, listing = run(["gen", "--family", family, "--n", "5"])
    status, output = run(["verify", "--family", family, "--n", "5", "--stdin"], stdin_text=listing)
    assert status == EXIT_OK
    assert "result: pass" in output


def test_verify_stdin_with_directions():
    _, listing = run(["gen", "--family", "regular", "--class", "cbc_a", "--n", "5", "--directions"])
    status, output = run(["verify", "--family", "regular", "--class", "cbc_a", "--n", "5", "--stdin", "--circular"], stdin_text=listing)
    assert status == EXIT_OK


def test_verify_detects_missing_entry():
    _, listing = run(["gen", "--family", "s231", "--n", "5"])
    damaged = "\n".join(listing.splitlines()[1:]) + "\n"
    status, output = run(["verify", "--family", "s231", "--n", "5", "--stdin"], stdin_text=damaged)
    assert status == EXIT_VERIFY_FAILED
    assert "missing: 5 1 2 3 4" in output.splitlines()


def test_verify_detects_distance():
    status, output = run(["verify", "--family", "schroder-perm", "--n", "6", "--max-dist", "2"])
    assert status == EXIT_VERIFY_FAILED
    assert "result: fail" in output


def test_verify_above_oracle_cap():
    status, output = run(["verify", "--family", "s231", "--n", "6", "--oracle-cap", "5"])
    assert status == EXIT_OK
    assert "oracle: skipped" in output


# Testing count
@pytest.mark.parametrize("argv, expected", [
    (["count", "--family", "s231", "--n", "10"], "16796"),
    (["count", "--family", "schroder-path", "--n", "9"], "206098"),
    (["count", "--family", "schroder-perm", "--n", "5"], "90"),
    (["count", "--family", "regular", "--class", "4321_4312", "--n", "5"], "90"),
    (["count", "--family", "regular", "--class", "321_3412_4123", "--n", "6"], "70"),
    (["count", "--family", "regular", "--class", "cbc_b", "--n", "4"], "20"),
    (["count", "--family", "regular", "--class", "avoid_c", "--p", "2", "--n", "5"], "42"),
])
def test_count(argv, expected):
    status, output = run(argv)
    assert status == EXIT_OK
    assert output.strip() == expected


def test_count_table():
    status, output = run(["count", "--table", "--n", "4"])
    assert status == EXIT_OK
    header = output.splitlines()[0].split()
    assert "catalan" in header and "schroder" in header


# Testing phi
def test_phi_path():
    status, output = run(["phi", "--path", "ududud"])
    assert status == EXIT_OK
    assert output == "1 4 3 2\n"


def test_phi_stdin():
    status, output = run(["phi"], stdin_text="uueudddued\neee\n\n")
    assert output.splitlines() == ["5 2 4 6 7 1 3", "4 3 2 1"]


# Testing usage errors
@pytest.mark.parametrize("argv", [
    ["phi", "--path", "udx"],
    ["phi", "--path", "du"],
    ["gen", "--family", "regular", "--n", "4"],
    ["gen", "--family", "regular", "--class", "nope", "--n", "4"],
    ["gen", "--family", "regular", "--class", "avoid_a", "--n", "4"],
    ["gen", "--family", "regular", "--class", "321", "--n", "0"],
    ["gen", "--family", "s231", "--n", "-1"],
    ["gen", "--family", "s231", "--n", "3", "--class", "321"],
    ["count", "--n", "3"],
])
def test_usage_errors(argv, capsys):
    status, _ = run(argv)
    assert status == EXIT_USAGE
    assert capsys.readouterr().err.splitlines()[-1].startswith("error: ")


def test_unknown_family_is_argparse_error():
    with pytest.raises(SystemExit) as excinfo:
        run(["gen", "--family", "s123", "--n", "3"])
    assert excinfo.value.code == 2


# Testing logging levels
def test_quiet_by_default(capsys):
    status, _ = run(["gen", "--family", "s231", "--n", "3"])
    assert status == EXIT_OK
    assert capsys.readouterr().err == ""


def test_verbose_logs_progress(capsys):
    status, _ = run(["--verbose", "gen", "--family", "s231", "--n", "3"])
    assert status == EXIT_OK
    assert "Emitted 5 lines for s231 n=3" in capsys.readouterr().err


def test_count_large_index():
    status, output = run(["count", "--family", "schroder-path", "--n", "3000"])
    assert status == EXIT_OK
    assert len(output.strip()) > 1000
