"""
Command-line front end.

    patgray gen --family s231 --n 6
    patgray gen --family regular --class 321 --n 5 --order gray --directions
    patgray verify --family schroder-perm --n 5 --max-dist 5
    patgray count --family regular --class 4321_4312 --n 10
    patgray count --table --n 12
    patgray phi --path uueudddued

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence, TextIO

import pandas as pd

from .catalan_231 import PATTERN3_TRANSFORMS, iter_pattern3_list
from .count_sequence import catalan, schroder, sequence_table, sequence_term
from .gray_verify import DEFAULT_ORACLE_CAP, GrayReport, GrayVerifier, check_path_gray
from .perm_basics import Pattern, Permutation, TransformKind, format_permutation, parse_permutation, transform, transform_patterns
from .regular_pattern import AvoidGenerator, SuccessionRule, iter_c_list, lookup
from .schroder_path import build_s_paths, count_s_paths, iter_phi_list, phi, validate_path

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

FAMILIES = ("s231", "s132", "s213", "s312", "schroder-path", "schroder-perm", "regular")
SCHRODER_PERM_PATTERNS: frozenset[Pattern] = frozenset({(1, 2, 4, 3), (2, 1, 4, 3)})


@dataclass
class FamilyPlan:
    """What a family emits for a given n, and how it is checked."""

    lines: Callable[[], Iterator[str]]
    count: Callable[[], int]
    patterns: frozenset[Pattern] = field(default_factory=frozenset)
    default_max_dist: Optional[int] = None
    is_paths: bool = False


def _regular_rule(args: argparse.Namespace) -> SuccessionRule:
    if not args.class_name:
        raise ValueError("--class is required for the regular family")
    return lookup(args.class_name, p=args.p)


def _regular_plan(args: argparse.Namespace) -> FamilyPlan:
    if args.n < 1:
        raise ValueError(f"n must be >= 1 for the regular family, got {args.n}")
    rule = _regular_rule(args)
    kind = TransformKind(args.transform) if args.transform else None
    patterns = transform_patterns(rule.patterns, kind) if kind else rule.patterns

    def shaped(perm: Permutation) -> Permutation:
        if kind is None:
            return perm
        return transform(perm, kind)

    def lines() -> Iterator[str]:
        if args.order == "tree":
            for perm in AvoidGenerator(rule, args.n):
                yield format_permutation(shaped(perm))
            return
        for node in iter_c_list(rule, args.n):
            text = format_permutation(shaped(node.perm))
            yield f"{text}\t{node.direction.name.lower()}" if getattr(args, "directions", False) else text

    def count() -> int:
        if rule.family is not None:
            return sequence_term(rule.family, args.n - rule.offset)
        return sum(1 for _ in AvoidGenerator(rule, args.n))

    return FamilyPlan(lines, count, patterns, default_max_dist=5 if args.order == "gray" else None)


def build_plan(args: argparse.Namespace) -> FamilyPlan:
    """Resolve the family options into generators, counts and check settings."""
    if args.n < 0:
        raise ValueError(f"n must be >= 0, got {args.n}")
    if args.family != "regular" and (args.transform or args.class_name):
        raise ValueError("--class and --transform apply to the regular family only")
    if args.family.startswith("s") and args.family[1:] in PATTERN3_TRANSFORMS:
        pattern = args.family[1:]
        return FamilyPlan(
            lambda: (format_permutation(perm) for perm in iter_pattern3_list(args.n, pattern)),
            lambda: catalan(args.n),
            frozenset({tuple(int(ch) for ch in pattern)}),
            default_max_dist=4,
        )
    if args.family == "schroder-path":
        return FamilyPlan(
            lambda: iter(build_s_paths(args.n)),
            lambda: count_s_paths(args.n),
            default_max_dist=5,
            is_paths=True,
        )
    if args.family == "schroder-perm":
        if args.n < 1:
            raise ValueError(f"n must be >= 1 for schroder-perm, got {args.n}")
        return FamilyPlan(
            lambda: (format_permutation(perm) for perm in iter_phi_list(args.n - 1)),
            lambda: schroder(args.n - 1),
            SCHRODER_PERM_PATTERNS,
            default_max_dist=5,
        )
    return _regular_plan(args)


def _read_lines(stream: TextIO) -> list[str]:
    return [line.split("\t")[0] for line in stream.read().splitlines()]


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    plan = build_plan(args)
    emitted = 0
    for line in plan.lines():
        out.write(line + "\n")
        emitted += 1
    logger.info(f"Emitted {emitted} lines for {args.family} n={args.n}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    plan = build_plan(args)
    max_dist = args.max_dist if args.max_dist is not None else plan.default_max_dist
    lines = _read_lines(stdin) if args.stdin else list(plan.lines())
    report: GrayReport
    if plan.is_paths:
        report = check_path_gray([validate_path(line.strip()) for line in lines], max_dist=max_dist, circular=args.circular)
    else:
        verifier = GrayVerifier(oracle_cap=args.oracle_cap)
        perms = [parse_permutation(line) for line in lines]
        report = verifier.check_complete(perms, plan.patterns, max_dist=max_dist, circular=args.circular)
    out.write(report.render() + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    if args.table:
        if args.n < 0:
            raise ValueError(f"n must be >= 0, got {args.n}")
        table: pd.DataFrame = sequence_table(args.n)
        out.write(table.to_string() + "\n")
        return EXIT_OK
    if not args.family:
        raise ValueError("count needs --family or --table")
    out.write(f"{build_plan(args).count()}\n")
    return EXIT_OK


def cmd_phi(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    words = [args.path] if args.path is not None else [line for line in stdin.read().splitlines() if line.strip()]
    for word in words:
        out.write(format_permutation(phi(validate_path(word.strip()))) + "\n")
    return EXIT_OK


def _add_family_options(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--family", choices=FAMILIES, required=required, help="Which class of objects to list")
    parser.add_argument("--n", type=int, required=True, help="Permutation length, or path semilength for schroder-path")
    parser.add_argument("--class", dest="class_name", help="Regular class name, e.g. 321 or avoid_c")
    parser.add_argument("--p", type=int, help="Parameter of avoid_a, avoid_b and avoid_c")
    parser.add_argument("--order", choices=("tree", "gray"), default="gray", help="Order of a regular list (default gray)")
    parser.add_argument("--transform", choices=[kind.value for kind in TransformKind], help="Symmetry applied to a regular list")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="patgray", description="Gray codes for pattern-avoiding permutations")
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", help="Stream a list, one entry per line")
    _add_family_options(gen)
    gen.add_argument("--directions", action="store_true", help="Append a tab and up/down to each regular gray entry")

    verify = subparsers.add_parser("verify", help="Check distances, duplicates and completeness of a list")
    _add_family_options(verify)
    verify.add_argument("--max-dist", type=int, help="Largest adjacent distance allowed (default per family)")
    verify.add_argument("--circular", action="store_true", help="Also bound the last-to-first distance")
    verify.add_argument("--stdin", action="store_true", help="Check the list read from standard input")
    verify.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP, help="Largest n checked against brute force")

    count = subparsers.add_parser("count", help="Print the size of a class")
    _add_family_options(count, required=False)
    count.add_argument("--table", action="store_true", help="Print every counting sequence up to n")

    phi_cmd = subparsers.add_parser("phi", help="Map Schroder path words to permutations")
    phi_cmd.add_argument("--path", help="Path word over u, d, e; read one word per line from stdin when absent")
    return parser


def main(argv: Optional[Sequence[str]] = None, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.INFO if args.verbose else logging.WARNING
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    logging.basicConfig(level=level, handlers=[handler], force=True)
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    try:
        if args.command == "gen":
            return cmd_gen(args, out)
        if args.command == "verify":
            return cmd_verify(args, out, stdin)
        if args.command == "count":
            return cmd_count(args, out)
        return cmd_phi(args, out, stdin)
    except (ValueError, IndexError, KeyError) as exc:
        message = exc.args[0] if exc.args else repr(exc)
        sys.stderr.write(f"error: {message}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
