"""
Command-line front end.

    validate     SPEC
    reynolds     SPEC --j J EXPR
    decompose    SPEC EXPR [--verify]
    gamma-basis  SPEC [--method M]
    verify       SPEC [--degree D] [--drop EXPR]... [--method M]

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 validation or verification failure, 2 usage or parse error.
"""

import argparse
import os
import sys
from typing import List, Optional, Sequence

from config import METHODS, ToolConfig, load_config, validate_degree_bound
from expr_parser import LoadedSpec, ParseError, SpecFileError, load_spec_file, parse_poly, print_poly
from group import validate_spec
from hilbert import gamma_basis
from oracle import OracleInapplicable, certify
from reynolds import DecompositionError, decompose, reynolds


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'config.json')


def _log(config: ToolConfig, message: str) -> None:
    if config.verbose:
        print(message, file=sys.stderr)


def _error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _load_valid_spec(path: str, config: ToolConfig) -> Optional[LoadedSpec]:
    """Load and validate; print the report to stderr and return None on failure."""
    _log(config, f"Loading {path}...")
    spec = load_spec_file(path)
    report = validate_spec(spec.group, spec.h_basis, spec.labels)
    if not report.ok:
        for line in report.lines():
            print(line, file=sys.stderr)
        return None
    for line in report.warnings:
        print(f"⚠️  {line}", file=sys.stderr)
    return spec


def cmd_validate(args, config: ToolConfig) -> int:
    spec = load_spec_file(args.spec)
    report = validate_spec(spec.group, spec.h_basis, spec.labels)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_reynolds(args, config: ToolConfig) -> int:
    spec = _load_valid_spec(args.spec, config)
    if spec is None:
        return EXIT_FAILURE
    f = parse_poly(args.expr, spec.group.table)
    print(print_poly(reynolds(spec.group, args.j, f)))
    return EXIT_OK


def cmd_decompose(args, config: ToolConfig) -> int:
    spec = _load_valid_spec(args.spec, config)
    if spec is None:
        return EXIT_FAILURE
    f = parse_poly(args.expr, spec.group.table)
    try:
        decomposition = decompose(spec.group, f, verify=config.verify_decompositions)
    except DecompositionError as exc:
        _error(f"decomposition check failed: {exc}")
        return EXIT_FAILURE
    for j, component in enumerate(decomposition.components):
        print(f"j={j}: {print_poly(component)}")
    return EXIT_OK


def cmd_gamma_basis(args, config: ToolConfig) -> int:
    spec = _load_valid_spec(args.spec, config)
    if spec is None:
        return EXIT_FAILURE
    _log(config, f"Transferring {len(spec.h_basis)} basis elements (method: {config.method})...")
    generators = gamma_basis(spec.group, spec.h_basis, config.method)
    for generator in generators:
        print(f"{print_poly(generator.poly)}  # {generator.provenance}")
    return EXIT_OK


def cmd_verify(args, config: ToolConfig) -> int:
    spec = _load_valid_spec(args.spec, config)
    if spec is None:
        return EXIT_FAILURE
    generators = gamma_basis(spec.group, spec.h_basis, config.method)
    for src in args.drop:
        unwanted = parse_poly(src, spec.group.table)
        remaining = generators.without(unwanted)
        if len(remaining) == len(generators):
            print(f"⚠️  --drop {src}: no generator matches", file=sys.stderr)
        generators = remaining

    _log(config, f"Computing invariants up to degree {config.degree_bound}...")
    try:
        report = certify(spec.group, generators, config.degree_bound)
    except OracleInapplicable as exc:
        _error(f"oracle not applicable: {exc}")
        return EXIT_FAILURE
    for line in report.table_lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=DEFAULT_CONFIG_PATH, help="path to config.json")
    common.add_argument("--verbose", action="store_true", default=None, help="progress on stderr")

    parser = argparse.ArgumentParser(
        prog="invariants",
        description="Relative Reynolds operators and Hilbert bases of Gamma-invariant rings.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", parents=[common], help="check a group spec file")
    validate.add_argument("spec")
    validate.set_defaults(handler=cmd_validate)

    rey = commands.add_parser("reynolds", parents=[common], help="apply R_j to an expression")
    rey.add_argument("spec")
    rey.add_argument("--j", type=int, required=True, help="relative index, 0 <= j < m")
    rey.add_argument("expr")
    rey.set_defaults(handler=cmd_reynolds)

    dec = commands.add_parser("decompose", parents=[common], help="split into relative invariants")
    dec.add_argument("spec")
    dec.add_argument("expr")
    dec.add_argument("--verify", action="store_true", default=None, help="re-check every component")
    dec.set_defaults(handler=cmd_decompose)

    basis = commands.add_parser("gamma-basis", parents=[common], help="generators of the Gamma-invariants")
    basis.add_argument("spec")
    basis.add_argument("--method", choices=METHODS, default=None)
    basis.set_defaults(handler=cmd_gamma_basis)

    ver = commands.add_parser("verify", parents=[common], help="certify generators against brute force")
    ver.add_argument("spec")
    ver.add_argument("--degree", type=int, default=None, help="degree bound (0-24)")
    ver.add_argument("--drop", action="append", default=[], metavar="EXPR",
                     help="remove a generator (scalar multiples included) before certifying")
    ver.add_argument("--method", choices=METHODS, default=None)
    ver.set_defaults(handler=cmd_verify)

    return parser


def _effective_config(args) -> ToolConfig:
    """config.json values, overridden by any flag given on the command line."""
    config = load_config(args.config)
    if args.verbose is not None:
        config.verbose = args.verbose
    if getattr(args, "verify", None) is not None:
        config.verify_decompositions = args.verify
    if getattr(args, "method", None) is not None:
        config.method = args.method
    if getattr(args, "degree", None) is not None:
        config.degree_bound = validate_degree_bound(args.degree)
    return config


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and map failures to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    config = _effective_config(args)
    try:
        return args.handler(args, config)
    except ParseError as exc:
        _error(f"cannot parse expression: {exc}")
        return EXIT_USAGE
    except SpecFileError as exc:
        _error(str(exc))
        return EXIT_USAGE
    except ValueError as exc:
        _error(str(exc))
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))
