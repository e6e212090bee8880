"""
Command line entry point for validating, reducing and generating fixed point data.

Example:
    python -m src.cli gen cp3 1 2 3 | python -m src.cli reduce - --cert cp3.json
    python -m src.cli verify cp3.json
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, NoReturn, Optional, Sequence

import yaml
from pydantic import ValidationError

from config import Settings
from src.cli.config import configure_logging, load_runtime_settings
from src.errors import (
    CertificateFormatError,
    FixedPointDataError,
    InvalidInputError,
    MaxStepsExceededError,
    NotRealizableError,
)
from src.formats import (
    dump_certificate,
    load_certificate,
    parse_complex_data,
    parse_data,
    parse_pair,
    print_data,
)
from src.fpdata import reverse_orientation
from src.fuzz import run_fuzz
from src.generators import connected_sum, gen_cp3, gen_s6, gen_z2sum, gen_zn
from src.models.fixed_point import FixedPointData
from src.reduction import audit_certificate, reduce_to_empty, summarize_certificate
from src.validation import validate_all

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_NOT_REALIZABLE = 3
EXIT_USAGE = 64
EXIT_IO = 66


class _ParseFailure(Exception):
    pass


class UsageArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with 64."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise _ParseFailure(f"{path}: not valid UTF-8 ({exc.reason} at byte {exc.start})") from exc



def _write_text(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_data(path: str) -> FixedPointData:
    text = _read_text(path)
    try:
        return parse_data(text)
    except FixedPointDataError as exc:
        raise _ParseFailure(f"{path}: {exc}") from exc


def _cmd_validate(args: argparse.Namespace, settings: Settings) -> int:
    data = _load_data(args.file)
    report = validate_all(data)
    if args.json:
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.render())
    return EXIT_OK if report.overall else EXIT_FAILURE


def _cmd_reduce(args: argparse.Namespace, settings: Settings) -> int:
    data = _load_data(args.file)
    try:
        cert = reduce_to_empty(
            data,
            step_cap_factor=settings.reduction.step_cap_factor,
            prefer_whole_summand=settings.reduction.prefer_whole_summand,
        )
    except InvalidInputError as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        if exc.report is not None:
            sys.stderr.write(exc.report.render())
        return EXIT_FAILURE
    except (NotRealizableError, MaxStepsExceededError) as exc:
        sys.stderr.write(f"not realizable by the reduction strategy: {exc}\n")
        return EXIT_NOT_REALIZABLE

    document = dump_certificate(cert)
    if args.cert is None:
        sys.stdout.write(document)
        return EXIT_OK
    _write_text(document, args.cert)
    if not args.quiet:
        lines = [f"{index}. {step}" for index, step in enumerate(cert.steps, start=1)]
        summary = ", ".join(f"{family} x{count}" for family, count in summarize_certificate(cert).items())
        lines.append(f"{len(cert.steps)} steps; divisor {cert.effectiveness_divisor}; generators: {summary or 'none'}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    text = _read_text(args.certfile)
    try:
        cert = load_certificate(text, expected_version=settings.certificate.version)
    except CertificateFormatError as exc:
        raise _ParseFailure(f"{args.certfile}: {exc}") from exc
    audit = audit_certificate(cert, validate_intermediate=settings.certificate.validate_intermediate)
    sys.stdout.write(("OK: " if audit.ok else "FAILED: ") + audit.message + "\n")
    return EXIT_OK if audit.ok else EXIT_FAILURE


_GENERATORS: Dict[str, Callable[[argparse.Namespace], FixedPointData]] = {
    "s6": lambda args: gen_s6(args.a, args.b, args.c),
    "cp3": lambda args: gen_cp3(args.a, args.b, args.c),
    "zn": lambda args: gen_zn(args.n, args.a, args.b, args.c, experimental=args.experimental),
    "z2sum": lambda args: gen_z2sum(args.a, args.e),
}


def _cmd_gen(args: argparse.Namespace, settings: Settings) -> int:
    try:
        data = _GENERATORS[args.family](args)
    except FixedPointDataError as exc:
        sys.stderr.write(f"cannot build {args.family}: {exc}\n")
        return EXIT_FAILURE
    if args.reverse:
        data = reverse_orientation(data)
    _write_text(print_data(data), args.output)
    return EXIT_OK


def _cmd_connect(args: argparse.Namespace, settings: Settings) -> int:
    first = _load_data(args.file1)
    second = _load_data(args.file2)
    try:
        pairs = [parse_pair(text) for text in args.pair]
    except FixedPointDataError as exc:
        raise _ParseFailure(f"--pair: {exc}") from exc
    try:
        data = connected_sum(first, second, pairs)
    except FixedPointDataError as exc:
        sys.stderr.write(f"cannot glue: {exc}\n")
        return EXIT_FAILURE
    _write_text(print_data(data), args.output)
    return EXIT_OK


def _cmd_convert(args: argparse.Namespace, settings: Settings) -> int:
    text = _read_text(args.file)
    try:
        data = parse_complex_data(text)
    except FixedPointDataError as exc:
        raise _ParseFailure(f"{args.file}: {exc}") from exc
    _write_text(print_data(data), args.output)
    return EXIT_OK


def _cmd_fuzz(args: argparse.Namespace, settings: Settings) -> int:
    fuzz = settings.fuzz
    result = run_fuzz(
        seed=fuzz.seed if args.seed is None else args.seed,
        iterations=args.iterations or fuzz.iterations,
        max_summands=args.max_summands or fuzz.max_summands,
        max_param=args.max_param or fuzz.max_param,
        workers=args.workers or fuzz.workers,
        match_attempts=fuzz.match_attempts,
        step_cap_factor=settings.reduction.step_cap_factor,
    )
    if args.report:
        result.write_csv(Path(args.report))
    for iteration in result.failed:
        sys.stdout.write(f"iteration {iteration}: {result.errors[iteration]}\n")
    sys.stdout.write(f"{len(result.records) - len(result.failed)}/{len(result.records)} iterations verified\n")
    return EXIT_OK if result.ok else EXIT_FAILURE


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = UsageArgumentParser(prog="fpdata", description="Fixed point data of circle actions on 6-manifolds")
    parser.add_argument("--settings", type=Path, default=None, help="Alternative settings YAML")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=UsageArgumentParser)

    validate = commands.add_parser("validate", help="Run the necessary-condition checks")
    validate.add_argument("file", help="Data file, '-' for stdin")
    validate.add_argument("--json", action="store_true", help="Print the report as JSON")
    validate.set_defaults(handler=_cmd_validate)

    reduce = commands.add_parser("reduce", help="Reduce data to the empty set and emit a certificate")
    reduce.add_argument("file", help="Data file, '-' for stdin")
    reduce.add_argument("--cert", default=None, help="Write the certificate here instead of stdout")
    reduce.add_argument("--quiet", action="store_true", help="Do not print the step trace")
    reduce.set_defaults(handler=_cmd_reduce)

    verify = commands.add_parser("verify", help="Replay a certificate")
    verify.add_argument("certfile", help="Certificate file, '-' for stdin")
    verify.set_defaults(handler=_cmd_verify)

    gen = commands.add_parser("gen", help="Emit the data of a model manifold")
    families = gen.add_subparsers(dest="family", required=True, parser_class=UsageArgumentParser)
    for name in ("s6", "cp3"):
        family = families.add_parser(name)
        for param in ("a", "b", "c"):
            family.add_argument(param, type=int)
    zn = families.add_parser("zn")
    for param in ("n", "a", "b", "c"):
        zn.add_argument(param, type=int)
    zn.add_argument("--experimental", action="store_true", help="Allow n < 1")
    z2sum = families.add_parser("z2sum")
    z2sum.add_argument("a", type=int)
    z2sum.add_argument("e", type=int)
    for family in (families.choices[name] for name in ("s6", "cp3", "zn", "z2sum")):
        family.add_argument("--reverse", action="store_true", help="Reverse the orientation")
        family.add_argument("-o", "--output", default=None, help="Output file (default stdout)")
        family.set_defaults(handler=_cmd_gen)

    connect = commands.add_parser("connect", help="Equivariant connected sum of two data files")
    connect.add_argument("file1")
    connect.add_argument("file2")
    connect.add_argument("--pair", action="append", required=True, help="Gluing pair like '+3 2 1=-3 2 1'")
    connect.add_argument("-o", "--output", default=None)
    connect.set_defaults(handler=_cmd_connect)

    convert = commands.add_parser("convert", help="Convert complex weights to real fixed point data")
    convert.add_argument("file", help="Lines of three nonzero complex weights, '-' for stdin")
    convert.add_argument("-o", "--output", default=None)
    convert.set_defaults(handler=_cmd_convert)

    fuzz = commands.add_parser("fuzz", help="Reduce random connected sums of model manifolds")
    fuzz.add_argument("--seed", type=int, default=None)
    fuzz.add_argument("--iterations", type=_positive, default=None)
    fuzz.add_argument("--max-summands", type=_positive, default=None)
    fuzz.add_argument("--max-param", type=_positive, default=None)
    fuzz.add_argument("--workers", type=_positive, default=None)
    fuzz.add_argument("--report", default=None, help="Write a per-iteration CSV report")
    fuzz.set_defaults(handler=_cmd_fuzz)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        settings = load_runtime_settings(args.settings)
    except OSError as exc:
        sys.stderr.write(f"cannot read settings: {exc}\n")
        return EXIT_IO
    except (ValidationError, ValueError, yaml.YAMLError) as exc:
        sys.stderr.write(f"invalid settings: {exc}\n")
        return EXIT_USAGE
    configure_logging(settings, debug=args.debug)
    logger.debug("Running %s with settings %s", args.command, settings.model_dump())

    handler: Callable[[argparse.Namespace, Settings], int] = args.handler
    try:
        return handler(args, settings)
    except _ParseFailure as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        sys.stderr.write(f"I/O error: {exc}\n")
        return EXIT_IO


def main(argv: Optional[List[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
