import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv

from .calculator import DEFAULT_MAX_DEGREE, ORACLE_DEGREE_LIMIT, SPACE_KEYS, GaugeCalculator
from .catalog import RegimeError
from .document import load_schema
from .explorer import MatrixExplorer
from .groups import parse_spec
from .render import RENDERERS, get_renderer

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ORACLE_MISMATCH = 1
EXIT_INVALID_INPUT = 2
EXIT_REGIME = 3


def _add_group_arguments(parser: argparse.ArgumentParser, chern: bool = True) -> None:
    parser.add_argument(
        "-g",
        "--group",
        type=str,
        required=True,
        help='Group: a catalog name (SU(n), Sp(n), Spin(n), G2, F4, E6, E7, E8) or "type:2,4,6[@dim=D]"',
    )
    parser.add_argument(
        "-p",
        "--prime",
        type=int,
        required=True,
        help="Prime p for mod-p homology",
    )
    if chern:
        parser.add_argument(
            "-k",
            "--chern",
            type=int,
            default=1,
            help="Second Chern class k of the bundle over S^4 (default: 1)",
        )


def _add_output_arguments(parser: argparse.ArgumentParser, output: bool = True) -> None:
    parser.add_argument(
        "-f",
        "--format",
        type=str,
        default="text",
        choices=list(RENDERERS.keys()),
        help="Output format (default: text)",
    )
    if output:
        parser.add_argument(
            "-o",
            "--output",
            type=str,
            help="Output file (default: stdout)",
        )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log progress to stderr and add the printed MH subscripts to the output",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bgauge",
        description="Mod-p homology of classifying spaces of gauge groups over S^4.",
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    verdict_parser = subparsers.add_parser(
        "verdict", help="Decide which statement covers (G, p, k)"
    )
    _add_group_arguments(verdict_parser)
    verdict_parser.add_argument(
        "--strict",
        action="store_true",
        help="Exit with code 3 unless the homology of B𝒢_k is computable",
    )
    _add_output_arguments(verdict_parser)

    compute_parser = subparsers.add_parser(
        "compute", help="Dimension tables of H_*(B𝒢_k) and its constituent spaces"
    )
    _add_group_arguments(compute_parser)
    compute_parser.add_argument(
        "-n",
        "--max-degree",
        type=int,
        default=DEFAULT_MAX_DEGREE,
        help=f"Highest degree to tabulate (default: {DEFAULT_MAX_DEGREE})",
    )
    _add_output_arguments(compute_parser)

    generators_parser = subparsers.add_parser(
        "generators", help="Generator list of one space, with the formula used"
    )
    _add_group_arguments(generators_parser, chern=False)
    generators_parser.add_argument(
        "-n",
        "--max-degree",
        type=int,
        default=DEFAULT_MAX_DEGREE,
        help=f"Highest generator degree to list (default: {DEFAULT_MAX_DEGREE})",
    )
    generators_parser.add_argument(
        "-s",
        "--space",
        type=str,
        required=True,
        choices=list(SPACE_KEYS.keys()),
        help="Space whose generators to list",
    )
    _add_output_arguments(generators_parser)

    oracle_parser = subparsers.add_parser(
        "oracle", help="Recompute every dimension by counting monomials"
    )
    _add_group_arguments(oracle_parser)
    oracle_parser.add_argument(
        "-n",
        "--max-degree",
        type=int,
        default=ORACLE_DEGREE_LIMIT,
        help=f"Highest degree to audit (default: {ORACLE_DEGREE_LIMIT})",
    )
    oracle_parser.add_argument(
        "--force",
        action="store_true",
        help=f"Allow audits beyond degree {ORACLE_DEGREE_LIMIT}",
    )
    _add_output_arguments(oracle_parser)

    sweep_parser = subparsers.add_parser(
        "sweep", help="Verdicts and oracle audits over the whole group catalog"
    )
    sweep_parser.add_argument("--max-prime", type=int, default=23, help="Largest prime (default: 23)")
    sweep_parser.add_argument("--max-rank", type=int, default=4, help="Largest rank (default: 4)")
    sweep_parser.add_argument(
        "--max-degree", type=int, default=40, help="Audit degree (default: 40)"
    )
    sweep_parser.add_argument(
        "--chern",
        type=int,
        nargs="+",
        default=[1],
        help="Chern classes to sweep (default: 1)",
    )
    sweep_parser.add_argument("-o", "--output", type=str, help="Write the summary as JSON")
    sweep_parser.add_argument("--log-dir", type=str, help="Also log to a timestamped file here")
    sweep_parser.add_argument("-v", "--verbose", action="store_true", help="Log every row")

    subparsers.add_parser("schema", help="Print the JSON schema of the output document")
    return parser


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(asctime)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def use_color() -> bool:
    if os.getenv("NO_COLOR"):
        return False
    return sys.stdout.isatty()


def write_output(text: str, output_file: Optional[str] = None) -> None:
    if output_file:
        with open(output_file, "w", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _calculator(args: argparse.Namespace) -> GaugeCalculator:
    return GaugeCalculator(
        group=parse_spec(args.group),
        prime=args.prime,
        chern=getattr(args, "chern", 1),
        max_degree=getattr(args, "max_degree", DEFAULT_MAX_DEGREE),
        verbose=args.verbose,
    )


def _emit(args: argparse.Namespace, doc) -> None:
    renderer = get_renderer(args.format)
    color = args.format == "text" and not args.output and use_color()
    write_output(renderer.render(doc, color), args.output)


def verdict_command(args: argparse.Namespace) -> int:
    calculator = _calculator(args)
    _emit(args, calculator.verdict_document())
    v = calculator.applicability
    if args.strict and not v.applicable:
        print(f"error: {v.regime.value}: {v.failed_condition}", file=sys.stderr)
        return EXIT_REGIME
    return EXIT_OK


def compute_command(args: argparse.Namespace) -> int:
    _emit(args, _calculator(args).compute_document())
    return EXIT_OK


def generators_command(args: argparse.Namespace) -> int:
    _emit(args, _calculator(args).generators_document(args.space))
    return EXIT_OK


def oracle_command(args: argparse.Namespace) -> int:
    doc, passed = _calculator(args).oracle_document(force=args.force)
    _emit(args, doc)
    if not passed:
        failed = [
            f"{name}@{row.degree}"
            for name, space in doc.spaces.items()
            for row in space.audit or []
            if row.status == "FAIL"
        ]
        print(f"error: oracle mismatch at {', '.join(failed)}", file=sys.stderr)
        return EXIT_ORACLE_MISMATCH
    return EXIT_OK


def sweep_command(args: argparse.Namespace) -> int:
    explorer = MatrixExplorer(
        max_prime=args.max_prime,
        max_rank=args.max_rank,
        max_degree=args.max_degree,
        cherns=args.chern,
        log_dir=args.log_dir,
        verbose=args.verbose,
    )
    results = explorer.explore()
    if args.output:
        explorer.save_results(args.output)
    print(json.dumps(results.summary(), indent=2))
    return EXIT_OK if results.passed else EXIT_ORACLE_MISMATCH


def schema_command(args: argparse.Namespace) -> int:
    print(json.dumps(load_schema(), indent=2, ensure_ascii=False))
    return EXIT_OK


COMMANDS = {
    "verdict": verdict_command,
    "compute": compute_command,
    "generators": generators_command,
    "oracle": oracle_command,
    "sweep": sweep_command,
    "schema": schema_command,
}


def main(argv: Optional[List[str]] = None) -> None:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_usage(sys.stderr)
        print("error: no command specified. Use --help for usage information.", file=sys.stderr)
        sys.exit(EXIT_INVALID_INPUT)

    if args.command != "sweep":
        setup_logging(getattr(args, "verbose", False))

    try:
        code = COMMANDS[args.command](args)
    except RegimeError as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_REGIME
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_INVALID_INPUT
    sys.exit(code)


if __name__ == "__main__":
    main()
