"""Command-line interface for classifying and verifying graphs."""

import argparse
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

from dotenv import load_dotenv

from ..classify import ConsistencyError, classify_graph
from ..config import AnalysisConfig
from ..families import FamilySpec, generate, load_fixture
from ..graphs import AnalysisError, DisconnectedGraphError, Graph, compute_distance_data, require_analysable
from ..logging_config import get_logger, log_error, setup_logging
from ..polynomials import (
    InnerProductSpace,
    edge_predistance_polys,
    hoffman_poly,
    polys_from_array,
    predistance_polys,
)
from ..verification import verify_graph
from .formats import encode_edge_list, encode_graph6, parse_edge_list, parse_graph6
from .report import PolynomialListing, Report

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_ANALYSIS = 3


def read_graph6_argument(value: str) -> Graph:
    """``--graph6`` takes either a graph6 string or a file holding one."""
    path = Path(value)
    if path.is_file():
        return parse_graph6(path.read_text(encoding="ascii"))
    return parse_graph6(value)


def load_graph(args: argparse.Namespace, config: AnalysisConfig) -> Tuple[Graph, str]:
    """Build the input graph from exactly one of the input options."""
    if args.graph6 is not None:
        return read_graph6_argument(args.graph6), f"graph6 {args.graph6}"
    if args.edges is not None:
        return parse_edge_list(Path(args.edges).read_text(encoding="utf-8")), f"edges {args.edges}"
    if args.family is not None:
        spec = FamilySpec.parse(args.family)
        return generate(spec), f"family {spec.to_text()}"
    return load_fixture(args.fixture, config.fixture_dir), f"fixture {args.fixture}"


def _finish(report: Report, started: float, config: AnalysisConfig) -> Report:
    if config.include_timing:
        report.elapsed_seconds = round(time.perf_counter() - started, 6)
    return report


def cmd_classify(g: Graph, source: str, config: AnalysisConfig) -> Report:
    """Classification verdicts, arrays, witnesses and the homogeneous quotient."""
    started = time.perf_counter()
    report = Report(command="classify", source=source, classification=classify_graph(g))
    return _finish(report, started, config)


def cmd_polys(g: Graph, source: str, config: AnalysisConfig) -> Report:
    """Predistance and edge-predistance polynomials, by Gram-Schmidt and from the arrays."""
    started = time.perf_counter()
    dd = compute_distance_data(g)
    classification = classify_graph(g, dd)
    report = Report(command="polys", source=source, classification=classification)
    delta = classification.degree
    if delta is None:
        report.notes.append("graph is not regular: predistance polynomials need a valency")
        return _finish(report, started, config)

    space = InnerProductSpace.from_graph(g)
    vertex = predistance_polys(space, delta)
    report.polynomials.append(PolynomialListing.from_sequence(vertex))
    if classification.distance_regular is not None:
        report.polynomials.append(PolynomialListing.from_sequence(polys_from_array(classification.distance_regular)))
    report.polynomials.append(PolynomialListing.from_sequence(edge_predistance_polys(space, delta)))
    if classification.edge_distance_regular is not None:
        report.polynomials.append(
            PolynomialListing.from_sequence(polys_from_array(classification.edge_distance_regular))
        )
    report.hoffman = hoffman_poly(vertex).to_text()
    return _finish(report, started, config)


def cmd_verify(g: Graph, source: str, config: AnalysisConfig) -> Report:
    """Classification plus the full verification ledger."""
    started = time.perf_counter()
    dd = compute_distance_data(g)
    classification = classify_graph(g, dd)
    ledger = verify_graph(g, dd, classification)
    report = Report(command="verify", source=source, classification=classification, ledger=ledger)
    return _finish(report, started, config)


def cmd_gen(spec_text: str, output_format: str = "graph6") -> str:
    """Generate a family member and encode it."""
    g = generate(FamilySpec.parse(spec_text))
    if output_format == "edges":
        return encode_edge_list(g)
    return encode_graph6(g) + "\n"


COMMANDS = {
    "classify": cmd_classify,
    "polys": cmd_polys,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--machine', action='store_true', help='Emit the report as JSON')
    common.add_argument('--no-timing', action='store_true', help='Leave elapsed_seconds out of the report')
    common.add_argument('--verbose', '-v', action='store_true', help='Debug logging on stderr')
    common.add_argument('--fixture-dir', help='Directory holding named fixtures')

    parser = argparse.ArgumentParser(
        prog="drg-verifier",
        description="Exact classification of distance-regular and edge-distance-regular graphs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Classify the 3-cube
  drg-verifier classify --family hypercube:3

  # Predistance polynomials of the odd graph O_4
  drg-verifier polys --family odd:4

  # Run every identity on a packaged fixture, JSON output
  drg-verifier verify --fixture wells --machine

  # Emit a family member as graph6
  drg-verifier gen kneser:5,2

Exit codes:
  0  success
  1  verification failed (ledger entry failed or criteria disagree)
  2  usage, parse or configuration error
  3  analysis error (disconnected, too small or too large graph)
        """
    )

    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    for name, help_text in (
        ('classify', 'Decide distance-regularity, edge-distance-regularity and homogeneity'),
        ('polys', 'Compute predistance and edge-predistance polynomials'),
        ('verify', 'Run the full verification ledger'),
    ):
        sub = subparsers.add_parser(name, help=help_text, parents=[common])
        inputs = sub.add_mutually_exclusive_group(required=True)
        inputs.add_argument('--graph6', help='graph6 string, or a file containing one')
        inputs.add_argument('--edges', help='Edge-list file')
        inputs.add_argument('--family', help='Family spec, e.g. kneser:7,3')
        inputs.add_argument('--fixture', help='Packaged fixture name, e.g. wells')

    gen_parser = subparsers.add_parser('gen', help='Generate a family member', parents=[common])
    gen_parser.add_argument('spec', help='Family spec, e.g. hypercube:4')
    gen_parser.add_argument('--format', choices=['graph6', 'edges'], default='graph6', help='Output format')

    return parser


def _configure(args: argparse.Namespace) -> AnalysisConfig:
    load_dotenv()
    config = AnalysisConfig.from_env()
    overrides = {}
    if args.machine:
        overrides["machine_output"] = True
    if args.no_timing:
        overrides["include_timing"] = False
    if args.verbose:
        overrides["log_level"] = "DEBUG"
    if args.fixture_dir:
        overrides["fixture_dir"] = Path(args.fixture_dir)
    config = config.model_copy(update=overrides)
    setup_logging(config.log_level, config.log_json, debug_mode=args.verbose)
    return config


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        config = _configure(args)
    except ValueError as e:
        print(f"drg-verifier: invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.command == 'gen':
        try:
            sys.stdout.write(cmd_gen(args.spec, args.format))
        except ValueError as e:
            log_error(e, {"command": "gen", "spec": args.spec})
            print(f"drg-verifier: {e}", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK

    try:
        g, source = load_graph(args, config)
    except (ValueError, OSError) as e:
        log_error(e, {"command": args.command, "stage": "input"})
        print(f"drg-verifier: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        require_analysable(g, config.max_vertices)
        report = COMMANDS[args.command](g, source, config)
    except (AnalysisError, DisconnectedGraphError) as e:
        log_error(e, {"command": args.command, "stage": "analysis", "n": g.n})
        print(f"drg-verifier: {e}", file=sys.stderr)
        return EXIT_ANALYSIS
    except ConsistencyError as e:
        log_error(e, {"command": args.command, "stage": "analysis", "n": g.n})
        print(f"drg-verifier: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except KeyboardInterrupt:
        logger.info("Operation cancelled by user")
        return EXIT_VERIFICATION_FAILED

    sys.stdout.write(report.render(config.machine_output))
    if not report.passed:
        logger.warning(
            "Verification failed",
            failures=[e.name for e in report.ledger.failures] if report.ledger else [],
        )
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
