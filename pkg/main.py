"""
Main entry point for the Koszul homology lab.

This script provides the khl command-line interface: it runs verification
suites on their built-in grids or on a scenario file, and writes a JSON,
CSV or text report.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from harness.report import FORMATS, emitReport
from harness.runner import runScenario
from harness.scenarioConfig import ALL_SUITES, SUITES, ScenarioConfig, parseScenario, scenarioFromDict
from harness.suites import SUITE_DESCRIPTIONS
from utils.errors import IoError, ParseError, UnsupportedIdeal, ValidationError
from utils.logConfig import setupLogging
from utils.settings import getSettings

logger = logging.getLogger(__name__)

LIST_SUITES = "list-suites"
EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def buildParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="khl",
        description="Koszul homology lab - verify homology computations against their predicted modules"
    )
    parser.add_argument(
        "suite",
        type=str,
        choices=list(SUITES) + [ALL_SUITES, LIST_SUITES],
        metavar="SUITE",
        help=f"Suite to run, '{ALL_SUITES}' for every suite, or '{LIST_SUITES}'"
    )
    parser.add_argument(
        "--config",
        type=str,
        help="Scenario JSON file (ring, ideal, rank, n, window, seed)"
    )
    parser.add_argument(
        "--out",
        type=str,
        help="Path to write the report (default: print it)"
    )
    parser.add_argument(
        "--format",
        type=str,
        choices=FORMATS,
        help="Report format (default: KHL_FORMAT or json)"
    )
    parser.add_argument(
        "--window",
        type=int,
        help="Internal degree window D for graded rings"
    )
    parser.add_argument(
        "--seed",
        type=int,
        help="Seed for the random property suites"
    )
    parser.add_argument(
        "--jobs",
        type=int,
        help="Number of worker threads (default: KHL_JOBS or 1)"
    )
    parser.add_argument(
        "--log-level",
        type=str,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default: KHL_LOG_LEVEL or WARNING)"
    )
    parser.add_argument(
        "--no-timing",
        action="store_true",
        help="Record 0 ms for every check so reports are byte-for-byte reproducible"
    )
    return parser


def printSuites() -> None:
    print("=" * 50)
    print("AVAILABLE SUITES")
    print("=" * 50)
    width = max(len(name) for name in SUITES)
    for name in SUITES:
        print(f"  {name.ljust(width)}  {SUITE_DESCRIPTIONS[name]}")
    print(f"  {ALL_SUITES.ljust(width)}  Every suite above")
    print("=" * 50)


def resolveScenario(args: argparse.Namespace) -> ScenarioConfig:
    """
    Merge the scenario file with command-line overrides.

    Command-line flags win over the scenario file.

    Raises:
        ParseError: If the scenario file is unreadable or malformed
        ValidationError: Naming the missing or invalid parameter
    """
    data: Dict[str, Any] = {}
    if args.config:
        data = parseScenario(args.config).model_dump(exclude_none=True)
    data["suite"] = args.suite
    if args.seed is not None:
        data["seed"] = args.seed
    if args.window is not None:
        data["window"] = args.window
    return scenarioFromDict(data)


def main(argv: Optional[List[str]] = None) -> int:
    """Main function to run the khl command line."""
    args = buildParser().parse_args(argv)
    settings = getSettings()
    setupLogging(args.log_level or settings.logLevel)

    if args.suite == LIST_SUITES:
        printSuites()
        return EXIT_PASS

    try:
        config = resolveScenario(args)
        outputFormat = args.format or settings.outputFormat
        if outputFormat not in FORMATS:
            raise ValidationError("format", f"unknown report format {outputFormat!r}")
        outputPath = args.out or config.output or settings.outputPath
        workers = args.jobs if args.jobs is not None else settings.jobs
        if workers < 1:
            raise ValidationError("jobs", "needs at least one worker")

        if outputPath:
            print("=" * 50)
            print(f"Running suite: {config.suite}")
            print(f"Seed: {config.seed}  Workers: {workers}")
            print("=" * 50)

        report = runScenario(config, workers=workers, timing=not args.no_timing)
        text = emitReport(report, outputFormat, outputPath)

        if outputPath:
            counts = report.counts()
            print("\n" + "=" * 50)
            print("VERIFICATION RESULTS")
            print("=" * 50)
            print(f"Checks:   {len(report.records)}")
            print(f"Passed:   {counts['pass']}")
            print(f"Failed:   {counts['fail']}")
            print(f"Conjecture agree/disagree: {counts['conjecture:agree']}/{counts['conjecture:disagree']}")
            for record in report.failures():
                print(f"  FAILED {record.name}")
            print(f"\nReport written to: {outputPath}")
            print("=" * 50)
        else:
            sys.stdout.write(text)
        return EXIT_PASS if report.passed else EXIT_FAIL

    except (ParseError, ValidationError, UnsupportedIdeal, IoError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except KeyboardInterrupt:
        print("\n\nOperation cancelled by user", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
