"""circlespace Console Entrypoint.

Provides CLI commands for:
- The coupled-interaction energy spectrum (--format: csv, json, table)
- Seeded verification suites for every module
- Chart maps between L and the circle spaces M, T and S
- Charge-density roots of the per-point coupling equation

Exit codes: 0 success, 1 usage or domain error, 2 verification failure.
"""

import argparse
import logging
import math
import sys

from rich.console import Console
from rich.markup import escape

from .circle_spaces import ChartKind, ChartPoint, SpaceChart, chart_map
from .config import FORMATS, RunConfig, load_config, parse_real
from .errors import CircleSpaceError
from .logger import logger, set_level
from .qed_decomposition import coefficient_d_prime, is_physical, solve_rho
from .renderer import print_records, print_report, print_spectrum
from .spectrum import QuantumNumbers, spectrum_table
from .suites import FAULTS, SUITE_NAMES, run_suite
from .version import __version__

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2

err_console = Console(stderr=True, soft_wrap=True)


class CliParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> CliParser:
    parser = CliParser(
        prog="circlespace",
        description="circlespace – the Dirac equation on circle spaces and the fine-structure spectrum.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="TOML file with a [circlespace] table")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Log debug detail to standard error")
    verbosity.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # --------------------------------------------------------------------------------
    # Energy spectrum
    # --------------------------------------------------------------------------------
    spectrum_parser = subparsers.add_parser("spectrum", help="Print the coupled-interaction energy levels")
    spectrum_parser.add_argument("--alpha", help="Fine structure constant, fractions like 1/137 allowed")
    spectrum_parser.add_argument("--mass-ev", dest="mass_ev", help="Rest mass in eV")
    spectrum_parser.add_argument("--tol", help="Relative tolerance against the reference energies")
    spectrum_parser.add_argument("--max-ntheta", dest="max_n_theta", type=int, help="Largest n_theta")
    spectrum_parser.add_argument("--max-nr", dest="max_n_r", type=int, help="Largest n_r")
    spectrum_parser.add_argument("--format", choices=FORMATS, help="Output format (csv, json, table)")

    # --------------------------------------------------------------------------------
    # Verification suites
    # --------------------------------------------------------------------------------
    verify_parser = subparsers.add_parser("verify", help="Run a seeded invariant suite")
    verify_parser.add_argument("--suite", choices=SUITE_NAMES, required=True, help="Suite to run")
    verify_parser.add_argument("--seed", type=int, help="Seed for the random property checks")
    verify_parser.add_argument("--tol", help="Tolerance for the 1e-12 class of checks")
    verify_parser.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json)")
    verify_parser.add_argument("--inject-fault", dest="inject_fault", choices=FAULTS, help=argparse.SUPPRESS)

    # --------------------------------------------------------------------------------
    # Chart maps
    # --------------------------------------------------------------------------------
    map_parser = subparsers.add_parser("map", help="Map a point between L and a circle space")
    map_parser.add_argument("--space", choices=[k.value for k in ChartKind], required=True, help="Target chart")
    map_parser.add_argument("--R0", dest="R0", help="Temporal circle radius (T and S)")
    map_parser.add_argument("--R1", dest="R1", help="Spatial circle radius (M and S)")
    map_parser.add_argument("--inverse", action="store_true", help="Treat the point as a chart point and map it to L")
    map_parser.add_argument("--round-trip", dest="round_trip", action="store_true", help="Also map back")
    map_parser.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json)")
    map_parser.add_argument("point", nargs=4, metavar="X", help="Four coordinates")

    # --------------------------------------------------------------------------------
    # Charge density
    # --------------------------------------------------------------------------------
    rho_parser = subparsers.add_parser("qed-rho", help="Solve the charge-density equation at one point")
    rho_parser.add_argument("--potential", required=True, help="Local potential magnitude A")
    rho_parser.add_argument("--mass", default="1", help="Rest mass in natural units (default: 1)")
    rho_parser.add_argument("--charge", help="Charge e (default: sqrt(alpha))")
    rho_parser.add_argument("--n-theta", dest="n_theta", type=int, default=1, help="Quantum number n_theta")
    rho_parser.add_argument("--n-r", dest="n_r", type=int, default=0, help="Quantum number n_r")
    rho_parser.add_argument("--alpha", help="Fine structure constant")
    rho_parser.add_argument("--tol", help="Tolerance on the relative residuals")
    rho_parser.add_argument("--branch", choices=["plus", "minus", "both"], default="both", help="Roots to print")
    rho_parser.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json)")

    return parser


def make_run_config(settings: dict, args: argparse.Namespace) -> RunConfig:
    """Command-line values override the loaded settings."""
    merged = dict(settings)
    for key in ("alpha", "mass_ev", "tol", "seed", "format", "max_n_theta", "max_n_r"):
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    return RunConfig.from_mapping(merged)


def cmd_spectrum(args: argparse.Namespace, config: RunConfig) -> int:
    lines = spectrum_table(config.alpha, config.mass_ev, config.max_n_theta, config.max_n_r)
    print_spectrum(lines, config.format)
    worst = max(line.abs_diff for line in lines)
    if worst > config.tol * config.mass_ev:
        logger.warning("Spectrum deviates from the reference by %.3e eV", worst)
        return EXIT_VERIFY
    logger.info("Spectrum of %d lines matches the reference within %.1e", len(lines), config.tol)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    report = run_suite(args.suite, config, args.inject_fault)
    print_report(report, config.format)
    return EXIT_OK if report.overall else EXIT_VERIFY


def cmd_map(args: argparse.Namespace, config: RunConfig) -> int:
    lorentz = SpaceChart(ChartKind.L)
    chart = SpaceChart(
        ChartKind(args.space),
        parse_real(args.R0) if args.R0 is not None else None,
        parse_real(args.R1) if args.R1 is not None else None,
    )
    point = tuple(parse_real(x) for x in args.point)
    source, target = (chart, lorentz) if args.inverse else (lorentz, chart)

    mapped = chart_map(point, source, target)
    records = [ChartPoint(target, mapped).to_record()]
    code = EXIT_OK
    if args.round_trip:
        back = chart_map(mapped, target, source)
        records.append(ChartPoint(source, back).to_record())
        error = max(abs(a - b) for a, b in zip(back, point)) / max(1.0, max(abs(x) for x in point))
        if error > config.tol:
            logger.warning("Round trip through %s deviates by %.3e", target.kind, error)
            code = EXIT_VERIFY
    print_records(records, config.format, title="Chart map")
    return code


def cmd_qed_rho(args: argparse.Namespace, config: RunConfig) -> int:
    qn = QuantumNumbers(args.n_theta, args.n_r)
    d_prime = coefficient_d_prime(qn, config.alpha)
    e = parse_real(args.charge) if args.charge is not None else math.sqrt(config.alpha)
    solution = solve_rho(parse_real(args.potential), parse_real(args.mass), e, d_prime)

    record = solution.to_record()
    branches = ("plus", "minus") if args.branch == "both" else (args.branch,)
    for dropped in {"plus", "minus"} - set(branches):
        del record[f"rho_{dropped}"], record[f"residual_{dropped}"]
    for branch in branches:
        rho = record[f"rho_{branch}"]
        # An electron source carries negative charge.
        logger.debug("rho_%s = %.17g is %sphysical", branch, rho, "" if is_physical(rho, -1) else "not ")
    print_records([record], config.format, title="Charge density")

    worst = max(record[f"residual_{b}"] for b in branches)
    return EXIT_OK if worst <= config.tol else EXIT_VERIFY


COMMANDS = {
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "map": cmd_map,
    "qed-rho": cmd_qed_rho,
}


# --------------------------------------------------------------------------------
# Main CLI Entrypoint
# --------------------------------------------------------------------------------
def main(argv: list[str] | None = None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        set_level(logging.DEBUG)
    elif args.quiet:
        set_level(logging.WARNING)

    try:
        config = make_run_config(load_config(args.config), args)
        code = COMMANDS[args.command](args, config)
    except CircleSpaceError as e:
        logger.error("%s", e)
        err_console.print(f"[bold red]error:[/bold red] {escape(str(e))}", highlight=False)
        sys.exit(EXIT_USAGE)
    except Exception:
        logger.exception("Unexpected error")
        sys.exit(EXIT_USAGE)

    sys.exit(code)


if __name__ == "__main__":
    main()
