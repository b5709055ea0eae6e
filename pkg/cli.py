"""
cli.py

Command-line front end.

    python cli.py solve "2x + 3y + 7z = 23"
    python cli.py solve --system "6x - 4y + 3z = 30" "3x + 6y - 2z = 25"
    python cli.py solve --xy "102x + 140y = 318"
    python cli.py enumerate "x - 3y - 4z = 0" --box x:-2:2,y:-2:2,z:-2:2 --ball 0,0,0:2
    python cli.py count "2x + y + 5z = 16" --box x:0:8,y:0:16,z:0:3 --json

Exit status: 0 on success (an empty solution set is a success), 1 on usage
or parse errors, 2 when the oracle cap is exceeded or the oracle disagrees.
"""

from __future__ import annotations
import argparse
import logging
import sys
from typing import List, Optional, Sequence, Tuple

from config import Settings, get_settings
from equation_parser import XY, XYZ, EquationSyntaxError, parse_equation
from master_solver import MasterSolver, Problem
from solution_report import OracleCheck, SolutionReport, render_points, render_solution
from solvers.models import System2x3
from utils.lattice_set import Ball, Region, count_points, enumerate_points, positive, triangle
from utils.oracle import OracleCapExceeded

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="diophantine", description="Integer solutions of linear Diophantine equations and 2x3 systems.")
    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    sub.required = True

    for name, help_text in (
        ("solve", "print the parametric solution set"),
        ("enumerate", "list the solutions inside a region"),
        ("count", "count the solutions inside a region"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("equation", nargs="?", help="equation in x, y, z, e.g. \"2x + 3y + 7z = 23\"")
        cmd.add_argument("--system", nargs=2, metavar="EQ", help="solve the system of two equations in x, y, z")
        cmd.add_argument("--xy", metavar="EQ", help="equation in x and y only")
        cmd.add_argument("--box", help="x:LO:HI,y:LO:HI[,z:LO:HI]")
        cmd.add_argument("--ball", help="CX,CY[,CZ]:R (closed ball of radius R)")
        cmd.add_argument("--positive", action="store_true", help="keep points with all coordinates > 0")
        cmd.add_argument("--triangle", action="store_true", help="keep points that are triangle side lengths")
        cmd.add_argument("--json", action="store_true", help="machine-readable output")
        cmd.add_argument("--oracle", action="store_true", help="cross-check against a brute-force scan")
    return parser


_VALUE_OPTIONS = ("--box", "--ball", "--xy")


def _normalize_argv(argv: Sequence[str]) -> List[str]:
    """
    Keep signed values away from argparse's flag detection: "--ball -1,0,0:1"
    becomes "--ball=-1,0,0:1", and an equation such as "-x+y=0" gets a leading
    space so it is read as a positional. The space is stripped before parsing.
    """
    tokens: List[str] = []
    it = iter(argv)
    for token in it:
        if token in _VALUE_OPTIONS:
            value = next(it, None)
            tokens.append(token if value is None else f"{token}={value}")
        elif token.startswith("-") and not token.startswith("--") and "=" in token:
            tokens.append(" " + token)
        else:
            tokens.append(token)
    return tokens


def _int(text: str, what: str) -> int:
    try:
        return int(text.strip().replace("−", "-"))
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}")


def _parse_box(text: str, variables: Sequence[str]) -> Tuple[Tuple[int, int], ...]:
    bounds = {}
    for part in text.split(","):
        fields = part.strip().split(":")
        if len(fields) != 3:
            raise UsageError(f"Box axis must look like x:LO:HI, got {part!r}")
        name, lo, hi = fields[0].strip(), _int(fields[1], "box bound"), _int(fields[2], "box bound")
        if name not in variables:
            raise UsageError(f"Unknown box axis {name!r}; expected {', '.join(variables)}")
        if lo > hi:
            raise UsageError(f"Empty box interval {name}:{lo}:{hi}")
        bounds[name] = (lo, hi)
    missing = [v for v in variables if v not in bounds]
    if missing:
        raise UsageError(f"Box has no bounds for {', '.join(missing)}")
    return tuple(bounds[v] for v in variables)


def _parse_ball(text: str, dimension: int) -> Ball:
    center_text, sep, radius_text = text.rpartition(":")
    if not sep:
        raise UsageError(f"Ball must look like CX,CY,CZ:R, got {text!r}")
    center = tuple(_int(c, "ball center") for c in center_text.split(","))
    if len(center) != dimension:
        raise UsageError(f"Ball center needs {dimension} coordinates, got {len(center)}")
    radius = _int(radius_text, "ball radius")
    if radius < 0:
        raise UsageError(f"Ball radius must be nonnegative, got {radius}")
    return Ball(center, radius * radius)


def _problem(args) -> Tuple[Problem, Sequence[str]]:
    given = [x for x in (args.equation, args.system, args.xy) if x is not None]
    if len(given) != 1:
        raise UsageError("Give exactly one of: an equation, --system EQ1 EQ2, --xy EQ")
    if args.xy is not None:
        return parse_equation(args.xy.strip(), XY).to_equation2(), XY
    if args.system is not None:
        row1, row2 = (parse_equation(text.strip(), XYZ).to_equation3() for text in args.system)
        return System2x3(row1, row2), XYZ
    return parse_equation(args.equation.strip(), XYZ).to_equation3(), XYZ


def _region(args, variables: Sequence[str], settings: Settings, required: bool) -> Optional[Region]:
    dimension = len(variables)
    predicates = []
    if args.positive:
        predicates.append(positive)
    if args.triangle:
        if dimension != 3:
            raise UsageError("--triangle needs three variables")
        predicates.append(triangle)

    ball = _parse_ball(args.ball, dimension) if args.ball else None
    if args.box:
        return Region(_parse_box(args.box, variables), ball=ball, predicates=tuple(predicates))
    if ball is not None:
        return Region.from_ball(ball.center, ball.radius_squared, predicates)
    if required:
        raise UsageError(f"{args.command} needs --box or --ball")
    if args.oracle or predicates:
        r = settings.oracle_radius
        return Region.cube(-r, r, dimension, predicates=tuple(predicates))
    return None


def _execute(args, settings: Settings) -> Tuple[int, str]:
    problem, variables = _problem(args)
    region = _region(args, variables, settings, required=args.command != "solve")

    master = MasterSolver()
    outcome = master.solve(problem)
    report = SolutionReport.from_outcome(outcome)
    status = EXIT_OK
    lines: List[str] = []

    if args.command == "solve":
        lines.append(render_solution(outcome))
    elif args.command == "enumerate":
        points = enumerate_points(outcome.solution, region)
        report.points = [list(p) for p in points]
        lines.append(render_points(points) if points else "no points in region")
    else:
        report.count = count_points(outcome.solution, region)
        lines.append(str(report.count))

    if args.oracle:
        check = master.cross_check(problem, region, cap=settings.oracle_cap)
        report.oracle = OracleCheck(
            agree=not check["conflict_detected"],
            solver_count=check["solver_count"],
            oracle_count=check["oracle_count"],
            conflicts=check["conflicts"],
        )
        if check["conflict_detected"]:
            status = EXIT_CHECK_FAILED
            lines.append(f"oracle: DISAGREE ({check['solver_count']} solver points, {check['oracle_count']} oracle points)")
        else:
            lines.append(f"oracle: agree ({check['oracle_count']} points)")

    if args.json:
        return status, report.to_json()
    return status, "\n".join(lines)


def run(argv: Sequence[str], settings: Optional[Settings] = None) -> Tuple[int, str]:
    """Run one command; returns (exit status, text to print)."""
    try:
        args = _build_parser().parse_args(_normalize_argv(argv))
        return _execute(args, settings or get_settings())
    except (UsageError, EquationSyntaxError, EnvironmentError) as e:
        return EXIT_USAGE, f"error: {e}"
    except OracleCapExceeded as e:
        return EXIT_CHECK_FAILED, f"error: {e}"
    except SystemExit as e:
        # --help
        return int(e.code or 0), ""


def main() -> int:
    try:
        settings = get_settings()
    except EnvironmentError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=settings.log_level, format="%(asctime)s [%(levelname)s] %(message)s")

    status, output = run(sys.argv[1:], settings)
    if output:
        stream = sys.stderr if output.startswith("error: ") else sys.stdout
        print(output, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
