"""
scripts/oracle_sweep.py

Full-size randomized comparison of the solvers with the brute-force oracle,
plus the determinant identity on every generated system. Prints a per-case
summary and exits with status 1 on any disagreement.

    python scripts/oracle_sweep.py --seed 7 --equations 150 --systems 75 --radius 20
"""

import argparse
import logging
import sys
from pathlib import Path

import pandas as pd
from tqdm import tqdm

sys.path.append(str(Path(__file__).parent.parent))

from conflict_detector import ConflictDetector
from solvers.models import ContractViolation
from solvers.plane_solver import solve3
from solvers.system_solver import solve_system, system_invariants
from utils.instance_generator import stratified_equations, stratified_systems
from utils.lattice_set import Region, enumerate_points
from utils.oracle import brute_force

logger = logging.getLogger(__name__)


def _identity_holds(system) -> bool:
    """-a1*D2 + b1*D3 == c1*D1 whenever the invariants are defined."""
    r1 = system.row1
    try:
        inv = system_invariants(system)
    except ContractViolation:
        return True
    return -r1.a * inv.D2 + r1.b * inv.D3 == r1.c * inv.D1


def sweep(seed: int, equations: int, systems: int, radius: int) -> pd.DataFrame:
    region = Region.cube(-radius, radius)
    detector = ConflictDetector()
    rows = []

    problems = [("equation", s, p) for s, p in stratified_equations(seed, equations)]
    problems += [("system", s, p) for s, p in stratified_systems(seed + 1, systems)]

    for kind, stratum, problem in tqdm(problems, desc="oracle sweep"):
        solution, case = solve3(problem) if kind == "equation" else solve_system(problem)
        report = detector.detect_conflicts(enumerate_points(solution, region), brute_force(problem, region))
        rows.append({
            "kind": kind,
            "stratum": stratum,
            "case": case.value,
            "empty": solution.is_empty,
            "solver_count": report["solver_count"],
            "oracle_count": report["oracle_count"],
            "agree": not report["conflict_detected"],
            "identity": _identity_holds(problem) if kind == "system" else True,
        })
        if report["conflict_detected"]:
            logger.error(f"Disagreement on {problem}: {report['conflicts']}")

    return pd.DataFrame(rows)


def main() -> int:
    logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(message)s")
    parser = argparse.ArgumentParser(description="Compare the solvers with the brute-force oracle on random instances.")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--equations", type=int, default=150, help="single equations per stratum")
    parser.add_argument("--systems", type=int, default=75, help="systems per stratum")
    parser.add_argument("--radius", type=int, default=20, help="half-width of the comparison cube")
    parser.add_argument("--csv", help="also write the per-instance results to this file")
    args = parser.parse_args()

    df = sweep(args.seed, args.equations, args.systems, args.radius)
    summary = df.groupby(["kind", "case"]).agg(
        instances=("agree", "size"),
        agree=("agree", "sum"),
        empty=("empty", "sum"),
        points=("oracle_count", "sum"),
    )
    print(summary.to_string())

    if args.csv:
        df.to_csv(args.csv, index=False)
        logger.info(f"Per-instance results written to {args.csv}")

    failures = int((~df["agree"]).sum() + (~df["identity"]).sum())
    print(f"\n{len(df)} instances, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
