# master_solver.py
import asyncio
import logging
from typing import Any, Dict, List, Optional, Sequence, Union

from conflict_detector import ConflictDetector
from solvers.models import Equation2, Equation3, SolverOutcome, System2x3
from solvers.plane_solver import PlaneSolver
from solvers.system_solver import SystemSolver
from solvers.two_variable_solver import TwoVariableSolver
from utils.lattice_set import Region, enumerate_points
from utils.oracle import brute_force

logger = logging.getLogger(__name__)

Problem = Union[Equation2, Equation3, System2x3]


class MasterSolver:
    """
    Routes each problem to the matching solver worker and runs batches
    concurrently, optionally checking results against the brute-force oracle.
    """

    def __init__(self):
        self.solvers = {
            "two_variable": TwoVariableSolver(),
            "plane": PlaneSolver(),
            "system": SystemSolver(),
        }
        self.progress: Dict[str, str] = {}
        self.conflict_detector = ConflictDetector()

    def get_progress(self) -> Dict[str, str]:
        """Returns current status of each problem of the last batch."""
        return self.progress

    @staticmethod
    def worker_for(problem: Problem) -> str:
        if isinstance(problem, Equation2):
            return "two_variable"
        if isinstance(problem, Equation3):
            return "plane"
        if isinstance(problem, System2x3):
            return "system"
        raise ValueError(f"No solver for problem of type {type(problem).__name__}")

    def solve(self, problem: Problem) -> SolverOutcome:
        name = self.worker_for(problem)
        outcome = self.solvers[name].solve(problem)
        logger.info(f"{name} solved {problem}: {outcome.case.value}")
        return outcome

    async def _run_solver_async(self, key: str, problem: Problem) -> Dict[str, Any]:
        """Run one problem with timeout and error handling."""
        self.progress[key] = "Running"
        try:
            name = self.worker_for(problem)
            outcome = await self.solvers[name].solve_async(problem)
            self.progress[key] = "Complete"
            return {"problem": problem, "outcome": outcome, "case": outcome.case.value}
        except asyncio.TimeoutError:
            self.progress[key] = "Failed"
            logger.error(f"{key} timed out.")
            return {"problem": problem, "error": "Timeout", "case": None}
        except Exception as e:
            self.progress[key] = "Failed"
            logger.error(f"{key} failed: {e}")
            return {"problem": problem, "error": str(e), "case": None}

    async def solve_many_async(self, problems: Sequence[Problem]) -> List[Dict[str, Any]]:
        """
        Solve a batch in parallel. A failing problem is reported in place
        without aborting the rest.
        """
        keys = [f"problem_{i}" for i in range(len(problems))]
        self.progress = {key: "Pending" for key in keys}
        logger.info(f"Starting batch of {len(problems)} problems.")

        results = await asyncio.gather(*(self._run_solver_async(k, p) for k, p in zip(keys, problems)))

        failed = sum(1 for r in results if r["case"] is None)
        logger.info(f"Batch complete: {len(results) - failed} solved, {failed} failed.")
        return list(results)

    def solve_many(self, problems: Sequence[Problem]) -> List[Dict[str, Any]]:
        return asyncio.run(self.solve_many_async(problems))

    def cross_check(self, problem: Problem, region: Region, cap: Optional[int] = None) -> Dict[str, Any]:
        """
        Enumerate the solved set in the region and compare it with a
        brute-force scan of the same region.
        """
        outcome = self.solve(problem)
        solver_points = enumerate_points(outcome.solution, region)
        oracle_points = brute_force(problem, region, cap=cap)
        report = self.conflict_detector.detect_conflicts(solver_points, oracle_points)
        report["case"] = outcome.case.value
        if report["conflict_detected"]:
            logger.error(f"Solver and oracle disagree on {problem} ({outcome.case.value}): {report['conflicts']}")
        return report
