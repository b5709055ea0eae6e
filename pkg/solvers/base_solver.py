"""
solvers/base_solver.py

Common interface of the three solver workers. Each worker is pure integer
arithmetic; the async entry point lets MasterSolver run a batch of problems
concurrently while a single pathological input cannot stall the batch.
"""

import asyncio

from config import get_settings
from solvers.models import SolverOutcome


class BaseSolver:
    """A worker maps one problem to a SolverOutcome: the solution set plus the case that produced it."""

    def solve(self, problem) -> SolverOutcome:
        raise NotImplementedError

    async def solve_async(self, problem) -> SolverOutcome:
        # DIOPHANTINE_SOLVE_TIMEOUT bounds each problem, read at call time
        loop = asyncio.get_running_loop()
        timeout = get_settings().solve_timeout
        return await asyncio.wait_for(loop.run_in_executor(None, self.solve, problem), timeout=timeout)
