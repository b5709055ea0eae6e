"""
conflict_detector.py

Detects disagreements between the points a solver enumerates and the points
the brute-force oracle finds in the same region.
"""

from typing import Any, Dict, Iterable

from solvers.models import Point


class ConflictDetector:
    """
    Compare solver output against the oracle.
    """

    @staticmethod
    def detect_conflicts(solver_points: Iterable[Point], oracle_points: Iterable[Point]) -> Dict[str, Any]:
        """
        Compare two point collections from the same region.

        Args:
            solver_points: Points enumerated from the parametric solution set.
            oracle_points: Points found by the brute-force scan.

        Returns:
            dict: Conflict report. If both agree, 'conflict_detected' = False.
        """
        solver = {tuple(p) for p in solver_points}
        oracle = {tuple(p) for p in oracle_points}
        conflict_report = {
            "conflict_detected": False,
            "solver_count": len(solver),
            "oracle_count": len(oracle),
            "conflicts": [],
        }

        # points the parametrization produced that do not solve the problem
        extra = sorted(solver - oracle)
        if extra:
            conflict_report["conflicts"].append({"field": "unsound", "points": [list(p) for p in extra]})

        # points the parametrization missed
        missing = sorted(oracle - solver)
        if missing:
            conflict_report["conflicts"].append({"field": "incomplete", "points": [list(p) for p in missing]})

        conflict_report["conflict_detected"] = bool(conflict_report["conflicts"])
        return conflict_report
