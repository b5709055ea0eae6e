"""
solution_report.py

JSON schema (pydantic) and plain-text rendering of solver results.

JSON layout:

    {"status": "empty" | "lattice",
     "reason": {"divisor": g, "target": d},      # empty sets
     "base": [x, y, z], "generators": [[...], ...],  # lattices
     "case": "<tag>",
     "invariants": {...}, "points": [...], "count": n, "oracle": {...}}

The last four keys are present only when the command produced them.
"""

from __future__ import annotations
from typing import Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, Field, model_validator

from solvers.models import AffineLatticeSet, Point, SolverOutcome

PARAMETER_NAMES = ("m", "n", "k")
VARIABLE_NAMES = ("x", "y", "z")


class Witness(BaseModel):
    divisor: int = Field(..., ge=0)
    target: int


class OracleCheck(BaseModel):
    agree: bool
    solver_count: int = Field(..., ge=0)
    oracle_count: int = Field(..., ge=0)
    conflicts: List[dict] = Field(default_factory=list)


class SolutionReport(BaseModel):
    status: Literal["empty", "lattice"]
    reason: Optional[Witness] = None
    base: Optional[List[int]] = None
    generators: Optional[List[List[int]]] = None
    case: str
    invariants: Optional[Dict[str, int]] = None
    points: Optional[List[List[int]]] = None
    count: Optional[int] = Field(default=None, ge=0)
    oracle: Optional[OracleCheck] = None

    @model_validator(mode="after")
    def check_shape(self):
        if self.status == "lattice":
            if self.base is None or self.generators is None:
                raise ValueError("A lattice report needs base and generators")
            if len(self.generators) > len(self.base):
                raise ValueError(f"{len(self.generators)} generators for a {len(self.base)}-dimensional base")
            for gen in self.generators:
                if len(gen) != len(self.base):
                    raise ValueError(f"Generator {gen} does not match base {self.base}")
            if self.reason is not None:
                raise ValueError("A lattice report carries no emptiness reason")
        elif self.base is not None or self.generators is not None:
            raise ValueError("An empty report carries no base or generators")
        return self

    @classmethod
    def from_outcome(cls, outcome: SolverOutcome, **extra) -> "SolutionReport":
        solution = outcome.solution
        invariants = outcome.invariants.as_dict() if outcome.invariants is not None else None
        if solution.is_empty:
            reason = Witness(divisor=solution.witness[0], target=solution.witness[1]) if solution.witness else None
            return cls(status="empty", reason=reason, case=outcome.case.value, invariants=invariants, **extra)
        return cls(
            status="lattice",
            base=list(solution.base),
            generators=[list(g) for g in solution.generators],
            case=outcome.case.value,
            invariants=invariants,
            **extra,
        )

    def to_solution_set(self, dimension: int = 3) -> AffineLatticeSet:
        """Rebuild the solution set described by this report."""
        if self.status == "empty":
            if self.reason is None:
                return AffineLatticeSet.empty(dimension)
            return AffineLatticeSet.empty(dimension, self.reason.divisor, self.reason.target)
        return AffineLatticeSet.lattice(self.base, self.generators)

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True)


# -------------------------------------------------------
# Text rendering
# -------------------------------------------------------

def _affine_expression(constant: int, coefficients: Sequence[int]) -> str:
    """e.g. (5, [-10]) -> '5 - 10m', (0, [3, 4]) -> '3m + 4n'."""
    parts: List[str] = []
    if constant != 0:
        parts.append(str(constant))
    for k, name in zip(coefficients, PARAMETER_NAMES):
        if k == 0:
            continue
        magnitude = "" if abs(k) == 1 else str(abs(k))
        if not parts:
            parts.append(f"{'-' if k < 0 else ''}{magnitude}{name}")
        else:
            parts.append(f"{'-' if k < 0 else '+'} {magnitude}{name}")
    return " ".join(parts) if parts else "0"


def render_solution(outcome: SolverOutcome) -> str:
    solution = outcome.solution
    lines = [f"case: {outcome.case.value}"]
    if outcome.invariants is not None:
        lines.append(", ".join(f"{k} = {v}" for k, v in outcome.invariants.as_dict().items()))
    if solution.is_empty:
        if solution.witness is not None:
            divisor, target = solution.witness
            lines.append(f"no integer solutions: {divisor} does not divide {target}")
        else:
            lines.append("no integer solutions")
        return "\n".join(lines)

    names = PARAMETER_NAMES[: solution.rank]
    if names:
        lines.append(f"parameters: {', '.join(names)} range over the integers")
    for i, variable in enumerate(VARIABLE_NAMES[: solution.dimension]):
        lines.append(f"{variable} = {_affine_expression(solution.base[i], [g[i] for g in solution.generators])}")
    return "\n".join(lines)


def render_points(points: Sequence[Point]) -> str:
    return "\n".join("(" + ", ".join(str(v) for v in p) + ")" for p in points)
