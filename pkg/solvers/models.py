"""
solvers/models.py

Data models shared by the solvers: equation rows, the 2x3 system, affine
lattice solution sets and the case tags recording which branch produced them.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

Point = Tuple[int, ...]


class ContractViolation(ValueError):
    """Raised when a formula-specific entry point is called outside its preconditions."""


@dataclass(frozen=True)
class Equation2:
    """a*x + b*y = c"""
    a: int
    b: int
    c: int

    @property
    def coefficients(self) -> Tuple[int, int]:
        return (self.a, self.b)

    def satisfied_by(self, point: Point) -> bool:
        return self.a * point[0] + self.b * point[1] == self.c


@dataclass(frozen=True)
class Equation3:
    """a*x + b*y + c*z = d"""
    a: int
    b: int
    c: int
    d: int

    @property
    def coefficients(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def zero_positions(self) -> Tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.coefficients) if k == 0)

    def evaluate(self, point: Point) -> int:
        return self.a * point[0] + self.b * point[1] + self.c * point[2]

    def satisfied_by(self, point: Point) -> bool:
        return self.evaluate(point) == self.d

    def divided(self, divisor: int) -> "Equation3":
        """Exact division of the whole row; the caller checks divisibility."""
        return Equation3(self.a // divisor, self.b // divisor, self.c // divisor, self.d // divisor)

    def permuted(self, perm: Tuple[int, int, int]) -> "Equation3":
        """Row in the variable order perm, i.e. new variable t is old variable perm[t]."""
        k = self.coefficients
        return Equation3(k[perm[0]], k[perm[1]], k[perm[2]], self.d)


@dataclass(frozen=True)
class System2x3:
    row1: Equation3
    row2: Equation3

    @property
    def rows(self) -> Tuple[Equation3, Equation3]:
        return (self.row1, self.row2)

    def swapped(self) -> "System2x3":
        return System2x3(self.row2, self.row1)

    def satisfied_by(self, point: Point) -> bool:
        return self.row1.satisfied_by(point) and self.row2.satisfied_by(point)


class CaseTag(str, Enum):
    """Which branch of the solver chart produced a solution set."""
    # single equations
    FORMULA1 = "formula1"
    FORMULA2_AB = "formula2(a,b)"
    FORMULA2_BC = "formula2(b,c)"
    FORMULA2_AC = "formula2(a,c)"
    FORMULA3 = "formula3"
    B_GROUP1 = "B-group1"
    B_GROUP2 = "B-group2"
    B_GROUP3 = "B-group3"
    UNSOLVABLE_DIVISIBILITY = "unsolvable-divisibility"
    # two-variable equations
    TWO_VARIABLE = "two-variable"
    A_CASE_I = "A-i"
    A_CASE_II = "A-ii"
    A_CASE_III = "A-iii"
    # 2x3 systems
    FORMULA4_PROPORTIONAL = "formula4-i"
    FORMULA4_GENERAL = "formula4-ii"
    FORMULA4_GENERAL_SWAPPED = "formula4-ii-swapped"
    C1_GROUP1 = "C1-group1"
    C1_GROUP2 = "C1-group2"
    C1_GROUP3 = "C1-group3"
    C2_I = "C2-i"
    C2_II = "C2-ii"
    C2_III = "C2-iii"
    C3_GROUP1 = "C3-group1"
    C3_GROUP2 = "C3-group2"
    C3_GROUP3 = "C3-group3"
    C4 = "C4"
    C5 = "C5"


@dataclass(frozen=True)
class AffineLatticeSet:
    """
    {base + sum(l_i * generators[i]) : l_i in Z}, or the empty set.

    An empty set has base None and may carry a witness (divisor, target)
    with divides(divisor, target) false, explaining why it is empty.
    """
    dimension: int
    base: Optional[Point] = None
    generators: Tuple[Point, ...] = ()
    witness: Optional[Tuple[int, int]] = None

    @classmethod
    def empty(cls, dimension: int, divisor: Optional[int] = None, target: Optional[int] = None) -> "AffineLatticeSet":
        witness = (divisor, target) if divisor is not None else None
        return cls(dimension=dimension, witness=witness)

    @classmethod
    def lattice(cls, base: Point, generators=()) -> "AffineLatticeSet":
        base = tuple(int(v) for v in base)
        gens = tuple(tuple(int(v) for v in g) for g in generators)
        for g in gens:
            if len(g) != len(base):
                raise ValueError(f"Generator {g} does not match base dimension {len(base)}")
        return cls(dimension=len(base), base=base, generators=gens)

    @property
    def is_empty(self) -> bool:
        return self.base is None

    @property
    def rank(self) -> int:
        return len(self.generators)

    def point(self, *params: int) -> Point:
        """Evaluate the parametric formula at the given parameter values."""
        if self.is_empty:
            raise ValueError("An empty solution set has no points")
        if len(params) != self.rank:
            raise ValueError(f"Expected {self.rank} parameters, got {len(params)}")
        coords = list(self.base)
        for lam, gen in zip(params, self.generators):
            for i, g in enumerate(gen):
                coords[i] += lam * g
        return tuple(coords)


SolutionSet2 = AffineLatticeSet
SolutionSet3 = AffineLatticeSet


@dataclass(frozen=True)
class SystemInvariants:
    """Minors of a reduced 2x3 system with c1 != 0."""
    D1: int
    D2: int
    D3: int
    D: int
    D23: int
    delta: int

    def as_dict(self) -> dict:
        return {"D1": self.D1, "D2": self.D2, "D3": self.D3, "D": self.D, "D23": self.D23, "delta": self.delta}


@dataclass(frozen=True)
class ProportionalityReport:
    proportional: bool
    epsilon: int = 1


@dataclass
class SolverOutcome:
    """What a solver worker hands back to the orchestrator."""
    solution: AffineLatticeSet
    case: CaseTag
    invariants: Optional[SystemInvariants] = None
    notes: list = field(default_factory=list)
