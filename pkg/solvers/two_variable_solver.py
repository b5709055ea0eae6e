"""
solvers/two_variable_solver.py

Complete solver for a*x + b*y = c: the Euclidean-descent particular solution
with back-substitution, and the zero-coefficient cases.
"""

from __future__ import annotations
import logging
from typing import List, Optional, Tuple

from utils.int_arith import divides, gcd
from .base_solver import BaseSolver
from .models import AffineLatticeSet, CaseTag, Equation2, SolverOutcome

logger = logging.getLogger(__name__)


def _descend(a: int, b: int, c: int) -> Tuple[int, int]:
    """
    Particular solution of a*x + b*y = c for coprime nonzero a, b.

    Each step solves for the variable with the smaller coefficient, splits the
    quotients off and continues on the remainder equation, until one
    coefficient is +-1. The recorded quotients are then substituted back.
    """
    steps: List[Tuple[str, int, int]] = []
    while abs(a) != 1 and abs(b) != 1:
        if abs(a) < abs(b):
            # b = a*q + r, c = a*Q + R; x = Q - q*y + w with a*w + r*y = R
            r, rr = b % abs(a), c % abs(a)
            steps.append(("x", (b - r) // a, (c - rr) // a))
            b, c = r, rr
        else:
            # a = b*q + r, c = b*Q + R; y = Q - q*x + w with r*x + b*w = R
            r, rr = a % abs(b), c % abs(b)
            steps.append(("y", (a - r) // b, (c - rr) // b))
            a, c = r, rr

    if abs(a) == 1:
        x, y = a * c, 0
    else:
        x, y = 0, b * c

    for var, q, big_q in reversed(steps):
        if var == "x":
            x, y = big_q - q * y + x, y
        else:
            x, y = x, big_q - q * x + y
    return x, y


def particular_solution2(eq: Equation2) -> Optional[Tuple[int, int]]:
    """
    One integer solution of a*x + b*y = c, or None when gcd(a, b) does not divide c.

    Requires a != 0 and b != 0; zero coefficients are routed through solve2.
    """
    if eq.a == 0 or eq.b == 0:
        raise ValueError(f"particular_solution2 needs nonzero coefficients, got {eq}")
    g = gcd(eq.a, eq.b)
    if not divides(g, eq.c):
        return None
    return _descend(eq.a // g, eq.b // g, eq.c // g)


def _normalized(direction: Tuple[int, int]) -> Tuple[int, int]:
    first = next(v for v in direction if v != 0)
    return direction if first > 0 else (-direction[0], -direction[1])


def classify2(eq: Equation2) -> CaseTag:
    if eq.a == 0 and eq.b == 0:
        return CaseTag.A_CASE_III
    if eq.a == 0:
        return CaseTag.A_CASE_I
    if eq.b == 0:
        return CaseTag.A_CASE_II
    return CaseTag.TWO_VARIABLE


def solve2_with_case(eq: Equation2) -> Tuple[AffineLatticeSet, CaseTag]:
    case = classify2(eq)
    a, b, c = eq.a, eq.b, eq.c

    if case is CaseTag.A_CASE_III:
        if c != 0:
            return AffineLatticeSet.empty(2, 0, c), case
        return AffineLatticeSet.lattice((0, 0), [(1, 0), (0, 1)]), case

    if case is CaseTag.A_CASE_I:
        if not divides(b, c):
            return AffineLatticeSet.empty(2, abs(b), c), case
        return AffineLatticeSet.lattice((0, c // b), [(1, 0)]), case

    if case is CaseTag.A_CASE_II:
        if not divides(a, c):
            return AffineLatticeSet.empty(2, abs(a), c), case
        return AffineLatticeSet.lattice((c // a, 0), [(0, 1)]), case

    g = gcd(a, b)
    base = particular_solution2(eq)
    if base is None:
        return AffineLatticeSet.empty(2, g, c), case
    return AffineLatticeSet.lattice(base, [_normalized((b // g, -a // g))]), case


def solve2(eq: Equation2) -> AffineLatticeSet:
    """Complete integer solution set of a*x + b*y = c."""
    return solve2_with_case(eq)[0]


class TwoVariableSolver(BaseSolver):
    """Worker for single equations in x and y."""

    def solve(self, eq: Equation2) -> SolverOutcome:
        solution, case = solve2_with_case(eq)
        logger.debug(f"{eq} -> {case.value}, rank {solution.rank if not solution.is_empty else 'empty'}")
        return SolverOutcome(solution=solution, case=case)
