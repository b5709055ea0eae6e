"""
solvers/plane_solver.py

Complete solver for a*x + b*y + c*z = d.

Nonzero coefficients are reduced by (a, b, c) and dispatched to the unit
coefficient formula, the coprime pair formula or the general two-stage
formula built on delta = (a, b). Equations with zero coefficients follow the
special-case groups: one zero delegates to the two-variable solver, two zeros
fix one coordinate, three zeros leave all space or nothing.
"""

from __future__ import annotations
import logging
from typing import Tuple

from utils.int_arith import divides, ext_gcd, gcd, gcd3
from .base_solver import BaseSolver
from .models import AffineLatticeSet, CaseTag, ContractViolation, Equation2, Equation3, SolverOutcome
from .two_variable_solver import solve2

logger = logging.getLogger(__name__)

_UNIT_VECTORS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _embed(point2: Tuple[int, int], missing: int, value: int = 0) -> Tuple[int, int, int]:
    """Insert `value` at coordinate `missing` of a pair."""
    coords = list(point2)
    coords.insert(missing, value)
    return tuple(coords)


def solve3_unit(eq: Equation3) -> AffineLatticeSet:
    """
    Solve for the first variable (in x, y, z order) whose coefficient is +-1.
    The other two variables become the parameters m, n.
    """
    coeffs = eq.coefficients
    try:
        i = next(k for k, v in enumerate(coeffs) if abs(v) == 1)
    except StopIteration:
        raise ContractViolation(f"solve3_unit needs a coefficient of absolute value 1, got {eq}")
    unit = coeffs[i]
    free = [k for k in range(3) if k != i]

    # u*v_i = d - sum(other terms) and u = 1/u for u = +-1
    base = [0, 0, 0]
    base[i] = unit * eq.d
    generators = []
    for k in free:
        gen = [0, 0, 0]
        gen[k] = 1
        gen[i] = -unit * coeffs[k]
        generators.append(tuple(gen))
    return AffineLatticeSet.lattice(base, generators)


def _coprime_pair(coeffs: Tuple[int, int, int]):
    for pair, tag in (((0, 1), CaseTag.FORMULA2_AB), ((1, 2), CaseTag.FORMULA2_BC), ((0, 2), CaseTag.FORMULA2_AC)):
        if gcd(coeffs[pair[0]], coeffs[pair[1]]) == 1:
            return pair, tag
    return None, None


def _check_reduced_nonunit(eq: Equation3, name: str) -> None:
    if gcd3(*eq.coefficients) != 1:
        raise ContractViolation(f"{name} needs (a, b, c) = 1, got {eq}")
    if any(abs(k) <= 1 for k in eq.coefficients):
        raise ContractViolation(f"{name} needs |a|, |b|, |c| > 1, got {eq}")


def solve3_coprime_pair(eq: Equation3) -> AffineLatticeSet:
    """
    Formula for a reduced equation with a coprime coefficient pair, picked in
    the order (a, b), (b, c), (a, c).

    With (p, q) the pair, r the remaining coefficient and (u, v) a Bezout pair
    of (p, q): the remaining variable is m, and the pair variables are
    ((d - r*m)*u - q*n, (d - r*m)*v + p*n).
    """
    _check_reduced_nonunit(eq, "solve3_coprime_pair")
    coeffs = eq.coefficients
    pair, _ = _coprime_pair(coeffs)
    if pair is None:
        raise ContractViolation(f"solve3_coprime_pair needs a coprime coefficient pair, got {eq}")
    i, j = pair
    k = 3 - i - j
    p, q, r = coeffs[i], coeffs[j], coeffs[k]
    bez = ext_gcd(p, q)

    base = [0, 0, 0]
    base[i], base[j] = eq.d * bez.x, eq.d * bez.y
    gen_m = [0, 0, 0]
    gen_m[i], gen_m[j], gen_m[k] = -r * bez.x, -r * bez.y, 1
    gen_n = [0, 0, 0]
    gen_n[i], gen_n[j] = -q, p
    return AffineLatticeSet.lattice(base, [gen_m, gen_n])


def solve3_general(eq: Equation3) -> AffineLatticeSet:
    """
    Two-stage formula for a reduced equation whose pairwise gcds all exceed 1.

    With delta = (a, b): (a/delta)x + (b/delta)y = t and delta*t + c*z = d.
    (x1, y1) solves the first with t = 1, (t1, z1) solves the second, and
    t = t1 - c*m, z = z1 + delta*m.
    """
    _check_reduced_nonunit(eq, "solve3_general")
    a, b, c, d = eq.a, eq.b, eq.c, eq.d
    if gcd(a, b) == 1 or gcd(b, c) == 1 or gcd(a, c) == 1:
        raise ContractViolation(f"solve3_general needs all pairwise gcds > 1, got {eq}")
    delta = gcd(a, b)
    pair = ext_gcd(a // delta, b // delta)
    # (delta, c) = (a, b, c) = 1, so delta*t + c*z = d is always solvable
    aux = ext_gcd(delta, c)
    t1, z1 = aux.x * d, aux.y * d

    base = (t1 * pair.x, t1 * pair.y, z1)
    gen_m = (-c * pair.x, -c * pair.y, delta)
    gen_n = (-b // delta, a // delta, 0)
    return AffineLatticeSet.lattice(base, [gen_m, gen_n])


def classify3(eq: Equation3) -> CaseTag:
    """Case of the chart that solve3 will take for this equation."""
    zeros = len(eq.zero_positions())
    if zeros == 3:
        return CaseTag.B_GROUP3
    if zeros == 2:
        return CaseTag.B_GROUP2
    if zeros == 1:
        return CaseTag.B_GROUP1
    g = gcd3(*eq.coefficients)
    if not divides(g, eq.d):
        return CaseTag.UNSOLVABLE_DIVISIBILITY
    reduced = eq.divided(g).coefficients
    if any(abs(k) == 1 for k in reduced):
        return CaseTag.FORMULA1
    _, tag = _coprime_pair(reduced)
    return tag if tag is not None else CaseTag.FORMULA3


def solve3(eq: Equation3) -> Tuple[AffineLatticeSet, CaseTag]:
    """Complete integer solution set of a*x + b*y + c*z = d, with the case that fired."""
    case = classify3(eq)
    coeffs = eq.coefficients

    if case is CaseTag.B_GROUP3:
        if eq.d != 0:
            return AffineLatticeSet.empty(3, 0, eq.d), case
        return AffineLatticeSet.lattice((0, 0, 0), _UNIT_VECTORS), case

    if case is CaseTag.B_GROUP2:
        i = next(k for k, v in enumerate(coeffs) if v != 0)
        if not divides(coeffs[i], eq.d):
            return AffineLatticeSet.empty(3, abs(coeffs[i]), eq.d), case
        base = [0, 0, 0]
        base[i] = eq.d // coeffs[i]
        return AffineLatticeSet.lattice(base, [u for k, u in enumerate(_UNIT_VECTORS) if k != i]), case

    if case is CaseTag.B_GROUP1:
        missing = eq.zero_positions()[0]
        p, q = (v for k, v in enumerate(coeffs) if k != missing)
        planar = solve2(Equation2(p, q, eq.d))
        if planar.is_empty:
            return AffineLatticeSet.empty(3, gcd(p, q), eq.d), case
        generators = [_embed(g, missing) for g in planar.generators]
        generators.insert(0, _UNIT_VECTORS[missing])
        return AffineLatticeSet.lattice(_embed(planar.base, missing), generators), case

    if case is CaseTag.UNSOLVABLE_DIVISIBILITY:
        return AffineLatticeSet.empty(3, gcd3(*coeffs), eq.d), case

    reduced = eq.divided(gcd3(*coeffs))
    if case is CaseTag.FORMULA1:
        return solve3_unit(reduced), case
    if case is CaseTag.FORMULA3:
        return solve3_general(reduced), case
    return solve3_coprime_pair(reduced), case


class PlaneSolver(BaseSolver):
    """Worker for single equations in x, y and z."""

    def solve(self, eq: Equation3) -> SolverOutcome:
        solution, case = solve3(eq)
        logger.debug(f"{eq} -> {case.value}")
        return SolverOutcome(solution=solution, case=case)
