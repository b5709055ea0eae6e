"""
solvers/system_solver.py

Complete solver for the 2x3 system

    a1*x + b1*y + c1*z = d1
    a2*x + b2*y + c2*z = d2

Rows are first reduced by the gcd of their coefficients. Systems with at
most one zero coefficient go through the determinant formulas (proportional
rows, or D1, D2, D3, D, D23 and delta with the two solvability conditions).
Systems with two or more zeros are classified by where the zeros sit; each
family is solved once in a canonical variable order and mapped back.
"""

from __future__ import annotations
import logging
from typing import List, Optional, Tuple

from utils.int_arith import divides, gcd, gcd3
from .base_solver import BaseSolver
from .models import (
    AffineLatticeSet,
    CaseTag,
    ContractViolation,
    Equation2,
    Equation3,
    ProportionalityReport,
    SolverOutcome,
    System2x3,
    SystemInvariants,
)
from .plane_solver import solve3
from .two_variable_solver import particular_solution2, solve2

logger = logging.getLogger(__name__)

Perm = Tuple[int, int, int]


# -------------------------------------------------------
# Row reduction and proportionality
# -------------------------------------------------------

def proportionality(row1: Equation3, row2: Equation3) -> ProportionalityReport:
    """Whether the coefficient triples satisfy row1 = eps * row2 for eps = +-1."""
    for eps in (1, -1):
        if all(p == eps * q for p, q in zip(row1.coefficients, row2.coefficients)):
            return ProportionalityReport(proportional=True, epsilon=eps)
    return ProportionalityReport(proportional=False)


def _is_reduced(row: Equation3) -> bool:
    return gcd3(*row.coefficients) == 1


def _zero_pattern(system: System2x3) -> List[Tuple[int, int]]:
    return [(r, k) for r, row in enumerate(system.rows) for k, v in enumerate(row.coefficients) if v == 0]


# -------------------------------------------------------
# Determinant invariants
# -------------------------------------------------------

def system_invariants(system: System2x3) -> SystemInvariants:
    """
    D1, D2, D3, D, D23 = (D2, D3) and delta = (c1*D1/D23, c1).

    Needs reduced, non-proportional rows with c1 != 0 and (D2, D3) != (0, 0).
    """
    r1, r2 = system.rows
    if not (_is_reduced(r1) and _is_reduced(r2)):
        raise ContractViolation(f"Rows must be reduced to coefficient gcd 1: {system}")
    if r1.c == 0:
        raise ContractViolation(f"c1 must be nonzero (swap the rows first): {system}")
    if proportionality(r1, r2).proportional:
        raise ContractViolation(f"Rows are proportional: {system}")

    a1, b1, c1, d1 = r1.a, r1.b, r1.c, r1.d
    a2, b2, c2, d2 = r2.a, r2.b, r2.c, r2.d
    D1 = a1 * b2 - a2 * b1
    D2 = b1 * c2 - b2 * c1
    D3 = a1 * c2 - a2 * c1
    D = d1 * c2 - d2 * c1
    if D2 == 0 and D3 == 0:
        raise ContractViolation(f"D2 and D3 both vanish; the system is outside the determinant case: {system}")
    D23 = gcd(D2, D3)
    # -a1*D2 + b1*D3 == c1*D1, so D23 divides c1*D1
    delta = gcd(c1 * D1 // D23, c1)
    return SystemInvariants(D1=D1, D2=D2, D3=D3, D=D, D23=D23, delta=delta)


def planar_reduction(system: System2x3) -> Equation2:
    """c2 * (row 1) - c1 * (row 2): the equation D3*x + D2*y = D left after eliminating z."""
    inv = system_invariants(system)
    return Equation2(inv.D3, inv.D2, inv.D)


def condition2(system: System2x3, particular: Tuple[int, int], invariants: Optional[SystemInvariants] = None) -> bool:
    """delta | d1 - a1*x1 - b1*y1 for a solution (x1, y1) of the planar reduction."""
    inv = invariants or system_invariants(system)
    r1 = system.row1
    x1, y1 = particular
    return divides(inv.delta, r1.d - r1.a * x1 - r1.b * y1)


def _solve_determinant_case(system: System2x3) -> SolverOutcome:
    swapped = system.row1.c == 0
    if swapped:
        system = system.swapped()
    case = CaseTag.FORMULA4_GENERAL_SWAPPED if swapped else CaseTag.FORMULA4_GENERAL
    notes = ["rows swapped so that c1 != 0"] if swapped else []

    inv = system_invariants(system)
    r1 = system.row1
    if not divides(inv.D23, inv.D):
        return SolverOutcome(AffineLatticeSet.empty(3, inv.D23, inv.D), case, inv, notes)

    planar = solve2(Equation2(inv.D3, inv.D2, inv.D))
    x1, y1 = planar.base
    rhs = r1.d - r1.a * x1 - r1.b * y1
    if not divides(inv.delta, rhs):
        return SolverOutcome(AffineLatticeSet.empty(3, inv.delta, rhs), case, inv, notes)

    # (c1*D1/D23)*m + c1*z = rhs; m = m1 - (c1/delta)*lam, z = z1 + (c1*D1/(D23*delta))*lam
    k = r1.c * inv.D1 // inv.D23
    m1, z1 = solve2(Equation2(k, r1.c, rhs)).base
    p, q = inv.D2 // inv.D23, inv.D3 // inv.D23
    s = r1.c // inv.delta
    base = (x1 - p * m1, y1 + q * m1, z1)
    generator = (p * s, -q * s, k // inv.delta)
    logger.debug(f"determinant case: invariants={inv.as_dict()} base={base} generator={generator}")
    return SolverOutcome(AffineLatticeSet.lattice(base, [generator]), case, inv, notes)


# -------------------------------------------------------
# Zero-pattern chart
# -------------------------------------------------------

def _lift(solution: AffineLatticeSet, perm: Perm) -> AffineLatticeSet:
    """Map a solution in canonical variable order back to x, y, z."""
    if solution.is_empty:
        return solution

    def unpermute(point):
        out = [0, 0, 0]
        for t, v in enumerate(point):
            out[perm[t]] = v
        return tuple(out)

    return AffineLatticeSet.lattice(unpermute(solution.base), [unpermute(g) for g in solution.generators])


def _empty(divisor: int, target: int) -> AffineLatticeSet:
    return AffineLatticeSet.empty(3, divisor, target)


def _fixed_coordinate(c: int, d: int) -> Optional[int]:
    return d // c if divides(c, d) else None


def _c1_group1(r1: Equation3, r2: Equation3) -> AffineLatticeSet:
    """[0 b1 c1; 0 b2 c2]: Cramer on (y, z), x free."""
    det = r1.b * r2.c - r2.b * r1.c
    if det == 0:
        prop = proportionality(r1, r2)
        if not prop.proportional:
            raise RuntimeError(f"Reduced rows with vanishing minor are not proportional: {r1}, {r2}")
        if r1.d != prop.epsilon * r2.d:
            return _empty(0, r1.d - prop.epsilon * r2.d)
        return solve3(r1)[0]
    ny = r1.d * r2.c - r2.d * r1.c
    nz = r2.d * r1.b - r2.b * r1.d
    for numerator in (ny, nz):
        if not divides(det, numerator):
            return _empty(abs(det), numerator)
    return AffineLatticeSet.lattice((0, ny // det, nz // det), [(1, 0, 0)])


def _c1_group2(r1: Equation3, r2: Equation3) -> AffineLatticeSet:
    """[0 0 c1; a2 b2 c2]: z fixed by row 1, then a two-variable equation in (x, y)."""
    z0 = _fixed_coordinate(r1.c, r1.d)
    if z0 is None:
        return _empty(abs(r1.c), r1.d)
    rhs = r2.d - r2.c * z0
    planar = solve2(Equation2(r2.a, r2.b, rhs))
    if planar.is_empty:
        return _empty(gcd(r2.a, r2.b), rhs)
    return AffineLatticeSet.lattice(planar.base + (z0,), [g + (0,) for g in planar.generators])


def _c1_group3(r1: Equation3, r2: Equation3) -> AffineLatticeSet:
    """
    [0 b1 c1; a2 0 c2]: y = y1 - (c1/d1)m, z = z1 + (b1/d1)m from row 1 with
    d1 = (b1, c1), then a2*x + c2*(b1/d1)*m = d2 - c2*z1 from row 2.
    """
    delta1 = gcd(r1.b, r1.c)
    if not divides(delta1, r1.d):
        return _empty(delta1, r1.d)
    y1, z1 = particular_solution2(Equation2(r1.b, r1.c, r1.d))
    bb, cc = r1.b // delta1, r1.c // delta1
    k = r2.c * bb
    rhs = r2.d - r2.c * z1
    delta2 = gcd(r2.a, k)
    if not divides(delta2, rhs):
        return _empty(delta2, rhs)
    x1, m1 = particular_solution2(Equation2(r2.a, k, rhs))
    aa = r2.a // delta2
    base = (x1, y1 - cc * m1, z1 + bb * m1)
    generator = (-(k // delta2), -cc * aa, bb * aa)
    return AffineLatticeSet.lattice(base, [generator])


def _c2_i(r1: Equation3, r2: Equation3) -> AffineLatticeSet:
    """[0 0 c1; 0 b2 c2]: z then y fixed, x free."""
    z0 = _fixed_coordinate(r1.c, r1.d)
    if z0 is None:
        return _empty(abs(r1.c), r1.d)
    rhs = r2.d - r2.c * z0
    y0 = _fixed_coordinate(r2.b, rhs)
    if y0 is None:
        return _empty(abs(r2.b), rhs)
    return AffineLatticeSet.lattice((0, y0, z0), [(1, 0, 0)])


def _c2_ii(r1: Equation3, r2: Equation3) -> AffineLatticeSet:
    """[0 0 c1; a2 b2 0]: z fixed, (x, y) on a line."""
    z0 = _fixed_coordinate(r1.c, r1.d)
    if z0 is None:
        return _empty(abs(r1.c), r1.d)
    planar = solve2(Equation2(r2.a, r2.b, r2.d))
    if planar.is_empty:
        return _empty(gcd(r2.a, r2.b), r2.d)
    return AffineLatticeSet.lattice(planar.base + (z0,), [g + (0,) for g in planar.generators])


def _c3_group1(r1: Equation3, r2: Equation3) -> AffineLatticeSet:
    """[0 0 c1; 0 0 c2]: both rows must fix the same z."""
    z1 = _fixed_coordinate(r1.c, r1.d)
    if z1 is None:
        return _empty(abs(r1.c), r1.d)
    z2 = _fixed_coordinate(r2.c, r2.d)
    if z2 is None:
        return _empty(abs(r2.c), r2.d)
    if z1 != z2:
        return _empty(0, z1 - z2)
    return AffineLatticeSet.lattice((0, 0, z1), [(1, 0, 0), (0, 1, 0)])


def _c3_group2(r1: Equation3, r2: Equation3) -> AffineLatticeSet:
    """[0 0 c1; a2 0 0]: x = d2/a2, z = d1/c1, y free."""
    z0 = _fixed_coordinate(r1.c, r1.d)
    if z0 is None:
        return _empty(abs(r1.c), r1.d)
    x0 = _fixed_coordinate(r2.a, r2.d)
    if x0 is None:
        return _empty(abs(r2.a), r2.d)
    return AffineLatticeSet.lattice((x0, 0, z0), [(0, 1, 0)])


_LEAVES = {
    CaseTag.C1_GROUP1: _c1_group1,
    CaseTag.C1_GROUP2: _c1_group2,
    CaseTag.C1_GROUP3: _c1_group3,
    CaseTag.C2_I: _c2_i,
    CaseTag.C2_II: _c2_ii,
    CaseTag.C3_GROUP1: _c3_group1,
    CaseTag.C3_GROUP2: _c3_group2,
}


def _complement(*cols: int) -> int:
    return next(k for k in range(3) if k not in cols)


def classify_zero_pattern(system: System2x3) -> Tuple[CaseTag, bool, Perm]:
    """
    Chart family of a system whose rows both have a nonzero coefficient and
    which has at least two zero coefficients, with the row swap and variable
    order that bring it to the family's representative matrix.
    """
    zeros = _zero_pattern(system)
    by_row = {0: [k for r, k in zeros if r == 0], 1: [k for r, k in zeros if r == 1]}

    if len(zeros) == 2:
        (ra, ka), (rb, kb) = zeros
        if ka == kb:
            return CaseTag.C1_GROUP1, False, (ka, *[k for k in range(3) if k != ka])
        if ra == rb:
            return CaseTag.C1_GROUP2, ra == 1, (ka, kb, _complement(ka, kb))
        i, j = by_row[0][0], by_row[1][0]
        return CaseTag.C1_GROUP3, False, (i, j, _complement(i, j))

    if len(zeros) == 3:
        heavy = 0 if len(by_row[0]) == 2 else 1
        i, j = by_row[heavy]
        s = by_row[1 - heavy][0]
        if s in (i, j):
            other = j if s == i else i
            return CaseTag.C2_I, heavy == 1, (s, other, _complement(i, j))
        return CaseTag.C2_II, heavy == 1, (i, j, s)

    if len(zeros) == 4:
        k0 = _complement(*by_row[0])
        k1 = _complement(*by_row[1])
        if k0 == k1:
            i, j = by_row[0]
            return CaseTag.C3_GROUP1, False, (i, j, k0)
        return CaseTag.C3_GROUP2, False, (k1, _complement(k0, k1), k0)

    raise ContractViolation(f"No chart family for zero pattern {zeros} of {system}")


def _zero_row_case(other: Equation3) -> CaseTag:
    """Chart leaf of a system one of whose rows has no nonzero coefficient."""
    zeros = len(other.zero_positions())
    return {0: CaseTag.C2_III, 1: CaseTag.C3_GROUP3, 2: CaseTag.C4, 3: CaseTag.C5}[zeros]


# -------------------------------------------------------
# Dispatcher
# -------------------------------------------------------

def solve_system_detailed(system: System2x3) -> SolverOutcome:
    """Solve the system and keep the invariants and notes of the path taken."""
    reduced: List[Optional[Equation3]] = []
    notes: List[str] = []
    for index, row in enumerate(system.rows):
        g = gcd3(*row.coefficients)
        if g == 0:
            if row.d != 0:
                other = system.rows[1 - index]
                return SolverOutcome(AffineLatticeSet.empty(3, 0, row.d), _zero_row_case(other), notes=notes)
            notes.append(f"row {index + 1} is 0 = 0 and was dropped")
            reduced.append(None)
            continue
        if not divides(g, row.d):
            return SolverOutcome(AffineLatticeSet.empty(3, g, row.d), CaseTag.UNSOLVABLE_DIVISIBILITY, notes=notes)
        if g > 1:
            notes.append(f"row {index + 1} divided by {g}")
        reduced.append(row.divided(g))

    r1, r2 = reduced
    if r1 is None and r2 is None:
        return SolverOutcome(AffineLatticeSet.lattice((0, 0, 0), [(1, 0, 0), (0, 1, 0), (0, 0, 1)]), CaseTag.C5, notes=notes)
    if r1 is None or r2 is None:
        remaining = r2 if r1 is None else r1
        solution, single_case = solve3(remaining)
        notes.append(f"remaining row solved as a single equation ({single_case.value})")
        return SolverOutcome(solution, _zero_row_case(remaining), notes=notes)

    reduced_system = System2x3(r1, r2)
    if len(_zero_pattern(reduced_system)) <= 1:
        prop = proportionality(r1, r2)
        if prop.proportional:
            case = CaseTag.FORMULA4_PROPORTIONAL
            if r1.d != prop.epsilon * r2.d:
                return SolverOutcome(AffineLatticeSet.empty(3, 0, r1.d - prop.epsilon * r2.d), case, notes=notes)
            return SolverOutcome(solve3(r1)[0], case, notes=notes)
        outcome = _solve_determinant_case(reduced_system)
        outcome.notes = notes + outcome.notes
        return outcome

    case, swap, perm = classify_zero_pattern(reduced_system)
    canonical = reduced_system.swapped() if swap else reduced_system
    leaf = _LEAVES[case]
    solution = leaf(canonical.row1.permuted(perm), canonical.row2.permuted(perm))
    if swap:
        notes.append("rows swapped")
    if perm != (0, 1, 2):
        notes.append(f"variables reordered as {''.join('xyz'[k] for k in perm)}")
    logger.debug(f"{system} -> {case.value} (swap={swap}, perm={perm})")
    return SolverOutcome(_lift(solution, perm), case, notes=notes)


def solve_system(system: System2x3) -> Tuple[AffineLatticeSet, CaseTag]:
    """Complete integer solution set of the 2x3 system, with the case that fired."""
    outcome = solve_system_detailed(system)
    return outcome.solution, outcome.case


class SystemSolver(BaseSolver):
    """Worker for 2x3 systems."""

    def solve(self, system: System2x3) -> SolverOutcome:
        return solve_system_detailed(system)
