"""
utils/instance_generator.py

Seeded random equations and systems, stratified so that every solver case
is hit. Each stratum is built from its coefficient pattern and accepted only
when the solver reports that case. Right-hand sides are usually planted from
a small random point so that solutions exist near the origin.
"""

from __future__ import annotations
import random
from typing import Callable, List, Set, Tuple

from solvers.models import CaseTag, Equation3, System2x3
from solvers.plane_solver import classify3
from solvers.system_solver import solve_system_detailed

SINGLE_STRATA: Tuple[str, ...] = (
    "formula1",
    "formula2",
    "formula3",
    CaseTag.B_GROUP1.value,
    CaseTag.B_GROUP2.value,
    CaseTag.B_GROUP3.value,
    CaseTag.UNSOLVABLE_DIVISIBILITY.value,
)

SYSTEM_STRATA: Tuple[str, ...] = (
    CaseTag.FORMULA4_PROPORTIONAL.value,
    CaseTag.FORMULA4_GENERAL.value,
    CaseTag.FORMULA4_GENERAL_SWAPPED.value,
    CaseTag.C1_GROUP1.value,
    CaseTag.C1_GROUP2.value,
    CaseTag.C1_GROUP3.value,
    CaseTag.C2_I.value,
    CaseTag.C2_II.value,
    CaseTag.C2_III.value,
    CaseTag.C3_GROUP1.value,
    CaseTag.C3_GROUP2.value,
    CaseTag.C3_GROUP3.value,
    CaseTag.C4.value,
    CaseTag.C5.value,
)

_FORMULA2_TAGS = {CaseTag.FORMULA2_AB, CaseTag.FORMULA2_BC, CaseTag.FORMULA2_AC}
_MAX_ATTEMPTS = 10_000


def _nonzero(rng: random.Random, bound: int) -> int:
    return rng.choice([v for v in range(-bound, bound + 1) if v != 0])


def _planted_rhs(rng: random.Random, coefficients: Tuple[int, ...], spread: int = 6) -> int:
    point = [rng.randint(-spread, spread) for _ in coefficients]
    return sum(k * v for k, v in zip(coefficients, point))


def _rhs(rng: random.Random, coefficients: Tuple[int, ...], bound: int) -> int:
    if rng.random() < 0.8:
        return _planted_rhs(rng, coefficients)
    return rng.randint(-bound, bound)


def _retry(build: Callable[[], object], accept: Callable[[object], bool], stratum: str):
    for _ in range(_MAX_ATTEMPTS):
        candidate = build()
        if accept(candidate):
            return candidate
    raise RuntimeError(f"Could not generate an instance for stratum {stratum!r}")


# -------------------------------------------------------
# Single equations
# -------------------------------------------------------

def random_equation(rng: random.Random, stratum: str, bound: int = 30) -> Equation3:
    """One equation a*x + b*y + c*z = d of the given stratum, coefficients in [-bound, bound]."""

    def build() -> Equation3:
        coeffs = [_nonzero(rng, bound) for _ in range(3)]
        if stratum == "formula1":
            g = rng.choice([1, 1, 2, 3])
            coeffs = [g * _nonzero(rng, bound // g) for _ in range(3)]
            coeffs[rng.randrange(3)] = g * rng.choice([1, -1])
        elif stratum == "formula3":
            p, q, r = rng.sample([2, 3, 5], 3)
            base = [p * q, p * r, q * r]
            coeffs = [k * rng.randint(1, bound // k) * rng.choice([1, -1]) for k in base]
            rng.shuffle(coeffs)
        elif stratum == CaseTag.B_GROUP1.value:
            coeffs[rng.randrange(3)] = 0
        elif stratum == CaseTag.B_GROUP2.value:
            keep = rng.randrange(3)
            coeffs = [v if i == keep else 0 for i, v in enumerate(coeffs)]
        elif stratum == CaseTag.B_GROUP3.value:
            coeffs = [0, 0, 0]
        elif stratum == CaseTag.UNSOLVABLE_DIVISIBILITY.value:
            g = rng.randint(2, 5)
            coeffs = [g * _nonzero(rng, bound // g) for _ in range(3)]
            return Equation3(*coeffs, g * rng.randint(-bound // g, bound // g) + rng.randint(1, g - 1))
        coeffs = tuple(coeffs)
        if stratum == CaseTag.B_GROUP3.value:
            return Equation3(*coeffs, rng.choice([0, 0, 0, rng.randint(-bound, bound)]))
        return Equation3(*coeffs, _rhs(rng, coeffs, bound))

    def accept(eq: Equation3) -> bool:
        tag = classify3(eq)
        if stratum == "formula2":
            return tag in _FORMULA2_TAGS
        return tag.value == stratum

    return _retry(build, accept, stratum)


def stratified_equations(seed: int, per_stratum: int, bound: int = 30) -> List[Tuple[str, Equation3]]:
    rng = random.Random(seed)
    return [(s, random_equation(rng, s, bound)) for s in SINGLE_STRATA for _ in range(per_stratum)]


# -------------------------------------------------------
# 2x3 systems
# -------------------------------------------------------

def _zero_cells(rng: random.Random, stratum: str) -> Set[Tuple[int, int]]:
    i, j, k = rng.sample(range(3), 3)
    r = rng.randrange(2)
    full_row = {(r, 0), (r, 1), (r, 2)}
    patterns = {
        CaseTag.C1_GROUP1.value: {(0, i), (1, i)},
        CaseTag.C1_GROUP2.value: {(r, i), (r, j)},
        CaseTag.C1_GROUP3.value: {(0, i), (1, j)},
        CaseTag.C2_I.value: {(r, i), (r, j), (1 - r, i)},
        CaseTag.C2_II.value: {(r, i), (r, j), (1 - r, k)},
        CaseTag.C2_III.value: full_row,
        CaseTag.C3_GROUP1.value: {(0, i), (0, j), (1, i), (1, j)},
        CaseTag.C3_GROUP2.value: {(0, i), (0, j), (1, i), (1, k)},
        CaseTag.C3_GROUP3.value: full_row | {(1 - r, i)},
        CaseTag.C4.value: full_row | {(1 - r, i), (1 - r, j)},
        CaseTag.C5.value: {(a, b) for a in range(2) for b in range(3)},
        CaseTag.FORMULA4_GENERAL_SWAPPED.value: {(0, 2)},
    }
    if stratum == CaseTag.FORMULA4_GENERAL.value:
        options = [set()] + [{(a, b)} for a in range(2) for b in range(3) if (a, b) != (0, 2)]
        return rng.choice(options)
    return patterns[stratum]


def random_system(rng: random.Random, stratum: str, bound: int = 15) -> System2x3:
    """One 2x3 system of the given stratum, coefficients in [-bound, bound]."""

    def build() -> System2x3:
        if stratum == CaseTag.FORMULA4_PROPORTIONAL.value:
            row2 = tuple(_nonzero(rng, bound) for _ in range(3))
            factor = rng.choice([1, -1]) * rng.randint(1, 2)
            row1 = tuple(factor * v for v in row2)
            d2 = _rhs(rng, row2, bound)
            d1 = factor * d2 if rng.random() < 0.7 else rng.randint(-bound, bound)
            return System2x3(Equation3(*row1, d1), Equation3(*row2, d2))

        zeros = _zero_cells(rng, stratum)
        rows = [tuple(0 if (a, b) in zeros else _nonzero(rng, bound) for b in range(3)) for a in range(2)]
        if rng.random() < 0.8:
            point = [rng.randint(-6, 6) for _ in range(3)]
            ds = [sum(k * v for k, v in zip(row, point)) for row in rows]
        else:
            ds = [rng.randint(-bound, bound) for _ in rows]
        return System2x3(Equation3(*rows[0], ds[0]), Equation3(*rows[1], ds[1]))

    return _retry(build, lambda s: solve_system_detailed(s).case.value == stratum, stratum)


def stratified_systems(seed: int, per_stratum: int, bound: int = 15) -> List[Tuple[str, System2x3]]:
    rng = random.Random(seed)
    return [(s, random_system(rng, s, bound)) for s in SYSTEM_STRATA for _ in range(per_stratum)]
