"""
utils/lattice_set.py

Semantic operations on affine lattice solution sets: membership, enumeration
and counting of lattice points inside a region, and set equivalence.

Parameter bounds are propagated through the inverse of a nonsingular
generator minor with exact rationals; the last parameter is then ranged
exactly per coordinate, so enumeration is complete without scanning the box.
"""

from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from solvers.models import AffineLatticeSet, Point

logger = logging.getLogger(__name__)

Interval = Tuple[int, int]
Predicate = Callable[[Point], bool]
Matrix = List[List[Fraction]]


# -------------------------------------------------------
# Regions and predicates
# -------------------------------------------------------

def positive(point: Point) -> bool:
    """Every coordinate strictly positive."""
    return all(v > 0 for v in point)


def triangle(point: Point) -> bool:
    """The coordinates are the side lengths of a nondegenerate triangle."""
    x, y, z = point
    return x + y > z and y + z > x and x + z > y


@dataclass(frozen=True)
class Ball:
    center: Point
    radius_squared: int

    def contains(self, point: Point) -> bool:
        return sum((p - c) ** 2 for p, c in zip(point, self.center)) <= self.radius_squared


@dataclass(frozen=True)
class Region:
    """
    A finite box, optionally intersected with a ball and filtered by point
    predicates. The ball and predicates are applied after box enumeration.
    """
    box: Tuple[Interval, ...]
    ball: Optional[Ball] = None
    predicates: Tuple[Predicate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "box", tuple((int(lo), int(hi)) for lo, hi in self.box))
        for axis, (lo, hi) in enumerate(self.box):
            if lo > hi:
                raise ValueError(f"Empty interval on axis {axis}: [{lo}, {hi}]")
        if self.ball is not None:
            if self.ball.radius_squared < 0:
                raise ValueError(f"radius_squared must be nonnegative, got {self.ball.radius_squared}")
            if len(self.ball.center) != len(self.box):
                raise ValueError(f"Ball center {self.ball.center} does not match a {len(self.box)}-dimensional box")
        object.__setattr__(self, "predicates", tuple(self.predicates))

    @classmethod
    def cube(cls, lo: int, hi: int, dimension: int = 3, **kwargs) -> "Region":
        return cls(box=((lo, hi),) * dimension, **kwargs)

    @classmethod
    def from_ball(cls, center: Sequence[int], radius_squared: int, predicates: Sequence[Predicate] = ()) -> "Region":
        """The ball together with the box circumscribing it."""
        if radius_squared < 0:
            raise ValueError(f"radius_squared must be nonnegative, got {radius_squared}")
        r = math.isqrt(radius_squared)
        center = tuple(int(c) for c in center)
        return cls(box=tuple((c - r, c + r) for c in center), ball=Ball(center, radius_squared), predicates=tuple(predicates))

    @property
    def dimension(self) -> int:
        return len(self.box)

    @property
    def volume(self) -> int:
        return math.prod(hi - lo + 1 for lo, hi in self.box)

    def in_box(self, point: Point) -> bool:
        return all(lo <= v <= hi for v, (lo, hi) in zip(point, self.box))

    def admits(self, point: Point) -> bool:
        """Box, ball and every predicate."""
        if not self.in_box(point):
            return False
        if self.ball is not None and not self.ball.contains(point):
            return False
        return all(pred(point) for pred in self.predicates)


# -------------------------------------------------------
# Exact linear algebra on small generator minors
# -------------------------------------------------------

def _inverse(matrix: Sequence[Sequence[int]]) -> Optional[Matrix]:
    """Gauss-Jordan inverse over the rationals; None when singular."""
    size = len(matrix)
    work = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        lead = work[col][col]
        work[col] = [v / lead for v in work[col]]
        for r in range(size):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [v - factor * p for v, p in zip(work[r], work[col])]
    return [row[size:] for row in work]


def _nonsingular_minors(solution: AffineLatticeSet) -> Iterator[Tuple[Tuple[int, ...], Matrix]]:
    """Coordinate subsets whose square generator minor is invertible, with its inverse."""
    gens = solution.generators
    for rows in combinations(range(solution.dimension), solution.rank):
        inverse = _inverse([[g[i] for g in gens] for i in rows])
        if inverse is not None:
            yield rows, inverse


def _parameters_for(solution: AffineLatticeSet, rows: Tuple[int, ...], inverse: Matrix, point: Point) -> List[Fraction]:
    diff = [point[i] - solution.base[i] for i in rows]
    return [sum(inverse[j][t] * diff[t] for t in range(len(rows))) for j in range(solution.rank)]


def contains(solution: AffineLatticeSet, point: Point) -> bool:
    """True iff point = base + sum(l_i * generators[i]) for integers l_i."""
    if solution.is_empty or len(point) != solution.dimension:
        return False
    point = tuple(point)
    if solution.rank == 0:
        return point == solution.base
    try:
        rows, inverse = next(_nonsingular_minors(solution))
    except StopIteration:
        raise ValueError(f"Generators of {solution} are linearly dependent")
    params = _parameters_for(solution, rows, inverse, point)
    if any(p.denominator != 1 for p in params):
        return False
    return solution.point(*(int(p) for p in params)) == point


def equivalent(first: AffineLatticeSet, second: AffineLatticeSet) -> bool:
    """Semantic equality: each set contains the other's base point and generator translates."""
    if first.is_empty or second.is_empty:
        return first.is_empty and second.is_empty
    if first.dimension != second.dimension or first.rank != second.rank:
        return False

    def covered(a: AffineLatticeSet, b: AffineLatticeSet) -> bool:
        if not contains(b, a.base):
            return False
        return all(contains(b, tuple(p + g for p, g in zip(a.base, gen))) for gen in a.generators)

    return covered(first, second) and covered(second, first)


# -------------------------------------------------------
# Enumeration
# -------------------------------------------------------

def _bounds(solution: AffineLatticeSet, box: Tuple[Interval, ...], rows: Tuple[int, ...], inverse: Matrix) -> List[Interval]:
    """Integer interval of each parameter over the box, by interval propagation through the inverse minor."""
    bounds = []
    for j in range(solution.rank):
        lo = hi = Fraction(0)
        for t, i in enumerate(rows):
            coef = inverse[j][t]
            ends = (coef * (box[i][0] - solution.base[i]), coef * (box[i][1] - solution.base[i]))
            lo += min(ends)
            hi += max(ends)
        bounds.append((math.ceil(lo), math.floor(hi)))
    return bounds


def _exact_range(partial: Point, generator: Point, box: Tuple[Interval, ...]) -> Optional[Interval]:
    """Integers l with partial + l*generator inside the box, or None."""
    lo, hi = None, None
    for v, g, (box_lo, box_hi) in zip(partial, generator, box):
        if g == 0:
            if not box_lo <= v <= box_hi:
                return None
            continue
        ends = (Fraction(box_lo - v, g), Fraction(box_hi - v, g))
        cur_lo, cur_hi = math.ceil(min(ends)), math.floor(max(ends))
        lo = cur_lo if lo is None else max(lo, cur_lo)
        hi = cur_hi if hi is None else min(hi, cur_hi)
    if lo is None or lo > hi:
        return None
    return lo, hi


def parameter_range(solution: AffineLatticeSet, region: Region) -> Optional[Interval]:
    """Exact closed integer range of the parameter of a rank-1 set inside the region's box."""
    if solution.is_empty:
        return None
    if solution.rank != 1:
        raise ValueError(f"parameter_range needs a rank-1 set, got rank {solution.rank}")
    return _exact_range(solution.base, solution.generators[0], region.box)


def _plan(solution: AffineLatticeSet, box: Tuple[Interval, ...]) -> Tuple[List[Interval], int]:
    """Outer parameter bounds and the index of the parameter ranged exactly, over the cheapest minor."""
    best = None
    for rows, inverse in _nonsingular_minors(solution):
        bounds = _bounds(solution, box, rows, inverse)
        widths = [max(hi - lo + 1, 0) for lo, hi in bounds]
        last = max(range(len(widths)), key=lambda j: widths[j])
        cost = math.prod(w for j, w in enumerate(widths) if j != last)
        if any(w == 0 for w in widths):
            cost = 0
        if best is None or cost < best[0]:
            best = (cost, bounds, last)
    if best is None:
        raise ValueError(f"Generators of {solution} are linearly dependent")
    return best[1], best[2]


def _points_in_box(solution: AffineLatticeSet, box: Tuple[Interval, ...]) -> Iterator[Point]:
    if solution.rank == 0:
        if all(lo <= v <= hi for v, (lo, hi) in zip(solution.base, box)):
            yield solution.base
        return
    bounds, last = _plan(solution, box)
    if any(lo > hi for lo, hi in bounds):
        return
    outer = [j for j in range(solution.rank) if j != last]
    gens = solution.generators
    for values in product(*(range(bounds[j][0], bounds[j][1] + 1) for j in outer)):
        partial = list(solution.base)
        for j, lam in zip(outer, values):
            for i, g in enumerate(gens[j]):
                partial[i] += lam * g
        span = _exact_range(tuple(partial), gens[last], box)
        if span is None:
            continue
        for lam in range(span[0], span[1] + 1):
            yield tuple(p + lam * g for p, g in zip(partial, gens[last]))


def enumerate_points(solution: AffineLatticeSet, region: Region) -> List[Point]:
    """Every point of the set inside the region, sorted lexicographically."""
    if solution.is_empty:
        return []
    if region.dimension != solution.dimension:
        raise ValueError(f"Region of dimension {region.dimension} for a {solution.dimension}-dimensional set")
    points = sorted(p for p in _points_in_box(solution, region.box) if region.admits(p))
    logger.debug(f"enumerated {len(points)} points of a rank-{solution.rank} set in box {region.box}")
    return points


def count_points(solution: AffineLatticeSet, region: Region) -> int:
    """Number of points of the set inside the region."""
    return len(enumerate_points(solution, region))
