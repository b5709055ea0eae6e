"""
utils/oracle.py

Brute-force reference: scan every point of a finite box and keep those that
satisfy all given equations and pass the region's filters. Deliberately
naive; it is the ground truth the solvers are checked against.
"""

from __future__ import annotations
import logging
from itertools import product
from typing import List, Optional, Sequence, Union

from tqdm import tqdm

from config import get_settings
from solvers.models import Equation2, Equation3, Point, System2x3
from utils.lattice_set import Region

logger = logging.getLogger(__name__)

Equations = Union[Equation2, Equation3, System2x3, Sequence[Union[Equation2, Equation3]]]


class OracleCapExceeded(RuntimeError):
    """The box holds more points than the oracle is allowed to scan."""

    def __init__(self, volume: int, cap: int):
        super().__init__(f"Box volume {volume} exceeds the oracle cap of {cap} points")
        self.volume = volume
        self.cap = cap


def _as_rows(equations: Equations) -> List[Union[Equation2, Equation3]]:
    if isinstance(equations, System2x3):
        return list(equations.rows)
    if isinstance(equations, (Equation2, Equation3)):
        return [equations]
    rows = list(equations)
    if not rows:
        raise ValueError("brute_force needs at least one equation")
    return rows


def brute_force(
    equations: Equations,
    region: Region,
    cap: Optional[int] = None,
    progress: bool = False,
) -> List[Point]:
    """All box points satisfying every equation and the region filters, sorted lexicographically."""
    rows = _as_rows(equations)
    for row in rows:
        width = len(row.coefficients)
        if width != region.dimension:
            raise ValueError(f"{row} has {width} variables but the region is {region.dimension}-dimensional")

    cap = cap if cap is not None else get_settings().oracle_cap
    volume = region.volume
    if volume > cap:
        logger.error(f"Oracle refused a scan of {volume} points (cap {cap})")
        raise OracleCapExceeded(volume, cap)

    axes = [range(lo, hi + 1) for lo, hi in region.box]
    points = product(*axes)
    if progress:
        points = tqdm(points, total=volume, desc="oracle scan", leave=False)
    found = [p for p in points if all(row.satisfied_by(p) for row in rows) and region.admits(p)]
    logger.debug(f"oracle scanned {volume} points, {len(found)} solutions")
    return found
