"""
utils/int_arith.py

Exact integer primitives used by every solver: gcd, extended gcd (Bezout
pairs), three-way gcd and divisibility. All values are Python ints, so no
intermediate product can overflow.
"""

from __future__ import annotations
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Bezout:
    """Result of the extended Euclidean algorithm: a*x + b*y = g."""
    g: int
    x: int
    y: int


def gcd(a: int, b: int) -> int:
    """Nonnegative generator of aZ + bZ; gcd(0, 0) == 0."""
    return math.gcd(a, b)


def gcd3(a: int, b: int, c: int) -> int:
    """gcd(gcd(a, b), c)."""
    return math.gcd(math.gcd(a, b), c)


def divides(k: int, l: int) -> bool:
    """
    True iff l is an integer multiple of k.

    divides(0, l) holds only for l == 0.
    """
    if k == 0:
        return l == 0
    return l % k == 0


def ext_gcd(a: int, b: int) -> Bezout:
    """
    Extended Euclid with a canonical Bezout pair.

    When b != 0 the x coefficient is the representative of its residue class
    modulo |b|/g with the smallest absolute value, ties going to the
    nonnegative one. y is then fixed by a*x + b*y = g.
    """
    if a == 0 and b == 0:
        return Bezout(0, 0, 0)
    if b == 0:
        return Bezout(abs(a), 1 if a > 0 else -1, 0)

    old_r, r = a, b
    old_s, s = 1, 0
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    g, x = old_r, old_s
    if g < 0:
        g, x = -g, -x

    step = abs(b) // g
    x %= step
    if x > step - x:
        x -= step
    y = (g - a * x) // b
    return Bezout(g, x, y)
