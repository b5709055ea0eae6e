import random
import sys
from pathlib import Path

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from utils.int_arith import Bezout, divides, ext_gcd, gcd, gcd3

BOUND = 10**6
small = st.integers(min_value=-BOUND, max_value=BOUND)


def assert_canonical_bezout(a, b):
    bez = ext_gcd(a, b)
    assert bez.g == gcd(a, b)
    assert a * bez.x + b * bez.y == bez.g, (a, b)
    if b != 0 and bez.g != 0:
        step = abs(b) // bez.g
        # minimal |x| in its class, ties to the nonnegative representative
        assert abs(bez.x) <= step - abs(bez.x) or step == 1, (a, b)
        if 2 * abs(bez.x) == step:
            assert bez.x >= 0, (a, b)


@pytest.mark.parametrize("a, b, expected", [
    (102, 140, 2),
    (0, 0, 0),
    (-10, -21, 1),
    (7, 0, 7),
    (0, -9, 9),
])
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize("a, b, c, expected", [
    (6, -15, 10, 1),
    (0, 0, 0, 0),
    (4, 6, 10, 2),
])
def test_gcd3_examples(a, b, c, expected):
    assert gcd3(a, b, c) == expected


@pytest.mark.parametrize("k, l, expected", [
    (2, 318, True),
    (0, 0, True),
    (3, 12, True),
    (0, 5, False),
    (-4, 8, True),
    (5, -7, False),
])
def test_divides_examples(k, l, expected):
    assert divides(k, l) is expected


def test_ext_gcd_special_inputs():
    assert ext_gcd(0, 0) == Bezout(0, 0, 0)
    assert ext_gcd(5, 0) == Bezout(5, 1, 0)
    assert ext_gcd(-5, 0) == Bezout(5, -1, 0)


def test_ext_gcd_small_pairs():
    bez = ext_gcd(51, 70)
    assert bez.g == 1
    assert 51 * bez.x + 70 * bez.y == 1

    # 2x - 5y = 1 has the canonical pair x = -2 (|x| <= 5/2)
    assert ext_gcd(2, -5) == Bezout(1, -2, -1)
    assert ext_gcd(2, 3) == Bezout(1, -1, 1)


@given(small, small)
def test_gcd_laws(a, b):
    assert gcd(a, b) == gcd(b, a) == gcd(abs(a), abs(b))
    assert gcd(a, 0) == abs(a)
    assert gcd(a, b) >= 0


@settings(max_examples=500)
@given(small, small)
def test_ext_gcd_is_canonical_bezout_pair(a, b):
    assert_canonical_bezout(a, b)


def test_ext_gcd_on_ten_thousand_pairs():
    rng = random.Random(2024)
    for _ in range(10_000):
        assert_canonical_bezout(rng.randint(-BOUND, BOUND), rng.randint(-BOUND, BOUND))


@given(small, small, small)
def test_gcd3_associativity(a, b, c):
    assert gcd3(a, b, c) == gcd(gcd(a, b), c) == gcd(a, gcd(b, c))


def test_gcd3_associativity_on_ten_thousand_triples():
    rng = random.Random(2025)
    for _ in range(10_000):
        a, b, c = (rng.randint(-BOUND, BOUND) for _ in range(3))
        assert gcd3(a, b, c) == gcd(gcd(a, b), c) == gcd(a, gcd(b, c)), (a, b, c)


@given(st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_divides_matches_multiples(k, t):
    assert divides(k, k * t)
    if k != 0:
        assert divides(k, k * t + 1) == (abs(k) == 1)


@given(
    st.integers(-60, 60).filter(lambda v: v != 0),
    st.integers(-60, 60).filter(lambda v: v != 0),
)
def test_proportional_pair_lemma(gamma, delta):
    """alpha*delta == beta*gamma with (gamma, delta) = 1 forces alpha = k*gamma, beta = k*delta."""
    assume(gcd(gamma, delta) == 1)
    for alpha in range(-120, 121):
        if alpha == 0 or (alpha * delta) % gamma != 0:
            continue
        beta = alpha * delta // gamma
        assert alpha % gamma == 0
        k = alpha // gamma
        assert beta == k * delta
