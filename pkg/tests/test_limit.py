import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fdsum.errors import CancellationFailure
from fdsum.limit import (
    LaurentSeries,
    binom_series,
    candidate_directions,
    generic_direction,
    limit_at_one,
    term_series,
)
from fdsum.srf import SRF, SRFTerm


def test_generic_direction_examples():
    assert generic_direction(SRF([SRFTerm((0, 0), ((1, 0), (0, 1)))])) == (1, 2)
    f = SRF([SRFTerm((0, 0), ((1, 0), (0, 1), (1, -1)))])
    # (1,1) would be orthogonal to (1,-1); the prime sequence never proposes it
    assert generic_direction(f) == (1, 2)
    f = SRF([SRFTerm((0, 0), ((2, -1),))])
    assert generic_direction(f) == (1, 3)


def test_directions_avoid_every_denominator():
    rng = random.Random(2)
    for _ in range(20):
        dens = tuple(tuple(rng.randint(-5, 5) or 1 for _ in range(3)) for _ in range(6))
        f = SRF([SRFTerm((0, 0, 0), dens)])
        it = candidate_directions(f)
        for c in (next(it), next(it)):
            assert all(sum(x * y for x, y in zip(c, beta)) for beta in dens)


def test_binom_series_examples():
    assert binom_series(2, 2).coeffs == [1, 2, 1]
    assert binom_series(-1, 2).coeffs == [1, -1, 1]
    assert binom_series(7, 3).coeffs == [1, 7, 21, 35]


@given(st.integers(-10**6, 10**6), st.integers(0, 6))
def test_binom_series_inverse_pair(N, order):
    prod = binom_series(N, order) * binom_series(-N, order)
    assert prod.prec == order + 1
    assert [prod.coefficient(k) for k in range(order + 1)] == [1] + [0] * order


series = st.builds(
    lambda v, cs: LaurentSeries(v, cs, v + len(cs)),
    st.integers(-3, 2),
    st.lists(st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)), min_size=1, max_size=5),
)


@settings(max_examples=60)
@given(series, series, series)
def test_series_multiplication_associative(s, u, v):
    assert (s * u) * v == s * (u * v)


def test_series_inverse():
    s = LaurentSeries(-1, [2, 1, 3], 2)
    one = s * s.inverse()
    assert one.coefficient(0) == 1
    assert one.val == 0


def test_term_series_single_and_partner():
    s = term_series(SRFTerm((0,), ((2,),), 1, Fraction(2)), (1,))
    # 2/(1-(1+t)^2) = -1/t + 1/2 + O(t)
    assert s.coefficient(-1) == -1
    assert s.coefficient(0) == Fraction(1, 2)
    partner = term_series(SRFTerm((0,), ((1,),), -1), (1,))
    total = s + partner
    assert total.coefficient(-1) == 0
    assert total.coefficient(0) == Fraction(1, 2)


def test_term_series_monomial():
    s = term_series(SRFTerm((3,), ()), (1,))
    assert s.coefficient(0) == 1


def test_limit_examples():
    assert limit_at_one(SRF([SRFTerm((0,), ((2,),), 1, 2), SRFTerm((0,), ((1,),), -1)])) == Fraction(1, 2)
    assert limit_at_one(SRF([SRFTerm((0,), ((1,),)), SRFTerm((0,), ((1,),), -1)])) == 0


def test_limit_raises_when_poles_survive():
    with pytest.raises(CancellationFailure):
        limit_at_one(SRF([SRFTerm((0,), ((1,),))]))


def test_limit_of_two_variable_identity():
    # (1 - x^2)/(1 - x) == 1 + x, written as z^0/(1-x) - z^(2,0)/(1-x); limit 2
    f = SRF([SRFTerm((0, 0), ((1, 0),)), SRFTerm((2, 0), ((1, 0),), -1)])
    assert limit_at_one(f) == 2
    # x*y/((1-x)(1-y)) - 1/((1-x)(1-y)) = -(1 - xy)/((1-x)(1-y)) has no limit: poles remain
    g = SRF([SRFTerm((1, 1), ((1, 0), (0, 1))), SRFTerm((0, 0), ((1, 0), (0, 1)), -1)])
    with pytest.raises(CancellationFailure):
        limit_at_one(g)
