from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadwiener.bounds import (
    deletion_chain_even,
    contraction_chain_value,
    good_vertex_chain_value,
    split_chain_value,
    split_chain_polynomial,
    conjectured_max,
    dec_bound,
    even_case_value,
    level_bound_second_three,
    level_bound_three,
    level_bound_two,
    odd_case_value,
)
from quadwiener.errors import TooSmallError


def test_conjectured_max_small_values():
    assert conjectured_max(4) == 8
    assert conjectured_max(5) == 14
    assert conjectured_max(6) == 23
    assert conjectured_max(7) == 34


def test_conjectured_max_rejects_tiny():
    with pytest.raises(TooSmallError):
        conjectured_max(3)


def test_divisibility_sweep_to_a_million():
    # even: 12 | n^3 + 14n - 24; odd: 12 | n^3 + 11n - 12
    for n in range(4, 10**6 + 1):
        if n % 2 == 0:
            assert (n * n * n + 14 * n - 24) % 12 == 0
        else:
            assert (n * n * n + 11 * n - 12) % 12 == 0


@settings(max_examples=50, deadline=None)
@given(n=st.integers(min_value=4, max_value=10**9))
def test_conjectured_max_is_integral(n):
    value = even_case_value(n) if n % 2 == 0 else odd_case_value(n)
    assert value.denominator == 1
    assert conjectured_max(n) == value


def test_strictly_increasing():
    previous = conjectured_max(4)
    for n in range(5, 10**4 + 1):
        current = conjectured_max(n)
        assert current > previous
        previous = current


def test_level_bound_two_values():
    assert level_bound_two(4) == 6
    assert level_bound_two(5) == 9
    assert level_bound_two(1) == 1


def test_level_bound_second_three_values():
    assert level_bound_second_three(6) == 11
    assert level_bound_second_three(5) == 8
    assert level_bound_second_three(4) == 6


def test_level_bound_three_values():
    assert level_bound_three(6) == Fraction(56, 6)
    assert level_bound_three(4) == 5
    assert level_bound_three(1) == 1


def test_dec_bound_values():
    assert dec_bound(8) == Fraction(49, 18)
    assert dec_bound(19) == 18
    assert dec_bound(4) == Fraction(1, 2)


# -- case-combination identities, exact over integer sweeps ---------------------


def test_deletion_chain_even_equals_even_branch():
    for n in range(4, 10**4 + 1, 2):
        assert deletion_chain_even(n) == even_case_value(n)


def test_second_level_three_chain_equals_odd_branch():
    for n in range(5, 10**4 + 1, 2):
        assert even_case_value(n - 1) + level_bound_second_three(n - 1) == odd_case_value(n)


def test_contraction_chain_value_closed_form():
    for n in range(7, 10**4 + 1, 2):
        assert contraction_chain_value(n) == Fraction(n**3, 12) + Fraction(11 * n, 12) - 3


def test_good_vertex_chain_value_closed_form():
    for n in range(4, 10**4 + 1):
        expected = (
            Fraction(n**3, 12)
            - Fraction(n * n, 36)
            + Fraction(53 * n, 36)
            - Fraction(115, 36)
        )
        assert good_vertex_chain_value(n) == expected


def test_good_vertex_chain_below_odd_branch_from_15_on():
    for n in range(15, 10**4 + 1):
        assert good_vertex_chain_value(n) < odd_case_value(n)
    # 15 is the sharp threshold: the comparison fails on 6..14 (and the
    # accidental n = 4, 5 cases are below the induction's base anyway)
    for n in range(6, 15):
        assert good_vertex_chain_value(n) >= odd_case_value(n)


def test_split_chain_value_closed_form_grid():
    for x in range(4, 30):
        for n in range(x + 8, x + 40):
            assert split_chain_value(n, x) == split_chain_polynomial(n, x)


def test_split_chain_bounded_by_odd_branch_on_domain():
    # x >= 4 and both sides of the cycle populated (n >= x + 8)
    for x in range(4, 1000):
        for n in range(x + 8, x + 40):
            assert split_chain_value(n, x) <= odd_case_value(n)
    for x in (4, 5, 8, 12):
        for n in range(x + 8, 10**4, 97):
            assert split_chain_value(n, x) <= odd_case_value(n)


def test_split_chain_exception_at_x4_n9():
    # outside the feasible domain the polynomial inequality genuinely fails here
    assert split_chain_value(9, 4) > odd_case_value(9)
    assert split_chain_value(9, 4) - odd_case_value(9) == Fraction(1, 4)


def test_exact_rational_arithmetic_no_floats():
    value = level_bound_three(6)
    assert isinstance(value, Fraction)
    assert value * 6 == 56
