"""Closed-form bound values, evaluated in exact rational arithmetic.

All comparisons against these bounds must use the returned Fractions
directly; no floating point is involved anywhere.  The level bounds take the
number of vertices OUTSIDE the source set as argument (a graph on n + s
vertices with |S| = s calls them with n).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import TooSmallError


def even_case_value(n: int) -> Fraction:
    """n^3/12 + 7n/6 - 2, the even-n branch of the extremal Wiener value."""
    return Fraction(n**3, 12) + Fraction(7 * n, 6) - 2


def odd_case_value(n: int) -> Fraction:
    """n^3/12 + 11n/12 - 1, the odd-n branch of the extremal Wiener value."""
    return Fraction(n**3, 12) + Fraction(11 * n, 12) - 1


def conjectured_max(n: int) -> int:
    """The sharp upper bound for the Wiener index of an n-vertex quadrangulation.

    (n^3 + 14n - 24) / 12 for even n and (n^3 + 11n - 12) / 12 for odd n;
    both are exact integers for every n >= 4.
    """
    if n < 4:
        raise TooSmallError(f"bound defined for n >= 4, got {n}")
    value = even_case_value(n) if n % 2 == 0 else odd_case_value(n)
    assert value.denominator == 1
    return int(value)


def level_bound_two(n: int) -> Fraction:
    """Status bound when every non-terminal level has >= 2 vertices.

    (n^2 + 2n)/4 for even n, (n^2 + 2n + 1)/4 for odd n, where n counts the
    vertices outside the source set.
    """
    if n % 2 == 0:
        return Fraction(n * n + 2 * n, 4)
    return Fraction(n * n + 2 * n + 1, 4)


def level_bound_second_three(n: int) -> Fraction:
    """Status bound when additionally the second level has >= 3 vertices.

    (n^2 + 8)/4 for even n, (n^2 + 7)/4 for odd n.
    """
    if n % 2 == 0:
        return Fraction(n * n + 8, 4)
    return Fraction(n * n + 7, 4)


def level_bound_three(n: int) -> Fraction:
    """Status bound when every non-terminal level has >= 3 vertices: (n+1)(n+2)/6."""
    return Fraction((n + 1) * (n + 2), 6)


def dec_bound(n: int) -> Fraction:
    """(n-1)^2/18, the cap on the minimum distance decrease of a good-vertex surgery."""
    if n < 4:
        raise TooSmallError(f"bound defined for n >= 4, got {n}")
    return Fraction((n - 1) ** 2, 18)


# -- chained totals of the induction's reduction steps --------------------------
#
# Each function evaluates the total a reduction step chains together from
# the bound terms above.  They are pure polynomials in n (and x), so the
# identities the test suite asserts hold for every integer, parity aside.


def deletion_chain_even(n: int) -> Fraction:
    """odd-branch(n-1) + level_bound_two(n-1) for odd n-1; equals even-branch(n)."""
    m = n - 1
    return odd_case_value(m) + Fraction(m * m + 2 * m + 1, 4)


def contraction_chain_value(n: int) -> Fraction:
    """Degree-2 contraction chain built on the cherry-set distance sum of 12.

    odd-branch(n-2) + (n-3) + (1/2)((n-7)^2 + 2(n-7)) + 4(n-7) + 14, which
    simplifies to n^3/12 + 11n/12 - 3.  Instances additionally pay the two
    distance units from the deleted vertex to its neighbours, so the
    instance-true chain is this value + 2 (= odd-branch(n)); see
    contraction_chain_instance_bound.
    """
    m = n - 7
    return odd_case_value(n - 2) + (n - 3) + Fraction(m * m + 2 * m, 2) + 4 * m + 14


def contraction_chain_instance_bound(n: int) -> Fraction:
    """The contraction chain constant that pairwise distances actually realise."""
    return contraction_chain_value(n) + 2


def good_vertex_chain_value(n: int) -> Fraction:
    """even-branch(n-1) + level_bound_three(n-1) + dec_bound(n).

    Equals n^3/12 - n^2/36 + 53n/36 - 115/36, which drops below the odd
    branch value exactly from n = 15 on.
    """
    return even_case_value(n - 1) + level_bound_three(n - 1) + dec_bound(n)


def split_chain_value(n: int, x: int) -> Fraction:
    """Separating-cycle split chain for an interior of x vertices.

    even-branch(x+4) + even-branch(n-x) - 8
      + (x/4)((n-x-4)^2 + 2(n-x-4) + 1)
      + (n-x-4)((1/6)((x+3)^2 + 3(x+3) + 2) - 4),
    which simplifies to
    n^3/12 - n x^2/12 + n/2 + x^3/12 + x^2/3 + 11x/12 + 2/3.
    """
    m = n - x - 4
    inner = even_case_value(x + 4)
    outer = even_case_value(n - x)
    cross_out = Fraction(x, 4) * (m * m + 2 * m + 1)
    cross_in = m * (Fraction((x + 3) ** 2 + 3 * (x + 3) + 2, 6) - 4)
    return inner + outer - 8 + cross_out + cross_in


def split_chain_polynomial(n: int, x: int) -> Fraction:
    """The closed form of split_chain_value, for identity checks."""
    return (
        Fraction(n**3, 12)
        - Fraction(n * x * x, 12)
        + Fraction(n, 2)
        + Fraction(x**3, 12)
        + Fraction(x * x, 3)
        + Fraction(11 * x, 12)
        + Fraction(2, 3)
    )
