"""Exact-arithmetic kernel: polynomials, series, determinants."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from qmetallic import (
    ExactDivisionError,
    ExactMatrix,
    LaurentPair,
    Poly,
    PrecisionError,
    Series,
    ZZ,
    QQ,
    det_fraction_free,
    poly_divrem,
    prime_field,
    series_invert,
    series_lowest_term,
)


def P(coeffs, dom=ZZ):
    return Poly(dom, coeffs)


# --- polynomial basics ------------------------------------------------------


def test_polynomial_trailing_zeros_are_stripped():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).is_zero()
    assert P([]).degree() == P([0]).degree()  # the NEG_INF sentinel


def test_zero_polynomial_degree_sentinel_orders_below_everything():
    sentinel = P([]).degree()
    assert sentinel < 0 and sentinel < P([1]).degree()


def test_poly_divrem_textbook_cases():
    q, r = poly_divrem(P([-1, 0, 1]), P([-1, 1]))        # (q^2-1)/(q-1)
    assert q == P([1, 1]) and r.is_zero()
    q, r = poly_divrem(P([0, 0, 0, 1]), P([-1, 1]))      # q^3/(q-1)
    assert q == P([1, 1, 1]) and r == P([1])
    q, r = poly_divrem(P([1, 0, 0, 0, 0, -1]), P([1, -1]))
    assert q == P([1, 1, 1, 1, 1]) and r.is_zero()       # geometric sum


def test_poly_divrem_rejects_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        poly_divrem(P([1]), P([]))


def test_poly_divrem_inexact_over_integers_raises():
    with pytest.raises(ExactDivisionError):
        poly_divrem(P([1, 1]), P([2]))


small_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=6)


@settings(max_examples=120, deadline=None)
@given(small_polys, small_polys)
def test_poly_divrem_roundtrip_over_rationals(num, den):
    a, b = P(num, QQ), P(den, QQ)
    if b.is_zero():
        return
    q, r = poly_divrem(a, b)
    assert q * b + r == a
    assert r.degree() < b.degree() or r.is_zero()


# --- series -----------------------------------------------------------------


def test_series_length_always_matches_precision():
    f = Series(ZZ, [1, 2], 5)
    assert f.prec == 5 and len(f.coeffs) == 5
    assert (f * f).prec == 5
    assert (f + Series(ZZ, [1], 3)).prec == 3


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=0, max_size=8))
def test_series_inverse_multiplies_back_to_one(tail):
    f = Series(QQ, [1] + tail)
    product = f * series_invert(f)
    assert product.coeffs[0] == 1
    assert all(c == 0 for c in product.coeffs[1:])


def test_series_invert_rejects_non_unit_constant():
    with pytest.raises(ExactDivisionError):
        Series(ZZ, [2, 1], 4).invert()
    with pytest.raises(ExactDivisionError):
        Series(ZZ, [0, 1], 4).invert()


def test_series_lowest_term_examples():
    assert series_lowest_term(Series(ZZ, [0, 0, 1, -1, 2], 5)) == (2, 1)
    assert series_lowest_term(Series(ZZ, [3, 1], 2)) == (0, 3)
    with pytest.raises(ValueError):
        series_lowest_term(Series(ZZ, [], 10))


def test_series_division_loses_precision_by_divisor_valuation():
    num = Series(ZZ, [0, 0, 1, 1], 8)
    den = Series(ZZ, [0, 0, 1], 8)
    out = num.div(den)
    assert out.prec == 6
    assert out.coeffs == (1, 1, 0, 0, 0, 0)


def test_series_division_requires_matching_valuation():
    with pytest.raises(ExactDivisionError):
        Series(ZZ, [1, 1], 4).div(Series(ZZ, [0, 1], 4))


def test_coefficient_past_precision_raises_instead_of_truncating():
    f = Series(ZZ, [1, 2, 3], 3)
    with pytest.raises(PrecisionError):
        f.coefficient(3)
    with pytest.raises(PrecisionError):
        f.truncate(4)


def test_zero_detection_is_relative_to_precision():
    f = Series(ZZ, [0, 0], 2)
    assert f.is_zero_to_precision() and f.valuation() is None


# --- exactness of the coefficient domains ------------------------------------


def test_domains_refuse_floating_point_coefficients():
    for dom in (ZZ, QQ, prime_field(7)):
        with pytest.raises(TypeError):
            dom.coerce(0.5)
        with pytest.raises(TypeError):
            Poly(dom, [1.0])


def test_prime_field_requires_prime_modulus():
    with pytest.raises(ValueError):
        prime_field(6)
    f5 = prime_field(5)
    assert f5.mul(f5.from_int(3), f5.from_int(4)) == f5.from_int(2)
    assert f5.inv(f5.from_int(2)) == f5.from_int(3)


# --- determinants -------------------------------------------------------------


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for c in range(n):
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = rows[0][c] * cofactor_det(minor)
        total += term if c % 2 == 0 else -term
    return total


def test_determinant_of_empty_matrix_is_one():
    assert det_fraction_free(ExactMatrix(ZZ, [])) == 1


def test_determinant_known_small_cases():
    assert det_fraction_free(ExactMatrix(ZZ, [[1, 1], [1, 2]])) == 1
    assert det_fraction_free(ExactMatrix(ZZ, [[1, 1, 2], [1, 2, 4], [2, 4, 9]])) == 1


def test_determinant_rejects_non_square_input():
    with pytest.raises(ValueError):
        det_fraction_free(ExactMatrix(ZZ, [[1, 2, 3], [4, 5, 6]]))


def test_determinant_matches_cofactor_expansion_exhaustively_dim_2():
    span = range(-3, 4)
    for a, b, c, d in itertools.product(span, repeat=4):
        rows = [[a, b], [c, d]]
        assert det_fraction_free(ExactMatrix(ZZ, rows)) == a * d - b * c


def test_determinant_matches_cofactor_expansion_random_dims_3_and_4():
    rng = random.Random(20240817)
    for _ in range(150):
        n = rng.choice((3, 4))
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det_fraction_free(ExactMatrix(ZZ, rows)) == cofactor_det(rows)


def test_determinant_over_rationals_and_prime_fields():
    from fractions import Fraction

    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(1, 7)]]
    assert det_fraction_free(ExactMatrix(QQ, rows)) == Fraction(1, 14) - Fraction(1, 15)
    f7 = prime_field(7)
    rows = [[f7.from_int(3), f7.from_int(5)], [f7.from_int(2), f7.from_int(6)]]
    assert det_fraction_free(ExactMatrix(f7, rows)) == f7.from_int(1)


# --- Laurent pairs --------------------------------------------------------------


def test_laurent_pair_normalizes_shift_against_valuation():
    lp = LaurentPair(Poly(ZZ, [0, 0, 1]), 1)  # q^2 * q^-1 = q
    assert lp.min_exponent() == 1
    product = lp * LaurentPair(Poly(ZZ, [1]), 2)  # times q^-2
    assert product.min_exponent() == -1


def test_polynomial_rendering_ascending_with_carets():
    assert str(P([1, -2, 0, -1])) == "1 - 2q - q^3"
    assert str(P([0, 1])) == "q"
    assert str(P([])) == "0"
