from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, assume
from hypothesis import strategies as st

from dedekind_lab.core import (
    ArithOp,
    DomainError,
    distinct_prime_factor_count,
    floor_of,
    format_rational,
    is_prime,
    mod_inverse,
    parse_rational,
    rational_arith,
    rational_make,
    units,
)

rationals = st.fractions(max_denominator=10**6)


def test_make_reduces_to_lowest_terms():
    assert rational_make(6, 4) == Fraction(3, 2)
    x = rational_make(6, 4)
    assert (x.numerator, x.denominator) == (3, 2)


def test_make_canonical_zero():
    x = rational_make(0, 7)
    assert (x.numerator, x.denominator) == (0, 1)


def test_make_moves_sign_to_numerator():
    x = rational_make(-13, -16)
    assert (x.numerator, x.denominator) == (13, 16)
    y = rational_make(13, -16)
    assert (y.numerator, y.denominator) == (-13, 16)


def test_make_rejects_zero_denominator():
    with pytest.raises(DomainError):
        rational_make(1, 0)


def test_arith_examples():
    assert rational_arith(Fraction(1, 3), Fraction(1, 6), ArithOp.ADD) == Fraction(1, 2)
    assert rational_arith(Fraction(-13, 16), Fraction(0), ArithOp.MUL) == Fraction(0)
    assert rational_arith(Fraction(-13, 16), Fraction(-5, 16), ArithOp.SUB) == Fraction(-1, 2)
    assert rational_arith(Fraction(1, 2), Fraction(1, 4), "div") == Fraction(2)


def test_arith_division_by_zero():
    with pytest.raises(DomainError):
        rational_arith(Fraction(1, 2), Fraction(0), ArithOp.DIV)


@given(rationals, rationals, rationals)
def test_field_axioms(x, y, z):
    assert rational_arith(x, y, ArithOp.ADD) == rational_arith(y, x, ArithOp.ADD)
    assert rational_arith(x, y, ArithOp.MUL) == rational_arith(y, x, ArithOp.MUL)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert rational_arith(x, -x, ArithOp.ADD) == 0


@given(rationals, rationals, st.sampled_from(list(ArithOp)))
def test_results_are_canonical(x, y, op):
    assume(not (op == ArithOp.DIV and y == 0))
    result = rational_arith(x, y, op)
    assert result.denominator >= 1
    assert gcd(abs(result.numerator), result.denominator) == 1


def test_floor_examples():
    assert floor_of(Fraction(7, 2)) == 3
    assert floor_of(Fraction(-1, 4)) == -1
    assert floor_of(Fraction(5)) == 5


@given(rationals)
def test_floor_brackets_value(x):
    f = floor_of(x)
    assert f <= x < f + 1


def test_mod_inverse_examples():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(1, 9) == 1
    assert mod_inverse(11, 23) == 21


def test_mod_inverse_rejects_non_units():
    with pytest.raises(DomainError):
        mod_inverse(4, 10)
    with pytest.raises(DomainError):
        mod_inverse(1, 1)


@given(st.integers(min_value=-10**12, max_value=10**12), st.integers(min_value=2, max_value=10**9))
def test_mod_inverse_property(a, m):
    assume(gcd(a, m) == 1)
    u = mod_inverse(a, m)
    assert 1 <= u < m
    assert a * u % m == 1


def test_distinct_prime_factor_count():
    assert distinct_prime_factor_count(40) == 2
    assert distinct_prime_factor_count(1) == 0
    assert distinct_prime_factor_count(23) == 1
    assert distinct_prime_factor_count(2 * 3 * 5 * 7 * 11) == 5
    assert distinct_prime_factor_count(1024) == 1


def test_is_prime():
    primes = [p for p in range(100) if is_prime(p)]
    assert primes[:10] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes) == 25
    assert not is_prime(1)
    assert not is_prime(91)


def test_units():
    assert units(1) == []
    assert units(12) == [1, 5, 7, 11]
    assert len(units(40)) == 16


def test_format_rational():
    assert format_rational(Fraction(-13, 16)) == "-13/16"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(0)) == "0"


@given(rationals)
def test_printed_rational_reparses(x):
    assert parse_rational(format_rational(x)) == x


def test_parse_rational_rejects_garbage():
    with pytest.raises(DomainError):
        parse_rational("1/0")
    with pytest.raises(DomainError):
        parse_rational("one half")
    with pytest.raises(DomainError):
        parse_rational("1/2/3")
