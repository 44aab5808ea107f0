from fractions import Fraction

import pytest

from sasakian.scalars import (
    GaussianRational,
    I,
    ONE,
    ZERO,
    format_scalar,
    parse_scalar,
)


def test_field_axioms_on_samples():
    a = GaussianRational(Fraction(1, 2), Fraction(-3, 7))
    b = GaussianRational(Fraction(2, 5), Fraction(1, 3))
    c = GaussianRational(4, -9)
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()
    assert a * (b / a) == b
    assert (a / b) * b == a


def test_lowest_terms_invariant():
    z = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
    assert z.re == Fraction(1, 2) and z.re.denominator == 2
    assert z.im == Fraction(-3, 4) and z.im.denominator == 4
    w = z + z
    assert w.re.denominator == 1


def test_conjugation_involution_and_norm():
    z = GaussianRational(Fraction(3, 5), Fraction(-1, 2))
    assert z.conjugate().conjugate() == z
    n = z * z.conjugate()
    assert n.im == 0
    assert n.re == z.norm2()


def test_i_squares_to_minus_one():
    assert I * I == GaussianRational(-1)
    assert I ** 4 == ONE


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@pytest.mark.parametrize(
    "text,expected",
    [
        ("1/2+0/1*i", GaussianRational(Fraction(1, 2), 0)),
        ("0/1+-1/1*i", GaussianRational(0, -1)),
        ("-3/4", GaussianRational(Fraction(-3, 4), 0)),
        ("2", GaussianRational(2, 0)),
        ("-1/2+3/7*i", GaussianRational(Fraction(-1, 2), Fraction(3, 7))),
    ],
)
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


def test_format_parse_round_trip():
    samples = [
        GaussianRational(Fraction(1, 2), 0),
        GaussianRational(0, -1),
        GaussianRational(Fraction(-5, 3), Fraction(7, 11)),
        ZERO,
        I,
    ]
    for z in samples:
        assert parse_scalar(format_scalar(z)) == z


def test_format_is_canonical():
    assert format_scalar(GaussianRational(Fraction(1, 2), 0)) == "1/2"
    assert format_scalar(GaussianRational(0, -1)) == "0/1+-1/1*i"


def test_parse_rejects_garbage():
    for bad in ["", "i", "1/2+i", "1//2"]:
        with pytest.raises(ValueError):
            parse_scalar(bad)
