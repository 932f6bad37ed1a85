from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weierstrass import Field, enumerate_field
from weierstrass.errors import FieldMismatchError
from weierstrass.fields import fe_add, fe_inv, fe_mul, fe_neg, fe_pow, fe_sub, is_prime

F2, F5, Q = Field(2), Field(5), Field.rationals()


def test_add_examples():
    assert fe_add(F5(3), F5(4)) == 2
    assert fe_add(Q(Fraction(1, 2)), Q(Fraction(1, 3))) == Q(Fraction(5, 6))
    assert fe_add(F2(1), F2(1)) == 0


def test_mul_examples():
    assert fe_mul(F5(2), F5(3)) == 1
    assert fe_mul(Q(Fraction(2, 3)), Q(Fraction(3, 2))) == 1
    assert fe_mul(F5(0), F5(4)) == 0


def test_inv_examples():
    assert fe_inv(F5(2)) == 3
    assert fe_inv(Q(Fraction(-3, 7))) == Q(Fraction(-7, 3))
    with pytest.raises(ZeroDivisionError):
        fe_inv(F5(0))


def test_neg_sub_pow_examples():
    assert fe_neg(F5(1)) == 4
    assert fe_pow(F5(2), 4) == 1
    assert fe_pow(Q(2), -2) == Q(Fraction(1, 4))
    assert fe_sub(F5(1), F5(3)) == 3
    with pytest.raises(ZeroDivisionError):
        fe_pow(F5(0), -1)


def test_canonical_representatives():
    assert F5(7).raw == 2 and F5(-1).raw == 4
    q = Q(Fraction(4, -6))
    assert q.raw == Fraction(-2, 3) and q.raw.denominator > 0


def test_mismatched_fields_rejected():
    with pytest.raises(FieldMismatchError):
        fe_add(F5(1), Field(7)(1))


def test_parse_and_literals():
    assert Field.parse("Fp:5") == F5
    assert Field.parse("Q").is_rational
    assert Q.literal("3/4") == Q(Fraction(3, 4))
    assert F5.literal("-1") == 4
    with pytest.raises(ValueError):
        Field.parse("Fp:6")
    with pytest.raises(ValueError):
        Field.parse("R")


def test_enumerate():
    assert [e.raw for e in enumerate_field(F5)] == [0, 1, 2, 3, 4]
    with pytest.raises(ValueError):
        list(enumerate_field(Q))


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_json():
    assert F5(3).to_json() == 3
    assert Q(Fraction(-2, 3)).to_json() == "-2/3"


FIELDS = [Field(2), Field(3), Field(5), Field(101), Field.rationals()]


def _elem(F):
    if F.is_rational:
        return st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000).map(F)
    return st.integers(0, F.p - 1).map(F)


@pytest.mark.parametrize("F", FIELDS, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(_elem(F)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0 and a - b == a + (-b)
    if a != 0:
        assert a * a.inverse() == 1
        if not F.is_rational:
            assert a ** (F.p - 1) == 1
