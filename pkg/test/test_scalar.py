from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from formwell.core.errors import DivisionByZero, FormwellError
from formwell.core.scalar import HALF, I, ONE, ZERO, ArithOp, GaussianRational, gr_arith, gr_conj

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
scalars = st.builds(GaussianRational, rationals, rationals)


class TestFieldLaws:
    @given(scalars, scalars)
    def test_addition_commutes(self, a, b):
        assert a + b == b + a

    @given(scalars, scalars, scalars)
    def test_multiplication_associates(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(scalars, scalars, scalars)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(scalars)
    def test_additive_inverse(self, a):
        assert a - a == ZERO
        assert a + (-a) == ZERO

    @given(scalars)
    def test_multiplicative_inverse(self, a):
        assume(not a.is_zero())
        assert a * (ONE / a) == ONE
        assert (a / a) == ONE

    @given(scalars, scalars)
    def test_conjugate_is_multiplicative(self, a, b):
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert gr_conj(gr_conj(a)) == a

    @given(scalars)
    def test_norm_is_real(self, a):
        assert (a * a.conjugate()).is_real()
        assert (a * a.conjugate()).re == a.norm2()


def test_imaginary_unit():
    assert I * I == -ONE
    assert I**4 == ONE
    assert HALF + HALF == 1


def test_mixed_operands():
    assert 1 + I == GaussianRational(1, 1)
    assert 2 * I == GaussianRational(0, 2)
    assert 1 / I == -I
    assert Fraction(1, 2) - HALF == ZERO


def test_gr_arith_dispatch():
    a, b = GaussianRational(1, 2), GaussianRational(3, -1)
    assert gr_arith(a, b, ArithOp.ADD) == GaussianRational(4, 1)
    assert gr_arith(a, b, ArithOp.SUB) == GaussianRational(-2, 3)
    assert gr_arith(a, b, ArithOp.MUL) == GaussianRational(5, 5)
    assert gr_arith(a, b, "div") == GaussianRational(Fraction(1, 10), Fraction(7, 10))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    # also catchable as the builtin and as the package base
    with pytest.raises(ZeroDivisionError):
        gr_arith(I, ZERO, ArithOp.DIV)
    with pytest.raises(FormwellError):
        I / 0


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        GaussianRational.coerce(0.5)
    with pytest.raises(TypeError):
        ONE + 0.5


@pytest.mark.parametrize(
    "value, text",
    [
        (GaussianRational(0), "0"),
        (GaussianRational(Fraction(-3, 4)), "-3/4"),
        (GaussianRational(0, 1), "i"),
        (GaussianRational(0, -2), "-2i"),
        (GaussianRational(1, Fraction(-1, 2)), "1-1/2i"),
    ],
)
def test_str(value, text):
    assert str(value) == text


def test_hash_agrees_with_rational():
    assert hash(GaussianRational(3)) == hash(Fraction(3))
    assert GaussianRational(3) == 3
