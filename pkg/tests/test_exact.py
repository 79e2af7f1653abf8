from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pytri.exact import Surd, fmt, frac, rational_sqrt, sqrt_exact


def test_frac_coercions():
    assert frac(3) == 3
    assert frac("3/4") == Fraction(3, 4)
    assert frac(Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(TypeError):
        frac(0.5)
    with pytest.raises(TypeError):
        frac(True)


def test_fmt():
    assert fmt(Fraction(6, 3)) == 2
    assert fmt(Fraction(-3, 4)) == "-3/4"


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 16)) == Fraction(3, 4)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-4) is None


def test_surd_equality_ignores_representation():
    assert sqrt_exact(12) == Surd(Fraction(0), Fraction(2), 3)
    assert Surd(Fraction(1), Fraction(2), 3) == Surd(Fraction(1), Fraction(1), 12)
    assert Surd(Fraction(1), Fraction(2), 3) != Surd(Fraction(1), Fraction(-2), 3)
    assert len({Surd(Fraction(0), Fraction(2), 3), Surd(Fraction(0), Fraction(1), 12)}) == 1


def test_surd_rejects_square_radicand():
    with pytest.raises(ValueError):
        Surd(Fraction(0), Fraction(1), 4)


def test_sqrt_of_fraction_is_rationalized():
    s = sqrt_exact(Fraction(1, 2))
    assert s.radicand == 2 and s.coef == Fraction(1, 2)
    assert str(sqrt_exact(3, scale=-2, offset=3)) == "3 - 2*sqrt(3)"


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=10**4))
def test_sqrt_exact_squares_back(x):
    s = sqrt_exact(x)
    sq = s * s if isinstance(s, Fraction) else s.square()
    assert sq == x


@given(st.integers(2, 10**6), st.fractions(-100, 100, max_denominator=50), st.fractions(-100, 100, max_denominator=50))
def test_surd_float_matches(n, a, b):
    s = sqrt_exact(n, scale=b, offset=a)
    assert float(s) == pytest.approx(float(a) + float(b) * n**0.5, rel=1e-9, abs=1e-9)
