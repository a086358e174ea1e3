"""Exact scalar rings: quadratic extension, polynomials, rational
functions."""

import math
from fractions import Fraction as F

import pytest

from dynrmat.ring import Poly, RatFunc, SqrtExt, qpow_half, sqrt_of


def test_sqrt_ext_square_root_property():
    s = sqrt_of(F(1, 2))
    assert s * s == F(1, 2)
    assert float(s) == pytest.approx(math.sqrt(0.5))


def test_sqrt_ext_field_ops():
    s = sqrt_of(F(1, 2))
    a = 3 + 2 * s
    b = F(1, 4) - s
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * a.inverse() == 1
    assert a ** -2 == (a * a).inverse()


def test_qpow_half_integer_and_half_integer():
    q = F(1, 2)
    assert qpow_half(q, 4) == F(1, 4)        # q^2
    assert qpow_half(q, -2) == 2             # q^-1
    v = qpow_half(q, 1)                      # q^(1/2)
    assert v * v == q


def test_poly_divmod_and_eval():
    # (x^2 - 1) = (x - 1)(x + 1)
    p = Poly([F(-1), F(0), F(1)])
    d = Poly([F(-1), F(1)])
    quo, rem = p.divmod(d)
    assert rem.is_zero()
    assert quo == Poly([F(1), F(1)])
    assert p.eval(F(3)) == 8


def test_ratfunc_reduction_and_equality():
    x = RatFunc.x(F(1))
    f = (x * x - 1) / (x - 1)
    assert f == x + 1


def test_ratfunc_series_matches_geometric():
    x = RatFunc.x(F(1))
    f = 1 / (1 - x)
    assert f.series(5) == [1, 1, 1, 1, 1, 1]


def test_ratfunc_series_pole_detection():
    x = RatFunc.x(F(1))
    with pytest.raises(ZeroDivisionError):
        (1 / x).series(3)


def test_ratfunc_shift_scale():
    x = RatFunc.x(F(1))
    f = 1 / (1 - x)
    g = f.shift_scale(F(1, 2))       # 1/(1 - x/2)
    assert g.series(3) == [1, F(1, 2), F(1, 4), F(1, 8)]


def test_ratfunc_with_sqrt_ext_coefficients():
    s = sqrt_of(F(1, 2))
    x = RatFunc.x(F(1))
    f = (s * x + 1) * (s * x - 1)
    assert f == F(1, 2) * x * x - 1
