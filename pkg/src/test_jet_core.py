"""
test_jet_core.py
Jet aritmetiği testleri (pytest + hypothesis)
Halka aksiyomları, bölme/karekök geri dönüşleri, bileşke ve Faà di Bruno kontrolü.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jet_core import (
    FLOAT, RATIONAL, BackendMismatchError, Jet, NotInvertibleError, OrderExhaustedError,
    SqrtObstructionError, compose, cos_series, derivative, div, evaluate, exp_series,
    make_scalar, mul, power, shift, sin_series, sqrt, unshift, valuation,
)

ORDER = 6

scalars = st.fractions(min_value=-6, max_value=6, max_denominator=12)


def jets(order=ORDER, constant=None):
    """Rastgele rasyonel jet stratejisi"""
    def build(coeffs):
        if constant is not None:
            coeffs = [constant] + coeffs[1:]
        return Jet(tuple(coeffs), RATIONAL)
    return st.lists(scalars, min_size=order + 1, max_size=order + 1).map(build)


def units():
    return jets().filter(lambda a: abs(a[0]) >= 1)


def inner_jets():
    """Sabit terimi sıfır, doğrusal terimi sıfırdan farklı iç jet"""
    return jets(constant=0).filter(lambda g: g[1] != 0)


def close(a, b, rel=1e-12):
    scale = 1.0 + b.max_abs()
    return all(abs(x - y) <= rel * scale for x, y in zip(a.coeffs, b.coeffs))


def compositions(m, k):
    """m'yi k pozitif parçaya ayıran sıralı bileşimler"""
    if k == 1:
        yield (m,)
        return
    for first in range(1, m - k + 2):
        for rest in compositions(m - first, k - 1):
            yield (first,) + rest


class TestRingAxioms:
    @given(jets(), jets(), jets())
    def test_addition_associative_and_commutative(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a

    @given(jets(), jets(), jets())
    def test_multiplication_associative_and_distributive(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @given(jets())
    def test_identities(self, a):
        one = Jet.constant(1, ORDER)
        zero = Jet.zero(ORDER)
        assert a * one == a
        assert a + zero == a
        assert a - a == zero

    @given(jets(), jets())
    def test_float_backend_tracks_rational(self, a, b):
        fa, fb = a.to_backend(FLOAT), b.to_backend(FLOAT)
        assert close(fa * fb, (a * b).to_backend(FLOAT))
        assert close(fa + fb, (a + b).to_backend(FLOAT))


class TestRoundTrips:
    @given(jets(), units())
    def test_division_round_trip(self, a, b):
        assert div(a, b) * b == a

    @given(jets().filter(lambda a: a[0] > 0))
    def test_sqrt_of_square(self, a):
        assert sqrt(mul(a, a)) == a

    @given(units(), units())
    @settings(max_examples=50)
    def test_float_division_round_trip(self, a, b):
        fa, fb = a.to_backend(FLOAT), b.to_backend(FLOAT)
        assert close(div(fa, fb), div(a, b).to_backend(FLOAT), rel=1e-9)

    @given(jets(), jets())
    def test_derivation_rule(self, a, b):
        assert derivative(a * b) == derivative(a) * b.truncate(ORDER - 1) + a.truncate(ORDER - 1) * derivative(b)


class TestComposition:
    @given(jets(), inner_jets(), inner_jets())
    @settings(max_examples=60)
    def test_associative(self, f, g, h):
        left = compose(compose(f, g), h)
        right = compose(f, compose(g, h))
        n = min(left.order, right.order)
        assert left.truncate(n) == right.truncate(n)

    @given(jets(), inner_jets())
    def test_faa_di_bruno_coefficients(self, f, g):
        composed = compose(f, g)
        for m in range(1, 7):
            expected = Fraction(0)
            for k in range(1, m + 1):
                for parts in compositions(m, k):
                    expected += f[k] * math.prod(g[p] for p in parts)
            assert composed[m] == expected
        assert composed[0] == f[0]

    @given(inner_jets(), inner_jets())
    @settings(max_examples=40)
    def test_exp_of_sum_is_product(self, a, b):
        exp = exp_series(ORDER)
        assert compose(exp, a + b) == compose(exp, a) * compose(exp, b)

    def test_trusted_order_with_higher_valuation(self):
        f = Jet.from_coeffs([0, 1, 1], 2)
        g = Jet.monomial(2, 1, 10)
        # t^2 + t^4, bilinmeyen terim O(t^6)
        assert compose(f, g).order == 5

    def test_identity_inner(self):
        t = Jet.variable(ORDER)
        assert compose(sin_series(ORDER), t) == sin_series(ORDER)

    def test_pythagorean_identity(self):
        s, c = sin_series(10), cos_series(10)
        assert s * s + c * c == Jet.constant(1, 10)


class TestWorkedExpansions:
    def test_sqrt_of_front_speed(self):
        a = Jet.from_coeffs([16, 0, 25], 4)
        assert sqrt(a) == Jet.from_coeffs([4, 0, Fraction(25, 8), 0, Fraction(-625, 512)], 4)

    def test_curvature_expansion(self):
        ell = div(Jet.constant(20, 4), Jet.from_coeffs([16, 0, 25], 4))
        assert ell == Jet.from_coeffs([Fraction(5, 4), 0, Fraction(-125, 64), 0, Fraction(3125, 1024)], 4)

    def test_power_and_evaluate(self):
        a = Jet.from_coeffs([1, 1], 5)
        assert power(a, 5) == Jet.from_coeffs([1, 5, 10, 10, 5, 1], 5)
        assert evaluate(power(a, 5), Fraction(1)) == 32

    def test_shift_unshift(self):
        a = Jet.from_coeffs([4, 5], 3)
        shifted = shift(a, 3)
        assert shifted.order == 6
        assert unshift(shifted, 3) == a
        assert valuation(shifted) == 3

    def test_valuation_of_zero_is_infinite(self):
        assert valuation(Jet.zero(4)) == math.inf
        assert Jet.zero(4).vanishes()

    def test_float_valuation_is_relative(self):
        a = Jet((1e-14, 0.0, 1.0), FLOAT)
        assert valuation(a) == 2

    def test_float_valuation_scale_stays_near_origin(self):
        a = Jet((0.0, 0.5) + (0.0,) * 12 + (1e12,), FLOAT)
        assert valuation(a) == 1
        assert a.low_order_scale() == 0.5
        assert Jet((0.0,) * 10 + (3.0,), FLOAT).low_order_scale() == 3.0


class TestErrors:
    def test_division_by_non_unit(self):
        with pytest.raises(NotInvertibleError):
            div(Jet.constant(1, 3), Jet.variable(3))

    def test_sqrt_obstruction(self):
        with pytest.raises(SqrtObstructionError):
            sqrt(Jet.from_coeffs([2, 1], 3))
        assert math.isclose(sqrt(Jet.from_coeffs([2, 1], 3, FLOAT))[0], math.sqrt(2))

    def test_backend_mismatch(self):
        with pytest.raises(BackendMismatchError):
            make_scalar(0.5, RATIONAL)
        with pytest.raises(BackendMismatchError):
            Jet.constant(1, 2) + Jet.constant(1, 2, FLOAT)

    def test_order_exhausted(self):
        a = Jet.zero(3)
        with pytest.raises(OrderExhaustedError):
            a[4]
        with pytest.raises(OrderExhaustedError):
            derivative(Jet.constant(1, 0))

    def test_compose_needs_zero_constant(self):
        with pytest.raises(NotInvertibleError):
            compose(exp_series(3), Jet.from_coeffs([1, 1], 3))
