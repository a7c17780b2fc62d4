from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catlog.catalan import gen_catalan
from catlog.series import Series, catalan_series


def S(*coeffs):
    return Series(tuple(Fraction(c) for c in coeffs))


small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def series_strategy(order: int, constant=None):
    inner = st.tuples(*([st.just(Fraction(constant))] if constant is not None else [small_fractions]),
                      *[small_fractions] * order)
    return inner.map(Series)


class TestConstruction:
    def test_orders(self):
        assert Series.one(4).order == 4
        assert Series.x(3).coeffs == (0, 1, 0, 0)
        assert Series.x(0).is_zero()

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Series((0.5, 1))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            Series(())


class TestRingOperations:
    def test_additive_identity(self):
        f = S(1, 2, 3)
        assert f + Series.zero(2) == f

    def test_add(self):
        assert S(1, 1, 0) + S(1, -1, 0) == S(2, 0, 0)

    def test_add_agrees_with_scalar_multiple(self):
        lg = catalan_series(2, 8).log()
        assert lg + lg == 2 * lg

    def test_order_mismatch_is_an_error(self):
        with pytest.raises(ValueError):
            S(1, 2) + S(1, 2, 3)
        with pytest.raises(ValueError):
            S(1, 2) * S(1, 2, 3)

    def test_multiplicative_identity(self):
        f = S(2, 5, 7, 1)
        assert f * Series.one(3) == f

    def test_mul(self):
        assert S(1, 1, 0) * S(1, 1, 0) == S(1, 2, 1)

    def test_scalar_mul(self):
        assert 3 * S(1, 2) == S(3, 6)
        assert S(1, 2) * Fraction(1, 2) == S(Fraction(1, 2), 1)

    def test_catalan_product_matches_direct_convolution(self):
        # independent oracle: convolve the closed-form coefficient lists
        n_max = 10
        g = catalan_series(2, n_max)
        c = [1] + [gen_catalan(2, n) for n in range(1, n_max + 1)]
        square = g * g
        for n in range(n_max + 1):
            assert square[n] == sum(c[j] * c[n - j] for j in range(n + 1))

    def test_pow(self):
        f = S(1, 4, 2)
        assert f**1 == f
        assert f**0 == Series.one(2)
        assert S(1, 1, 0, 0) ** 3 == S(1, 3, 3, 1)

    def test_pow_of_log_catalan(self):
        sq = catalan_series(2, 3).log() ** 2
        assert sq[2] == 1
        assert sq[3] == 3  # square of x + 3/2 x^2 + 10/3 x^3 by hand


class TestLogExp:
    def test_log_of_one(self):
        assert Series.one(5).log() == Series.zero(5)

    def test_log_of_geometric(self):
        geo = Series((Fraction(1),) * 9)
        expected = Series((Fraction(0),) + tuple(Fraction(1, n) for n in range(1, 9)))
        assert geo.log() == expected

    def test_log_catalan_coefficients(self):
        lg = catalan_series(2, 3).log()
        assert [lg[1], lg[2], lg[3]] == [1, Fraction(3, 2), Fraction(10, 3)]

    def test_exp_of_zero(self):
        assert Series.zero(6).exp() == Series.one(6)

    def test_exp_log_inverse_on_catalan(self):
        g = catalan_series(3, 8)
        assert g.log().exp() == g

    def test_exp_of_log_series_is_geometric(self):
        f = Series((Fraction(0),) + tuple(Fraction(1, n) for n in range(1, 8)))
        assert f.exp() == Series((Fraction(1),) * 8)

    def test_wrong_constant_terms(self):
        with pytest.raises(ValueError):
            S(2, 1).log()
        with pytest.raises(ValueError):
            S(1, 1).exp()

    @given(series_strategy(5, constant=1))
    def test_exp_inverts_log(self, f):
        assert f.log().exp() == f

    @given(series_strategy(5, constant=0))
    def test_log_inverts_exp(self, g):
        assert g.exp().log() == g


class TestCatalanSeries:
    def test_k2_coefficients(self):
        g = catalan_series(2, 4)
        assert list(g.coeffs) == [1, 1, 2, 5, 14]

    def test_first_coefficient_any_k(self):
        for k in range(1, 7):
            assert catalan_series(k, 2)[1] == 1

    def test_k3_n2(self):
        assert catalan_series(3, 2)[2] == 3

    def test_k1_is_geometric(self):
        assert catalan_series(1, 6) == Series((Fraction(1),) * 7)

    def test_functional_equation_residual_zero(self):
        for k in range(1, 6):
            for order in (0, 1, 5, 16):
                g = catalan_series(k, order)
                residual = g - Series.one(order) - Series.x(order) * g**k
                assert residual.is_zero(), (k, order)

    def test_defining_identity_after_log(self):
        # with F = log G: exp(F) - 1 - x*exp(k*F) vanishes
        for k in (1, 2, 3):
            order = 12
            f = catalan_series(k, order).log()
            residual = f.exp() - Series.one(order) - Series.x(order) * (k * f).exp()
            assert residual.is_zero(), k

    def test_matches_closed_form(self):
        for k in (1, 2, 3, 4):
            g = catalan_series(k, 10)
            for n in range(1, 11):
                assert g[n] == gen_catalan(k, n)


class TestPresentation:
    def test_str(self):
        assert str(S(1, Fraction(3, 2))) == "1 + 3/2*x + O(x^2)"

    def test_getitem_bounds(self):
        with pytest.raises(IndexError):
            S(1, 2)[5]

    def test_json_roundtrip(self):
        f = S(1, Fraction(-7, 3), 0, 2)
        assert Series.from_json(f.to_json()) == f
        assert f.to_json() == ["1/1", "-7/3", "0/1", "2/1"]
