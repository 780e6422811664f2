import doctest

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import higgsmult.polyalg
from higgsmult.errors import DomainError
from higgsmult.polyalg import (
    FactoredChar,
    IntPoly,
    NotPolynomial,
    TruncatedSeries,
    divides,
    expand,
    is_palindromic_monic,
    poly_divmod,
    qbinom,
    qbinom_factored,
    qint,
    series_expand,
)

from oracles import divmod_fractions, factored_series, gaussian_binomial, mul_lists


def test_doctests():
    failed, _ = doctest.testmod(higgsmult.polyalg)
    assert failed == 0


class TestIntPoly:
    def test_trailing_zeros_trimmed(self):
        assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPoly((0, 0)).coeffs == ()

    def test_degree_convention(self):
        assert IntPoly.zero().degree == -1
        assert IntPoly.one().degree == 0
        assert IntPoly((0, 0, 7)).degree == 2

    def test_arithmetic_matches_oracle(self):
        a = IntPoly((1, -2, 3))
        b = IntPoly((4, 5))
        assert (a * b).coeffs == tuple(mul_lists([1, -2, 3], [4, 5]))
        assert (a + b).coeffs == (5, 3, 3)
        assert (a - b).coeffs == (-3, -7, 3)
        assert (a * 0).is_zero

    def test_pow(self):
        p = IntPoly((1, 1))
        assert (p ** 5).coeffs == (1, 5, 10, 10, 5, 1)
        assert (p ** 0) == IntPoly.one()
        with pytest.raises(DomainError):
            p ** -1

    def test_shift_and_monomial(self):
        assert IntPoly((1, 1)).shift(2).coeffs == (0, 0, 1, 1)
        assert IntPoly.monomial(3).coeffs == (0, 0, 0, 1)
        with pytest.raises(DomainError):
            IntPoly.monomial(-1)

    @given(st.lists(st.integers(-9, 9), max_size=7), st.lists(st.integers(-9, 9), max_size=7))
    def test_mul_commutes_with_oracle(self, a, b):
        assert (IntPoly(tuple(a)) * IntPoly(tuple(b))).coeffs == tuple(mul_lists(a, b))


class TestDivision:
    def test_exact_division(self):
        num = IntPoly((1, 1)) * IntPoly((1, 0, 1))
        q, r = poly_divmod(num, IntPoly((1, 1)))
        assert q.coeffs == (1, 0, 1) and r.is_zero

    def test_remainder_matches_fraction_oracle(self):
        num = IntPoly((3, 1, 4, 1, 5, 9))
        den = IntPoly((1, 0, -1))
        q, r = poly_divmod(num, den)
        oq, orr = divmod_fractions(num.coeffs, den.coeffs)
        assert [int(x) for x in oq] == list(q.coeffs)
        assert [int(x) for x in orr] == list(r.coeffs)
        assert num == q * den + r

    def test_inexact_leading_coefficient_gives_none(self):
        # (t+1)^2 is not an integer multiple of 2t+2
        assert poly_divmod(IntPoly((1, 2, 1)), IntPoly((2, 2))) is None

    def test_zero_divisor_rejected(self):
        with pytest.raises(DomainError):
            poly_divmod(IntPoly((1,)), IntPoly.zero())

    def test_divides(self):
        assert divides(IntPoly((1, 1)), IntPoly((1, 2, 1)))
        assert not divides(IntPoly((1, 1)), IntPoly((1, 1, 1)))
        assert divides(IntPoly((1, 1)), IntPoly.zero())
        assert not divides(IntPoly((2, 2)), IntPoly((1, 2, 1)))
        with pytest.raises(DomainError):
            divides(IntPoly.zero(), IntPoly((1, 1)))

    @given(
        st.lists(st.integers(-5, 5), min_size=1, max_size=5),
        st.lists(st.integers(-5, 5), min_size=1, max_size=5),
    )
    def test_divides_detects_products(self, d, q):
        dp, qp = IntPoly(tuple(d)), IntPoly(tuple(q))
        if dp.is_zero:
            return
        assert divides(dp, dp * qp)


class TestQuantum:
    def test_qint_values(self):
        assert qint(1).coeffs == (1,)
        assert qint(4).coeffs == (1, 1, 1, 1)

    @pytest.mark.parametrize("n", [0, -3])
    def test_qint_domain(self, n):
        with pytest.raises(DomainError):
            qint(n)

    def test_qbinom_4_2(self):
        # frozen from the subset-sum oracle: Gaussian binomial [4 choose 2]
        assert gaussian_binomial(4, 2) == [1, 1, 2, 1, 1]
        assert qbinom(4, 2).coeffs == (1, 1, 2, 1, 1)

    def test_qbinom_edges(self):
        assert qbinom(5, 0).coeffs == (1,)
        assert qbinom(5, 5).coeffs == (1,)
        assert qbinom(1, 1).coeffs == (1,)
        assert qbinom(3, 1) == qint(3)

    @pytest.mark.parametrize("n,k", [(3, -1), (3, 4), (0, 0)])
    def test_qbinom_domain(self, n, k):
        with pytest.raises(DomainError):
            qbinom(n, k)

    @given(st.integers(1, 10), st.integers(0, 10))
    def test_qbinom_symmetry_and_value_at_one(self, n, k):
        if k > n:
            return
        p = qbinom(n, k)
        assert p == qbinom(n, n - k)
        from math import comb

        assert p.value_at_one() == comb(n, k)

    @given(st.integers(1, 8), st.integers(0, 8))
    def test_qbinom_against_subset_oracle(self, n, k):
        if k > n:
            return
        assert list(qbinom(n, k).coeffs) == gaussian_binomial(n, k)


# factored characters whose expansion is a polynomial by construction:
# products of quantum binomial factored forms
@st.composite
def expandable_factored(draw):
    pieces = draw(st.lists(st.tuples(st.integers(1, 6), st.integers(0, 6), st.integers(0, 3)), max_size=3))
    f = FactoredChar.one()
    for n, k, m in pieces:
        if k > n:
            k = n
        f = f * (qbinom_factored(n, k) ** m)
    return f


class TestFactoredChar:
    def test_canonical_form(self):
        f = FactoredChar({2: 3, 1: 0, 5: -1})
        assert f.factors == ((2, 3), (5, -1))
        assert f.exponent(1) == 0 and f.exponent(2) == 3

    def test_merge_on_build(self):
        f = FactoredChar([(2, 1), (2, -1), (3, 2)])
        assert f.factors == ((3, 2),)

    def test_bad_index(self):
        with pytest.raises(DomainError):
            FactoredChar({0: 1})

    def test_mul_and_pow(self):
        f = FactoredChar({2: 1, 1: -1})
        assert (f * f).as_dict() == {2: 2, 1: -2}
        assert (f ** 3).as_dict() == {2: 3, 1: -3}
        assert (f ** 0) == FactoredChar.one()
        assert f * f.inverse() == FactoredChar.one()

    def test_expand_cube(self):
        assert expand(FactoredChar({2: 3, 1: -3})).coeffs == (1, 3, 3, 1)

    def test_expand_empty_is_one(self):
        assert expand(FactoredChar.one()) == IntPoly.one()

    def test_expand_not_polynomial_witness(self):
        # (1-t^3)^5 / (1-t)^6 = (1+t+t^2)^5 / (1-t); dividing the full
        # numerator by the full denominator leaves a degree-5 remainder
        out = expand(FactoredChar({3: 5, 1: -6}))
        assert out == NotPolynomial(remainder_degree=5)
        oq, orr = divmod_fractions(
            (IntPoly((1, 0, 0, -1)) ** 5).coeffs, (IntPoly((1, -1)) ** 6).coeffs
        )
        assert orr and len(orr) - 1 == 5

    def test_expand_pure_numerator(self):
        assert expand(FactoredChar({2: 2})) == IntPoly((1, 0, -1)) ** 2

    @given(expandable_factored(), expandable_factored())
    @settings(max_examples=50)
    def test_expand_is_multiplicative(self, f, g):
        pf, pg, pfg = expand(f), expand(g), expand(f * g)
        assert isinstance(pf, IntPoly) and isinstance(pg, IntPoly)
        assert pfg == pf * pg

    @given(expandable_factored())
    @settings(max_examples=50)
    def test_series_agrees_with_expand(self, f):
        p = expand(f)
        assert isinstance(p, IntPoly)
        s = series_expand(f, p.degree + 5)
        assert s.coeffs == p.coeffs + (0,) * (p.degree + 5 - p.degree)

    @given(expandable_factored())
    @settings(max_examples=50)
    def test_polynomial_expansions_are_palindromic_monic(self, f):
        p = expand(f)
        assert isinstance(p, IntPoly)
        assert is_palindromic_monic(p)


class TestPalindromic:
    def test_examples(self):
        assert is_palindromic_monic(IntPoly((1,)))
        assert is_palindromic_monic(IntPoly((1, 3, 1)))
        assert not is_palindromic_monic(IntPoly((2, 3, 2)))
        assert not is_palindromic_monic(IntPoly((1, 2)))

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            is_palindromic_monic(IntPoly.zero())


class TestSeries:
    def test_quotient_example(self):
        s = series_expand(FactoredChar({2: 1, 1: -1}), 3)
        assert s.coeffs == (1, 1, 0, 0)

    def test_geometric(self):
        s = series_expand(FactoredChar({1: -1}), 5)
        assert s.coeffs == (1,) * 6

    def test_against_recurrence_oracle(self):
        f = {1: -2, 2: -3}
        s = series_expand(FactoredChar(f), 8)
        assert list(s.coeffs) == factored_series(f, 8)

    def test_order_must_be_positive(self):
        with pytest.raises(DomainError):
            series_expand(FactoredChar.one(), 0)

    def test_mul_truncates_to_min_order(self):
        a = TruncatedSeries(4, (1, 1, 1, 1, 1))
        b = TruncatedSeries(2, (1, 1, 1))
        assert (a * b).order == 2
        assert (a * b).coeffs == (1, 2, 3)

    def test_mul_by_polynomial(self):
        s = TruncatedSeries(3, (1, 2, 6, 10))
        assert (s * IntPoly((1, 1))).coeffs == (1, 3, 8, 16)

    def test_length_mismatch_rejected(self):
        with pytest.raises(DomainError):
            TruncatedSeries(1, (1, 2, 3))
