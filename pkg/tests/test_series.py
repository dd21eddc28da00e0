import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tetindex.errors import PrecisionError
from tetindex.series import QSeries, equal_to_order, monomial, one, qpoch, zero


def assert_canonical(s):
    assert len(s.coeffs) == s.prec - s.lead
    if s.coeffs:
        assert s.coeffs[0] != 0
    else:
        assert s.lead == s.prec


def series(lead, coeffs, prec):
    out = [0] * (prec - lead)
    for i, c in enumerate(coeffs):
        out[i] = c
    i = 0
    while i < len(out) and out[i] == 0:
        i += 1
    if i == len(out):
        return zero(prec)
    return QSeries(lead + i, tuple(out[i:]), prec)


@st.composite
def random_series(draw):
    lead = draw(st.integers(-10, 10))
    coeffs = draw(st.lists(st.integers(-100, 100), max_size=8))
    return series(lead, coeffs, lead + len(coeffs))


class TestMonomial:
    def test_constant_one(self):
        s = monomial(1, 0, 10)
        assert s.lead == 0 and s.coeffs[0] == 1 and s.prec == 10
        assert sum(map(abs, s.coeffs)) == 1

    def test_zero_coefficient_gives_canonical_zero(self):
        s = monomial(0, 0, 4)
        assert s.is_zero and s.prec == 4 and s.lead == 4

    def test_minus_q_half(self):
        s = monomial(-1, 1, 6)
        assert s.coefficient(1) == -1 and s.coefficient(2) == 0

    def test_rejects_monomial_outside_window(self):
        with pytest.raises(ValueError):
            monomial(1, 10, 10)
        with pytest.raises(ValueError):
            monomial(3, 12, 10)


class TestAdd:
    def test_cancellation(self):
        a = series(0, [1, 0, 1], 8)  # 1 + q
        b = series(0, [1, 0, -1], 8)  # 1 - q
        s = a + b
        assert s.coefficient(0) == 2 and s.coefficient(2) == 0

    def test_zero_identity_keeps_prec(self):
        a = series(0, [1, 2, 3], 6)
        s = a + zero(6)
        assert s == a

    def test_cancellation_to_zero_takes_min_prec(self):
        a = series(2, [1], 4)  # q, prec 4
        b = series(2, [-1], 6)  # -q, prec 6
        s = a + b
        assert s.is_zero and s.prec == 4


class TestMul:
    def test_difference_of_squares(self):
        a = series(0, [1, 0, 1], 8)
        b = series(0, [1, 0, -1], 8)
        s = a * b
        assert s.coefficient(0) == 1
        assert s.coefficient(2) == 0
        assert s.coefficient(4) == -1

    def test_half_exponents_add(self):
        s = monomial(1, 1, 8) * monomial(1, 1, 8)
        assert s.lead == 2 and s.coefficient(2) == 1

    @settings(max_examples=200)
    @given(random_series(), random_series(), random_series())
    def test_associativity(self, a, b, c):
        left = (a * b) * c
        right = a * (b * c)
        order = min(left.prec, right.prec)
        assert equal_to_order(left, right, order)

    @settings(max_examples=200)
    @given(random_series(), random_series())
    def test_commutativity_and_canonical(self, a, b):
        x, y = a * b, b * a
        assert x == y
        assert_canonical(x)

    @settings(max_examples=200)
    @given(random_series(), random_series(), random_series())
    def test_distributivity(self, a, b, c):
        left = a * (b + c)
        right = a * b + a * c
        order = min(left.prec, right.prec)
        assert equal_to_order(left, right, order)


class TestInverse:
    def test_geometric_series(self):
        s = series(0, [1, 0, -1], 12).inverse()  # 1/(1-q)
        assert all(s.coefficient(2 * k) == 1 for k in range(6))

    def test_inverse_of_one(self):
        assert one(8).inverse() == one(8)

    def test_pochhammer_round_trip(self):
        p = qpoch(2, 12)
        assert equal_to_order(p * p.inverse(), one(12), 12)

    def test_rejects_non_unit_constant(self):
        with pytest.raises(ValueError):
            series(0, [2], 4).inverse()
        with pytest.raises(ValueError):
            series(2, [1], 6).inverse()

    @settings(max_examples=200)
    @given(random_series())
    def test_round_trip_property(self, a):
        if a.is_zero or a.lead != 0 or a.coeffs[0] not in (1, -1):
            b = series(0, [1] + list(a.coeffs), a.prec + 1 - a.lead)
        else:
            b = a
        assert equal_to_order(b * b.inverse(), one(b.prec), b.prec)


class TestEqualToOrder:
    def test_agreement(self):
        a = series(0, [1, 0, 0, 0, -1], 8)  # 1 - q^2
        b = series(0, [1, 0, 1], 8) * series(0, [1, 0, -1], 8)
        assert equal_to_order(a, b, 8)

    def test_disagreement_past_order(self):
        a = one(12)
        b = a + monomial(1, 10, 12)
        assert not equal_to_order(a, b, 12)
        assert equal_to_order(a, b, 10)

    def test_insufficient_precision_is_an_error(self):
        a = one(10)
        b = one(10) + monomial(1, 5, 10)
        with pytest.raises(PrecisionError):
            equal_to_order(a, b, 12)


class TestQPoch:
    def test_empty_product(self):
        assert qpoch(0, 8) == one(8)

    def test_single_factor(self):
        p = qpoch(1, 8)
        assert p.coefficient(0) == 1 and p.coefficient(2) == -1

    def test_two_factors(self):
        p = qpoch(2, 10)
        expected = {0: 1, 2: -1, 4: -1, 6: 1}
        for h in range(10):
            assert p.coefficient(h) == expected.get(h, 0)

    def test_rejects_negative_n(self):
        with pytest.raises(ValueError):
            qpoch(-1, 8)


class TestTruncateScale:
    def test_truncation_drops_tail(self):
        a = series(0, [1, 2, 3, 4], 4)
        t = a.truncated(2)
        assert t.prec == 2 and t.coeffs == (1, 2)

    def test_truncation_cannot_extend(self):
        with pytest.raises(PrecisionError):
            zero(4).truncated(6)

    def test_scaling_shifts_window(self):
        a = series(0, [1, 2], 2)
        s = a.scaled(-1, 3)
        assert s.lead == 3 and s.prec == 5 and s.coeffs == (-1, -2)
