"""Truncated-series kernel: windows, ring laws, inversion, substitution."""

import pytest
from hypothesis import given, settings, strategies as st

from qverify.cyclotomic import rat, zeta
from qverify.errors import (
    DivisionByZero,
    GenericityError,
    OrderExceeded,
    UnsupportedSubstitution,
)
from qverify.series import (
    MONO_ONE,
    MONO_Q,
    QMonomial,
    QSeries,
    ceil_rat,
    common_scale,
    compose_monomial,
    floor_rat,
    geom_inv,
    qmono,
    series_equal,
)


# ---------------------------------------------------------------------------
# independent oracles (computed here, no engine code involved)
# ---------------------------------------------------------------------------


def partition_numbers(n_max):
    """p(0..n_max) via Euler's pentagonal-number recurrence."""
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = 1 if k % 2 else -1
            if g1 <= n:
                total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def brute_convolution(a_terms, b_terms, window):
    """Dict-convolution of two {expo: int} polynomials below window."""
    out = {}
    for ka, ca in a_terms.items():
        for kb, cb in b_terms.items():
            k = ka + kb
            if k < window:
                out[k] = out.get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------


def test_monomial_basic_algebra():
    m = qmono(-2, rat(3, 2))
    assert (m * m).coeff == 4 and (m * m).expo == 3
    assert m.inverse() * m == MONO_ONE
    assert (-m).coeff == 2
    assert (m**3).expo == rat(9, 2) and (m**3).coeff == -8
    assert (m**-2) == (m.inverse()) ** 2
    assert MONO_Q**0 == MONO_ONE


def test_monomial_fractional_power():
    m = qmono(-1, rat(5, 8))
    r = m ** rat(1, 2)
    assert r.coeff == zeta(1, 4)
    assert r.expo == rat(5, 16)
    assert r * r == m
    with pytest.raises(UnsupportedSubstitution):
        qmono(2, 1) ** rat(1, 2)


def test_monomial_immutable_and_hashable():
    m = qmono(1, 2)
    with pytest.raises(AttributeError):
        m.coeff = rat(5)
    assert hash(qmono(1, 2)) == hash(m)
    assert qmono(zeta(1, 3), 1) == qmono(zeta(4, 12), 1)
    with pytest.raises(ValueError):
        qmono(0, 1)


def test_rounding_helpers():
    assert ceil_rat(rat(7, 2)) == 4 and ceil_rat(rat(-7, 2)) == -3
    assert floor_rat(rat(7, 2)) == 3 and floor_rat(rat(-7, 2)) == -4
    assert ceil_rat(rat(6)) == 6 and floor_rat(rat(6)) == 6
    assert common_scale(rat(1, 2), rat(1, 3), 5) == 6


# ---------------------------------------------------------------------------
# series construction and inspection
# ---------------------------------------------------------------------------


def test_geometric_series_positive():
    s = geom_inv(qmono(1, 1), 1, 10)
    assert [s.coeff_at(n) for n in range(10)] == [1] * 10
    with pytest.raises(OrderExceeded):
        s.coeff_at(10)


def test_geometric_series_scaled_coefficient():
    s = geom_inv(qmono(2, 1), 1, 12)
    assert [int(s.coeff_at(n)) for n in range(12)] == [2**n for n in range(12)]


def test_geometric_series_negative_exponent():
    # 1/(1 - q^-1) = -q/(1 - q) = -q - q^2 - ...
    s = geom_inv(qmono(1, -1), 1, 8)
    assert s.coeff_at(0) == 0
    assert [s.coeff_at(n) for n in range(1, 8)] == [-1] * 7
    # sanity: (1 - q^-1) * s == 1 on the window
    one = QSeries.from_coeff(1)
    lhs = QSeries.from_coeff(1) - QSeries.from_monomial(qmono(1, -1))
    assert QSeries.first_difference(lhs * s, one) is None


def test_geometric_series_constant_cases():
    s = geom_inv(qmono(3, 0), 1, 5)
    assert s.order is None and s.coeff_at(0) == rat(-1, 2)
    with pytest.raises(GenericityError):
        geom_inv(qmono(1, 0), 1, 5)


def test_window_tracking_add_mul():
    a = geom_inv(qmono(1, 1), 1, 10)  # window 10, val 0
    b = geom_inv(qmono(1, 2), 1, 14)  # window 14, val 0
    assert (a + b).window_q() == 10
    assert (a * b).window_q() == 10  # min(10+0, 14+0)
    shifted = a.mul_monomial(qmono(1, 5))
    assert shifted.window_q() == 15
    assert (shifted * b).window_q() == 15  # min(15 + val(b), 14 + val(shifted))


def test_product_against_brute_convolution():
    at = {0: 1, 1: -3, 4: 2, 7: 5}
    bt = {0: 2, 2: 1, 3: -1, 5: 4}
    A = QSeries(1, 9, dict(at))
    B = QSeries(1, 11, dict(bt))
    C = A * B
    expected = brute_convolution(at, bt, 9)  # window = min(9+0, 11+0)
    assert C.window_q() == 9
    for n in range(9):
        assert C.coeff_at(n) == expected.get(n, 0)


def test_exact_polynomial_products_stay_exact():
    A = QSeries(1, None, {0: rat(1), 1: rat(1)})
    B = QSeries(1, None, {0: rat(1), 1: rat(-1)})
    C = A * B
    assert C.order is None
    assert C.terms == {0: rat(1), 2: rat(-1)}


def test_partition_generating_function():
    """1/(q;q)_inf has the partition numbers as coefficients."""
    n_max = 60
    euler = QSeries.from_coeff(1)
    for k in range(1, n_max + 1):
        euler = euler - euler.mul_monomial(qmono(1, k))  # multiply by (1 - q^k)
    euler = euler.truncate(n_max + 1)
    inv = euler.inverse()
    assert inv.window_q() == n_max + 1
    expected = partition_numbers(n_max)
    got = [int(inv.coeff_at(n)) for n in range(n_max + 1)]
    assert got == expected
    assert int(inv.coeff_at(50)) == 204226  # classic value, frozen
    assert expected[50] == 204226


def test_inverse_window_with_valuation():
    # s = q^2 * (1 - q), window 12 => inverse window 12 - 2*2 = 8
    s = QSeries(1, 12, {2: rat(1), 3: rat(-1)})
    inv = s.inverse()
    assert inv.window_q() == 8
    prod = s * inv
    assert prod.coeff_at(0) == 1
    assert all(prod.coeff_at(n) == 0 for n in range(1, int(prod.window_q())))


def test_inverse_of_pure_monomial_is_exact():
    s = QSeries.from_monomial(qmono(-3, 5))
    inv = s.inverse()
    assert inv.order is None
    assert inv.coeff_at(-5) == rat(-1, 3)


def test_inverse_requires_hint_for_exact_multiterms():
    s = QSeries(1, None, {0: rat(1), 1: rat(-1)})
    with pytest.raises(ValueError):
        s.inverse()
    inv = s.inverse(window_hint=6)
    assert [inv.coeff_at(n) for n in range(6)] == [1] * 6


def test_divide_auto_hint():
    num = QSeries(1, 10, {0: rat(1)})
    den = QSeries(1, None, {0: rat(1), 1: rat(-1)})
    q = num.divide(den)
    assert q.window_q() == 10
    assert [q.coeff_at(n) for n in range(10)] == [1] * 10
    with pytest.raises(DivisionByZero):
        num.divide(QSeries.zero(1, None))


def test_pow_matches_repeated_mul():
    s = QSeries(1, 9, {0: rat(1), 1: rat(2), 3: rat(-1)})
    assert series_equal(s**3, s * s * s)
    assert (s**0).terms == {0: rat(1)}
    inv2 = s**-2
    assert series_equal(inv2, s.inverse() * s.inverse())


def test_first_difference_reports_smallest():
    a = QSeries(1, 10, {0: rat(1), 3: rat(2), 5: rat(1)})
    b = QSeries(1, 10, {0: rat(1), 3: rat(2), 5: rat(4), 7: rat(9)})
    e, ca, cb = QSeries.first_difference(a, b)
    assert e == 5 and ca == 1 and cb == 4
    assert QSeries.first_difference(a, a) is None
    # differences beyond the common window are invisible
    c = QSeries(1, 4, {0: rat(1), 3: rat(2)})
    d = QSeries(1, 10, {0: rat(1), 3: rat(2), 5: rat(99)})
    assert QSeries.first_difference(c, d) is None


def test_coeff_at_fractional_grid():
    s = QSeries(2, 10, {1: rat(7)})  # 7*q^(1/2), window q^5
    assert s.coeff_at(rat(1, 2)) == 7
    assert s.coeff_at(1) == 0
    assert s.coeff_at(rat(1, 3)) == 0
    with pytest.raises(OrderExceeded):
        s.coeff_at(5)


def test_rescale_and_minimize_roundtrip():
    s = QSeries(1, 7, {0: rat(1), 2: rat(5)})
    up = s.rescaled(6)
    assert up.coeff_at(2) == 5 and up.window_q() == 7
    back = up.minimize_scale()
    assert back.scale == 1 and back.terms == s.terms


# ---------------------------------------------------------------------------
# substitution q -> monomial
# ---------------------------------------------------------------------------


def test_compose_monomial_power_substitution():
    s = geom_inv(qmono(1, 1), 1, 8)  # 1 + q + q^2 + ...
    t = compose_monomial(s, qmono(1, 3))
    assert t.window_q() == 24
    assert all(t.coeff_at(3 * n) == 1 for n in range(8))
    assert t.coeff_at(4) == 0


def test_compose_monomial_sign_twist():
    s = geom_inv(qmono(1, 1), 1, 6)
    t = compose_monomial(s, qmono(-1, 1))  # q -> -q
    assert [t.coeff_at(n) for n in range(6)] == [1, -1, 1, -1, 1, -1]


def test_compose_monomial_cyclotomic_scale():
    s = QSeries(1, 5, {1: rat(1), 2: rat(1)})
    t = compose_monomial(s, qmono(zeta(1, 3), 2))  # q -> w*q^2
    assert t.coeff_at(2) == zeta(1, 3)
    assert t.coeff_at(4) == zeta(2, 3)
    assert t.window_q() == 10
    with pytest.raises(UnsupportedSubstitution):
        compose_monomial(s, qmono(1, -1))


def test_compose_monomial_fractional_target():
    s = QSeries(1, 4, {1: rat(2), 3: rat(1)})
    t = compose_monomial(s, qmono(1, rat(1, 2)))
    assert t.coeff_at(rat(1, 2)) == 2
    assert t.coeff_at(rat(3, 2)) == 1
    assert t.window_q() == 2


# ---------------------------------------------------------------------------
# ring laws on random exact polynomials
# ---------------------------------------------------------------------------


@st.composite
def polys(draw):
    n_terms = draw(st.integers(0, 5))
    terms = {}
    for _ in range(n_terms):
        k = draw(st.integers(-6, 12))
        c = draw(st.integers(-5, 5))
        if c:
            terms[k] = terms.get(k, rat(0)) + rat(c)
    terms = {k: c for k, c in terms.items() if c != 0}
    scale = draw(st.sampled_from((1, 2)))
    return QSeries(scale, None, terms)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_series_ring_laws(a, b, c):
    assert series_equal(a + b, b + a)
    assert series_equal(a * b, b * a)
    assert series_equal((a + b) * c, a * c + b * c)
    assert series_equal((a * b) * c, a * (b * c))
    assert (a - a).is_zero()


@settings(max_examples=40, deadline=None)
@given(polys())
def test_series_inverse_roundtrip(a):
    if a.is_zero():
        return
    inv = a.inverse(window_hint=15)
    prod = a * inv
    one = QSeries.from_coeff(1)
    assert QSeries.first_difference(prod, one) is None
