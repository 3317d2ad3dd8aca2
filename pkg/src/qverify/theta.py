"""Theta-function kernel: q-Pochhammer products and the theta function
j(x; q) = (x)_inf (q/x)_inf (q)_inf, with the bilateral-sum oracle
j(x; q) = sum_n (-1)^n q^binom(n,2) x^n (Jacobi triple product).

Arguments are monomials (possibly with root-of-unity coefficients and
fractional exponents) and a base monomial with positive exponent; results are
QSeries known strictly below the requested order (given in plain q-units).

General x is first normalized with the index shift
    j(B^n * x'; B) = (-1)^n B^(-binom(n,2)) x'^(-n) j(x'; B),  0 < expo(x') <= expo(B),
so the product form only ever sees arguments with nonnegative exponents.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclotomic import cmul, is_zero_coeff, rat
from .errors import UnsupportedArgument
from .series import QMonomial, QSeries, ceil_rat, common_scale, qmono


def _check_base(base: QMonomial):
    if base.expo <= 0:
        raise UnsupportedArgument(f"base must have positive exponent, got {base!r}")


def binom2(n) -> int:
    """binom(n, 2) = n(n-1)/2 for any integer n (negative allowed)."""
    return (n * (n - 1)) // 2


@lru_cache(maxsize=None)
def poch_inf(x: QMonomial, base: QMonomial, order) -> QSeries:
    """(x; base)_inf = prod_{i>=0} (1 - x*base^i), known below q^order.

    x must have nonnegative exponent; (1; base)_inf is the exact zero series.
    """
    _check_base(base)
    order = rat(order)
    e = x.expo
    if e < 0:
        raise UnsupportedArgument(f"(x; base)_inf needs expo(x) >= 0, got {x!r}")
    if e == 0 and x.coeff == 1:
        return QSeries(1, None, {})
    scale = common_scale(e, base.expo)
    W = ceil_rat(order * scale)
    E = int(base.expo * scale)
    d = int(e * scale)
    terms = {0: rat(1)}
    c = x.coeff
    bc = base.coeff
    while d < W:
        if d == 0:
            # constant factor (1 - c)
            f = rat(1) - c
            if is_zero_coeff(f):
                return QSeries(1, None, {})
            terms = {k: cmul(v, f) for k, v in terms.items()}
        else:
            # terms *= (1 - c*q^d)
            updates = {}
            for k, v in terms.items():
                kk = k + d
                if kk < W:
                    updates[kk] = cmul(v, c)
            for kk, dv in updates.items():
                cur = terms.get(kk)
                if cur is None:
                    terms[kk] = cmul(dv, rat(-1))
                else:
                    s = cur - dv
                    if is_zero_coeff(s):
                        del terms[kk]
                    else:
                        terms[kk] = s
        d += E
        c = cmul(c, bc)
    return QSeries(scale, W, terms)


def poch_fin(x: QMonomial, base: QMonomial, n: int) -> QSeries:
    """(x; base)_n = prod_{i=0..n-1} (1 - x*base^i), an exact polynomial."""
    _check_base(base)
    if n < 0:
        raise UnsupportedArgument("finite Pochhammer needs n >= 0")
    scale = common_scale(x.expo, base.expo)
    s = QSeries(scale, None, {0: rat(1)})
    cur = x
    for _ in range(n):
        s = s - s.mul_monomial(cur)
        cur = cur * base
    return s


def jtheta_shift(x: QMonomial, base: QMonomial):
    """Normalization (n, x', prefactor) with j(x;B) = prefactor * j(x';B),
    0 < expo(x') <= expo(B).  prefactor is a QMonomial."""
    _check_base(base)
    E = base.expo
    n = ceil_rat(x.expo / E) - 1
    xp = x * (base ** (-n))
    pref = QMonomial(-1 if n % 2 else 1, 0) * (base ** (-binom2(n))) * (xp ** (-n))
    return n, xp, pref


def jtheta_val(x: QMonomial, base: QMonomial):
    """Exact valuation (smallest exponent, in q-units) of j(x; base); None if
    j(x; base) is identically zero (x an integral power of the base)."""
    _, xp, pref = jtheta_shift(x, base)
    if xp == base:
        return None
    return pref.expo


@lru_cache(maxsize=None)
def jtheta(x: QMonomial, base: QMonomial, order) -> QSeries:
    """j(x; base) = (x)_inf (base/x)_inf (base)_inf, known below q^order."""
    order = rat(order)
    _, xp, pref = jtheta_shift(x, base)
    if xp == base:
        return QSeries(1, None, {})
    inner_order = order - pref.expo
    p1 = poch_inf(xp, base, inner_order)
    p2 = poch_inf(base / xp, base, inner_order)
    p3 = poch_inf(base, base, inner_order)
    return ((p1 * p2) * p3).mul_monomial(pref)


def jtheta_sum_oracle(x: QMonomial, base: QMonomial, order) -> QSeries:
    """Independent bilateral-sum evaluation sum_n (-1)^n base^binom(n,2) x^n."""
    _check_base(base)
    order = rat(order)
    scale = common_scale(x.expo, base.expo)
    W = ceil_rat(order * scale)
    E = int(base.expo * scale)
    e = int(x.expo * scale)
    terms: dict = {}

    def add_term(n: int) -> bool:
        expo = binom2(n) * E + n * e
        if expo >= W:
            return False
        coeff = cmul(base.coeff ** binom2(n), x.coeff ** n)
        if n % 2:
            coeff = cmul(coeff, rat(-1))
        cur = terms.get(expo)
        if cur is None:
            terms[expo] = coeff
        else:
            s = cur + coeff
            if is_zero_coeff(s):
                del terms[expo]
            else:
                terms[expo] = s
        return True

    # The exponent binom(n,2)E + n*e is convex in n (second difference E > 0),
    # so each direction may stop once the term is out of window *and* the
    # exponent is nondecreasing onward.
    n = 0
    while True:
        live = add_term(n)
        if not live and n * E + e >= 0:
            break
        n += 1
    n = -1
    while True:
        live = add_term(n)
        if not live and (n - 1) * E + e <= 0:
            break
        n -= 1
    return QSeries(scale, W, terms)


@lru_cache(maxsize=None)
def J(a, m, order) -> QSeries:
    """J_{a,m} = j(q^a; q^m)."""
    return jtheta(qmono(1, rat(a)), qmono(1, rat(m)), order)


@lru_cache(maxsize=None)
def Jbar(a, m, order) -> QSeries:
    """Jbar_{a,m} = j(-q^a; q^m)."""
    return jtheta(qmono(-1, rat(a)), qmono(1, rat(m)), order)


@lru_cache(maxsize=None)
def Jm(m, order) -> QSeries:
    """J_m = (q^m; q^m)_inf."""
    return poch_inf(qmono(1, rat(m)), qmono(1, rat(m)), order)


def jprod(args, base: QMonomial, order) -> QSeries:
    """j(x1, x2, ..., xk; base) = prod of jtheta(xi; base).

    The working order is padded so the product window still reaches `order`
    even when individual factors have negative valuation.
    """
    order = rat(order)
    vals = []
    for x in args:
        v = jtheta_val(x, base)
        if v is None:
            return QSeries(1, None, {})
        vals.append(v)
    total = sum(vals)
    out = None
    for x, v in zip(args, vals):
        # factor must be known below order - (sum of the other valuations)
        s = jtheta(x, base, order - (total - v))
        out = s if out is None else out * s
    if out is None:
        out = QSeries(1, None, {0: rat(1)})
    return out
