"""Appell-Lerch sums and the classical Lambert-type series g, h, k.

The central object is

    m(x, base, z) = (1/j(z;base)) * sum_{r in Z} (-1)^r base^binom(r,2) z^r
                                               / (1 - base^{r-1} x z)

evaluated as a truncated series in q with exact coefficients.  Every evaluator
takes the desired window in plain q-units and re-runs itself with extra
internal padding until the soundly-tracked result window reaches it.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm

from .cyclotomic import cinv, cmul, is_zero_coeff, rat, rat_den
from .errors import GenericityError, QVerifyError
from .series import QMonomial, QSeries, ceil_rat, geom_inv, qmono
from .theta import _check_base, binom2, jtheta, jtheta_val, poch_inf


def _zero_with_window(T) -> QSeries:
    s = rat_den(T)
    return QSeries.zero(s, int(T * s))


def eval_padded(build, order, tries: int = 10) -> QSeries:
    """Run `build(T)` with increasing T until its sound window reaches order."""
    order = rat(order)
    pad = rat(0)
    for _ in range(tries):
        res = build(order + pad)
        w = res.window_q()
        if w is None or w >= order:
            return res.truncate_q(order)
        pad += (order - w) + 1
    raise QVerifyError(f"window did not converge to {order} (last pad {pad})")


def bilateral_sum(mono_of_r, w_of_r, T) -> QSeries:
    """sum_{r in Z} mono(r) / (1 - w(r)) truncated below q^T.

    mono(r) and w(r) are QMonomial-valued; the valuation of the r-th term
    (mono(r).expo, plus -w(r).expo when that exponent is negative) must be a
    convex function of r, which holds for the theta-like sums used here.
    """
    T = rat(T)
    acc = _zero_with_window(T)

    def term_val(r):
        mono = mono_of_r(r)
        w = w_of_r(r)
        v = mono.expo
        if w.expo < 0:
            v = v - w.expo
        return v, mono, w

    def add(mono, w):
        nonlocal acc
        if w.is_one:
            raise GenericityError(f"pole: summand 1/(1 - {w!r})")
        width = T - mono.expo
        g = geom_inv(w, 1, ceil_rat(width)) if width > 0 else None
        if g is None:
            return
        acc = acc + g.mul_monomial(mono)

    prev = None
    r = 0
    while True:
        v, mono, w = term_val(r)
        if v >= T and prev is not None and v >= prev:
            break
        add(mono, w)
        prev = v
        r += 1
    prev = None
    r = -1
    while True:
        v, mono, w = term_val(r)
        if v >= T and prev is not None and v >= prev:
            break
        add(mono, w)
        prev = v
        r -= 1
    return acc


@lru_cache(maxsize=None)
def m_eval(x: QMonomial, base: QMonomial, z: QMonomial, order) -> QSeries:
    """m(x, base, z), known below q^order."""
    _check_base(base)
    order = rat(order)
    if jtheta_val(z, base) is None:
        raise GenericityError(f"j(z; base) vanishes for z = {z!r}")

    def build(T):
        S = bilateral_sum(
            lambda r: (base ** binom2(r)) * (z**r) * qmono(-1 if r % 2 else 1),
            lambda r: (base ** (r - 1)) * x * z,
            T,
        )
        return S.divide(jtheta(z, base, T))

    return eval_padded(build, order)


def m_alt_oracle(x: QMonomial, base: QMonomial, z: QMonomial, order) -> QSeries:
    """Independent evaluation via the shifted-index form
    m(x,base,z) = (-z/j(z;base)) sum_r (-1)^r base^binom(r+1,2) z^r / (1 - base^r x z)."""
    _check_base(base)
    order = rat(order)
    if jtheta_val(z, base) is None:
        raise GenericityError(f"j(z; base) vanishes for z = {z!r}")

    def build(T):
        S = bilateral_sum(
            lambda r: (base ** binom2(r + 1)) * (z**r) * qmono(-1 if r % 2 else 1),
            lambda r: (base**r) * x * z,
            T,
        )
        return S.mul_monomial(-z).divide(jtheta(z, base, T))

    return eval_padded(build, order)


def changing_z_delta(x: QMonomial, base: QMonomial, z1: QMonomial, z0: QMonomial, order) -> QSeries:
    """The theta quotient equal to m(x,base,z1) - m(x,base,z0):

        z0 J_1^3 j(z1/z0;base) j(x z0 z1;base)
        / (j(z0;base) j(z1;base) j(x z0;base) j(x z1;base)).
    """
    _check_base(base)
    order = rat(order)
    for arg in (z0, z1, x * z0, x * z1):
        if jtheta_val(arg, base) is None:
            raise GenericityError(f"theta zero in denominator at {arg!r}")

    def build(T):
        j1 = poch_inf(base, base, T)
        num = (j1**3) * jtheta(z1 / z0, base, T) * jtheta(x * z0 * z1, base, T)
        num = num.mul_monomial(z0)
        den = (
            jtheta(z0, base, T)
            * jtheta(z1, base, T)
            * jtheta(x * z0, base, T)
            * jtheta(x * z1, base, T)
        )
        return num.divide(den)

    return eval_padded(build, order)


# ---------------------------------------------------------------------------
# Lambert-type series g, h, k
# ---------------------------------------------------------------------------


def times_geom_inv(s: QSeries, m: QMonomial) -> QSeries:
    """s / (1 - m) computed by direct back-substitution (linear per window).

    For m with positive exponent this is y_k = s_k + c * y_{k-d}; other cases
    reduce to it or to a scalar multiple.
    """
    e = m.expo
    if e == 0:
        if m.coeff == 1:
            raise GenericityError("pole: 1/(1 - 1)")
        return s * cinv(rat(1) - m.coeff)
    if e < 0:
        # 1/(1-m) = -m^{-1} / (1 - m^{-1})
        inv = m.inverse()
        return times_geom_inv(s.mul_monomial(-inv), inv)
    if s.order is None:
        raise ValueError("times_geom_inv needs a finite window")
    scl = lcm(s.scale, rat_den(e))
    a = s.rescaled(scl)
    if not a.terms:
        return a
    d = int(e * scl)
    c = m.coeff
    out: dict = {}
    for k in range(min(a.terms), a.order):
        val = a.terms.get(k)
        prev = out.get(k - d)
        if prev is not None:
            t = cmul(prev, c)
            val = t if val is None else val + t
        if val is not None and not is_zero_coeff(val):
            out[k] = val
    return QSeries(scl, a.order, out)


def g_eval(x: QMonomial, base: QMonomial, order) -> QSeries:
    """g(x, base) = x^{-1} (-1 + sum_{n>=0} base^{n^2} / ((x;base)_{n+1} (base/x;base)_n))."""
    _check_base(base)
    order = rat(order)
    E = base.expo
    if x.expo < 0 or x.expo > E:
        raise GenericityError(f"g(x, base) needs 0 <= expo(x) <= expo(base), got {x!r}")

    def build(T):
        W = ceil_rat(T)
        R = times_geom_inv(QSeries(1, W, {0: rat(1)}), x)  # 1/(1-x)
        acc = R
        n = 1
        while n * n * E < T:
            R = times_geom_inv(R, x * base**n)
            R = times_geom_inv(R, (base**n) / x)
            acc = acc + R.mul_monomial(base ** (n * n))
            n += 1
        acc = acc - QSeries.from_coeff(1)
        return acc.mul_monomial(x.inverse())

    return eval_padded(build, order)


def g_alt_oracle(x: QMonomial, base: QMonomial, order) -> QSeries:
    """Independent evaluation of g via
    g(x, base) = sum_{n>=0} base^{n(n+1)} / ((x;base)_{n+1} (base/x;base)_{n+1})."""
    _check_base(base)
    order = rat(order)
    E = base.expo
    if x.expo < 0 or x.expo > E:
        raise GenericityError(f"g(x, base) needs 0 <= expo(x) <= expo(base), got {x!r}")

    def build(T):
        W = ceil_rat(T)
        R = times_geom_inv(QSeries(1, W, {0: rat(1)}), x)
        R = times_geom_inv(R, base / x)
        acc = R
        n = 1
        while n * (n + 1) * E < T:
            R = times_geom_inv(R, x * base**n)
            R = times_geom_inv(R, (base ** (n + 1)) / x)
            acc = acc + R.mul_monomial(base ** (n * (n + 1)))
            n += 1
        return acc

    return eval_padded(build, order)


@lru_cache(maxsize=None)
def h_eval(x: QMonomial, base: QMonomial, order) -> QSeries:
    """h(x, base) = (1/j(base;base^2)) sum_n (-1)^n base^{n(n+1)} / (1 - base^n x)."""
    _check_base(base)
    order = rat(order)

    def build(T):
        S = bilateral_sum(
            lambda r: (base ** (r * (r + 1))) * qmono(-1 if r % 2 else 1),
            lambda r: (base**r) * x,
            T,
        )
        return S.divide(jtheta(base, base * base, T))

    return eval_padded(build, order)


@lru_cache(maxsize=None)
def k_eval(x: QMonomial, base: QMonomial, order) -> QSeries:
    """k(x, base) = (1/(x j(-base;base^4))) sum_n base^{n(2n+1)} / (1 - base^{2n} x^2)."""
    _check_base(base)
    order = rat(order)

    def build(T):
        S = bilateral_sum(
            lambda r: base ** (r * (2 * r + 1)),
            lambda r: (base ** (2 * r)) * x * x,
            T,
        )
        res = S.divide(jtheta(-base, base**4, T))
        return res.mul_monomial(x.inverse())

    return eval_padded(build, order)
