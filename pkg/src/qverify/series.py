"""Truncated q-series with exact cyclotomic-rational coefficients.

A :class:`QMonomial` is c*q^e with c a nonzero Rat | CycRat and e an exact
rational.  A :class:`QSeries` stores finitely many terms on the exponent grid
(1/scale)*Z together with a truncation *order*: all coefficients of exponents
strictly below order/scale are exactly known (order None means the series is
exact everywhere, e.g. a polynomial).  Every operation computes the largest
window on which the result is sound:

* product window  = min(Ka + val(B), Kb + val(A))
* inverse window  = K - 2*val  (unit back-substitution after factoring q^val)

where val is the smallest stored exponent (or the window itself when the
known part is empty).
"""

from __future__ import annotations

from math import lcm

from .cyclotomic import (
    CycRat,
    RAT_TYPES,
    as_coeff,
    cinv,
    cmul,
    coeff_root,
    coeff_str,
    is_zero_coeff,
    rat,
    rat_den,
)
from .errors import (
    DivisionByZero,
    GenericityError,
    OrderExceeded,
    UnsupportedSubstitution,
)


def ceil_rat(x) -> int:
    """Ceiling of an exact rational as int."""
    num, den = int(x.numerator), int(x.denominator)
    return -((-num) // den)


def floor_rat(x) -> int:
    num, den = int(x.numerator), int(x.denominator)
    return num // den


def common_scale(*exponents) -> int:
    """Smallest grid that carries all the given rational exponents."""
    s = 1
    for e in exponents:
        s = lcm(s, rat_den(e))
    return s


class QMonomial:
    """c * q^e with exact coefficient and exponent; immutable and hashable."""

    __slots__ = ("coeff", "expo")

    def __init__(self, coeff, expo=0):
        coeff = as_coeff(coeff)
        if is_zero_coeff(coeff):
            raise ValueError("QMonomial coefficient must be nonzero")
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "expo", rat(expo))

    def __setattr__(self, *a):  # immutability guard
        raise AttributeError("QMonomial is immutable")

    def __mul__(self, other):
        if not isinstance(other, QMonomial):
            return NotImplemented
        return QMonomial(cmul(self.coeff, other.coeff), self.expo + other.expo)

    def __truediv__(self, other):
        if not isinstance(other, QMonomial):
            return NotImplemented
        return QMonomial(cmul(self.coeff, cinv(other.coeff)), self.expo - other.expo)

    def inverse(self):
        return QMonomial(cinv(self.coeff), -self.expo)

    def __neg__(self):
        return QMonomial(cmul(self.coeff, rat(-1)), self.expo)

    def __pow__(self, e):
        if isinstance(e, int):
            if e >= 0:
                acc = as_coeff(1)
                k = e
                base = self.coeff
                while k:
                    if k & 1:
                        acc = cmul(acc, base)
                    k >>= 1
                    if k:
                        base = cmul(base, base)
                return QMonomial(acc, self.expo * e)
            return self.inverse() ** (-e)
        e = rat(e)
        num, den = int(e.numerator), int(e.denominator)
        if den == 1:
            return self ** num
        return QMonomial(coeff_root(self.coeff, num, den), self.expo * e)

    @property
    def is_one(self) -> bool:
        return self.expo == 0 and self.coeff == 1

    def __eq__(self, other):
        if not isinstance(other, QMonomial):
            return NotImplemented
        return self.expo == other.expo and self.coeff == other.coeff

    def __hash__(self):
        return hash((self.expo, self.coeff))

    def __reduce__(self):
        return (QMonomial, (self.coeff, self.expo))

    def __repr__(self):
        if self.expo == 0:
            return coeff_str(self.coeff)
        qpart = "q" if self.expo == 1 else f"q^({self.expo})"
        if self.coeff == 1:
            return qpart
        if self.coeff == -1:
            return f"-{qpart}"
        return f"{coeff_str(self.coeff)}*{qpart}"


MONO_ONE = QMonomial(1, 0)
MONO_Q = QMonomial(1, 1)


def qmono(coeff=1, expo=0) -> QMonomial:
    return QMonomial(coeff, expo)


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class QSeries:
    """Sparse truncated series over the exponent grid (1/scale)*Z."""

    __slots__ = ("scale", "order", "terms")

    def __init__(self, scale: int, order, terms: dict):
        self.scale = scale
        self.order = order
        if order is not None:
            terms = {k: c for k, c in terms.items() if k < order}
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, scale: int = 1, order=None) -> "QSeries":
        return cls(scale, order, {})

    @classmethod
    def from_monomial(cls, m: QMonomial, scale=None) -> "QSeries":
        s = common_scale(m.expo) if scale is None else lcm(scale, common_scale(m.expo))
        return cls(s, None, {int(m.expo * s): m.coeff})

    @classmethod
    def from_coeff(cls, c) -> "QSeries":
        c = as_coeff(c)
        return cls(1, None, {} if is_zero_coeff(c) else {0: c})

    # -- scale handling ----------------------------------------------------

    def rescaled(self, new_scale: int) -> "QSeries":
        if new_scale == self.scale:
            return self
        if new_scale % self.scale:
            raise ValueError("can only refine the exponent grid")
        f = new_scale // self.scale
        order = None if self.order is None else self.order * f
        return QSeries(new_scale, order, {k * f: c for k, c in self.terms.items()})

    def minimize_scale(self) -> "QSeries":
        from math import gcd

        g = self.scale
        for k in self.terms:
            g = gcd(g, k)
            if g == 1:
                return self
        if g == 1:
            return self
        order = None if self.order is None else -((-self.order) // g)
        return QSeries(self.scale // g, order, {k // g: c for k, c in self.terms.items()})

    @staticmethod
    def unify(a: "QSeries", b: "QSeries"):
        s = lcm(a.scale, b.scale)
        return a.rescaled(s), b.rescaled(s)

    # -- inspection --------------------------------------------------------

    def effval(self):
        """Smallest exponent that could carry a nonzero coefficient (scaled).
        None means +infinity (the exact zero series)."""
        if self.terms:
            return min(self.terms)
        return self.order  # None (exact zero) or the window (unknown beyond)

    def coeff_at(self, e):
        """Exact coefficient of q^e (e in plain q-units); OrderExceeded beyond
        the known window."""
        e = rat(e)
        n = e * self.scale
        if self.order is not None and n >= self.order:
            raise OrderExceeded(
                f"coefficient of q^({e}) requested; series known below q^({rat(self.order, self.scale)})"
            )
        if int(n.denominator) != 1:
            return rat(0)
        return self.terms.get(int(n), rat(0))

    def window_q(self):
        """Truncation order in plain q-units (Rat), or None if exact."""
        return None if self.order is None else rat(self.order, self.scale)

    def items_q(self):
        """Sorted (exponent in q-units, coefficient) pairs."""
        return [(rat(k, self.scale), c) for k, c in sorted(self.terms.items())]

    def is_zero(self) -> bool:
        return not self.terms

    # -- ring operations ----------------------------------------------------

    def __neg__(self) -> "QSeries":
        return QSeries(self.scale, self.order, {k: cmul(c, rat(-1)) for k, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, QMonomial):
            other = QSeries.from_monomial(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = QSeries.unify(self, other)
        order = _min_order(a.order, b.order)
        terms = dict(a.terms)
        for k, c in b.terms.items():
            cur = terms.get(k)
            if cur is None:
                terms[k] = c
            else:
                s = cadd_fast(cur, c)
                if is_zero_coeff(s):
                    del terms[k]
                else:
                    terms[k] = s
        return QSeries(a.scale, order, terms)

    def __sub__(self, other):
        if isinstance(other, QMonomial):
            other = QSeries.from_monomial(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def mul_monomial(self, m: QMonomial) -> "QSeries":
        s = lcm(self.scale, common_scale(m.expo))
        a = self.rescaled(s)
        shift = int(m.expo * s)
        c0 = m.coeff
        order = None if a.order is None else a.order + shift
        return QSeries(s, order, {k + shift: cmul(c, c0) for k, c in a.terms.items()})

    def __mul__(self, other):
        if isinstance(other, QMonomial):
            return self.mul_monomial(other)
        if isinstance(other, RAT_TYPES) or isinstance(other, CycRat):
            c = as_coeff(other)
            if is_zero_coeff(c):
                return QSeries.zero(self.scale, None)
            return QSeries(self.scale, self.order,
                           {k: cmul(v, c) for k, v in self.terms.items()})
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = QSeries.unify(self, other)
        if not a.terms and a.order is None:
            return QSeries.zero(a.scale, None)
        if not b.terms and b.order is None:
            return QSeries.zero(a.scale, None)
        # sound window
        if a.order is None and b.order is None:
            window = None
        elif a.order is None:
            window = b.order + min(a.terms)
        elif b.order is None:
            window = a.order + min(b.terms)
        else:
            va = a.effval()
            vb = b.effval()
            window = min(a.order + vb, b.order + va)
        out: dict = {}
        bitems = sorted(b.terms.items())
        for ka, ca in sorted(a.terms.items()):
            for kb, cb in bitems:
                k = ka + kb
                if window is not None and k >= window:
                    break
                prod = cmul(ca, cb)
                cur = out.get(k)
                if cur is None:
                    out[k] = prod
                else:
                    s = cadd_fast(cur, prod)
                    if is_zero_coeff(s):
                        del out[k]
                    else:
                        out[k] = s
        return QSeries(a.scale, window, out)

    __rmul__ = __mul__

    def inverse(self, window_hint=None) -> "QSeries":
        """Multiplicative inverse.  For a finite-order series the result
        window is order - 2*val; an exact non-monomial series needs a
        window_hint (scaled units)."""
        if not self.terms:
            raise DivisionByZero("inverse of a series with no known nonzero term")
        v = min(self.terms)
        if len(self.terms) == 1 and self.order is None:
            c = self.terms[v]
            return QSeries(self.scale, None, {-v: cinv(c)})
        if self.order is None:
            if window_hint is None:
                raise ValueError("window_hint required to invert an exact series")
            ku = window_hint + v  # unit-part window
        else:
            ku = self.order - v
        u = {k - v: c for k, c in self.terms.items()}  # unit part, u[0] != 0
        u0inv = cinv(u[0])
        w = {0: u0inv}
        usup = sorted(k for k in u if k > 0)
        # back-substitution: w_n = -u0^{-1} * sum_{k>=1} u_k w_{n-k}
        for n in range(1, ku):
            acc = None
            for k in usup:
                if k > n:
                    break
                wk = w.get(n - k)
                if wk is None:
                    continue
                p = cmul(u[k], wk)
                acc = p if acc is None else cadd_fast(acc, p)
            if acc is not None and not is_zero_coeff(acc):
                w[n] = cmul(cmul(acc, u0inv), rat(-1))
        res_order = ku - v  # = order - 2v, or hint for exact input
        return QSeries(self.scale, res_order, {k - v: c for k, c in w.items()})

    def divide(self, other: "QSeries", window_hint=None) -> "QSeries":
        a, b = QSeries.unify(self, other)
        hint = window_hint
        if b.order is None and len(b.terms) > 1 and hint is None and a.order is not None:
            hint = a.order - (a.effval() or 0) - min(b.terms)
        return a * b.inverse(hint)

    def __pow__(self, k: int) -> "QSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries(self.scale, None, {0: rat(1)})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def truncate(self, order_scaled: int) -> "QSeries":
        order = order_scaled if self.order is None else min(self.order, order_scaled)
        return QSeries(self.scale, order, {k: c for k, c in self.terms.items() if k < order})

    def truncate_q(self, order_q) -> "QSeries":
        """Truncate to a window given in plain q-units."""
        return self.truncate(ceil_rat(rat(order_q) * self.scale))

    # -- comparison ---------------------------------------------------------

    @staticmethod
    def first_difference(a: "QSeries", b: "QSeries"):
        """None if the series agree on the common known window; otherwise
        (exponent as Rat in q-units, coeff of a, coeff of b) at the smallest
        disagreement."""
        a, b = QSeries.unify(a, b)
        window = _min_order(a.order, b.order)
        keys = set(a.terms) | set(b.terms)
        if window is not None:
            keys = {k for k in keys if k < window}
        for k in sorted(keys):
            ca = a.terms.get(k, rat(0))
            cb = b.terms.get(k, rat(0))
            if not coeffs_equal(ca, cb):
                return (rat(k, a.scale), ca, cb)
        return None

    def __repr__(self):
        items = self.items_q()
        shown = ", ".join(f"q^({e})*{coeff_str(c)}" for e, c in items[:8])
        if len(items) > 8:
            shown += ", ..."
        w = "exact" if self.order is None else f"O(q^({self.window_q()}))"
        return f"QSeries[{shown} | {w}]"


def cadd_fast(a, b):
    return a + b


def coeffs_equal(a, b) -> bool:
    # CycRat.__eq__ handles the mixed case (canonical CycRat is never rational)
    return a == b


def series_equal(a: QSeries, b: QSeries) -> bool:
    return QSeries.first_difference(a, b) is None


def geom_inv(m: QMonomial, scale: int, window: int) -> QSeries:
    """1/(1 - m) as a series on the given grid, known below window (scaled).

    m with positive exponent expands as sum m^k; negative exponent uses
    1/(1-m) = -m^{-1}/(1-m^{-1}); zero exponent is a constant, and m == 1
    raises GenericityError (a genuine pole).
    """
    s = lcm(scale, common_scale(m.expo))
    window = window * (s // scale)
    e = m.expo
    c = m.coeff
    if e == 0:
        if c == 1:
            raise GenericityError("pole: 1/(1 - 1)")
        return QSeries(s, None, {0: cinv(cadd_fast(rat(1), cmul(c, rat(-1))))})
    terms: dict = {}
    if e > 0:
        d = int(e * s)
        acc = rat(1)
        k = 0
        while k * d < window:
            terms[k * d] = acc
            acc = cmul(acc, c)
            k += 1
    else:
        d = int((-e) * s)
        cinv_c = cinv(c)
        acc = cmul(cinv_c, rat(-1))
        k = 1
        while k * d < window:
            terms[k * d] = acc
            acc = cmul(acc, cinv_c)
            k += 1
    return QSeries(s, window, terms)


def compose_monomial(s: QSeries, m: QMonomial) -> QSeries:
    """Substitute q -> m (monomial with positive exponent) into the series."""
    if m.expo <= 0:
        raise UnsupportedSubstitution("substitution base must have positive exponent")
    new_expos = {}
    for k, c in s.terms.items():
        # q^(k/scale) -> m^(k/scale)
        mk = m ** rat(k, s.scale)
        new_expos[k] = (mk.expo, cmul(c, mk.coeff))
    new_scale = common_scale(*(e for e, _ in new_expos.values())) if new_expos else rat_den(m.expo)
    terms = {}
    for e, c in new_expos.values():
        key = int(e * new_scale)
        cur = terms.get(key)
        terms[key] = c if cur is None else cadd_fast(cur, c)
    terms = {k: c for k, c in terms.items() if not is_zero_coeff(c)}
    if s.order is None:
        order = None
    else:
        order = ceil_rat(rat(s.order, s.scale) * m.expo * new_scale)
    return QSeries(new_scale, order, terms)
