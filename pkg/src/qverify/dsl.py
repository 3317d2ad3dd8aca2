"""Identity DSL: tokenizer, parser, pretty-printer, and evaluator.

The textual form of an identity is

    identity NAME [order INT] { lhs = EXPR ; rhs = EXPR ; }

where EXPR is built from rational constants, root-of-unity constants
``zeta(k,N)``, powers of ``q`` with exact rational exponents, the four
arithmetic operations, integer powers ``^k``, and calls into the engine:

    j(x; q)            theta function j(x; q)
    J[a,m] JB[a,m]     j(q^a; q^m) and j(-q^a; q^m)
    Jm[m]              the eta-like product (q^m; q^m)_inf
    m(x, q, z)         Appell-Lerch sum
    g(x; q) h(x; q) k(x; q)
                       universal mock theta functions
    poch(x; q; n|inf)  finite or infinite q-Pochhammer (x; q)_n
    f[a,b,c](x, y; q)  Hecke-type double sum
    gabc[a,b,c](x, y; q; z1, z0)
    habc[a,b,c](x, y; q; z1, z0)
                       Appell-Lerch building blocks of the expansions
    thetanp[n,p](x, y; q)    theta correction for f_{n,n+p,n}
    thetaabc[a,b,c](x, y; q) theta correction for the divisible-b case
    bigtheta[n,p](x, y; q)   theta correction of the subtheorems
    strfn[N,m,l]       affine string function C^N_{m,l}(q)
    catalog("name")    Eulerian expansion of a registry function
    catalog("name").repr[i]  its i-th closed-form representation

``#`` starts a comment running to the end of the line.  Arguments of the
engine calls must evaluate to exact monomials c*q^e.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import rat, zeta as zeta_root
from .errors import ParseError, UnsupportedArgument
from .series import QMonomial, QSeries, qmono, ceil_rat
from . import theta as _theta
from . import appell as _appell
from . import hecke as _hecke
from . import catalog as _catalog

__all__ = [
    "Num", "QPow", "Zeta", "Neg", "BinOp", "Pow", "Call", "PochInf",
    "CatalogRef", "IdentityRecord", "tokenize", "parse_expression",
    "parse_identities", "pretty", "pretty_identity", "eval_expr",
]


# --------------------------------------------------------------------------
# AST
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: object  # nonnegative integer literal as Rat


@dataclass(frozen=True)
class QPow:
    expo: object  # Rat


@dataclass(frozen=True)
class Zeta:
    k: int
    n: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    k: int


@dataclass(frozen=True)
class PochInf:
    """Marker for the 'inf' count of poch(x; q; inf)."""


@dataclass(frozen=True)
class Call:
    head: str
    params: tuple  # bracket integers
    groups: tuple  # tuple of tuples of expressions


@dataclass(frozen=True)
class CatalogRef:
    name: str
    index: object = None  # None for the Eulerian form, int for .repr[i]


@dataclass(frozen=True)
class IdentityRecord:
    name: str
    order_override: object  # None or int
    lhs: object
    rhs: object
    tags: tuple = ()


# head -> (number of bracket parameters, tuple of argument-group sizes)
_CALL_SHAPES = {
    "j": (0, (1, 1)),
    "m": (0, (3,)),
    "g": (0, (1, 1)),
    "h": (0, (1, 1)),
    "k": (0, (1, 1)),
    "poch": (0, (1, 1, 1)),
    "J": (2, None),
    "JB": (2, None),
    "Jm": (1, None),
    "f": (3, (2, 1)),
    "gabc": (3, (2, 1, 2)),
    "habc": (3, (2, 1, 2)),
    "thetanp": (2, (2, 1)),
    "thetaabc": (3, (2, 1)),
    "bigtheta": (2, (2, 1)),
    "strfn": (3, None),
}


# --------------------------------------------------------------------------
# Tokenizer
# --------------------------------------------------------------------------


_PUNCT = "()[]{},;=+-*/^."


@dataclass(frozen=True)
class _Tok:
    kind: str  # NAME INT STRING PUNCT EOF
    value: str
    line: int
    col: int


def tokenize(text: str):
    toks = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("INT", text[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("NAME", text[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        if ch == '"':
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    raise ParseError("unterminated string", start_line, start_col)
                j += 1
            if j >= n:
                raise ParseError("unterminated string", start_line, start_col)
            toks.append(_Tok("STRING", text[i + 1:j], start_line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        if ch in _PUNCT:
            toks.append(_Tok("PUNCT", ch, start_line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(_Tok("EOF", "", line, col))
    return toks


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0

    # -- token plumbing --

    def peek(self, ahead=0) -> _Tok:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def next(self) -> _Tok:
        t = self.toks[self.pos]
        if t.kind != "EOF":
            self.pos += 1
        return t

    def at(self, value: str) -> bool:
        t = self.peek()
        return t.kind == "PUNCT" and t.value == value

    def accept(self, value: str) -> bool:
        if self.at(value):
            self.pos += 1
            return True
        return False

    def expect(self, value: str) -> _Tok:
        t = self.peek()
        if t.kind == "PUNCT" and t.value == value:
            return self.next()
        raise ParseError(f"expected {value!r}, found {t.value!r}", t.line, t.col)

    def expect_kind(self, kind: str) -> _Tok:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(f"expected {kind}, found {t.value!r}", t.line, t.col)
        return self.next()

    def error(self, message: str, tok=None):
        t = tok or self.peek()
        raise ParseError(message, t.line, t.col)

    # -- small literals --

    def parse_int(self) -> int:
        neg = self.accept("-")
        t = self.expect_kind("INT")
        v = int(t.value)
        return -v if neg else v

    def parse_rational(self):
        """Signed p or p/q (used inside parenthesized exponents)."""
        neg = self.accept("-")
        t = self.expect_kind("INT")
        num = int(t.value)
        den = 1
        if self.accept("/"):
            den = int(self.expect_kind("INT").value)
            if den == 0:
                self.error("zero denominator in exponent", t)
        v = rat(num, den)
        return -v if neg else v

    def parse_q_exponent(self):
        """Exponent after 'q^': INT, -INT, or (signed rational)."""
        if self.accept("("):
            v = self.parse_rational()
            self.expect(")")
            return v
        if self.at("-"):
            return rat(self.parse_int())
        t = self.expect_kind("INT")
        return rat(int(t.value))

    def parse_power_exponent(self) -> int:
        """Integer exponent after '^' on a non-monomial factor."""
        if self.accept("("):
            v = self.parse_int()
            self.expect(")")
            return v
        return self.parse_int()

    # -- expression grammar --

    def parse_expression(self):
        node = self.parse_term()
        while True:
            if self.accept("+"):
                node = BinOp("+", node, self.parse_term())
            elif self.accept("-"):
                node = BinOp("-", node, self.parse_term())
            else:
                return node

    def parse_term(self):
        node = self.parse_unary()
        while True:
            if self.accept("*"):
                node = BinOp("*", node, self.parse_unary())
            elif self.accept("/"):
                node = BinOp("/", node, self.parse_unary())
            else:
                return node

    def parse_unary(self):
        if self.accept("-"):
            return Neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self):
        node = self.parse_primary()
        while self.at("^"):
            self.next()
            node = Pow(node, self.parse_power_exponent())
        return node

    def parse_primary(self):
        t = self.peek()
        if self.accept("("):
            node = self.parse_expression()
            self.expect(")")
            return node
        if t.kind == "INT":
            self.next()
            return Num(rat(int(t.value)))
        if t.kind == "NAME":
            if t.value == "q":
                self.next()
                if self.at("^"):
                    self.next()
                    return QPow(self.parse_q_exponent())
                return QPow(rat(1))
            if t.value == "zeta":
                self.next()
                self.expect("(")
                k = self.parse_int()
                self.expect(",")
                n = self.parse_int()
                self.expect(")")
                if n <= 0:
                    self.error("zeta(k,N) needs N >= 1", t)
                return Zeta(k, n)
            if t.value == "catalog":
                return self.parse_catalog_ref()
            if t.value in _CALL_SHAPES:
                return self.parse_call()
            self.error(f"unknown function or symbol {t.value!r}", t)
        self.error(f"expected an expression, found {t.value!r}", t)

    def parse_catalog_ref(self):
        t = self.expect_kind("NAME")  # 'catalog'
        self.expect("(")
        name = self.expect_kind("STRING").value
        self.expect(")")
        index = None
        if self.accept("."):
            field = self.expect_kind("NAME")
            if field.value != "repr":
                self.error("only '.repr[i]' can follow catalog(...)", field)
            self.expect("[")
            index = self.parse_int()
            self.expect("]")
            if index < 0:
                self.error("representation index must be >= 0", field)
        return CatalogRef(name, index)

    def parse_call(self):
        head_tok = self.expect_kind("NAME")
        head = head_tok.value
        n_params, group_sizes = _CALL_SHAPES[head]
        params = ()
        if n_params:
            self.expect("[")
            vals = [self.parse_int()]
            while self.accept(","):
                vals.append(self.parse_int())
            self.expect("]")
            if len(vals) != n_params:
                self.error(
                    f"{head} expects {n_params} bracket parameters, got {len(vals)}",
                    head_tok,
                )
            params = tuple(vals)
        if group_sizes is None:
            if self.at("("):
                self.error(f"{head}[...] takes no call arguments", head_tok)
            return Call(head, params, ())
        self.expect("(")
        groups = []
        for gi, size in enumerate(group_sizes):
            args = [self.parse_call_arg(head, gi)]
            while self.accept(","):
                args.append(self.parse_call_arg(head, gi))
            if len(args) != size:
                self.error(
                    f"{head} expects {size} argument(s) in group {gi + 1}, "
                    f"got {len(args)}",
                    head_tok,
                )
            groups.append(tuple(args))
            if gi + 1 < len(group_sizes):
                self.expect(";")
        self.expect(")")
        return Call(head, params, tuple(groups))

    def parse_call_arg(self, head, gi):
        if head == "poch" and gi == 2:
            t = self.peek()
            if t.kind == "NAME" and t.value == "inf":
                self.next()
                return PochInf()
            if t.kind == "INT":
                return Num(rat(int(self.next().value)))
            self.error("poch count must be a nonnegative integer or 'inf'", t)
        return self.parse_expression()

    # -- identity files --

    def parse_identities(self):
        records = []
        while self.peek().kind != "EOF":
            t = self.expect_kind("NAME")
            if t.value != "identity":
                self.error("expected 'identity'", t)
            name = self.expect_kind("NAME").value
            order = None
            nxt = self.peek()
            if nxt.kind == "NAME" and nxt.value == "order":
                self.next()
                order = self.parse_int()
                if order <= 0:
                    self.error("order must be positive", nxt)
            self.expect("{")
            sides = {}
            for side in ("lhs", "rhs"):
                st = self.expect_kind("NAME")
                if st.value != side:
                    self.error(f"expected '{side}'", st)
                self.expect("=")
                sides[side] = self.parse_expression()
                self.expect(";")
            self.expect("}")
            records.append(IdentityRecord(name, order, sides["lhs"], sides["rhs"]))
        return records


def parse_expression(text: str):
    p = _Parser(text)
    node = p.parse_expression()
    t = p.peek()
    if t.kind != "EOF":
        raise ParseError(f"unexpected trailing input {t.value!r}", t.line, t.col)
    return node


def parse_identities(text: str):
    return _Parser(text).parse_identities()


# --------------------------------------------------------------------------
# Pretty printer
# --------------------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_UNARY, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _PREC_ADD if node.op in "+-" else _PREC_MUL
    if isinstance(node, Neg):
        return _PREC_UNARY
    if isinstance(node, Pow):
        return _PREC_POW
    return _PREC_ATOM


def _paren(node, minimum) -> str:
    s = pretty(node)
    return f"({s})" if _prec(node) < minimum else s


def pretty(node) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, QPow):
        e = node.expo
        if e == 1:
            return "q"
        if e.denominator == 1 and e >= 0:
            return f"q^{e}"
        return f"q^({e})"
    if isinstance(node, Zeta):
        return f"zeta({node.k},{node.n})"
    if isinstance(node, PochInf):
        return "inf"
    if isinstance(node, Neg):
        return "-" + _paren(node.arg, _PREC_UNARY)
    if isinstance(node, BinOp):
        if node.op in "+-":
            left = _paren(node.left, _PREC_ADD)
            right = _paren(node.right, _PREC_ADD + (node.op == "-"))
            return f"{left} {node.op} {right}"
        left = _paren(node.left, _PREC_MUL)
        right = _paren(node.right, _PREC_MUL + (node.op == "/"))
        return f"{left}{node.op}{right}"
    if isinstance(node, Pow):
        base = _paren(node.base, _PREC_ATOM)
        return f"{base}^{node.k}" if node.k >= 0 else f"{base}^({node.k})"
    if isinstance(node, Call):
        s = node.head
        if node.params:
            s += "[" + ",".join(str(p) for p in node.params) + "]"
        if node.groups:
            s += "(" + "; ".join(
                ", ".join(pretty(a) for a in g) for g in node.groups
            ) + ")"
        return s
    if isinstance(node, CatalogRef):
        s = f'catalog("{node.name}")'
        if node.index is not None:
            s += f".repr[{node.index}]"
        return s
    raise TypeError(f"not an expression node: {node!r}")


def pretty_identity(r: IdentityRecord) -> str:
    head = f"identity {r.name}"
    if r.order_override is not None:
        head += f" order {r.order_override}"
    return (
        f"{head} {{\n"
        f"  lhs = {pretty(r.lhs)};\n"
        f"  rhs = {pretty(r.rhs)};\n"
        f"}}\n"
    )


# --------------------------------------------------------------------------
# Evaluator
# --------------------------------------------------------------------------


def _as_monomial(series: QSeries, what: str) -> QMonomial:
    s = series.minimize_scale()
    if s.order is not None or len(s.terms) > 1:
        raise UnsupportedArgument(f"{what} must be an exact monomial c*q^e")
    if not s.terms:
        raise UnsupportedArgument(f"{what} must be nonzero")
    ((k, c),) = s.terms.items()
    return QMonomial(c, rat(k, s.scale))


def _div(a: QSeries, b: QSeries, order) -> QSeries:
    a2, b2 = QSeries.unify(a, b)
    hint = None
    if b2.order is None and len(b2.terms) > 1 and a2.order is None:
        # both sides exact: aim for the requested window
        hint = ceil_rat(rat(order) * b2.scale) + max(0, -min(b2.terms))
    return a2.divide(b2, window_hint=hint)


@lru_cache(maxsize=None)
def _catalog_repr_ast(name: str, index: int):
    entry = _catalog.catalog_lookup(name)
    try:
        src = entry.representations[index]
    except IndexError:
        raise UnsupportedArgument(
            f"{name} has {len(entry.representations)} representation(s); "
            f"index {index} is out of range"
        ) from None
    return parse_expression(src)


def _eval_call(node: Call, order) -> QSeries:
    head, p = node.head, node.params
    args = [
        [a if isinstance(a, PochInf) else eval_expr(a, order) for a in group]
        for group in node.groups
    ]

    def mono(gi, ai, what):
        return _as_monomial(args[gi][ai], what)

    if head == "j":
        return _theta.jtheta(mono(0, 0, "j argument"), mono(1, 0, "j base"), order)
    if head == "J":
        return _theta.J(p[0], p[1], order)
    if head == "JB":
        return _theta.Jbar(p[0], p[1], order)
    if head == "Jm":
        return _theta.Jm(p[0], order)
    if head == "m":
        return _appell.m_eval(
            mono(0, 0, "m argument"), mono(0, 1, "m base"), mono(0, 2, "m z"), order
        )
    if head in ("g", "h", "k"):
        fn = {"g": _appell.g_eval, "h": _appell.h_eval, "k": _appell.k_eval}[head]
        return fn(mono(0, 0, f"{head} argument"), mono(1, 0, f"{head} base"), order)
    if head == "poch":
        x = mono(0, 0, "poch argument")
        base = mono(1, 0, "poch base")
        count = node.groups[2][0]
        if isinstance(count, PochInf):
            return _theta.poch_inf(x, base, order)
        return _theta.poch_fin(x, base, int(count.value))
    if head == "f":
        return _hecke.f_eval(*p, mono(0, 0, "f x"), mono(0, 1, "f y"),
                             mono(1, 0, "f base"), order)
    if head in ("gabc", "habc"):
        fn = _hecke.g_abc_eval if head == "gabc" else _hecke.h_abc_eval
        return fn(*p, mono(0, 0, f"{head} x"), mono(0, 1, f"{head} y"),
                  mono(1, 0, f"{head} base"),
                  mono(2, 0, f"{head} z1"), mono(2, 1, f"{head} z0"), order)
    if head == "thetanp":
        return _hecke.theta_np_eval(*p, mono(0, 0, "thetanp x"),
                                    mono(0, 1, "thetanp y"),
                                    mono(1, 0, "thetanp base"), order)
    if head == "thetaabc":
        return _hecke.theta_abc_eval(*p, mono(0, 0, "thetaabc x"),
                                     mono(0, 1, "thetaabc y"),
                                     mono(1, 0, "thetaabc base"), order)
    if head == "bigtheta":
        return _hecke.big_theta_eval(*p, mono(0, 0, "bigtheta x"),
                                     mono(0, 1, "bigtheta y"),
                                     mono(1, 0, "bigtheta base"), order)
    if head == "strfn":
        return _hecke.string_function(*p, qmono(1, 1), order)
    raise TypeError(f"unhandled call head {head!r}")  # pragma: no cover


def eval_expr(node, order) -> QSeries:
    """Evaluate an expression to an exact truncated series.

    ``order`` is the target window in q-units.  The result's sound window
    may fall short of it when negative valuations are involved; callers who
    need a specific window should retry at a padded order (see runner).
    """
    if isinstance(node, Num):
        return QSeries.from_coeff(node.value)
    if isinstance(node, QPow):
        return QSeries.from_monomial(qmono(1, node.expo))
    if isinstance(node, Zeta):
        return QSeries.from_coeff(zeta_root(node.k, node.n))
    if isinstance(node, Neg):
        return -eval_expr(node.arg, order)
    if isinstance(node, BinOp):
        a = eval_expr(node.left, order)
        b = eval_expr(node.right, order)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        return _div(a, b, order)
    if isinstance(node, Pow):
        base = eval_expr(node.base, order)
        if node.k < 0 and base.order is None and len(base.terms) > 1:
            base = _div(QSeries.from_coeff(1), base, order)
            return base ** (-node.k)
        return base ** node.k
    if isinstance(node, CatalogRef):
        entry = _catalog.catalog_lookup(node.name)
        if node.index is None:
            return entry.eulerian(int(order))
        return eval_expr(_catalog_repr_ast(node.name, node.index), order)
    if isinstance(node, Call):
        try:
            return _eval_call(node, order)
        except Exception as exc:  # attach expression-path context once
            if getattr(exc, "qverify_context", None) is None:
                exc.qverify_context = f"while evaluating {pretty(node)}"
            raise
    if isinstance(node, PochInf):
        raise UnsupportedArgument("'inf' is only valid as a poch count")
    raise TypeError(f"not an expression node: {node!r}")
