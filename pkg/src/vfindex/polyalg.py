"""Sparse multivariate polynomials over Q, monomial orders and a text parser.

Exponent vectors are plain tuples of ints; a polynomial is an immutable map
from exponent tuples to nonzero :class:`fractions.Fraction` coefficients
together with the ordered tuple of variable names it lives over.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

__all__ = [
    "MonomialOrder",
    "DEGREVLEX",
    "NEGDEGREVLEX",
    "weighted_local",
    "compare_monomials",
    "Polynomial",
    "VariableMismatchError",
    "PolynomialSyntaxError",
    "UndeclaredVariableError",
    "NegativeExponentError",
    "parse_polynomial",
    "format_rational",
]

Exponents = tuple


class VariableMismatchError(ValueError):
    """Operands live over different variable lists."""


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------

_KINDS = ("degrevlex", "negdegrevlex", "weighted_local")


@dataclass(frozen=True)
class MonomialOrder:
    """A degree-type monomial order.

    ``degrevlex`` is global (every variable > 1); ``negdegrevlex`` and
    ``weighted_local`` are local (1 > every variable), the latter grading
    variables by the given positive ``weights``.  Ties in (weighted) degree
    are broken reverse-lexicographically.
    """

    kind: str = "negdegrevlex"
    weights: tuple | None = None
    _key: Callable = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown monomial order kind {self.kind!r}")
        if self.kind == "weighted_local":
            if not self.weights or any(int(w) != w or w <= 0 for w in self.weights):
                raise ValueError("weighted_local order needs positive integer weights")
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        elif self.weights is not None:
            raise ValueError(f"{self.kind} order takes no weights")
        sign = 1 if self.kind == "degrevlex" else -1
        weights = self.weights

        if weights is None:
            def raw(exps):
                return (sign * sum(exps), tuple(-e for e in reversed(exps)))
        else:
            def raw(exps):
                if len(exps) != len(weights):
                    raise ValueError("exponent vector length does not match weights")
                wdeg = sum(w * e for w, e in zip(weights, exps))
                return (sign * wdeg, tuple(-e for e in reversed(exps)))

        object.__setattr__(self, "_key", lru_cache(maxsize=1 << 18)(raw))

    @property
    def is_local(self) -> bool:
        return self.kind != "degrevlex"

    def degree(self, exps: Sequence[int]) -> int:
        """(Weighted) degree used both for ranking and for the ecart."""
        if self.weights is None:
            return sum(exps)
        return sum(w * e for w, e in zip(self.weights, exps))

    def key(self, exps: Exponents) -> tuple:
        """Sort key: a larger key means the monomial ranks higher."""
        return self._key(exps)


DEGREVLEX = MonomialOrder("degrevlex")
NEGDEGREVLEX = MonomialOrder("negdegrevlex")


def weighted_local(weights: Iterable[int]) -> MonomialOrder:
    return MonomialOrder("weighted_local", tuple(weights))


def compare_monomials(a: Sequence[int], b: Sequence[int], order: MonomialOrder) -> int:
    """Return 1 if ``a`` ranks above ``b``, -1 if below, 0 if equal."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError(f"monomial length mismatch: {len(a)} vs {len(b)}")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _canonical(terms: Mapping) -> dict:
    items = [(e, c) for e, c in terms.items() if c != 0]
    items.sort(key=lambda t: DEGREVLEX.key(t[0]), reverse=True)
    return dict(items)


class Polynomial:
    """Immutable sparse polynomial with rational coefficients.

    Terms are stored in descending degrevlex order, so iteration and printing
    are deterministic.  Use :meth:`terms_in` for another order.
    """

    __slots__ = ("_terms", "_vars", "_hash")

    def __init__(self, terms: Mapping | None, variables: Sequence[str]):
        self._vars = tuple(variables)
        n = len(self._vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match {n} variables")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self._terms = _canonical(clean)
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, variables: tuple) -> "Polynomial":
        # trusted constructor: exponents are tuples of ints, coefficients Fractions
        p = cls.__new__(cls)
        p._vars = variables
        p._terms = _canonical(terms)
        p._hash = None
        return p

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls({}, variables)

    @classmethod
    def constant(cls, c, variables: Sequence[str]) -> "Polynomial":
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(variables)
        i = variables.index(name)
        e = [0] * len(variables)
        e[i] = 1
        return cls({tuple(e): 1}, variables)

    @classmethod
    def monomial(cls, exps: Sequence[int], variables: Sequence[str], coeff=1) -> "Polynomial":
        return cls({tuple(exps): coeff}, variables)

    # accessors ------------------------------------------------------------
    @property
    def variables(self) -> tuple:
        return self._vars

    @property
    def nvars(self) -> int:
        return len(self._vars)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def terms_in(self, order: MonomialOrder) -> list:
        """(exponents, coefficient) pairs, highest-ranked first under ``order``."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms.items(), key=lambda t: order.key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_unit_locally(self) -> bool:
        return self.constant_term() != 0

    # arithmetic -----------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self._vars != other._vars:
            raise VariableMismatchError(f"variables {self._vars} vs {other._vars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self._vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self._vars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self._vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(out, self._vars)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self._vars)
        return Polynomial._raw({e: c * a for e, a in self._terms.items()}, self._vars)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        coeff = Fraction(coeff)
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in self._terms.items()},
            self._vars,
        )

    def partial(self, var) -> "Polynomial":
        """Partial derivative by a variable name or index."""
        i = self._vars.index(var) if isinstance(var, str) else int(var)
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range")
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return Polynomial._raw(out, self._vars)

    def gradient(self) -> tuple:
        return tuple(self.partial(i) for i in range(self.nvars))

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= Fraction(x) ** k
            total += t
        return total

    # comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._vars == other._vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(other, self._vars)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, tuple(self._terms.items())))
        return self._hash

    # printing -------------------------------------------------------------
    def _monomial_str(self, e) -> str:
        parts = []
        for name, k in zip(self._vars, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for idx, (e, c) in enumerate(self._terms.items()):
            mono = self._monomial_str(e)
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if idx == 0:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, {list(self._vars)!r})"


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UndeclaredVariableError(PolynomialSyntaxError):
    pass


class NegativeExponentError(PolynomialSyntaxError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num), start))
        elif ident is not None:
            tokens.append(("var", ident, start))
        else:
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    # expr   := ['+'|'-'] term (('+'|'-') term)*
    # term   := factor ('*' factor)*
    # factor := INT ['/' INT] | VAR ['^' NAT] | '(' expr ')' ['^' NAT]

    def __init__(self, text: str, variables: tuple):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = variables

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise PolynomialSyntaxError(f"expected {op!r}", tok[2])

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolynomialSyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term().scale(sign)
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                t = self.term()
                acc = acc + t if tok[1] == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def exponent(self) -> int:
        tok = self.peek()
        if not (tok[0] == "op" and tok[1] == "^"):
            return 1
        self.take()
        tok = self.take()
        if tok[0] == "op" and tok[1] == "-":
            raise NegativeExponentError("negative exponent", tok[2])
        if tok[0] != "num":
            raise PolynomialSyntaxError("expected a natural-number exponent", tok[2])
        return tok[1]

    def factor(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            c = Fraction(val)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    raise PolynomialSyntaxError("expected an integer denominator", den[2])
                if den[1] == 0:
                    raise PolynomialSyntaxError("zero denominator", den[2])
                c = Fraction(val, den[1])
            return Polynomial.constant(c, self.vars)
        if kind == "var":
            if val not in self.vars:
                raise UndeclaredVariableError(f"undeclared variable {val!r}", pos)
            return Polynomial.variable(val, self.vars) ** self.exponent()
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner ** self.exponent()
        if kind == "end":
            raise PolynomialSyntaxError("unexpected end of input", pos)
        raise PolynomialSyntaxError(f"unexpected token {val!r}", pos)


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``text`` into a :class:`Polynomial` over ``variables``.

    >>> str(parse_polynomial("(x+y)*(x-y)", ["x", "y"]))
    'x^2 - y^2'
    """
    variables = tuple(variables)
    if len(set(variables)) != len(variables):
        raise ValueError("duplicate variable names")
    return _Parser(text, variables).parse()
