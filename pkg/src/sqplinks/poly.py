"""Dense integer polynomials in one variable.

Coefficients are stored in ascending order of degree.  Everything is exact:
division is only offered where it is exact over Z, and the rational helpers
(gcd, square-free decomposition) return primitive integer polynomials.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(int(x) for x in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # construction helpers

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        return cls([0] * degree + [c])

    @classmethod
    def parse(cls, text: str, var: str = "t") -> IntPolynomial:
        """Parse expressions such as ``"z(2z^2 + 1)(z^2 + 2)"``.

        Supports integers, the variable, ``^`` with a non-negative integer
        exponent, ``+``, ``-``, parentheses and implicit multiplication.
        """
        return _Parser(text, var).parse()

    # basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, other: IntPolynomial | int) -> IntPolynomial:
        """Quotient over Z; raises ValueError if the division is not exact."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db, lb = other.degree, other.leading
        if len(rem) - 1 < db:
            if rem:
                raise ValueError("inexact polynomial division")
            return IntPolynomial()
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c == 0:
                continue
            q, r = divmod(c, lb)
            if r:
                raise ValueError("inexact polynomial division")
            quot[k] = q
            for j, y in enumerate(other.coeffs):
                rem[k + j] -= q * y
        if any(rem):
            raise ValueError("inexact polynomial division")
        return IntPolynomial(quot)

    def divides(self, other: IntPolynomial) -> bool:
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: IntPolynomial) -> IntPolynomial:
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def reversed(self) -> IntPolynomial:
        """t^deg * p(1/t) for a polynomial with nonzero constant term."""
        return IntPolynomial(reversed(self.coeffs))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> IntPolynomial:
        """Divide by the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def low_degree(self) -> int:
        """Exponent of the largest power of the variable dividing self."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def normalized(self) -> IntPolynomial:
        """Unit normalization for Alexander polynomials.

        Strip the power of the variable and make the leading coefficient
        positive.  The zero polynomial is returned unchanged.
        """
        if self.is_zero():
            return self
        c = self.coeffs[self.low_degree():]
        if c[-1] < 0:
            c = [-x for x in c]
        return IntPolynomial(c)

    def is_palindromic(self) -> bool:
        c = self.coeffs
        return c == c[::-1]

    def multiplicity_of_root(self, root: int) -> tuple[int, IntPolynomial]:
        """Return (m, q) with self = (t - root)^m q and q(root) != 0."""
        if self.is_zero():
            raise ValueError("the zero polynomial has every root")
        factor = IntPolynomial([-root, 1])
        m, q = 0, self
        while q(root) == 0:
            q = q.exact_div(factor)
            m += 1
        return m, q

    # formatting

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


# Rational helpers.  Polynomials over Q are kept as lists of Fractions only
# inside these functions; results come back as primitive integer polynomials.


def _to_frac(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _frac_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        q = a[-1] / lb
        shift = len(a) - 1 - db
        for j, y in enumerate(b):
            a[shift + j] -= q * y
        a.pop()
        _frac_trim(a)
    return a


def _from_frac(c: Sequence[Fraction]) -> IntPolynomial:
    if not c:
        return IntPolynomial()
    den = 1
    for x in c:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return IntPolynomial(int(x * den) for x in c).primitive()


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor over Q, as a primitive integer polynomial."""
    x, y = _to_frac(a), _to_frac(b)
    while y:
        x, y = y, _frac_rem(x, y)
    if not x:
        return IntPolynomial()
    return _from_frac(x)


def primitive_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """a / b over Q (b must divide a over Q), returned primitive."""
    num, den = _to_frac(a), _to_frac(b)
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    db, lb = len(den) - 1, den[-1]
    while len(num) - 1 >= db and num:
        q = num[-1] / lb
        shift = len(num) - 1 - db
        quot[shift] = q
        for j, y in enumerate(den):
            num[shift + j] -= q * y
        num.pop()
        _frac_trim(num)
    if num:
        raise ValueError("divisor does not divide over Q")
    return _from_frac(quot)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: p = c * prod f_i^i with f_i squarefree and coprime.

    Returns the nonconstant factors with their multiplicities.
    """
    if p.degree < 1:
        return []
    a = _to_frac(p)
    b = _deriv_frac(a)
    c = _frac_gcd(a, b)
    w, y = _frac_div(a, c), _frac_div(b, c)
    out, i = [], 1
    while len(w) > 1:
        z = _frac_sub(y, _deriv_frac(w))
        g = _frac_gcd(w, z)
        if len(g) > 1:
            out.append((_from_frac(g), i))
        w, y = _frac_div(w, g), _frac_div(z, g)
        i += 1
    return out


def _deriv_frac(c):
    return _frac_trim([k * x for k, x in enumerate(c)][1:])


def _frac_sub(a, b):
    n = max(len(a), len(b))
    return _frac_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _frac_gcd(a, b):
    x, y = list(a), list(b)
    while y:
        x, y = y, _frac_rem(x, y)
    if not x:
        return x
    lead = x[-1]
    return [v / lead for v in x]


def _frac_div(a, b):
    num = list(a)
    quot = [Fraction(0)] * (len(num) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    while len(num) - 1 >= db and num:
        q = num[-1] / lb
        shift = len(num) - 1 - db
        quot[shift] = q
        for j, y in enumerate(b):
            num[shift + j] -= q * y
        num.pop()
        _frac_trim(num)
    return _frac_trim(quot)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    p = IntPolynomial.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


class _Parser:
    _token = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^)|([+\-()]))")

    def __init__(self, text: str, var: str):
        self.text, self.var = text, var
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = self._token.match(text, pos)
            if not m:
                raise ValueError(f"bad polynomial syntax at {pos}: {text!r}")
            num, name, caret, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                if name != var:
                    raise ValueError(f"unexpected variable {name!r} in {text!r}")
                self.tokens.append(("var", name))
            elif caret:
                self.tokens.append(("^", None))
            else:
                self.tokens.append((op, None))
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> IntPolynomial:
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            acc = acc + self.term() * sign
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() in ("num", "var", "("):
            acc = acc * self.factor()
        return acc

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            base = IntPolynomial([val])
        elif kind == "var":
            base = IntPolynomial([0, 1])
        elif kind == "(":
            base = self.expr()
            if self.take()[0] != ")":
                raise ValueError(f"unbalanced parentheses in {self.text!r}")
        else:
            raise ValueError(f"unexpected {kind!r} in {self.text!r}")
        if self.peek() == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ValueError(f"bad exponent in {self.text!r}")
            base = base ** e
        return base
