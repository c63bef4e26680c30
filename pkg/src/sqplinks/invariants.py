"""Alexander and Conway polynomials, signatures and the unit-circle root test.

The obstruction: if the n-fold cyclic branched cover of a strongly
quasipositive link is an L-space, its Alexander polynomial has no zero on
the closed arc of the unit circle around -1 bounded by exp(+-2 pi i/n).
Writing x = t + 1/t for t on the circle, that arc is x in [-2, 2cos(2pi/n)].
Everything here is exact: roots are isolated by Sturm sequences with dyadic
endpoints, and 2cos(2pi/n) is handled through its minimal polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .braid_core import BraidWord
from .lattice import signature as form_signature
from .poly import IntPolynomial, cyclotomic, poly_gcd, squarefree_decomposition
from .seifert import SeifertMatrix, seifert_matrix, surface_data, symmetrize

T = IntPolynomial([0, 1])
REPORT_WIDTH = Fraction(1, 1024)


def poly_determinant(m: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Bareiss fraction-free determinant over Z[t]."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return IntPolynomial([1])
    sign, prev = 1, IntPolynomial([1])
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return IntPolynomial()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def _pencil(S: SeifertMatrix, var: IntPolynomial) -> IntPolynomial:
    """det(S - var * S^T)."""
    n = S.size
    e = S.entries
    return poly_determinant(
        [[IntPolynomial([e[i][j]]) - var * e[j][i] for j in range(n)] for i in range(n)]
    )


def alexander_from_seifert(S: SeifertMatrix) -> IntPolynomial:
    return _pencil(S, T).normalized()


def conway_from_seifert(S: SeifertMatrix) -> IntPolynomial:
    """Conway polynomial in z from Nabla(x - 1/x) = det(S/x - x S^T).

    det(S - x^2 S^T) = x^N det(S/x - x S^T) is a polynomial in x of degree
    at most 2N; the Laurent polynomial x^{-N} det(...) is peeled from the
    top by powers of (x - 1/x).
    """
    N = S.size
    p = _pencil(S, IntPolynomial([0, 0, 1]))
    # laurent[e + N] is the coefficient of x^e
    laurent = [p[k] for k in range(2 * N + 1)]
    z_coeffs = [0] * (N + 1)
    for d in range(N, -1, -1):
        c = laurent[d + N]
        if c == 0:
            continue
        z_coeffs[d] = c
        # subtract c (x - 1/x)^d = c sum_j binom(d, j) (-1)^j x^{d - 2j}
        binom = 1
        for j in range(d + 1):
            laurent[d - 2 * j + N] -= c * binom * (-1) ** j
            binom = binom * (d - j) // (j + 1)
    if any(laurent):
        raise ArithmeticError("det(S - x^2 S^T) is not a polynomial in x - 1/x")
    return IntPolynomial(z_coeffs)


def alexander(w: BraidWord) -> IntPolynomial:
    """Normalized det(S - t S^T) of the closure of ``w``."""
    return alexander_from_seifert(seifert_matrix(w))


def conway(w: BraidWord) -> IntPolynomial:
    return conway_from_seifert(seifert_matrix(w))


def signature(w: BraidWord) -> int:
    return form_signature(symmetrize(seifert_matrix(w)))


def is_definite_link(w: BraidWord) -> bool:
    """|signature| equals the first Betti number of the quasipositive surface.

    For BKL-positive words that surface has minimal Betti number
    2g + (components - 1), so this is exactly definiteness of the closure.
    """
    if not w.is_positive():
        raise ValueError("definiteness via the quasipositive surface needs a BKL-positive word")
    data = surface_data(w)
    if not data.connected:
        raise ValueError("quasipositive surface is disconnected")
    return abs(signature(w)) == data.betti


@lru_cache(maxsize=None)
def f_poly(n: int) -> IntPolynomial:
    """f_0 = 0, f_1 = 1, f_n = z f_{n-1} + f_{n-2}: Conway polynomials of T(2, n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < 2:
        return IntPolynomial([n])
    return T * f_poly(n - 1) + f_poly(n - 2)


def nabla_pqr(p: int, q: int, r: int) -> IntPolynomial:
    """Closed formula for the Conway polynomial of the closure of s1^p a13^q s2^r."""
    if min(p, q, r) < 1:
        raise ValueError("p, q, r must be positive")
    f = f_poly
    return (
        2 * T * f(p) * f(q) * f(r)
        + f(p) * f(q) * f(r - 1)
        + f(p) * f(q - 1) * f(r)
        + f(p - 1) * f(q) * f(r)
    )


# Real root isolation


def _frac_poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for j, y in enumerate(b):
            a[shift + j] -= q * y
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


class SturmSequence:
    def __init__(self, p: IntPolynomial):
        if p.degree < 1:
            raise ValueError("Sturm sequences need a nonconstant polynomial")
        seq = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in p.derivative().coeffs]]
        while True:
            r = _frac_poly_rem(seq[-2], seq[-1])
            if not r:
                break
            seq.append([-c for c in r])
        self.poly = p
        self.seq = seq

    def variations(self, x: Fraction) -> int:
        signs = []
        for s in self.seq:
            v = Fraction(0)
            for c in reversed(s):
                v = v * x + c
            if v:
                signs.append(v > 0)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a: Fraction, b: Fraction) -> int:
        """Number of distinct roots in (a, b]."""
        return self.variations(a) - self.variations(b)


def _split_point(p: IntPolynomial, a: Fraction, b: Fraction) -> Fraction:
    """A dyadic point strictly inside (a, b) that is not a root of p."""
    for num, den in ((1, 2), (1, 4), (3, 4), (3, 8), (5, 8)):
        m = a + (b - a) * num / den
        if p(m) != 0:
            return m
    raise ArithmeticError("could not find a non-root split point")


def isolate_real_roots(
    p: IntPolynomial, lo: Fraction, hi: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], each holding exactly one root of squarefree p.

    Only roots in (lo, hi] are reported; neither lo nor hi may be a root
    unless the caller accepts hi being included.
    """
    if p.degree < 1:
        return []
    sturm = SturmSequence(p)
    out = []
    stack = [(Fraction(lo), Fraction(hi))]
    while stack:
        a, b = stack.pop()
        c = sturm.count(a, b)
        if c == 0:
            continue
        if c == 1:
            out.append((a, b))
            continue
        m = _split_point(p, a, b)
        stack.append((m, b))
        stack.append((a, m))
    out.sort()
    return out


def refine(p: IntPolynomial, interval: tuple[Fraction, Fraction], width: Fraction):
    """Shrink an isolating interval of squarefree p below ``width``."""
    sturm = SturmSequence(p)
    a, b = interval
    while b - a > width:
        m = _split_point(p, a, b)
        if sturm.count(a, m) == 1:
            b = m
        else:
            a = m
    return a, b


# Unit-circle roots


def x_form(p: IntPolynomial) -> IntPolynomial:
    """X with p(t) = t^{d} X(t + 1/t) for palindromic p of degree 2d."""
    if not p.is_palindromic() or p.degree % 2:
        raise ValueError(f"{p} is not palindromic of even degree")
    d = p.degree // 2
    laurent = list(p.coeffs)  # laurent[e + d] is the coefficient of t^e
    out = [0] * (d + 1)
    for k in range(d, -1, -1):
        c = laurent[k + d]
        if c == 0:
            continue
        out[k] = c
        binom = 1
        for j in range(k + 1):
            laurent[k - 2 * j + d] -= c * binom
            binom = binom * (k - j) // (j + 1)
    assert not any(laurent)
    return IntPolynomial(out)


@dataclass(frozen=True)
class CircleRootReport:
    """Roots of an Alexander polynomial on the unit circle.

    ``unit_roots`` lists the non-real circle roots through x = t + 1/t: one
    entry per distinct x-root, as an isolating interval (lo, hi] inside
    (-2, 2) and the multiplicity of the corresponding conjugate pair.
    """

    unit_roots: tuple[tuple[tuple[Fraction, Fraction], int], ...]
    root_at_minus_one: int
    root_at_one_multiplicity: int
    x_polynomial: IntPolynomial

    def to_json(self):
        return {
            "unit_roots": [
                {"interval": [str(a), str(b)], "multiplicity": m} for (a, b), m in self.unit_roots
            ],
            "root_at_minus_one": self.root_at_minus_one,
            "root_at_one_multiplicity": self.root_at_one_multiplicity,
        }


def circle_roots(delta: IntPolynomial) -> CircleRootReport:
    if delta.is_zero():
        raise ValueError("the zero polynomial has no root report")
    p = delta.normalized()
    at_one, p = p.multiplicity_of_root(1)
    at_minus_one, p = p.multiplicity_of_root(-1)
    if not p.is_palindromic():
        if p.reversed() == -p:
            raise AssertionError("anti-palindromic residue without a root at 1")
        raise ValueError(f"residue {p} is not reciprocal: not an Alexander polynomial")
    X = x_form(p)
    roots = []
    if X.degree >= 1:
        factors = squarefree_decomposition(X)
        radical = _radical(X)
        for iv in isolate_real_roots(radical, Fraction(-2), Fraction(2)):
            a, b = refine(radical, iv, REPORT_WIDTH)
            mult = next(m for f, m in factors if f.degree >= 1 and SturmSequence(f).count(a, b))
            roots.append(((a, b), mult))
    return CircleRootReport(tuple(roots), at_minus_one, at_one, X)


@lru_cache(maxsize=None)
def cos_min_poly(n: int) -> IntPolynomial:
    """Minimal polynomial of 2cos(2pi/n), n >= 3."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return x_form(cyclotomic(n))


@lru_cache(maxsize=None)
def cos_interval(n: int) -> tuple[Fraction, Fraction]:
    """Isolating interval (lo, hi] of 2cos(2pi/n), the largest root of its minimal polynomial."""
    psi = cos_min_poly(n)
    if psi.degree == 1:
        e = Fraction(-psi[0], psi[1])
        return e, e
    return isolate_real_roots(psi, Fraction(-2), Fraction(2))[-1]


@dataclass(frozen=True)
class Obstruction:
    """Outcome of the root-arc test for the n-fold cyclic branched cover.

    ``status`` is ``obstructed``, ``not_obstructed`` or ``zero`` (Alexander
    polynomial identically zero: the test does not apply).  For obstructions,
    ``witness`` names the offending root.
    """

    status: str
    n: int
    witness: str | None = None

    @property
    def obstructed(self) -> bool:
        return self.status == "obstructed"

    def __bool__(self):
        return self.obstructed

    def to_json(self):
        return {"n": self.n, "status": self.status, "witness": self.witness}


def lspace_obstructed(target: BraidWord | IntPolynomial | CircleRootReport, n: int) -> Obstruction:
    """Root-arc obstruction for the n-fold cyclic branched cover.

    Obstructed iff Delta vanishes at t = -1 or has a circle root with
    x = t + 1/t <= 2cos(2pi/n).  The endpoint is included.
    """
    if n < 2:
        raise ValueError("cover degree must be at least 2")
    if isinstance(target, BraidWord):
        target = alexander(target)
    if isinstance(target, IntPolynomial):
        if target.is_zero():
            return Obstruction("zero", n)
        target = circle_roots(target)
    report = target
    if report.root_at_minus_one:
        return Obstruction("obstructed", n, "t = -1")
    if n == 2 or not report.unit_roots:
        return Obstruction("not_obstructed", n)
    X = report.x_polynomial
    psi = cos_min_poly(n)
    if psi.degree >= 1 and poly_gcd(X, psi).degree >= 1:
        return Obstruction("obstructed", n, f"x = 2cos(2pi/{n}) exactly")
    radical = _radical(X)
    sturm = SturmSequence(radical)
    lo, hi = cos_interval(n)
    # shrink the endpoint's interval until it holds no root of X
    while lo != hi and sturm.count(lo, hi):
        lo, hi = refine(psi, (lo, hi), (hi - lo) / 4)
    if sturm.count(Fraction(-2), lo) == 0:
        return Obstruction("not_obstructed", n)
    a, b = isolate_real_roots(radical, Fraction(-2), lo)[0]
    return Obstruction("obstructed", n, f"x-root in ({a}, {b}]")


def _radical(X: IntPolynomial) -> IntPolynomial:
    r = IntPolynomial([1])
    for f, _ in squarefree_decomposition(X):
        r = r * f
    return r


def least_obstructed_n(target: BraidWord | IntPolynomial, max_n: int = 50) -> int | None:
    """Smallest n in [2, max_n] at which the root-arc test obstructs, else None."""
    if isinstance(target, BraidWord):
        target = alexander(target)
    if target.is_zero():
        return None
    report = circle_roots(target)
    for n in range(2, max_n + 1):
        if lspace_obstructed(report, n):
            return n
    return None
