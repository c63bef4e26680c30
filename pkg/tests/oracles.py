"""Independent reference computations used only by the tests.

None of these go through the package's Seifert matrices or exact
elimination: the Alexander polynomial comes from the Burau representation
(sympy), signatures and circle roots from floating point (numpy), root counts
from brute-force enumeration.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np
import sympy

from sqplinks.poly import IntPolynomial

t, x = sympy.symbols("t x")


def _burau_sigma(n: int, i: int, sign: int) -> sympy.Matrix:
    m = sympy.eye(n)
    m[i - 1, i - 1] = 1 - t
    m[i - 1, i] = t
    m[i, i - 1] = 1
    m[i, i] = 0
    return m if sign == 1 else m.inv().applyfunc(sympy.simplify)


def _band_sigmas(r: int, s: int, sign: int) -> list[tuple[int, int]]:
    """a_rs = (s_r ... s_{s-2}) s_{s-1} (s_r ... s_{s-2})^{-1}, inverted when sign < 0."""
    prefix = [(i, 1) for i in range(r, s - 1)]
    core = prefix + [(s - 1, 1)] + [(i, -1) for i in reversed(range(r, s - 1))]
    if sign == 1:
        return core
    return [(i, -e) for i, e in reversed(core)]


def burau_matrix(n: int, letters) -> sympy.Matrix:
    """Unreduced Burau image of a word given as (r, s, sign) triples."""
    m = sympy.eye(n)
    for r, s, sign in letters:
        for i, e in _band_sigmas(r, s, sign):
            m = (m * _burau_sigma(n, i, e)).applyfunc(sympy.expand)
    return m


def burau_alexander(w) -> IntPolynomial:
    """Alexander polynomial of the closure, normalized, via the Burau characteristic polynomial.

    det(xI - B) = (x - 1) det(xI - B_red) and Delta = (1 - t)/(1 - t^n) det(I - B_red).
    """
    n = w.strands
    B = burau_matrix(n, [(b.r, b.s, b.sign) for b in w.letters])
    cp = (x * sympy.eye(n) - B).det(method="berkowitz")
    reduced = sympy.cancel(cp / (x - 1)).subs(x, 1)
    delta = sympy.cancel(reduced * (1 - t) / (1 - t**n))
    num, den = sympy.fraction(sympy.together(delta))
    num_p, den_p = sympy.Poly(num, t), sympy.Poly(den, t)
    if len(den_p.terms()) != 1:
        raise AssertionError(f"Burau quotient is not a Laurent polynomial: {delta}")
    coeffs = [int(c) for c in reversed(num_p.all_coeffs())]
    return IntPolynomial(coeffs).normalized()


def sympy_alexander(S) -> IntPolynomial:
    """det(S - t S^T) by sympy's own determinant."""
    M = sympy.Matrix(S)
    if M.shape[0] == 0:
        return IntPolynomial([1])
    d = sympy.expand((M - t * M.T).det(method="berkowitz"))
    coeffs = [int(c) for c in reversed(sympy.Poly(d, t).all_coeffs())]
    return IntPolynomial(coeffs).normalized()


def float_inertia(gram) -> tuple[int, int, int]:
    g = np.array(gram, dtype=float)
    if g.size == 0:
        return 0, 0, 0
    ev = np.linalg.eigvalsh(g)
    tol = 1e-8 * max(1.0, float(np.abs(ev).max()))
    return int((ev > tol).sum()), int((ev < -tol).sum()), int((np.abs(ev) <= tol).sum())


def float_least_obstructed(delta: IntPolynomial, max_n: int = 50) -> int | None:
    """Least n with a root of delta on the closed arc {|arg t| >= 2pi/n}, by numpy roots."""
    roots = np.roots(list(reversed(delta.coeffs)))
    angles = [abs(np.angle(z)) for z in roots if abs(abs(z) - 1) < 1e-6]
    for n in range(2, max_n + 1):
        if any(a >= 2 * math.pi / n - 1e-7 for a in angles):
            return n
    return None


def _frac_det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n, det = len(m), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return det


def _burau_numeric(n: int, i: int, sign: int, t0: Fraction) -> list[list[Fraction]]:
    m = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    if sign == 1:
        m[i - 1][i - 1], m[i - 1][i], m[i][i - 1], m[i][i] = 1 - t0, t0, Fraction(1), Fraction(0)
    else:
        m[i - 1][i - 1], m[i - 1][i], m[i][i - 1], m[i][i] = Fraction(0), Fraction(1), 1 / t0, 1 - 1 / t0
    return m


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def burau_alexander_at(w, t0: Fraction) -> Fraction:
    """Delta(t0) up to a unit, exactly: sum of principal (n-1)-minors of I - B, times (1-t)/(1-t^n)."""
    n = w.strands
    B = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    for b in w.letters:
        for i, e in _band_sigmas(b.r, b.s, b.sign):
            B = _matmul(B, _burau_numeric(n, i, e, t0))
    M = [[int(a == b) - B[a][b] for b in range(n)] for a in range(n)]
    minors = sum(
        _frac_det([[M[a][b] for b in range(n) if b != k] for a in range(n) if a != k]) for k in range(n)
    )
    return minors * (1 - t0) / (1 - t0**n)


def matches_burau(delta: IntPolynomial, w, points=(Fraction(2), Fraction(3), Fraction(5, 2))) -> bool:
    """Whether delta = +-t^k * (Burau Alexander polynomial) for a single unit, checked at several points."""
    units = None
    for t0 in points:
        ref = burau_alexander_at(w, t0)
        val = Fraction(delta(t0))
        if val == 0 or ref == 0:
            if val != ref:
                return False
            continue
        ratio = ref / val
        here = {(sg, k) for sg in (1, -1) for k in range(-40, 41) if ratio == sg * t0**k}
        units = here if units is None else units & here
        if not units:
            return False
    return True


def brute_root_count(gram) -> int:
    """Vectors with g(v, v) = -2 for negative definite g, by box enumeration.

    The box uses |v_i| <= sqrt(2 (-g)^{-1}_{ii}), a Cauchy-Schwarz bound.
    """
    gram = getattr(gram, "gram", gram)
    g = np.array(gram, dtype=float)
    inv = np.linalg.inv(-g)
    bounds = [int(math.floor(math.sqrt(2 * inv[i, i]) + 1e-9)) for i in range(len(g))]
    G = np.array(gram, dtype=np.int64)
    count = 0
    for v in itertools.product(*(range(-b, b + 1) for b in bounds)):
        a = np.array(v, dtype=np.int64)
        if a @ G @ a == -2:
            count += 1
    return count
