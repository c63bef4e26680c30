"""Integer symmetric bilinear forms: inertia, root systems, ADE classification.

All arithmetic is exact.  Short-vector enumeration is a Fincke-Pohst search
over a rational LDL^T decomposition; floating point is only used to propose
candidate ranges, which are then checked exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]

MAX_CONGRUENCE_RANK = 12


@dataclass(frozen=True)
class SymmetricForm:
    gram: Matrix

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        """Dimension of the underlying lattice."""
        return len(self.gram)

    def __neg__(self) -> SymmetricForm:
        return SymmetricForm(tuple(tuple(-x for x in row) for row in self.gram))

    def __call__(self, u: Sequence[int], v: Sequence[int]) -> int:
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v)) if v[j])

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def transform(self, basis: Sequence[Sequence[int]]) -> SymmetricForm:
        """Gram matrix of the vectors in ``basis`` (rows)."""
        return SymmetricForm(tuple(tuple(self(u, v) for v in basis) for u in basis))

    @cached_property
    def determinant(self) -> int:
        return determinant(self.gram)

    def to_json(self):
        return [list(r) for r in self.gram]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inertia(f: SymmetricForm) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) from a rational congruence diagonalization."""
    a = [[Fraction(x) for x in row] for row in f.gram]
    n = len(a)
    diag = []
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            # all remaining diagonal entries vanish; use an off-diagonal entry
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                diag.extend([Fraction(0)] * (n - k))
                break
            i, j = pair
            # e_i -> e_i + e_j gives diagonal 2 a_ij
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        p = a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / p
            if factor:
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
                for r in range(k, n):
                    a[r][i] -= factor * a[r][k]
        diag.append(p)
        k += 1
    plus = sum(1 for d in diag if d > 0)
    minus = sum(1 for d in diag if d < 0)
    return plus, minus, n - plus - minus


def signature(f: SymmetricForm) -> int:
    p, m, _ = inertia(f)
    return p - m


def definiteness(f: SymmetricForm) -> str:
    """One of negative_definite, positive_definite, indefinite, degenerate.

    ``indefinite`` means both signs occur; a semi-definite form with a
    radical is ``degenerate``.  The empty form counts as negative definite.
    """
    p, m, z = inertia(f)
    if p and m:
        return "indefinite"
    if z:
        return "degenerate"
    return "positive_definite" if p else "negative_definite"


def is_negative_definite(f: SymmetricForm) -> bool:
    return definiteness(f) == "negative_definite"


# Short vectors


def _ldl(g: Sequence[Sequence[int]]):
    """Return (d, mu) with Q(v) = sum_i d_i (v_i + sum_{j>i} mu_ij v_j)^2.

    ``g`` must be positive definite.
    """
    n = len(g)
    a = [[Fraction(x) for x in row] for row in g]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                a[j][k] -= mu[i][j] * d[i] * mu[i][k]
                a[k][j] = a[j][k]
    return d, mu


def short_vectors(g: Sequence[Sequence[int]], bound: int) -> list[tuple[int, ...]]:
    """All nonzero v with v^T g v <= bound, for positive definite g.

    Both v and -v are listed; output is sorted lexicographically.
    """
    n = len(g)
    if n == 0:
        return []
    d, mu = _ldl(g)
    bound = Fraction(bound)
    out: list[tuple[int, ...]] = []
    v = [0] * n

    def search(i: int, remaining: Fraction):
        center = -sum((mu[i][j] * v[j] for j in range(i + 1, n)), Fraction(0))
        radius = math.sqrt(float(remaining / d[i])) if remaining > 0 else 0.0
        lo = math.floor(float(center) - radius) - 1
        hi = math.ceil(float(center) + radius) + 1
        for x in range(lo, hi + 1):
            t = x - center
            used = d[i] * t * t
            if used <= remaining:
                v[i] = x
                if i == 0:
                    if any(v):
                        out.append(tuple(v))
                else:
                    search(i - 1, remaining - used)
        v[i] = 0

    search(n - 1, bound)
    out.sort()
    return out


def enumerate_roots(f: SymmetricForm) -> list[tuple[int, ...]]:
    """All vectors of norm -2 in a negative definite even form."""
    if not f.is_even():
        raise ValueError("form is not even")
    if not is_negative_definite(f):
        raise ValueError("form is not negative definite")
    neg = [[-x for x in row] for row in f.gram]
    return [v for v in short_vectors(neg, 2) if f(v, v) == -2]


# Root lattice classification

_DET = {"A": lambda m: m + 1, "D": lambda m: 4, "E": lambda m: {6: 3, 7: 2, 8: 1}[m]}


@dataclass(frozen=True, order=True)
class RootComponent:
    family: str
    rank: int

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def det(self) -> int:
        return _DET[self.family](self.rank)

    @property
    def root_count(self) -> int:
        return root_count(self.family, self.rank)


def root_count(family: str, m: int) -> int:
    if family == "A":
        return m * (m + 1)
    if family == "D":
        return 2 * m * (m - 1)
    return {6: 72, 7: 126, 8: 240}[m]


@dataclass(frozen=True)
class RootLatticeType:
    components: tuple[RootComponent, ...]

    def __str__(self):
        return " + ".join(map(str, self.components)) if self.components else "0"

    def to_json(self):
        return [str(c) for c in self.components]

    @classmethod
    def of(cls, *names: str) -> RootLatticeType:
        return cls(tuple(sorted(RootComponent(s[0], int(s[1:])) for s in names)))


class NotARootLattice(ValueError):
    pass


def _identify(rank: int, count: int) -> RootComponent:
    if count == rank * (rank + 1):
        return RootComponent("A", rank)
    if rank >= 4 and count == 2 * rank * (rank - 1):
        return RootComponent("D", rank)
    for m, c in ((6, 72), (7, 126), (8, 240)):
        if rank == m and count == c:
            return RootComponent("E", m)
    raise NotARootLattice(f"no simply laced root system of rank {rank} has {count} roots")


def rational_rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def classify_root_lattice(f: SymmetricForm) -> RootLatticeType:
    """ADE type of a negative definite even form generated by its roots."""
    if not is_negative_definite(f):
        raise ValueError(f"form is {definiteness(f)}, not negative definite")
    roots = enumerate_roots(f)
    # connected components of the non-orthogonality graph
    comp = [-1] * len(roots)
    comps: list[list[tuple[int, ...]]] = []
    for start in range(len(roots)):
        if comp[start] >= 0:
            continue
        comp[start] = len(comps)
        members, stack = [], [start]
        while stack:
            u = stack.pop()
            members.append(roots[u])
            for w in range(len(roots)):
                if comp[w] < 0 and f(roots[u], roots[w]) != 0:
                    comp[w] = comp[start]
                    stack.append(w)
        comps.append(members)
    found = sorted(_identify(rational_rank(c), len(c)) for c in comps)
    total_rank = sum(c.rank for c in found)
    if total_rank != f.rank:
        raise NotARootLattice(f"roots span rank {total_rank} of {f.rank}")
    prod = math.prod(c.det for c in found)
    if prod != abs(f.determinant):
        raise NotARootLattice(f"root sublattice has index {math.isqrt(prod // abs(f.determinant))}")
    return RootLatticeType(tuple(found))


# Dynkin trees


def dynkin_edges(family: str, m: int) -> list[tuple[int, int]]:
    """Edges of the Dynkin tree A_m, D_m (m >= 3) or E_m (m = 6, 7, 8)."""
    if family == "A":
        if m < 1:
            raise ValueError("A_m needs m >= 1")
        return [(i, i + 1) for i in range(m - 1)]
    if family == "D":
        if m < 3:
            raise ValueError("D_m needs m >= 3")
        return [(i, i + 1) for i in range(m - 2)] + [(m - 3, m - 1)]
    if family == "E":
        if m not in (6, 7, 8):
            raise ValueError("E_m needs m in 6, 7, 8")
        return [(i, i + 1) for i in range(m - 2)] + [(2, m - 1)]
    raise ValueError(f"unknown family {family!r}")


def tree_gram(edges: Iterable[tuple[int, int]], vertices: int | None = None) -> SymmetricForm:
    """Gram matrix with -2 on the diagonal and +1 for each edge."""
    edges = list(edges)
    n = vertices if vertices is not None else 1 + max((max(e) for e in edges), default=-1)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
    for a, b in edges:
        g[a][b] = g[b][a] = 1
    return SymmetricForm(tuple(tuple(r) for r in g))


def dynkin_gram(family: str, m: int) -> SymmetricForm:
    """The negative definite form of A_m, D_m or E_m."""
    return tree_gram(dynkin_edges(family, m), m)


# Congruence


def _column_reduce(g: Matrix) -> tuple[list[list[int]], int]:
    """Unimodular U with g U = [H | 0]; returns (U, rank of g)."""
    n = len(g)
    a = [list(r) for r in g]
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(dst, src, q):
        for r in range(n):
            a[r][dst] -= q * a[r][src]
            u[r][dst] -= q * u[r][src]

    def swap(c1, c2):
        for r in range(n):
            a[r][c1], a[r][c2] = a[r][c2], a[r][c1]
            u[r][c1], u[r][c2] = u[r][c2], u[r][c1]

    col = 0
    for row in range(n):
        if col >= n:
            break
        while True:
            nz = [c for c in range(col, n) if a[row][c] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda c: abs(a[row][c]))
            for c in nz:
                if c != piv:
                    colop(c, piv, a[row][c] // a[row][piv])
        nz = [c for c in range(col, n) if a[row][c] != 0]
        if nz:
            swap(col, nz[0])
            col += 1
    return u, col


def nondegenerate_part(f: SymmetricForm) -> tuple[SymmetricForm, int]:
    """Split off the radical: f is congruent to (H, 0^z); returns (H, z)."""
    u, rank = _column_reduce(f.gram)
    basis = [[u[r][c] for r in range(f.rank)] for c in range(rank)]
    return f.transform(basis), f.rank - rank


def _pair_reduce(g: list[list[int]]) -> list[list[int]]:
    """Greedy pairwise size reduction of a positive definite Gram matrix."""
    n = len(g)
    g = [list(r) for r in g]
    improved = True
    while improved:
        improved = False
        order = sorted(range(n), key=lambda i: g[i][i])
        for j in order:
            for i in range(n):
                if i == j or g[j][j] == 0:
                    continue
                q = round(Fraction(g[i][j], g[j][j]))
                if q == 0:
                    continue
                new_norm = g[i][i] - 2 * q * g[i][j] + q * q * g[j][j]
                if new_norm >= g[i][i]:
                    continue
                # b_i -> b_i - q b_j
                for k in range(n):
                    g[i][k] -= q * g[j][k]
                for k in range(n):
                    g[k][i] = g[i][k]
                g[i][i] = new_norm
                improved = True
    return g


def _isometric_definite(a: list[list[int]], b: list[list[int]]) -> bool:
    """Backtracking search for a basis of (Z^n, b) with Gram matrix a."""
    n = len(a)
    a, b = _pair_reduce(a), _pair_reduce(b)
    candidates: dict[int, list[tuple[int, ...]]] = {}
    vecs = short_vectors(b, max(a[i][i] for i in range(n)))

    def bform(u, v):
        return sum(u[i] * b[i][j] * v[j] for i in range(n) if u[i] for j in range(n) if v[j])

    norms = {v: bform(v, v) for v in vecs}
    for i in range(n):
        candidates.setdefault(a[i][i], [v for v in vecs if norms[v] == a[i][i]])
    # place basis vectors with few candidates first
    order = sorted(range(n), key=lambda i: len(candidates[a[i][i]]))
    chosen: dict[int, tuple[int, ...]] = {}

    def extend(k: int) -> bool:
        if k == n:
            mat = [chosen[i] for i in range(n)]
            return abs(determinant(mat)) == 1
        i = order[k]
        for v in candidates[a[i][i]]:
            if all(bform(v, chosen[j]) == a[i][j] for j in chosen):
                chosen[i] = v
                if extend(k + 1):
                    return True
                del chosen[i]
        return False

    return extend(0)


def congruent(f: SymmetricForm, g: SymmetricForm) -> bool:
    """Whether an integral unimodular change of basis carries f to g.

    Definite forms are decided by an isometry search.  Indefinite forms are
    decided only when unimodular (rank, signature and parity classify them);
    other indefinite pairs with equal invariants raise ValueError.
    """
    if f.rank > MAX_CONGRUENCE_RANK or g.rank > MAX_CONGRUENCE_RANK:
        raise ValueError(f"congruence is only supported up to rank {MAX_CONGRUENCE_RANK}")
    if f.rank != g.rank:
        return False
    if f.gram == g.gram:
        return True
    if inertia(f) != inertia(g) or f.is_even() != g.is_even():
        return False
    hf, zf = nondegenerate_part(f)
    hg, zg = nondegenerate_part(g)
    if zf != zg or abs(hf.determinant) != abs(hg.determinant):
        return False
    if hf.is_even() != hg.is_even():
        return False
    kind = definiteness(hf)
    if kind in ("negative_definite", "positive_definite"):
        sgn = -1 if kind == "negative_definite" else 1
        a = [[sgn * x for x in row] for row in hf.gram]
        b = [[sgn * x for x in row] for row in hg.gram]
        return _isometric_definite(a, b)
    if abs(hf.determinant) == 1:
        return True  # same rank, signature and parity
    raise ValueError("congruence of indefinite non-unimodular forms is not supported")
