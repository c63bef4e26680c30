"""Cyclic basket links L(C_m, eps).

The chord diagram is the m-cycle: arc i meets arcs i-1 and i+1 (mod m).
eps records the plumbing order of adjacent bands, and the isotopy class of
the surface depends only on p = #{i : eps_i = +1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .invariants import alexander_from_seifert, least_obstructed_n
from .lattice import (
    RootLatticeType,
    SymmetricForm,
    classify_root_lattice,
    definiteness,
    determinant,
)
from .poly import IntPolynomial
from .seifert import SeifertMatrix, symmetrize


@dataclass(frozen=True)
class CyclicBasket:
    m: int
    eps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(self.eps))
        if self.m < 3:
            raise ValueError("a cyclic basket needs m >= 3")
        if len(self.eps) != self.m or any(e not in (1, -1) for e in self.eps):
            raise ValueError("eps must be a vector of m signs")
        if not 1 <= self.p <= self.m - 1:
            raise ValueError("basket condition fails: need 1 <= p(eps) <= m-1")

    @property
    def p(self) -> int:
        return sum(1 for e in self.eps if e == 1)

    @classmethod
    def canonical(cls, m: int, p: int) -> CyclicBasket:
        """eps = (-1, ..., -1, +1, ..., +1) with p plus signs."""
        if not 0 < p < m:
            raise ValueError("need 0 < p < m")
        return cls(m, (-1,) * (m - p) + (1,) * p)

    @classmethod
    def parse(cls, text: str) -> CyclicBasket:
        """From a sign string such as "+--"."""
        signs = {"+": 1, "-": -1}
        try:
            eps = tuple(signs[c] for c in text.strip())
        except KeyError:
            raise ValueError(f"eps must consist of '+' and '-', got {text!r}") from None
        return cls(len(eps), eps)

    def __str__(self):
        return "".join("+" if e == 1 else "-" for e in self.eps)


def cyclic_seifert_matrix(cb: CyclicBasket) -> SeifertMatrix:
    m = cb.m
    S = [[0] * m for _ in range(m)]
    for i in range(m):
        j = (i + 1) % m
        S[i][i] = -1
        if cb.eps[i] == 1:
            S[i][j] = -1
        else:
            S[j][i] = 1
    return SeifertMatrix(tuple(map(tuple, S)), tuple(f"x{i + 1}" for i in range(m)))


def cyclic_lk(cb: CyclicBasket) -> int:
    """Total pairwise linking number of the boundary link."""
    return 2 * cb.p if cb.m % 2 else cb.m // 2 + cb.p


def normalize_eps(cb: CyclicBasket) -> CyclicBasket:
    """Apply (eps_{i-1}, eps_i) = (+1, -1) -> (-1, +1) until eps is canonical."""
    eps = list(cb.eps)
    moved = True
    while moved:
        moved = False
        for i in range(1, cb.m):
            if eps[i - 1] == 1 and eps[i] == -1:
                eps[i - 1], eps[i] = -1, 1
                moved = True
    return CyclicBasket(cb.m, tuple(eps))


def q_matrix(m: int, epsilon: int) -> SymmetricForm:
    """Tridiagonal 2/1 matrix with corner entries epsilon."""
    if m < 3:
        raise ValueError("need m >= 3")
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    g = [[0] * m for _ in range(m)]
    for i in range(m):
        g[i][i] = 2
        if i + 1 < m:
            g[i][i + 1] = g[i + 1][i] = 1
    g[0][m - 1] = g[m - 1][0] = epsilon
    return SymmetricForm(tuple(map(tuple, g)))


def q_det(m: int, epsilon: int) -> int:
    return q_matrix(m, epsilon).determinant


def q_det_formula(m: int, epsilon: int) -> int:
    return 2 + 2 * epsilon if m % 2 else 2 - 2 * epsilon


def leading_minors(f: SymmetricForm, upto: int | None = None) -> list[int]:
    """Determinants of the r x r leading blocks, r = 1..upto (default rank - 1)."""
    upto = f.rank - 1 if upto is None else upto
    return [determinant([row[:r] for row in f.gram[:r]]) for r in range(1, upto + 1)]


def sign_change_indices(m: int, p: int) -> list[int]:
    """1-based rows/columns negated to turn -(S + S^T) into Q_m((-1)^{m-p})."""
    return list(range(m - p, 0, -2))


def cyclic_congruence_check(cb: CyclicBasket) -> bool:
    """Negate the prescribed rows and columns of -(S+S^T) and compare with Q_m((-1)^{m-p}).

    Non-canonical eps are first normalized; the isotopy moves do not change p.
    """
    canon = normalize_eps(cb)
    m, p = canon.m, canon.p
    g = [[-x for x in row] for row in symmetrize(cyclic_seifert_matrix(canon)).gram]
    for i in sign_change_indices(m, p):
        k = i - 1
        for j in range(m):
            g[k][j] = -g[k][j]
            g[j][k] = -g[j][k]
    return tuple(map(tuple, g)) == q_matrix(m, (-1) ** (m - p)).gram


def cyclic_alexander(m: int, p: int) -> IntPolynomial:
    if not 0 < p < m:
        raise ValueError("need 0 < p < m")
    t = IntPolynomial.monomial
    second = t(m - p) + 1 if m % 2 else t(m - p) - 1
    return ((t(p) - 1) * second).normalized()


# Boundary of the ribbon graph, for an independent linking-number count


def _arc_endpoints(m: int) -> list[tuple[int, int]]:
    """Arc i joins boundary points 2i and 2i + 3 (mod 2m): the unique m-cycle diagram."""
    return [(2 * i, (2 * i + 3) % (2 * m)) for i in range(m)]


def boundary_classes(m: int) -> list[tuple[int, ...]]:
    """Homology classes of the boundary components in the band-core basis.

    Walk along the disk boundary; at each attaching point cross the band to
    its other end.  A crossing from the first endpoint of arc i counts +x_i,
    from the second endpoint -x_i.
    """
    ends = _arc_endpoints(m)
    partner, band, sign = {}, {}, {}
    for i, (a, b) in enumerate(ends):
        partner[a], partner[b] = b, a
        band[a] = band[b] = i
        sign[a], sign[b] = 1, -1
    n = 2 * m
    seen, classes = set(), []
    for start in range(n):
        if start in seen:
            continue
        vec = [0] * m
        g = start
        while g not in seen:
            seen.add(g)
            k = (g + 1) % n  # gap g ends at attaching point g + 1
            vec[band[k]] += sign[k]
            g = partner[k]
        classes.append(tuple(vec))
    return classes


def lk_from_boundary(cb: CyclicBasket) -> int:
    """sum_{a<b} lk(K_a, K_b) = sum_{a<b} theta(K_a, K_b), theta the Seifert form."""
    S = cyclic_seifert_matrix(cb).entries
    K = boundary_classes(cb.m)

    def theta(u, v):
        return sum(u[i] * S[i][j] * v[j] for i in range(cb.m) for j in range(cb.m))

    return sum(theta(K[a], K[b]) for a in range(len(K)) for b in range(a + 1, len(K)))


@dataclass(frozen=True)
class CyclicReport:
    m: int
    p: int
    lk: int
    definiteness: str
    lattice_class: RootLatticeType | None
    alexander: IntPolynomial
    obstructed_from_n: int | None
    notes: tuple[str, ...] = ()

    @property
    def definite(self) -> bool:
        return self.definiteness == "negative_definite"

    def to_json(self):
        return {
            "m": self.m,
            "p": self.p,
            "lk": self.lk,
            "definite": self.definite,
            "definiteness": self.definiteness,
            "lattice_class": self.lattice_class.to_json() if self.lattice_class else None,
            "alexander_coeffs": list(self.alexander.coeffs),
            "obstructed_from_n": self.obstructed_from_n,
            "notes": list(self.notes),
        }


def cyclic_report(m: int, p: int, max_n: int = 50) -> CyclicReport:
    cb = CyclicBasket.canonical(m, p)
    S = cyclic_seifert_matrix(cb)
    form = symmetrize(S)
    kind = definiteness(form)
    lattice = classify_root_lattice(form) if kind == "negative_definite" else None
    delta_poly = alexander_from_seifert(S)
    if delta_poly != cyclic_alexander(m, p):
        raise AssertionError(f"closed-form Alexander polynomial disagrees for (m, p) = ({m}, {p})")
    notes = []
    if kind == "degenerate":
        notes.append("symmetrized form is degenerate (negative semi-definite, det 0)")
    if p > 1 and p % 2:
        notes.append("n = 2: not an L-space by a foliation argument (cited, not computed)")
    if p == 1:
        notes.append("surface is isotopic to the D_m plumbing")
    return CyclicReport(
        m, p, cyclic_lk(cb), kind, lattice, delta_poly, least_obstructed_n(delta_poly, max_n), tuple(notes)
    )
