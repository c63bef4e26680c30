"""Seifert surfaces of closed braids and their Seifert matrices.

Two constructions are provided.  The quasipositive one applies to words
delta_n P with P BKL-positive and uses one basis class per letter of P.  The
generic one runs Seifert's algorithm on the closed Artin-generator diagram and
works for any word whose diagram surface is connected.

Conventions are pinned by the trefoil: the closure of sigma_1^3 has signature
-2, and both constructions agree on every delta_n-prefixed word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid_core import (
    BraidWord,
    expand_to_sigma,
    linked,
    permutation,
    split_delta_power,
)
from .lattice import SymmetricForm


class DisconnectedSurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("Seifert matrix must be square")
        if len(self.basis_labels) != len(rows):
            raise ValueError("need one basis label per row")

    @property
    def size(self) -> int:
        return len(self.entries)

    def transpose(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.entries)) if self.entries else ()

    def to_json(self):
        return {"entries": [list(r) for r in self.entries], "basis": list(self.basis_labels)}


def symmetrize(S: SeifertMatrix) -> SymmetricForm:
    n = S.size
    return SymmetricForm(
        tuple(tuple(S.entries[i][j] + S.entries[j][i] for j in range(n)) for i in range(n))
    )


@dataclass(frozen=True)
class SurfaceData:
    strands: int
    letter_count: int
    edges: tuple[tuple[int, int], ...]
    graph_components: int
    boundary_components: int

    @property
    def connected(self) -> bool:
        return self.graph_components == 1

    @property
    def betti(self) -> int:
        return self.letter_count - self.strands + self.graph_components


def surface_data(w: BraidWord) -> SurfaceData:
    """Combinatorics of the surface made of n disks and one band per letter."""
    n = w.strands
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in w.letters:
        parent[find(b.r)] = find(b.s)
    comps = len({find(i) for i in range(1, n + 1)})
    perm = permutation(w)
    seen, cycles = set(), 0
    for i in range(n):
        if i not in seen:
            cycles += 1
            j = i
            while j not in seen:
                seen.add(j)
                j = perm[j]
    return SurfaceData(n, len(w), tuple((b.r, b.s) for b in w.letters), comps, cycles)


def qp_seifert_matrix(w: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the quasipositive surface of delta_n P.

    Basis: one class per letter of P, in order.  For letters a_{rs} (row i)
    and a_{tu} (column j):
      -1 if i == j, or i > j and r <= t < s <= u;
      +1 if i > j and t < r <= u < s;
       0 otherwise.
    """
    if not w.is_positive():
        raise ValueError("the quasipositive construction needs a BKL-positive word")
    p = split_delta_power(w, 1)
    if p is None:
        raise ValueError(f"word does not begin with delta_{w.strands}")
    L = p.letters
    m = len(L)
    rows = []
    for i in range(m):
        r, s = L[i].r, L[i].s
        row = []
        for j in range(m):
            t, u = L[j].r, L[j].s
            if i == j or (i > j and r <= t < s <= u):
                row.append(-1)
            elif i > j and t < r <= u < s:
                row.append(1)
            else:
                row.append(0)
        rows.append(tuple(row))
    labels = tuple(f"{b}@{k + 1}" for k, b in enumerate(L))
    return SeifertMatrix(tuple(rows), labels)


def generic_seifert_matrix(w: BraidWord) -> SeifertMatrix:
    """Seifert's algorithm on the closed diagram of the sigma-expansion of w.

    The Seifert circles are the n braid strands.  Crossings at the same
    index i, taken in reading order c_1, ..., c_k, bound the cycles
    (c_j, c_{j+1}).  Linking numbers between pushed-off cycles are local:
    they only involve cycles at the same or at neighbouring indices.
    """
    x = expand_to_sigma(w)
    n = w.strands
    by_index: dict[int, list[tuple[int, int]]] = {i: [] for i in range(1, n)}
    for pos, b in enumerate(x.letters):
        by_index[b.r].append((pos, b.sign))
    missing = [i for i, cr in by_index.items() if not cr]
    if missing:
        raise DisconnectedSurfaceError(
            f"sigma_{missing[0]} never occurs: the diagram's Seifert surface is disconnected"
        )
    cycles = []  # (index, (pos_a, sign_a), (pos_b, sign_b))
    for i in range(1, n):
        cr = by_index[i]
        for a, b in zip(cr, cr[1:]):
            cycles.append((i, a, b))
    N = len(cycles)
    S = [[0] * N for _ in range(N)]
    for u, (i, (a, ea), (b, eb)) in enumerate(cycles):
        S[u][u] = -(ea + eb) // 2
        for v, (j, (c, ec), (d, ed)) in enumerate(cycles):
            if u == v:
                continue
            if i == j and b == c:
                S[u][v] = (1 + eb) // 2
                S[v][u] = (eb - 1) // 2
            elif j == i + 1:
                if a < c < b < d:
                    S[v][u] = 1
                elif c < a < d < b:
                    S[v][u] = -1
    labels = tuple(f"s{i}[{a}:{b}]" for i, (a, _), (b, _) in cycles)
    return SeifertMatrix(tuple(tuple(r) for r in S), labels)


def seifert_matrix(w: BraidWord) -> SeifertMatrix:
    """The quasipositive matrix when it applies, otherwise the generic one."""
    if w.is_positive() and split_delta_power(w, 1) is not None:
        return qp_seifert_matrix(w)
    return generic_seifert_matrix(w)


# Indefiniteness screens


@dataclass(frozen=True)
class ScreenHit:
    rule: str
    letters: tuple[int, ...]
    detail: str


def indefiniteness_screen(w: BraidWord, k: int | None = None) -> list[ScreenHit]:
    """Sufficient conditions for the symmetrized form of delta_n^k P to be not definite.

    ``w`` is the full word; ``k`` (default: the largest literal delta_n
    power prefix) splits it as delta_n^k P.  Every rule needs k >= 2.
      span:      a letter of span l with 4 <= l <= n-4
      linked:    two linked letters
      commuting: two commuting letters, both spans in [2, n-2]
      staircase: a_st ... a_rs (in this order, r < s < t), both spans >= 2
    """
    n = w.strands
    if k is None:
        k = 0
        while split_delta_power(w, k + 1) is not None:
            k += 1
    p = split_delta_power(w, k)
    if p is None:
        raise ValueError(f"word does not begin with delta_{n}^{k}")
    if k < 2 or not p.is_positive():
        return []
    L = p.letters
    hits: list[ScreenHit] = []
    for i, b in enumerate(L):
        if 4 <= b.span <= n - 4:
            hits.append(ScreenHit("span", (i,), f"{b} has span {b.span}"))
    for i in range(len(L)):
        for j in range(i + 1, len(L)):
            x, y = L[i], L[j]
            if linked(x, y):
                hits.append(ScreenHit("linked", (i, j), f"{x} and {y} are linked"))
            if (
                {x.r, x.s}.isdisjoint({y.r, y.s})
                and not linked(x, y)
                and 2 <= x.span <= n - 2
                and 2 <= y.span <= n - 2
            ):
                hits.append(ScreenHit("commuting", (i, j), f"{x} and {y} commute"))
            if x.r == y.s and x.span >= 2 and y.span >= 2:
                hits.append(ScreenHit("staircase", (i, j), f"descending staircase {x} ... {y}"))
    return hits


def betti_upper_bound_on_k(w: BraidWord) -> int:
    """Upper bound b_1(F) + 1 for the delta-exponent of a connected quasipositive surface."""
    data = surface_data(w)
    if not data.connected:
        raise DisconnectedSurfaceError("surface is disconnected")
    return data.betti + 1


__all__ = [
    "SeifertMatrix",
    "SurfaceData",
    "ScreenHit",
    "DisconnectedSurfaceError",
    "surface_data",
    "qp_seifert_matrix",
    "generic_seifert_matrix",
    "seifert_matrix",
    "symmetrize",
    "indefiniteness_screen",
    "betti_upper_bound_on_k",
]
