"""Strongly quasipositive 3-braids: minimal representatives, Murasugi forms,
signatures and the definiteness classification.

In B_3 the band generators are A = s1 = a(1,2), B = s2 = a(2,3) and
C = a(1,3).  Conjugation by delta_3 = AB permutes them cyclically,
tau: A -> B -> C -> A, and the only positive relations are AB = BC = CA = delta_3.
Positive words are handled internally as strings over "ABC".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .braid_core import Band, BraidWord, delta, equal, sigma
from .invariants import alexander, conway, least_obstructed_n, signature
from .lattice import RootLatticeType, classify_root_lattice
from .poly import IntPolynomial
from .seifert import qp_seifert_matrix, symmetrize

_BAND = {"A": Band(1, 2), "B": Band(2, 3), "C": Band(1, 3)}
_LETTER = {v: k for k, v in _BAND.items()}
_TAU = {"A": "B", "B": "C", "C": "A"}
_DELTA_PAIRS = ("AB", "BC", "CA")


def _tau(word: str, k: int) -> str:
    k %= 3
    for _ in range(k):
        word = "".join(_TAU[c] for c in word)
    return word


def _to_letters(w: BraidWord) -> str:
    if w.strands != 3:
        raise ValueError("expected a 3-braid")
    if not w.is_positive():
        raise ValueError("expected a BKL-positive word")
    return "".join(_LETTER[b] for b in w.letters)


def _to_word(k: int, p: str) -> BraidWord:
    return BraidWord(3, delta(3, k).letters + tuple(_BAND[c] for c in p))


def b_pqr(p: int, q: int, r: int) -> BraidWord:
    """s1^p a13^q s2^r."""
    if min(p, q, r) < 1:
        raise ValueError("p, q, r must be positive")
    return _to_word(0, "A" * p + "C" * q + "B" * r)


def _syllables(p: str) -> list[tuple[str, int]]:
    return [(c, len(list(g))) for c, g in itertools.groupby(p)]


@dataclass(frozen=True)
class MinimalRep3:
    """delta_3^k w_1 ... w_s P' with w_i = A^p C^q B^r and P' in {1, A^p, A^p C^q}."""

    k: int
    syllables: tuple[tuple[int, int, int], ...] = ()
    tail: tuple[int, ...] = ()

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if any(min(t) < 1 for t in self.syllables) or any(x < 1 for x in self.tail):
            raise ValueError("exponents must be positive")
        if len(self.tail) > 2:
            raise ValueError("tail is 1, A^p or A^p C^q")

    @property
    def s(self) -> int:
        return len(self.syllables)

    def letters(self) -> str:
        out = "".join("A" * p + "C" * q + "B" * r for p, q, r in self.syllables)
        if self.tail:
            out += "A" * self.tail[0]
        if len(self.tail) == 2:
            out += "C" * self.tail[1]
        return out

    def word(self) -> BraidWord:
        return _to_word(self.k, self.letters())

    def letter_count(self) -> int:
        return 2 * self.k + len(self.letters())

    def tail_discipline(self) -> bool:
        """Tail shape forced by k mod 3 when s > 0."""
        if self.s == 0:
            return len(self.tail) < 2 or self.k % 3 == 1
        return len(self.tail) == {0: 0, 1: 2, 2: 1}[self.k % 3]

    def __str__(self):
        parts = [f"D^{self.k}"] if self.k else []
        for p, q, r in self.syllables:
            parts.append(f"(s1^{p} a13^{q} s2^{r})")
        if self.tail:
            parts.append(f"s1^{self.tail[0]}")
        if len(self.tail) == 2:
            parts.append(f"a13^{self.tail[1]}")
        return " ".join(parts) or "1"

    def to_json(self):
        return {"k": self.k, "syllables": [list(t) for t in self.syllables], "tail": list(self.tail)}


def _extract(k: int, p: str) -> tuple[int, str]:
    """Pull every delta_3 = xy (xy in AB, BC, CA) to the front: x y delta = delta tau^{-1}(...)."""
    while True:
        for i in range(len(p) - 1):
            if p[i : i + 2] in _DELTA_PAIRS:
                p = _tau(p[:i], -1) + p[i + 2 :]
                k += 1
                break
        else:
            return k, p


def _rotations(k: int, p: str):
    """Cyclic conjugates delta^k P1 x ~ delta^k tau^{-k}(x) P1, until the orbit closes."""
    seen = set()
    cur = p
    while cur not in seen:
        seen.add(cur)
        yield cur
        if not cur:
            return
        cur = _tau(cur[-1], -k) + cur[:-1]


def _canonical(k: int, p: str) -> tuple[int, str]:
    """Among rotations without delta pairs pick fewest syllables, then the least string."""
    candidates = []
    for rot in _rotations(k, p):
        for j in range(3):
            q = _tau(rot, j)
            if not q or q[0] == "A":
                candidates.append((len(_syllables(q)), q))
    return k, min(candidates)[1]


def _minimize(k: int, p: str) -> tuple[int, str]:
    k, p = _extract(k, p)
    while True:
        for rot in _rotations(k, p):
            if any(pair in rot for pair in _DELTA_PAIRS):
                k, p = _extract(k, rot)
                break
        else:
            return _canonical(k, p)


def _parse_letters(k: int, p: str) -> MinimalRep3:
    syl = _syllables(p)
    blocks = []
    i = 0
    while i + 2 < len(syl) and [c for c, _ in syl[i : i + 3]] == ["A", "C", "B"]:
        blocks.append((syl[i][1], syl[i + 1][1], syl[i + 2][1]))
        i += 3
    rest = syl[i:]
    if not rest:
        tail = ()
    elif [c for c, _ in rest] == ["A"]:
        tail = (rest[0][1],)
    elif [c for c, _ in rest] == ["A", "C"]:
        tail = (rest[0][1], rest[1][1])
    else:
        raise AssertionError(f"unexpected reduced word {p}")
    return MinimalRep3(k, tuple(blocks), tail)


def minimal_representative(w: BraidWord | MinimalRep3) -> MinimalRep3:
    """Maximal delta_3 exponent, then minimal syllable length, over conjugates and rewrites."""
    if isinstance(w, MinimalRep3):
        w = w.word()
    k, p = 0, _to_letters(w)
    return _parse_letters(*_minimize(k, p))


def as_positive_braid(rep: MinimalRep3) -> BraidWord | None:
    """A conjugate of the representative written in s1, s2 only, if delta-conjugation gives one."""
    p = rep.letters()
    for j in range(3):
        q = _tau(p, j)
        if "C" not in q:
            return _to_word(rep.k, q)
    return None


# Murasugi normal form


@dataclass(frozen=True)
class MurasugiForm:
    """delta_3^{3d} s1^-1 s2^{a_1} ... s1^-1 s2^{a_n}, with b = g^-1 M g for the conjugator g."""

    d: int
    a: tuple[int, ...]
    conjugator: BraidWord = field(compare=False)

    def word(self) -> BraidWord:
        letters = list(delta(3, 3 * self.d).letters)
        for x in self.a:
            letters.append(sigma(1, -1))
            letters.extend([sigma(2)] * x)
        return BraidWord(3, tuple(letters))

    def to_json(self):
        return {"d": self.d, "a": list(self.a), "conjugator": str(self.conjugator)}


def murasugi_form(rep: MinimalRep3, verify: bool = True) -> MurasugiForm:
    r, t = divmod(rep.k, 3)
    s = rep.s
    a = []
    for p, q, rr in rep.syllables:
        a += [p - 1, q - 1, rr - 1]
    C13 = Band(1, 3)
    if t == 0 and not rep.tail:
        d = r + s
        g = BraidWord(3, (sigma(2),))
    elif t == 1 and len(rep.tail) == 2:
        d = r + s + 1
        a += [rep.tail[0] - 1, rep.tail[1] - 1]
        g = BraidWord(3, delta(3, 2).letters + (C13,))
    elif t == 2 and len(rep.tail) == 1:
        d = r + s + 1
        a += [rep.tail[0] - 1]
        g = BraidWord(3, delta(3).letters + (sigma(1),))
    else:
        raise ValueError(f"no Murasugi form for the shape {rep}")
    m = MurasugiForm(d, tuple(a), g)
    if verify and not equal(rep.word(), g.inverse() * m.word() * g):
        raise AssertionError(f"Murasugi form of {rep} failed the conjugacy check")
    return m


class EpsilonInconsistency(AssertionError):
    pass


@lru_cache(maxsize=None)
def epsilon(d: int) -> int:
    """The correction term for all-zero exponents, fixed by direct computation.

    Witnesses delta^{3d} s1^-m (m = 1, 2, 3) must agree, lie in {-1, 0, 1}
    and have the parity of d; anything else aborts.
    """
    if d < 1:
        raise ValueError("epsilon is resolved for d >= 1")
    values = set()
    for m in (1, 2, 3):
        w = MurasugiForm(d, (0,) * m, BraidWord(3)).word()
        values.add(signature(w) - (m - 4 * d - 1))
    if len(values) != 1:
        raise EpsilonInconsistency(f"witnesses disagree on epsilon({d}): {sorted(values)}")
    (e,) = values
    if e not in (-1, 0, 1) or (e - d) % 2:
        raise EpsilonInconsistency(f"epsilon({d}) = {e} violates the parity/range constraint")
    return e


def signature_closed_form(m: MurasugiForm) -> int:
    n = len(m.a)
    if n == 0:
        raise ValueError("the closed form needs at least one s1^-1 block")
    if any(m.a):
        return n - 4 * m.d - sum(m.a)
    return n - 4 * m.d - 1 + epsilon(m.d)


# Definiteness classification


@dataclass(frozen=True)
class Verdict:
    """kind is one of Montesinos, A, D, E6, E7, E8, Composite, Indefinite, TrivialOrSplit."""

    kind: str
    params: tuple[int, ...]
    rep: MinimalRep3
    lattice: RootLatticeType | None = None
    closure: str = ""

    @property
    def definite(self) -> bool:
        return self.kind not in ("Indefinite", "TrivialOrSplit")

    def __str__(self):
        if self.kind in ("A", "D"):
            return f"{self.kind}{self.params[0]}"
        if self.kind in ("Montesinos", "Composite"):
            return f"{self.kind}{self.params}"
        return self.kind

    def to_json(self):
        return {
            "verdict": str(self),
            "kind": self.kind,
            "params": list(self.params),
            "representative": self.rep.to_json(),
            "lattice": self.lattice.to_json() if self.lattice else None,
            "closure": self.closure,
        }


def _expected(rep: MinimalRep3) -> tuple[str, tuple[int, ...], str]:
    k, tail = rep.k, rep.tail
    if rep.s:
        if k == 0 and rep.s == 1:
            p, q, r = rep.syllables[0]
            return "Montesinos", (p, q, r), f"M(1; 1/{p}, 1/{q}, 1/{r})"
        return "Indefinite", (), ""
    if not tail:
        table = {2: ("A", (2,), "T(2,3)"), 3: ("D", (4,), "T(3,3)"), 4: ("E6", (), "T(3,4)"), 5: ("E8", (), "T(3,5)")}
        if k <= 1:
            return "TrivialOrSplit", (), "unlink" if k == 0 else "unknot"
        return table.get(k, ("Indefinite", (), f"T(3,{k})"))
    if len(tail) == 1:
        p = tail[0]
        if k == 0:
            return "TrivialOrSplit", (), f"T(2,{p}) split with an unknot"
        if k == 1:
            return "A", (p,), f"T(2,{p + 1})"
        if k == 2:
            return "A", (p + 2,), f"T(2,{p + 3})"
        if k == 3:
            return "D", (p + 4,), f"P(-2,2,{p + 2})"
        if k == 4 and p == 1:
            return "E7", (), "P(-2,3,4)"
        return "Indefinite", (), ""
    p, q = tail
    if k == 1:
        return "Composite", (p, q), f"T(2,{p + 1}) # T(2,{q + 1})"
    return "Indefinite", (), ""


def _lattice_for(kind: str, params: tuple[int, ...]) -> RootLatticeType | None:
    if kind in ("A", "D"):
        return RootLatticeType.of(f"{kind}{params[0]}")
    if kind in ("E6", "E7", "E8"):
        return RootLatticeType.of(kind)
    if kind == "Composite":
        return RootLatticeType.of(f"A{params[0]}", f"A{params[1]}")
    return None


def classify_definite_3braid(w: BraidWord | MinimalRep3, check: bool = True) -> Verdict:
    """Definiteness verdict from the minimal representative's shape.

    With ``check``, forms that the verdict predicts are compared with the
    root lattice of the representative's quasipositive surface.
    """
    rep = minimal_representative(w)
    kind, params, closure = _expected(rep)
    lattice = _lattice_for(kind, params)
    if lattice is not None and check:
        found = classify_root_lattice(symmetrize(qp_seifert_matrix(rep.word())))
        if found != lattice:
            raise AssertionError(f"{rep}: predicted {lattice}, surface form is {found}")
    return Verdict(kind, params, rep, lattice, closure)


# The L-space table for b(p, q, r)


@dataclass(frozen=True)
class LSpaceRow:
    pqr: tuple[int, int, int]
    alexander: IntPolynomial
    conway: IntPolynomial
    least_obstructed: int | None

    def to_json(self):
        return {
            "pqr": list(self.pqr),
            "alexander": list(self.alexander.coeffs),
            "conway": list(self.conway.coeffs),
            "least_obstructed_n": self.least_obstructed,
        }


def lspace_row(p: int, q: int, r: int, max_n: int = 50) -> LSpaceRow:
    w = b_pqr(p, q, r)
    delta_poly = alexander(w)
    return LSpaceRow((p, q, r), delta_poly, conway(w), least_obstructed_n(delta_poly, max_n))


def lspace_table(max_pqr: int = 5, max_n: int = 50) -> list[LSpaceRow]:
    """Rows for 1 <= p <= q <= r <= max_pqr, in lexicographic order."""
    if max_pqr < 1 or max_n < 2:
        raise ValueError("bounds must be at least 1 and 2")
    return [
        lspace_row(p, q, r, max_n)
        for p, q, r in itertools.combinations_with_replacement(range(1, max_pqr + 1), 3)
    ]
