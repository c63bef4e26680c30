"""Braid words in the Birman-Ko-Lee band generators.

A word lives in B_n for an explicitly supplied strand count n.  Letters are
bands a_{rs} (1 <= r < s <= n) carrying a sign; sigma_i is a_{i,i+1}.

Group equality is decided by the left-greedy normal form of the dual Garside
structure.  Simple elements of that structure are the non-crossing partitions
of {1..n}; we encode a simple element by the permutation whose cycles are its
blocks, each traversed in increasing order.  Under the homomorphism to S_n
(a_{rs} -> transposition (r s), products composed right to left) the simple
element maps to exactly that permutation, and delta_n maps to the cycle
i -> i+1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Band:
    r: int
    s: int
    sign: int = 1

    def __post_init__(self):
        if not 1 <= self.r < self.s:
            raise ValueError(f"band indices must satisfy 1 <= r < s, got ({self.r},{self.s})")
        if self.sign not in (1, -1):
            raise ValueError("band sign must be +1 or -1")

    @property
    def span(self) -> int:
        return self.s - self.r

    @property
    def positive(self) -> Band:
        return self if self.sign == 1 else Band(self.r, self.s, 1)

    def inverse(self) -> Band:
        return Band(self.r, self.s, -self.sign)

    def __str__(self):
        base = f"s{self.r}" if self.s == self.r + 1 else f"a({self.r},{self.s})"
        return base if self.sign == 1 else "~" + base


def sigma(i: int, sign: int = 1) -> Band:
    return Band(i, i + 1, sign)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Band, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid word needs at least 2 strands")
        object.__setattr__(self, "letters", tuple(self.letters))
        for b in self.letters:
            if b.s > self.strands:
                raise ValueError(f"letter {b} does not fit in B_{self.strands}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Band]:
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        _same_strands(self, other)
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(b.inverse() for b in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(b.sign == 1 for b in self.letters)

    def __str__(self):
        return " ".join(str(b) for b in self.letters) if self.letters else "1"

    def to_json(self):
        return {"strands": self.strands, "word": str(self)}


def _same_strands(a: BraidWord, b: BraidWord):
    if a.strands != b.strands:
        raise ValueError(f"strand counts differ: {a.strands} vs {b.strands}")


def delta(n: int, k: int = 1) -> BraidWord:
    """delta_n^k; negative k gives the inverse power."""
    return BraidWord(n, tuple(sigma(i) for i in range(1, n))) ** k


def word(n: int, *letters: Band | tuple[int, int]) -> BraidWord:
    """Convenience constructor: word(3, (1, 2), (1, 3))."""
    out = []
    for x in letters:
        out.append(x if isinstance(x, Band) else Band(*x))
    return BraidWord(n, tuple(out))


# Parsing


class BraidSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(
    r"(?P<inv>~*)(?:s(?P<sigma>\d+)|a\(\s*(?P<r>\d+)\s*,\s*(?P<s>\d+)\s*\)|(?P<delta>D))"
    r"(?:\^(?P<exp>[+-]?\d+))?"
)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse a word such as ``"D^2 s1 ~a(1,3)^2"`` into a BraidWord on n strands."""
    if strands < 2:
        raise ValueError("strands must be at least 2")
    letters: list[Band] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise BraidSyntaxError(f"cannot parse {text[pos:pos + 12]!r}", pos)
        end = m.end()
        if end < len(text) and not text[end].isspace():
            raise BraidSyntaxError(f"unexpected {text[end]!r}", end)
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        if exp == 0:
            raise BraidSyntaxError("zero exponent", pos)
        if len(m.group("inv")) % 2:
            exp = -exp
        if m.group("delta"):
            base = list(delta(strands).letters)
        else:
            if m.group("sigma") is not None:
                r = int(m.group("sigma"))
                s = r + 1
            else:
                r, s = int(m.group("r")), int(m.group("s"))
            if not 1 <= r < s:
                raise BraidSyntaxError(f"bad band indices ({r},{s})", pos)
            if s > strands:
                raise BraidSyntaxError(f"index out of range: {s} > {strands}", pos)
            base = [Band(r, s)]
        if exp < 0:
            base = [b.inverse() for b in reversed(base)]
        letters.extend(base * abs(exp))
        pos = end
    return BraidWord(strands, tuple(letters))


# Elementary operations


def expand_to_sigma(w: BraidWord) -> BraidWord:
    """Rewrite every band as a word in the Artin generators."""
    out: list[Band] = []
    for b in w.letters:
        prefix = [sigma(i) for i in range(b.r, b.s - 1)]
        out.extend(prefix)
        out.append(sigma(b.s - 1, b.sign))
        out.extend(x.inverse() for x in reversed(prefix))
    return BraidWord(w.strands, tuple(out))


def shift_band(b: Band, n: int, k: int = 1) -> Band:
    """Conjugate a band by delta_n^k: a_{rs} -> a_{r+1,s+1}, wrapping at n."""
    r, s = b.r, b.s
    for _ in range(k % n):
        r, s = (r + 1, s + 1) if s < n else (1, r + 1)
    return Band(r, s, b.sign)


def conjugate_by_delta(w: BraidWord, k: int = 1) -> BraidWord:
    """delta^k w delta^-k, computed letterwise."""
    return BraidWord(w.strands, tuple(shift_band(b, w.strands, k) for b in w.letters))


def linked(x: Band, y: Band) -> bool:
    r, s, t, u = x.r, x.s, y.r, y.s
    return r < t < s < u or t < r < u < s


def commute(x: Band, y: Band) -> bool:
    """Whether the (positive) bands satisfy the commutation relation."""
    r, s, t, u = x.r, x.s, y.r, y.s
    return (t - r) * (t - s) * (u - r) * (u - s) > 0


@dataclass(frozen=True)
class LetterInfo:
    covers: tuple[bool, ...]  # covers[i-1] is whether sigma_i is covered
    linked_pairs: tuple[tuple[int, int], ...]
    spans: tuple[int, ...]


def letter_predicates(w: BraidWord) -> LetterInfo:
    n = w.strands
    covers = [False] * (n - 1)
    for b in w.letters:
        for i in range(b.r, b.s):
            covers[i - 1] = True
    pairs = tuple(
        (i, j)
        for i in range(len(w.letters))
        for j in range(i + 1, len(w.letters))
        if linked(w.letters[i], w.letters[j])
    )
    return LetterInfo(tuple(covers), pairs, tuple(b.span for b in w.letters))


def covers(w: BraidWord, i: int) -> bool:
    return any(b.r <= i < b.s for b in w.letters)


def contains(w: BraidWord, pattern: BraidWord) -> bool:
    """Whether pattern is obtained from w by deleting letters."""
    _same_strands(w, pattern)
    it = iter(w.letters)
    return all(any(x == y for y in it) for x in pattern.letters)


def r_of_P(p: BraidWord) -> int:
    """Largest s with delta_n^s contained in the literal word p.

    Greedy leftmost matching of sigma_1 ... sigma_{n-1} repeated is optimal
    for subsequence containment of a periodic pattern.
    """
    target = delta(p.strands).letters
    count, j = 0, 0
    for b in p.letters:
        if b == target[j]:
            j += 1
            if j == len(target):
                count, j = count + 1, 0
    return count


# Relation rewriting on positive words


def _triangle(x: Band, y: Band) -> tuple[int, int, int] | None:
    """If xy is one of a_rs a_st, a_rt a_rs, a_st a_rt return (r, s, t)."""
    if x.s == y.r:
        return x.r, x.s, y.s
    if x.r == y.r and y.s < x.s:
        return x.r, y.s, x.s
    if x.s == y.s and y.r < x.r:
        return y.r, x.r, x.s
    return None


def relation_rewrites(w: BraidWord) -> Iterator[tuple[int, BraidWord]]:
    """All words obtained from w by one commutation or triangle relation.

    Only adjacent pairs of positive letters are rewritten.  Yields the
    position of the rewritten pair together with the new word.
    """
    L = w.letters
    for i in range(len(L) - 1):
        x, y = L[i], L[i + 1]
        if x.sign != 1 or y.sign != 1:
            continue
        replacements = []
        if commute(x, y):
            replacements.append((y, x))
        tri = _triangle(x, y)
        if tri is not None:
            r, s, t = tri
            forms = [(Band(r, s), Band(s, t)), (Band(r, t), Band(r, s)), (Band(s, t), Band(r, t))]
            replacements.extend(f for f in forms if f != (x, y))
        for a, b in replacements:
            yield i, BraidWord(w.strands, L[:i] + (a, b) + L[i + 2:])


def r_of_P_rewrites(p: BraidWord, depth: int = 3) -> int:
    """Lower bound for r(P) over rewritings: best literal r within `depth` moves."""
    best = r_of_P(p)
    frontier, seen = {p.letters}, {p.letters}
    for _ in range(depth):
        nxt = set()
        for letters in frontier:
            for _, v in relation_rewrites(BraidWord(p.strands, letters)):
                if v.letters not in seen:
                    seen.add(v.letters)
                    nxt.add(v.letters)
                    best = max(best, r_of_P(v))
        frontier = nxt
    return best


# Dual Garside normal form

Perm = tuple[int, ...]  # 0-based images


def _compose(p: Perm, q: Perm) -> Perm:
    """(p q)(x) = p(q(x))."""
    return tuple(p[q[i]] for i in range(len(q)))


def _invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


@lru_cache(maxsize=None)
def _cycle(n: int) -> Perm:
    return tuple((i + 1) % n for i in range(n))


@lru_cache(maxsize=None)
def _identity(n: int) -> Perm:
    return tuple(range(n))


def _transposition(n: int, r: int, s: int) -> Perm:
    p = list(range(n))
    p[r - 1], p[s - 1] = s - 1, r - 1
    return tuple(p)


def _blocks(p: Perm) -> list[frozenset[int]]:
    seen, out = set(), []
    for i in range(len(p)):
        if i not in seen:
            block, j = set(), i
            while j not in block:
                block.add(j)
                j = p[j]
            seen |= block
            out.append(frozenset(block))
    return out


def _from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> Perm:
    p = list(range(n))
    for block in blocks:
        b = sorted(block)
        for k, x in enumerate(b):
            p[x] = b[(k + 1) % len(b)]
    return tuple(p)


def _meet(p: Perm, q: Perm) -> Perm:
    """Meet in the non-crossing partition lattice: blockwise intersection."""
    n = len(p)
    label_p = [0] * n
    for k, b in enumerate(_blocks(p)):
        for x in b:
            label_p[x] = k
    label_q = [0] * n
    for k, b in enumerate(_blocks(q)):
        for x in b:
            label_q[x] = k
    groups: dict[tuple[int, int], list[int]] = {}
    for x in range(n):
        groups.setdefault((label_p[x], label_q[x]), []).append(x)
    return _from_blocks(n, groups.values())


@dataclass(frozen=True)
class NormalForm:
    """delta^infimum followed by canonical factors.

    Each factor is a non-crossing partition given as a tuple of blocks
    (1-based strand tuples, singletons omitted).
    """

    strands: int
    infimum: int
    factors: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def to_word(self) -> BraidWord:
        """A word representing the same element."""
        letters = list(delta(self.strands, self.infimum).letters)
        for blocks in self.factors:
            for block in blocks:
                # the increasing cycle t1 -> ... -> tk is a_{t1 t2} ... a_{t(k-1) tk}
                for a, b in zip(block, block[1:]):
                    letters.append(Band(a, b))
        return BraidWord(self.strands, tuple(letters))

    def __str__(self):
        parts = [f"D^{self.infimum}"] if self.infimum else []
        for blocks in self.factors:
            parts.append("[" + " ".join("(" + ",".join(map(str, b)) + ")" for b in blocks) + "]")
        return " ".join(parts) if parts else "1"


def _simples(w: BraidWord) -> tuple[int, list[Perm]]:
    """Write w as delta^k X_1 ... X_m with simple X_i (as permutations)."""
    n = w.strands
    c, ci = _cycle(n), _invert(_cycle(n))
    inf = 0
    factors: list[Perm] = []
    for b in w.letters:
        t = _transposition(n, b.r, b.s)
        if b.sign == 1:
            factors.append(t)
        else:
            # a^-1 = delta^-1 (delta a^-1); push delta^-1 to the front,
            # conjugating the factors it passes: X delta^-1 = delta^-1 tau(X).
            factors = [_compose(_compose(c, x), ci) for x in factors]
            factors.append(_compose(c, t))
            inf -= 1
    return inf, factors


def _left_weight(factors: list[Perm], n: int) -> list[Perm]:
    c = _cycle(n)
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            complement = _compose(_invert(a), c)
            m = _meet(complement, b)
            if m != _identity(n):
                factors[i] = _compose(a, m)
                factors[i + 1] = _compose(_invert(m), b)
                changed = True
    return factors


def normal_form(w: BraidWord) -> NormalForm:
    n = w.strands
    inf, factors = _simples(w)
    factors = _left_weight(factors, n)
    c, e = _cycle(n), _identity(n)
    lead = 0
    while lead < len(factors) and factors[lead] == c:
        lead += 1
    # leading delta factors join the infimum; identities can only trail
    factors = [f for f in factors[lead:] if f != e]
    inf += lead
    canon = tuple(
        tuple(tuple(x + 1 for x in sorted(b)) for b in sorted(_blocks(f), key=min) if len(b) > 1)
        for f in factors
    )
    return NormalForm(n, inf, canon)


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Whether two words represent the same element of B_n."""
    _same_strands(w1, w2)
    return normal_form(w1) == normal_form(w2)


def permutation(w: BraidWord) -> Perm:
    """Image of w in S_n (0-based), a_{rs} mapping to the transposition (r s)."""
    p = _identity(w.strands)
    for b in w.letters:
        p = _compose(p, _transposition(w.strands, b.r, b.s))
    return p


# Index reduction


class _NoReduction:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NoReduction"

    def __bool__(self):
        return False


NoReduction = _NoReduction()


def split_delta_power(w: BraidWord, k: int) -> BraidWord | None:
    """If w literally begins with delta_n^k return the remaining word P."""
    prefix = delta(w.strands, k).letters
    if w.letters[: len(prefix)] != prefix:
        return None
    return BraidWord(w.strands, w.letters[len(prefix):])


def reduce_index(w: BraidWord) -> BraidWord | _NoReduction:
    """Destabilize delta_n^2 P when P misses sigma_1 or sigma_{n-1}.

    If P does not cover sigma_1 then delta_n^2 P equals
    (s2 s1)(s2 ... s_{n-1})^2 P with a single sigma_1, so its closure is the
    closure of (s2 ... s_{n-1})^2 P s2 on strands 2..n; re-indexed this is
    delta_{n-1}^2 P' s1 in B_{n-1}.  The sigma_{n-1} case is reduced to this
    one by conjugating P with delta_n.
    """
    n = w.strands
    p = split_delta_power(w, 2)
    if p is None or not p.is_positive():
        raise ValueError("reduce_index expects a word delta_n^2 P with P BKL-positive")
    if n == 2:
        return NoReduction
    if covers(p, 1):
        if covers(p, n - 1):
            return NoReduction
        p = conjugate_by_delta(p, 1)
    lowered = tuple(Band(b.r - 1, b.s - 1) for b in p.letters)
    return BraidWord(n - 1, delta(n - 1, 2).letters + lowered + (sigma(1),))


def stabilize(w: BraidWord) -> BraidWord:
    """Markov stabilization w -> w sigma_n in B_{n+1}."""
    return BraidWord(w.strands + 1, w.letters + (sigma(w.strands),))


def random_positive_word(rng, n: int, length: int) -> BraidWord:
    bands = all_bands(n)
    return BraidWord(n, tuple(rng.choice(bands) for _ in range(length)))


def all_bands(n: int) -> list[Band]:
    return [Band(r, s) for r in range(1, n) for s in range(r + 1, n + 1)]


def words_over(bands: Sequence[Band], n: int, length: int) -> Iterator[BraidWord]:
    """All words of exactly `length` letters drawn from `bands`."""
    if length == 0:
        yield BraidWord(n)
        return
    for w in words_over(bands, n, length - 1):
        for b in bands:
            yield BraidWord(n, w.letters + (b,))
