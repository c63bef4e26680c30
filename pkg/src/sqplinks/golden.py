"""Reference tables transcribed verbatim from the source tables.

Polynomials are kept as the printed strings (factored where the source
factors them) and parsed on demand, so a transcription can be compared
against the source character for character.
"""

from __future__ import annotations

from .poly import IntPolynomial

# f_n(z), n = 0..7: Conway polynomials of T(2, n)
F_TABLE = (
    "0",
    "1",
    "z",
    "z^2 + 1",
    "z(z^2 + 2)",
    "z^4 + 3z^2 + 1",
    "z(z^2 + 1)(z^2 + 3)",
    "z^6 + 5z^4 + 6z^2 + 1",
)

# (p, q, r): Conway polynomial of the closure of s1^p a13^q s2^r
NABLA_TABLE = {
    (1, 1, 1): "2z",
    (1, 1, 2): "2z^2 + 1",
    (1, 1, 3): "z(2z^2 + 3)",
    (1, 1, 4): "2z^4 + 5z^2 + 1",
    (1, 1, 5): "z(2z^4 + 7z^2 + 4)",
    (1, 2, 2): "2z(z^2 + 1)",
    (1, 2, 3): "2z^4 + 4z^2 + 1",
    (1, 2, 4): "z(2z^4 + 6z^2 + 3)",
    (1, 2, 5): "(z^2 + 1)(2z^4 + 6z^2 + 1)",
    (1, 3, 3): "2z(z^2 + 1)(z^2 + 2)",
    (1, 3, 4): "2z^6 + 8z^4 + 8z^2 + 1",
    (1, 3, 5): "z(2z^6 + 10z^4 + 14z^2 + 5)",
    (1, 4, 4): "2z(z^2 + 2)(z^4 + 3z^2 + 1)",
    (1, 4, 5): "2z^8 + 12z^6 + 22z^4 + 12z^2 + 1",
    (1, 5, 5): "2z(z^2 + 1)(z^2 + 3)(z^4 + 3z^2 + 1)",
    (2, 2, 2): "z^2(2z^2 + 3)",
    (2, 2, 3): "z(2z^4 + 5z^2 + 2)",
    (2, 2, 4): "z^2(2z^4 + 7z^2 + 5)",
    (2, 2, 5): "z(2z^6 + 9z^4 + 10z^2 + 2)",
    (2, 3, 3): "(z^2 + 1)(2z^4 + 5z^2 + 1)",
    (2, 3, 4): "z(2z^6 + 9z^4 + 11z^2 + 3)",
    (2, 3, 5): "2z^8 + 11z^6 + 18z^4 + 9z^2 + 1",
    (2, 4, 4): "z^2(z^2 + 2)(2z^4 + 7z^2 + 4)",
    (2, 4, 5): "z(2z^8 + 13z^6 + 27z^4 + 19z^2 + 3)",
    (2, 5, 5): "(z^4 + 3z^2 + 1)(2z^6 + 9z^4 + 9z^2 + 1)",
    (3, 3, 3): "z(z^2 + 1)^2(2z^2 + 5)",
    (3, 3, 4): "(z^2 + 1)(2z^6 + 9z^4 + 10z^2 + 1)",
    (3, 3, 5): "z(z^2 + 1)(z^2 + 2)(2z^4 + 7z^2 + 3)",
    (3, 4, 4): "z(z^2 + 2)(2z^6 + 9z^4 + 10z^2 + 2)",
    (3, 4, 5): "2z^10 + 15z^8 + 39z^6 + 41z^4 + 15z^2 + 1",
    (3, 5, 5): "z(z^4 + 3z^2 + 1)(2z^6 + 11z^4 + 17z^2 + 7)",
    (4, 4, 4): "z^2(z^2 + 2)^2(2z^4 + 7z^2 + 3)",
    (4, 4, 5): "z(z^2 + 2)(2z^8 + 13z^6 + 26z^4 + 16z^2 + 2)",
    (4, 5, 5): "(z^2 + 1)(z^4 + 3z^2 + 1)(2z^6 + 11z^4 + 15z^2 + 1)",
    (5, 5, 5): "z(z^4 + 3z^2 + 1)^2(2z^4 + 9z^2 + 8)",
}

# (p, q, r): (Alexander polynomial, least n whose cover is obstructed or None)
ALEXANDER_TABLE = {
    (1, 1, 1): ("2(t - 1)", None),
    (1, 1, 2): ("2t^2 - 3t + 2", 9),
    (1, 1, 3): ("(t - 1)(2t^2 - t + 2)", 5),
    (1, 1, 4): ("2t^4 - 3t^3 + 3t^2 - 3t + 2", 4),
    (1, 1, 5): ("(t - 1)(2t^4 - t^3 + 2t^2 - t + 2)", 4),
    (1, 2, 2): ("2(t - 1)(t^2 - t + 1)", 6),
    (1, 2, 3): ("2t^4 - 4t^3 + 5t^2 - 4t + 2", 5),
    (1, 2, 4): ("(t - 1)(2t^4 - 2t^3 + 3t^2 - 3t + 2)", 4),
    (1, 2, 5): ("(t^2 - t + 1)(2t^4 - 2t^3 + t^2 - 3t + 2)", 4),
    (1, 3, 3): ("2(t - 1)(t^2 - t + 1)(t^2 + 1)", 4),
    (1, 3, 4): ("2t^6 - 4t^5 + 6t^4 - 7t^3 + 6t^2 - 4t + 2", 4),
    (1, 3, 5): ("(t - 1)(2t^6 - 2t^5 + 4t^4 - 3t^3 + 4t^2 - 2t + 2)", 4),
    (1, 4, 4): ("2(t - 1)(t^2 + 1)(t^4 - t^3 + 5t^2 - t + 1)", 4),
    (1, 4, 5): ("2t^8 - 4t^7 + 6t^6 - 8t^5 + 9t^4 - 8t^3 + 6t^2 - 4t + 2", 4),
    (1, 5, 5): ("2(t - 1)(t^2 - t + 1)(t^2 + t + 1)(t^4 - t^3 + t^2 - t + 1)", 3),
    (2, 2, 2): ("(t - 1)^2(2t^2 - t + 2)", 5),
    (2, 2, 3): ("(t - 1)(t^2 + 1)(2t^2 - 3t + 2)", 4),
    (2, 2, 4): ("(t - 1)^2(2t^4 - t^3 + 3t^2 - t + 2)", 4),
    (2, 2, 5): ("(t - 1)(2t^6 - 3t^5 + 4t^4 - 4t^3 + 4t^2 - 3t + 2)", 4),
    (2, 3, 3): ("(t^2 - t + 1)(2t^4 - 3t^3 + 3t^2 - 3t + 2)", 4),
    (2, 3, 4): ("(t - 1)(2t^2 - t + 2)(t^4 - t^3 + 5t^2 - t + 1)", 4),
    (2, 3, 5): ("2t^8 - 5t^7 + 8t^6 - 19t^5 + 29t^4 - 19t^3 + 8t^2 - 5t + 2", 3),
    (2, 4, 4): ("(t - 1)^2(t^2 + 1)(2t^4 - t^3 + 2t^2 - t + 2)", 4),
    (2, 4, 5): ("(t - 1)(t^2 - t + 1)(t^2 + t + 1)(2t^4 - 3t^3 + 3t^2 - 3t + 2)", 3),
    (2, 5, 5): ("(t^4 - t^3 + 5t^2 - t + 1)(2t^6 - 3t^5 + 3t^4 - 3t^3 + 3t^2 - 3t + 2)", 3),
    (3, 3, 3): ("(t - 1)(t^2 - t + 1)^2(2t^2 + t + 2)", 4),
    (3, 3, 4): ("(t^2 - t + 1)(2t^6 - 3t^5 + 4t^4 - 4t^3 + 4t^2 - 3t + 2)", 4),
    (3, 3, 5): ("(t - 1)(t^2 - t + 1)(t^2 + 1)(t^2 + t + 1)(2t^2 - 3t + 2)", 3),
    (3, 4, 4): ("(t - 1)(t^2 + 1)(2t^6 - 3t^5 + 4t^4 - 4t^3 + 4t^2 - 3t + 2)", 4),
    (3, 4, 5): ("2t^10 - 5t^9 + 9t^8 - 13t^7 + 16t^6 - 17t^5 + 16t^4 - 13t^3 + 9t^2 - 5t + 2", 3),
    (3, 5, 5): ("(t - 1)(t^4 - t^3 + 5t^2 - t + 1)(2t^6 - t^5 + 3t^4 - t^3 + 3t^2 - t + 2)", 3),
    (4, 4, 4): ("(t - 1)^2(t^2 + 1)^2(t^2 + t + 1)(2t^2 - 3t + 2)", 3),
    (4, 4, 5): ("(t - 1)(t^2 + 1)(2t^8 - 3t^7 + 4t^6 - 5t^5 + 6t^4 - 5t^3 + 4t^2 - 3t + 2)", 3),
    (4, 5, 5): ("(t^2 - t + 1)(t^4 - t^3 + 5t^2 - t + 1)(2t^6 - t^5 + t^4 - 3t^3 + t^2 - t + 2)", 3),
    (5, 5, 5): ("(t - 1)(t^4 - t^3 + 5t^2 - t + 1)^2(2t^4 + t^3 + 2t^2 + t + 2)", 3),
}

# Definite symmetrized forms of small quasipositive braids.  Each entry is
# (label, strands, word, expected root lattice).
FORMS_TABLE = (
    *((f"A{m}", 2, f"D^{m + 1}", f"A{m}") for m in range(1, 9)),
    *((f"A{m}", 3, f"D s1^{m}", f"A{m}") for m in range(1, 9)),
    ("D4", 3, "D^3", "D4"),
    *((f"D{m}", 3, f"D^3 s1^{m - 4}", f"D{m}") for m in range(5, 9)),
    ("E6", 3, "D^4", "E6"),
    ("E6", 4, "D^3", "E6"),
    ("E7", 3, "D^4 s1", "E7"),
    ("E8", 3, "D^5", "E8"),
    ("E8", 5, "D^3", "E8"),
)

# Torus-type words D^k in B_n: definite exactly for these unordered {k, n}
BAADER_DEFINITE = ({2}, {3, 4}, {3, 5}, {3})


def baader_definite(k: int, n: int) -> bool:
    """Definiteness of delta_n^k from the classification of definite torus links."""
    return k == 2 or n == 2 or {k, n} in BAADER_DEFINITE


def nabla(p: int, q: int, r: int) -> IntPolynomial:
    return IntPolynomial.parse(NABLA_TABLE[(p, q, r)], "z")


def alexander(p: int, q: int, r: int) -> IntPolynomial:
    return IntPolynomial.parse(ALEXANDER_TABLE[(p, q, r)][0], "t").normalized()


def threshold(p: int, q: int, r: int) -> int | None:
    return ALEXANDER_TABLE[(p, q, r)][1]
