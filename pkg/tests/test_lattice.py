import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_root_count, float_inertia
from sqplinks.braid_core import delta, parse_braid
from sqplinks.lattice import (
    MAX_CONGRUENCE_RANK,
    NotARootLattice,
    RootLatticeType,
    SymmetricForm,
    classify_root_lattice,
    congruent,
    definiteness,
    dynkin_edges,
    dynkin_gram,
    enumerate_roots,
    inertia,
    nondegenerate_part,
    root_count,
    signature,
    tree_gram,
)
from sqplinks.seifert import qp_seifert_matrix, symmetrize

ADE = [("A", m) for m in range(1, 11)] + [("D", m) for m in range(4, 11)] + [("E", 6), ("E", 7), ("E", 8)]


def form_of(text, n):
    return symmetrize(qp_seifert_matrix(parse_braid(text, n)))


def random_unimodular(rng, n, steps=12):
    """Product of elementary integer column operations."""
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        for row in u:
            row[j] += c * row[i]
    if rng.random() < 0.5 and n > 1:
        a, b = rng.sample(range(n), 2)
        for row in u:
            row[a], row[b] = row[b], row[a]
    return u


def congruent_copy(f, u):
    basis = list(zip(*u))  # columns of u as new basis vectors
    return f.transform(basis)


@st.composite
def small_forms(draw, max_rank=4, entry=3):
    n = draw(st.integers(1, max_rank))
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = draw(st.integers(-entry, entry))
    return SymmetricForm(g)


# basics


def test_rejects_asymmetric():
    with pytest.raises(ValueError):
        SymmetricForm(((0, 1), (0, 0)))


def test_inertia_examples():
    assert inertia(SymmetricForm(((-2,),))) == (0, 1, 0)
    assert inertia(-dynkin_gram("E", 8).__neg__()) == (0, 8, 0)
    assert inertia(SymmetricForm(((0, 1), (1, 0)))) == (1, 1, 0)
    assert inertia(SymmetricForm(((0, 0), (0, 0)))) == (0, 0, 2)


def test_definiteness_examples():
    assert definiteness(symmetrize(qp_seifert_matrix(delta(3, 3)))) == "negative_definite"
    # not definite: negative semi-definite with a two-dimensional radical
    assert definiteness(symmetrize(qp_seifert_matrix(delta(4, 4)))) == "degenerate"
    assert inertia(symmetrize(qp_seifert_matrix(delta(4, 4)))) == (0, 7, 2)
    assert definiteness(SymmetricForm(((0,),))) == "degenerate"
    assert definiteness(SymmetricForm(((2, 1), (1, 2)))) == "positive_definite"


@given(small_forms(max_rank=6, entry=4))
def test_inertia_matches_eigenvalues(f):
    assert inertia(f) == float_inertia(f.gram)
    p, m, z = inertia(f)
    assert p + m + z == f.rank and signature(f) == p - m


@pytest.mark.parametrize("family, m", [("A", 4), ("D", 6), ("E", 7), ("E", 8)])
def test_inertia_stable_under_unimodular_change(family, m):
    rng = random.Random(m)
    f = dynkin_gram(family, m)
    g = SymmetricForm(((0, 1, 2), (1, -2, 0), (2, 0, 3)))
    for _ in range(20):
        assert inertia(congruent_copy(f, random_unimodular(rng, f.rank))) == inertia(f)
        assert inertia(congruent_copy(g, random_unimodular(rng, 3))) == inertia(g)


# roots


def test_root_examples():
    assert sorted(enumerate_roots(SymmetricForm(((-2,),)))) == [(-1,), (1,)]
    assert len(enumerate_roots(dynkin_gram("A", 2))) == 6
    assert len(enumerate_roots(dynkin_gram("E", 8))) == 240


@pytest.mark.parametrize("family, m", ADE)
def test_root_counts_match_closed_formulas(family, m):
    assert len(enumerate_roots(dynkin_gram(family, m))) == root_count(family, m)


@pytest.mark.parametrize("family, m", [("A", 1), ("A", 3), ("A", 5), ("D", 4), ("D", 5)])
def test_root_counts_match_brute_force(family, m):
    assert len(enumerate_roots(dynkin_gram(family, m))) == brute_root_count(dynkin_gram(family, m))


def test_roots_are_sorted_and_closed_under_negation():
    roots = enumerate_roots(dynkin_gram("D", 5))
    assert roots == sorted(roots)
    assert set(roots) == {tuple(-x for x in v) for v in roots}


def test_enumerate_roots_preconditions():
    with pytest.raises(ValueError):
        enumerate_roots(SymmetricForm(((-3,),)))
    with pytest.raises(ValueError):
        enumerate_roots(SymmetricForm(((0, 1), (1, 0))))


# classification


@pytest.mark.parametrize("family, m", ADE)
def test_dynkin_trees_classify_as_themselves(family, m):
    expected = "A3" if (family, m) == ("D", 3) else f"{family}{m}"
    assert str(classify_root_lattice(tree_gram(dynkin_edges(family, m), m))) == expected


def test_classification_examples():
    assert str(classify_root_lattice(form_of("D^4", 3))) == "E6"
    assert str(classify_root_lattice(form_of("D^4 s1", 3))) == "E7"
    assert classify_root_lattice(form_of("D s1 a(1,3)", 3)) == RootLatticeType.of("A1", "A1")


def test_d3_is_a3():
    assert str(classify_root_lattice(dynkin_gram("D", 3))) == "A3"
    assert congruent(dynkin_gram("D", 3), dynkin_gram("A", 3))


def test_sum_of_components_is_recognized():
    g = [[0] * 9 for _ in range(9)]
    for block, (fam, m) in zip((0, 5), (("A", 5), ("D", 4))):
        sub = dynkin_gram(fam, m).gram
        for i in range(m):
            for j in range(m):
                g[block + i][block + j] = sub[i][j]
    t = classify_root_lattice(SymmetricForm(g))
    assert t.to_json() == ["A5", "D4"] and str(t) == "A5 + D4"


def test_classification_rejects_non_root_lattices():
    with pytest.raises(NotARootLattice):
        classify_root_lattice(SymmetricForm(((-4,),)))
    # only the first basis vector is a root
    with pytest.raises(NotARootLattice):
        classify_root_lattice(SymmetricForm(((-2, 0), (0, -6))))
    with pytest.raises(ValueError):
        classify_root_lattice(SymmetricForm(((0, 1), (1, 0))))


def test_e8_determinant_is_unimodular():
    assert abs(tree_gram(dynkin_edges("E", 8)).determinant) == 1


@pytest.mark.parametrize("family, m", [("A", 6), ("D", 5), ("E", 6)])
def test_classification_invariant_under_basis_change(family, m):
    rng = random.Random(7)
    f = dynkin_gram(family, m)
    for _ in range(5):
        assert classify_root_lattice(congruent_copy(f, random_unimodular(rng, m))) == classify_root_lattice(f)


# congruence


def test_congruence_examples():
    assert not congruent(dynkin_gram("A", 7), dynkin_gram("D", 7))
    f = dynkin_gram("E", 6)
    assert congruent(f, f)


@pytest.mark.parametrize("family, m", [("E", 8), ("D", 6), ("A", 7), ("E", 7)])
def test_congruent_to_random_basis_change(family, m):
    rng = random.Random(11)
    f = dynkin_gram(family, m)
    assert congruent(f, congruent_copy(f, random_unimodular(rng, m)))


def test_congruence_on_degenerate_forms():
    f = SymmetricForm(((-2, 1, 1), (1, -2, 1), (1, 1, -2)))  # rank-2 A2 plus a radical line
    h, z = nondegenerate_part(f)
    assert z == 1 and classify_root_lattice(h) == RootLatticeType.of("A2")
    g = SymmetricForm(((-2, 1, 0), (1, -2, 0), (0, 0, 0)))
    assert congruent(f, g)


def test_indefinite_unimodular_congruence():
    hyp = SymmetricForm(((0, 1), (1, 0)))
    odd = SymmetricForm(((1, 0), (0, -1)))
    assert not congruent(hyp, odd)
    rng = random.Random(3)
    assert congruent(hyp, congruent_copy(hyp, random_unimodular(rng, 2)))


def test_congruence_rank_bound():
    big = dynkin_gram("A", MAX_CONGRUENCE_RANK + 1)
    with pytest.raises(ValueError):
        congruent(big, big)


def test_congruence_is_an_equivalence_on_a_pool():
    rng = random.Random(5)
    bases = [dynkin_gram("A", 4), dynkin_gram("D", 4), SymmetricForm(((-2, 1), (1, -4)))]
    pool = []
    while len(pool) < 30:
        f = rng.choice(bases)
        pool.append(congruent_copy(f, random_unimodular(rng, f.rank, steps=6)))
    for a in pool:
        assert congruent(a, a)
    for _ in range(40):
        a, b, c = (rng.choice(pool) for _ in range(3))
        ab, ba = congruent(a, b), congruent(b, a)
        assert ab == ba
        if ab and congruent(b, c):
            assert congruent(a, c)
