import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from enumeration import minimal_forms
from oracles import float_least_obstructed
from sqplinks.braid_core import BraidWord, conjugate_by_delta, delta, equal, parse_braid
from sqplinks.invariants import alexander, is_definite_link, signature
from sqplinks.lattice import classify_root_lattice
from sqplinks.poly import IntPolynomial
from sqplinks.seifert import qp_seifert_matrix, surface_data, symmetrize
from sqplinks.three_braids import (
    MinimalRep3,
    MurasugiForm,
    as_positive_braid,
    b_pqr,
    classify_definite_3braid,
    epsilon,
    lspace_row,
    lspace_table,
    minimal_representative,
    murasugi_form,
    signature_closed_form,
)
from strategies import positive_words


def three_braids(max_len=9):
    return positive_words(min_strands=3, max_strands=3, max_len=max_len)


def shape(rep):
    return rep.k, sorted(rep.syllables), len(rep.tail)


# b(p, q, r)


def test_b_pqr_words():
    assert str(b_pqr(1, 1, 1)) == "s1 a(1,3) s2"
    assert b_pqr(2, 1, 1) == parse_braid("s1^2 a(1,3) s2", 3)
    with pytest.raises(ValueError):
        b_pqr(0, 1, 1)


def test_b123_closes_to_the_knot_7_5():
    w = b_pqr(1, 2, 3)
    assert surface_data(w).boundary_components == 1
    assert alexander(w) == IntPolynomial.parse("2t^4 - 4t^3 + 5t^2 - 4t + 2")


# minimal representatives


def test_minimal_representative_examples():
    assert minimal_representative(b_pqr(1, 1, 1)) == MinimalRep3(0, ((1, 1, 1),))
    assert minimal_representative(parse_braid("D^4 s1^2", 3)) == MinimalRep3(5)


def test_delta_square_power_of_s1_keeps_the_larger_delta_exponent():
    # delta s1^(p+2) and delta^2 s1^p are conjugate; the search keeps the maximal k
    for p in range(1, 6):
        a = minimal_representative(parse_braid(f"D^2 s1^{p}", 3))
        b = minimal_representative(parse_braid(f"D s1^{p + 2}", 3))
        assert a == b == MinimalRep3(2, (), (p,))
        assert alexander(a.word()) == alexander(parse_braid(f"D s1^{p + 2}", 3))


def test_minimal_rep_validation():
    with pytest.raises(ValueError):
        MinimalRep3(-1)
    with pytest.raises(ValueError):
        MinimalRep3(0, ((1, 0, 1),))
    with pytest.raises(ValueError):
        minimal_representative(parse_braid("~s1 s2", 3))
    with pytest.raises(ValueError):
        minimal_representative(parse_braid("s1", 4))


def test_letter_count_is_word_length():
    rep = MinimalRep3(3, ((1, 2, 1),), ())
    assert rep.letter_count() == len(rep.word()) == 10


@given(three_braids())
def test_minimal_representative_is_idempotent(w):
    rep = minimal_representative(w)
    assert minimal_representative(rep) == rep


@given(three_braids(), st.integers(1, 2))
def test_minimal_representative_is_delta_conjugation_invariant(w, j):
    assert shape(minimal_representative(conjugate_by_delta(w, j))) == shape(minimal_representative(w))


@given(three_braids().filter(len), st.data())
def test_minimal_representative_is_cyclic_permutation_invariant(w, data):
    i = data.draw(st.integers(0, len(w) - 1))
    rotated = BraidWord(3, w.letters[i:] + w.letters[:i])
    assert shape(minimal_representative(rotated)) == shape(minimal_representative(w))


@given(three_braids())
def test_minimal_representative_output_shape(w):
    rep = minimal_representative(w)
    assert rep.tail_discipline()
    letters = rep.letters()
    assert not any(pair in letters for pair in ("AB", "BC", "CA"))
    # closure invariants are preserved
    if not surface_data(w).connected:
        return
    assert alexander(rep.word()) == alexander(w)
    assert signature(rep.word()) == signature(w)


# Murasugi forms and signatures


def test_murasugi_examples():
    m = murasugi_form(MinimalRep3(0, ((2, 3, 4),)))
    assert (m.d, m.a) == (1, (1, 2, 3))
    m = murasugi_form(MinimalRep3(3, ((1, 1, 1),)))
    assert (m.d, m.a) == (2, (0, 0, 0))
    m = murasugi_form(MinimalRep3(2, ((1, 2, 1),), (3,)))
    assert (m.d, m.a) == (2, (0, 1, 0, 2))
    m = murasugi_form(MinimalRep3(4, ((2, 1, 1),), (2, 3)))
    assert (m.d, m.a) == (3, (1, 0, 0, 1, 2))


def test_murasugi_form_is_verified_conjugate():
    rep = MinimalRep3(1, ((2, 1, 3),), (1, 2))
    m = murasugi_form(rep)
    g = m.conjugator
    assert equal(rep.word(), g.inverse() * m.word() * g)


def test_murasugi_rejects_bad_shapes():
    with pytest.raises(ValueError):
        murasugi_form(MinimalRep3(1, ((1, 1, 1),)))


def test_signature_closed_form_examples():
    m = murasugi_form(minimal_representative(b_pqr(2, 2, 2)))
    assert signature_closed_form(m) == -4 == signature(b_pqr(2, 2, 2))
    m = murasugi_form(minimal_representative(b_pqr(1, 1, 1)))
    assert m.a == (0, 0, 0) and signature_closed_form(m) == -1 == signature(b_pqr(1, 1, 1))


def test_epsilon_values():
    assert epsilon(1) == 1
    for d in range(1, 6):
        assert epsilon(d) in (-1, 0, 1) and (epsilon(d) - d) % 2 == 0
    with pytest.raises(ValueError):
        epsilon(0)


def test_blockless_form_cross_check():
    # delta^6 has no s1^-1 blocks: only the reassembled word can be compared
    m = murasugi_form(MinimalRep3(6))
    assert m.a == () and equal(m.word(), delta(3, 6))
    assert signature(m.word()) == signature(delta(3, 6))
    with pytest.raises(ValueError):
        signature_closed_form(m)


@st.composite
def murasugi_forms(draw, max_d=4, max_blocks=6, max_exp=5):
    n = draw(st.integers(1, max_blocks))
    a = tuple(draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n)))
    return MurasugiForm(draw(st.integers(1, max_d)), a, BraidWord(3))


@given(murasugi_forms())
def test_signature_closed_form_matches_direct(m):
    assert signature_closed_form(m) == signature(m.word())


@given(three_braids().filter(lambda w: len(w) > 0))
def test_closed_form_through_minimal_reps(w):
    rep = minimal_representative(w)
    if (rep.s == 0 and not rep.tail) or not surface_data(w).connected:
        return
    try:
        m = murasugi_form(rep)
    except ValueError:
        return
    if m.a:
        assert signature_closed_form(m) == signature(w)


# definiteness verdicts


def test_verdict_examples():
    for m in range(1, 8):
        v = classify_definite_3braid(parse_braid(f"D s1^{m}", 3))
        assert str(v) == f"A{m}" and v.closure == f"T(2,{m + 1})"
    for m in range(5, 10):
        v = classify_definite_3braid(parse_braid(f"D^3 s1^{m - 4}", 3))
        assert str(v) == f"D{m}"
    v = classify_definite_3braid(parse_braid("D^2 s1 a(1,3) s2 s1 a(1,3) s2", 3))
    assert v.kind == "Indefinite" and not v.definite


def test_exceptional_verdicts():
    assert str(classify_definite_3braid(delta(3, 4))) == "E6"
    assert str(classify_definite_3braid(parse_braid("D^4 s1", 3))) == "E7"
    assert str(classify_definite_3braid(delta(3, 5))) == "E8"
    assert classify_definite_3braid(delta(3, 6)).kind == "Indefinite"


def test_montesinos_and_composite_verdicts():
    v = classify_definite_3braid(b_pqr(2, 3, 4))
    # parameters come back in a canonical cyclic rotation
    assert v.kind == "Montesinos" and v.lattice is None
    assert v.params in {(2, 3, 4), (3, 4, 2), (4, 2, 3)}
    v = classify_definite_3braid(MinimalRep3(1, (), (2, 3)))
    assert v.kind == "Composite" and v.lattice.to_json() == ["A2", "A3"]


def test_verdict_json():
    j = classify_definite_3braid(delta(3, 4)).to_json()
    assert j["verdict"] == "E6" and j["lattice"] == ["E6"] and j["closure"] == "T(3,4)"


def test_verdicts_agree_with_the_surface_form_up_to_eight_letters():
    for rep in minimal_forms(8):
        v = classify_definite_3braid(rep)
        w = rep.word()
        if not surface_data(w).connected:
            assert v.kind == "TrivialOrSplit"
            continue
        assert is_definite_link(w) == (v.definite or v.kind == "TrivialOrSplit"), rep
        if v.lattice is not None:
            assert classify_root_lattice(symmetrize(qp_seifert_matrix(w))) == v.lattice


def test_definite_reps_with_delta_are_positive_braids():
    for rep in minimal_forms(10):
        if rep.k >= 1 and classify_definite_3braid(rep).definite:
            w = as_positive_braid(rep)
            assert w is not None and all(b.s == b.r + 1 and b.sign == 1 for b in w.letters), rep


def test_random_reps_verdict_consistency():
    rng = random.Random(17)
    for _ in range(40):
        rep = MinimalRep3(rng.randint(0, 6), tuple((rng.randint(1, 3),) * 3 for _ in range(rng.randint(0, 1))))
        rep = minimal_representative(rep)
        v = classify_definite_3braid(rep)
        if surface_data(rep.word()).connected and v.kind != "TrivialOrSplit":
            assert is_definite_link(rep.word()) == v.definite


# the b(p, q, r) L-space table


def test_lspace_rows():
    assert lspace_row(1, 2, 2).least_obstructed == 6
    assert lspace_row(1, 1, 1).least_obstructed is None
    # the printed entry says n >= 3, but the largest root angle is about 0.656 pi
    assert lspace_row(2, 3, 5).least_obstructed == 4


def test_lspace_table_matches_float_oracle():
    rows = lspace_table(5, 50)
    assert len(rows) == 35
    assert [r.pqr for r in rows] == sorted(r.pqr for r in rows)
    for row in rows:
        assert row.least_obstructed == float_least_obstructed(row.alexander, 50)


def test_lspace_table_json_and_bounds():
    j = lspace_table(2, 10)[0].to_json()
    assert j["pqr"] == [1, 1, 1] and j["least_obstructed_n"] is None
    with pytest.raises(ValueError):
        lspace_table(0, 10)
