"""Property-based checks for the word algebra and the representation."""

from hypothesis import given, settings, strategies as st

from twistcert.homology import surface_rep
from twistcert.matrices import identity, mat_mul
from twistcert.words import (
    Word,
    compose,
    format_word,
    free_reduce,
    invert,
    letter,
    parse_word,
    rotate_shift,
    rotation_power,
)


@st.composite
def words(draw, min_genus=3, max_genus=6, max_len=14, families="ABCDRp"):
    g = draw(st.integers(min_genus, max_genus))
    n = draw(st.integers(0, max_len))
    letters = []
    for _ in range(n):
        fam = draw(st.sampled_from(families))
        sign = draw(st.sampled_from((1, -1)))
        if fam in "ABC":
            letters.append(letter(fam, draw(st.integers(1, g)), sign))
        elif fam == "D":
            letters.append(letter("D", draw(st.integers(1, 2)), sign))
        elif fam == "R":
            letters.append(letter("R", None, sign))
        else:
            letters.append(letter(draw(st.sampled_from(("p1", "p2"))), None, sign))
    return Word(g, tuple(letters))


@given(words())
def test_parse_format_round_trip(w):
    assert parse_word(format_word(w), w.genus) == w


@given(words())
def test_invert_is_involutive(w):
    assert invert(invert(w)) == w
    assert free_reduce(compose(w, invert(w))).is_identity()
    assert free_reduce(compose(invert(w), w)).is_identity()


@given(words())
def test_free_reduce_idempotent_and_shorter(w):
    r = free_reduce(w)
    assert len(r) <= len(w)
    assert free_reduce(r) == r


@given(words(max_genus=4, max_len=8))
@settings(max_examples=60, deadline=None)
def test_free_reduce_preserves_matrix(w):
    rep = surface_rep(w.genus)
    assert rep.word_matrix(w) == rep.word_matrix(free_reduce(w))


@given(words(max_genus=4, max_len=6), words(max_genus=4, max_len=6))
@settings(max_examples=60, deadline=None)
def test_word_matrix_multiplicative(u, v):
    if u.genus != v.genus:
        v = Word(u.genus, tuple(
            lt for lt in v.letters
            if lt.symbol.index is None or lt.symbol.family == "D"
            or lt.symbol.index <= u.genus
        ))
    rep = surface_rep(u.genus)
    assert rep.word_matrix(compose(u, v)) == mat_mul(rep.word_matrix(u), rep.word_matrix(v))


@given(words(max_genus=4, max_len=10))
@settings(max_examples=60, deadline=None)
def test_every_word_matrix_is_symplectic(w):
    rep = surface_rep(w.genus)
    assert rep.is_symplectic(rep.word_matrix(w))


@given(words(max_genus=4, max_len=10))
@settings(max_examples=40, deadline=None)
def test_inverse_word_gives_inverse_matrix(w):
    rep = surface_rep(w.genus)
    assert mat_mul(rep.word_matrix(w), rep.word_matrix(invert(w))) == identity(rep.dim)


@given(words(max_genus=4, max_len=8, families="ABC"), st.integers(-6, 6))
@settings(max_examples=60, deadline=None)
def test_rotate_shift_agrees_with_conjugation(w, k):
    rep = surface_rep(w.genus)
    shifted = rep.word_matrix(rotate_shift(w, k))
    r_k = rep.word_matrix(rotation_power(w.genus, k))
    conj = mat_mul(mat_mul(r_k, rep.word_matrix(w)), rep.symplectic_inverse(r_k))
    assert shifted == conj


@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_transvection_sign_blind(entries):
    rep = surface_rep(3)
    v = tuple(entries)
    t = rep.transvection(v)
    assert t == rep.transvection(tuple(-x for x in v))
    # the defining vector is fixed
    from twistcert.matrices import mat_vec
    assert mat_vec(t, v) == v
