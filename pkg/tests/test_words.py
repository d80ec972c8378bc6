import pytest

from twistcert.words import (
    Word,
    WordSyntaxError,
    compose,
    conjugate,
    curve,
    format_word,
    free_reduce,
    invert,
    parse_word,
    rotate_shift,
)


def test_parse_simple():
    w = parse_word("A1 A2^-1", 3)
    assert len(w) == 2
    assert w.letters[0].symbol.family == "A"
    assert w.letters[0].sign == 1
    assert w.letters[1].sign == -1


def test_parse_empty_is_identity():
    w = parse_word("", 8)
    assert w.is_identity()
    assert len(w) == 0


def test_parse_six_letter_slide_word():
    w = parse_word("B1 A2 C3 C4^-1 A6^-1 B7^-1", 8)
    assert len(w) == 6
    assert format_word(w) == "B1 A2 C3 C4^-1 A6^-1 B7^-1"


def test_parse_rho3_macro_expands():
    w = parse_word("p3", 3)
    assert format_word(w) == "R R p1 R^-1 R^-1"
    winv = parse_word("p3^-1", 3)
    assert format_word(winv) == "R R p1^-1 R^-1 R^-1"
    assert free_reduce(compose(w, winv)).is_identity()


def test_parse_errors():
    with pytest.raises(WordSyntaxError) as exc:
        parse_word("A1 Q7", 3)
    assert exc.value.position == 3
    with pytest.raises(WordSyntaxError):
        parse_word("A4", 3)  # index above genus
    with pytest.raises(WordSyntaxError):
        parse_word("D3", 5)
    with pytest.raises(ValueError):
        parse_word("A1", 2)  # genus too small


def test_compose_identity_and_no_reduction():
    w = parse_word("A1 B2", 3)
    assert compose(Word(3), w) == w
    assert compose(w, Word(3)) == w
    ww = compose(parse_word("A1", 3), parse_word("A1^-1", 3))
    assert len(ww) == 2  # no implicit reduction


def test_compose_genus_mismatch():
    with pytest.raises(ValueError):
        compose(parse_word("A1", 3), parse_word("A1", 4))


def test_compose_f2_f1_length():
    f1 = parse_word("B1 A2 C3 C4^-1 A6^-1 B7^-1", 8)
    f2 = parse_word("B2 A3 C4 C5^-1 A7^-1 B8^-1", 8)
    assert len(compose(f2, f1)) == 12


def test_invert():
    assert invert(Word(3)).is_identity()
    assert format_word(invert(parse_word("A1 B2^-1", 3))) == "B2 A1^-1"
    f1 = parse_word("B1 A2 C3 C4^-1 A6^-1 B7^-1", 8)
    assert format_word(invert(f1)) == "B7 A6 C4 C3^-1 A2^-1 B1^-1"
    assert invert(invert(f1)) == f1


def test_free_reduce():
    assert free_reduce(parse_word("A1 A1^-1", 3)).is_identity()
    assert format_word(free_reduce(parse_word("A1 B1 B1^-1 A2", 3))) == "A1 A2"
    w = parse_word("A1 B2 C3^-1 R p1", 4)
    assert free_reduce(compose(w, invert(w))).is_identity()
    # idempotent
    r = free_reduce(parse_word("A1 A2 A2^-1 A2 A2^-1 A1^-1", 3))
    assert free_reduce(r) == r


def test_conjugate():
    w = parse_word("A1 B1", 3)
    assert conjugate(Word(3), w) == w
    f = parse_word("R", 3)
    assert format_word(conjugate(f, w)) == "R A1 B1 R^-1"


def test_rotate_shift():
    assert format_word(rotate_shift(parse_word("A1", 3), 1)) == "A2"
    f1 = parse_word("B1 A2 C3 C4^-1 A6^-1 B7^-1", 8)
    assert format_word(rotate_shift(f1, 1)) == "B2 A3 C4 C5^-1 A7^-1 B8^-1"
    w = parse_word("C3", 5)
    assert rotate_shift(w, 5) == w  # full rotation
    with pytest.raises(ValueError):
        rotate_shift(parse_word("R", 3), 1)
    with pytest.raises(ValueError):
        rotate_shift(parse_word("D1", 3), 1)


def test_word_operators():
    u = parse_word("A1", 3)
    v = parse_word("B1", 3)
    assert u * v == parse_word("A1 B1", 3)
    assert ~u == parse_word("A1^-1", 3)
    assert u ** 3 == parse_word("A1 A1 A1", 3)
    assert u ** -2 == parse_word("A1^-1 A1^-1", 3)
    assert (u ** 0).is_identity()


def test_compose_associative_identity_unit():
    u, v, w = (parse_word(t, 3) for t in ("A1 B2^-1", "R p1", "C3 D1"))
    assert compose(compose(u, v), w) == compose(u, compose(v, w))
    e = Word(3)
    assert compose(e, u) == u == compose(u, e)


def test_curve_id():
    c = curve("c", 3)
    c.validate(3)
    with pytest.raises(ValueError):
        curve("c", 4).validate(3)
    with pytest.raises(ValueError):
        curve("d", 3).validate(5)
    with pytest.raises(ValueError):
        curve("x", 1)
    assert curve("a", 3).shifted(1, 3) == curve("a", 1)
