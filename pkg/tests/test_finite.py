import random

import pytest

from twistcert.finite import (
    BudgetExceeded,
    GroupUnderTest,
    bsgs_order,
    check_full_generation_mod_p,
    group_from_words,
    is_prime,
    orbit_size,
    reduce_mod,
    sp_order_formula,
)
from twistcert.homology import surface_rep
from twistcert.matrices import identity, mat_mul
from twistcert.words import curve, parse_word

FOUR_INVOLUTIONS = ["p1", "p2", "p2 A1 A2^-1", "p1 A1 B1 C1 C2^-1 B3^-1 A3^-1"]


def test_sp_order_formula():
    assert sp_order_formula(1, 2) == 6
    assert sp_order_formula(3, 2) == 1451520
    assert sp_order_formula(2, 3) == 51840
    with pytest.raises(ValueError):
        sp_order_formula(3, 4)
    with pytest.raises(ValueError):
        sp_order_formula(0, 2)


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)


def test_reduce_mod_basics():
    rep = surface_rep(3)
    eye = reduce_mod(identity(6), 2)
    assert eye.entries == identity(6)
    t = rep.transvection(rep.curve_class(curve("a", 1)))
    m2 = reduce_mod(t, 2)
    sq = mat_mul(m2.entries, m2.entries)
    assert tuple(tuple(x % 2 for x in row) for row in sq) == identity(6)
    rho1 = reduce_mod(rep.rho1, 3)
    sq3 = tuple(tuple(x % 3 for x in row) for row in mat_mul(rho1.entries, rho1.entries))
    assert sq3 == identity(6)
    with pytest.raises(ValueError):
        reduce_mod(identity(6), 4)


def test_reduce_mod_homomorphism():
    rep = surface_rep(3)
    rng = random.Random(7)
    letters = "A1 A2 B1 B3^-1 C2 R p1 p2 D1".split()
    for _ in range(25):
        u = parse_word(" ".join(rng.choice(letters) for _ in range(5)), 3)
        v = parse_word(" ".join(rng.choice(letters) for _ in range(5)), 3)
        for p in (2, 3, 5):
            lhs = reduce_mod(mat_mul(rep.word_matrix(u), rep.word_matrix(v)), p)
            ru, rv = reduce_mod(rep.word_matrix(u), p), reduce_mod(rep.word_matrix(v), p)
            rhs = tuple(tuple(sum(a * b for a, b in zip(row, col)) % p
                              for col in zip(*rv.entries)) for row in ru.entries)
            assert lhs.entries == rhs


def test_orbit_sizes():
    grp = group_from_words(FOUR_INVOLUTIONS, 3, 2)
    assert orbit_size(grp, (1, 0, 0, 0, 0, 0)) == 63
    eye_grp = GroupUnderTest((reduce_mod(identity(6), 2),), 3, 2)
    assert orbit_size(eye_grp, (1, 0, 0, 0, 0, 0)) == 1
    with pytest.raises(ValueError):
        orbit_size(grp, (0, 0, 0, 0, 0, 0))


def test_orbit_independent_of_generator_order_and_start():
    rng = random.Random(3)
    base = group_from_words(FOUR_INVOLUTIONS, 3, 3)
    expected = orbit_size(base, (1, 0, 0, 0, 0, 0))
    gens = list(base.generators)
    for _ in range(3):
        rng.shuffle(gens)
        grp = GroupUnderTest(tuple(gens), 3, 3)
        assert orbit_size(grp, (0, 0, 1, 0, 0, 0)) == expected


def test_bsgs_order_full_group():
    grp = group_from_words(FOUR_INVOLUTIONS, 3, 2)
    assert bsgs_order(grp) == 1451520 == sp_order_formula(3, 2)


def test_bsgs_trivial_and_subgroup():
    eye_grp = GroupUnderTest((reduce_mod(identity(6), 2),), 3, 2)
    assert bsgs_order(eye_grp) == 1
    single = group_from_words(["A1"], 3, 2)
    order = bsgs_order(single)
    assert order == 2  # one transvection mod 2
    assert sp_order_formula(3, 2) % order == 0  # divides the group order


def test_orbit_divides_order():
    grp = group_from_words(["A1 A2^-1", "R"], 3, 2)
    order = bsgs_order(grp)
    size = orbit_size(grp, (1, 0, 0, 0, 0, 0))
    assert order % size == 0


def test_lickorish_transvections_generate_mod2():
    words = [f"{f}{i}" for f in "ABC" for i in (1, 2, 3)]
    grp = group_from_words(words, 3, 2)
    assert bsgs_order(grp) == sp_order_formula(3, 2)


def test_budget_guard():
    grp = group_from_words(FOUR_INVOLUTIONS, 3, 2)
    with pytest.raises(BudgetExceeded) as exc:
        bsgs_order(grp, budget=50)
    assert "order_lower_bound" in exc.value.partial


def test_check_full_generation():
    res = check_full_generation_mod_p("four-involutions", 3, 2, method="bsgs")
    assert res.status == "verified" and res.order == 1451520
    res = check_full_generation_mod_p("four-elements", 3, 3, method="bsgs")
    assert res.status == "verified" and res.order == sp_order_formula(3, 3)
    with pytest.raises(ValueError):
        check_full_generation_mod_p("four-involutions", 3, 4)
    with pytest.raises(ValueError):
        check_full_generation_mod_p("three-involutions", 7, 2)


def test_single_transvection_is_proper_subgroup():
    res_group = group_from_words(["A1"], 3, 2)
    assert bsgs_order(res_group) < sp_order_formula(3, 2)
