import pytest

from twistcert.compiler import (
    Compiler,
    block_matrix,
    bmul,
    bconj,
    binv,
    compile_set,
    encode,
    expand,
    generating_set,
    leaf,
)
from twistcert.homology import SurfaceRep, surface_rep
from twistcert.matrices import identity, mat_mul
from twistcert.words import Word, curve, parse_word


def test_generating_set_registry():
    assert generating_set("four-elements").min_genus == 3
    assert generating_set("three-involutions").min_genus == 8
    with pytest.raises(ValueError):
        generating_set("no-such-set")
    with pytest.raises(ValueError):
        generating_set("three-involutions").alphabet(7)
    words = generating_set("four-involutions").alphabet(3)
    assert [str(w) for w in words] == [
        "p1", "p2", "p2 A1 A2^-1", "p1 A1 B1 C1 C2^-1 B3^-1 A3^-1"
    ]


def test_block_algebra():
    rep = surface_rep(3)
    a = leaf(parse_word("A1 B1", 3))
    b = leaf(parse_word("C2^-1", 3))
    prod = bmul(a, b)
    assert prod.length == 3
    assert str(expand(prod)) == "A1 B1 C2^-1"
    inv = binv(prod)
    assert str(expand(inv)) == "C2 B1^-1 A1^-1"
    conj = bconj(a, b)
    assert str(expand(conj)) == "A1 B1 C2^-1 B1^-1 A1^-1"
    assert block_matrix(rep, conj) == rep.word_matrix(expand(conj))
    assert expand(prod, cap=2) is None


def test_seed_ledger_and_soundness():
    comp = Compiler("four-elements", 3)
    ledger = comp.seed_ledger()
    rep = comp.rep
    for x, y, blk in ledger.entries():
        tx = rep.transvection(rep.curve_class(x))
        ty_inv = rep.symplectic_inverse(rep.transvection(rep.curve_class(y)))
        assert block_matrix(rep, blk) == mat_mul(tx, ty_inv), (x, y)


def test_ledger_symmetry_transitivity():
    comp = Compiler("four-elements", 4)
    ledger = comp.seed_ledger()
    comp.saturate_rotation(ledger)
    rep = comp.rep
    # symmetry: the reverse witness is the inverse
    w_ab = ledger.witness(curve("a", 1), curve("a", 2))
    w_ba = ledger.witness(curve("a", 2), curve("a", 1))
    assert block_matrix(rep, w_ba) == rep.symplectic_inverse(block_matrix(rep, w_ab))
    # transitivity: composed witness realizes the difference
    w = ledger.witness(curve("b", 1), curve("b", 4))
    tx = rep.transvection(rep.curve_class(curve("b", 1)))
    ty = rep.transvection(rep.curve_class(curve("b", 4)))
    assert block_matrix(rep, w) == mat_mul(tx, rep.symplectic_inverse(ty))


def test_wraparound_composition_is_identity():
    # composing the adjacent a-pair witnesses all the way around the surface
    # realizes T_{a1} T_{a1}^{-1} = 1
    comp = Compiler("four-elements", 3)
    ledger = comp.seed_ledger()
    comp.saturate_rotation(ledger)
    g, rep = comp.genus, comp.rep
    blocks = [
        ledger.witness(curve("a", k), curve("a", k % g + 1)) for k in range(1, g + 1)
    ]
    loop = bmul(*blocks)
    assert block_matrix(rep, loop) == identity(rep.dim)


def test_cross_family_pairs_gives_all_pairs():
    comp = Compiler("four-elements", 3)
    ledger = comp.seed_ledger()
    comp.saturate_rotation(ledger)
    comp.cross_family_pairs(ledger)
    rep = comp.rep
    for fx in "abc":
        for fy in "abc":
            for i in (1, 2, 3):
                for j in (1, 2, 3):
                    x, y = curve(fx, i), curve(fy, j)
                    w = ledger.witness(x, y)
                    tx = rep.transvection(rep.curve_class(x))
                    ty = rep.transvection(rep.curve_class(y))
                    assert block_matrix(rep, w) == mat_mul(
                        tx, rep.symplectic_inverse(ty)
                    ), (x, y)


def test_ledger_g_invariance():
    comp = Compiler("four-elements", 3)
    ledger = comp.seed_ledger()
    comp.saturate_rotation(ledger)
    rep = comp.rep
    # apply the alphabet word R to the pair (a1, a2): image pair (a2, a3)
    r = leaf(parse_word("R", 3))
    moved = bconj(r, ledger.witness(curve("a", 1), curve("a", 2)))
    t2 = rep.transvection(rep.curve_class(curve("a", 2)))
    t3 = rep.transvection(rep.curve_class(curve("a", 3)))
    assert block_matrix(rep, moved) == mat_mul(t2, rep.symplectic_inverse(t3))


def test_lantern_step():
    comp = Compiler("four-elements", 3)
    ledger = comp.seed_ledger()
    comp.saturate_rotation(ledger)
    comp.cross_family_pairs(ledger)
    result = comp.lantern_step(ledger)
    rep = comp.rep
    assert result.verified
    assert block_matrix(rep, result.block) == rep.transvection(
        rep.curve_class(curve("a", 3))
    )
    # same compiled word still evaluates to the twist under the flipped form
    flipped = SurfaceRep(3, pairing=-1)
    assert block_matrix(flipped, result.block) == flipped.transvection(
        flipped.curve_class(curve("a", 3))
    )


@pytest.mark.parametrize("set_key,genus,count", [
    ("lickorish", 4, 12),
    ("four-elements", 3, 9),
    ("four-elements", 6, 18),
    ("three-elements", 3, 9),
    ("four-involutions", 3, 9),
    ("four-involutions", 5, 15),
])
def test_compile_all(set_key, genus, count):
    results = compile_set(set_key, genus)
    assert len(results) == count
    assert all(r.verified for r in results)
    targets = [r.target.text() for r in results]
    assert len(set(targets)) == count


def test_lickorish_rotation_form():
    results = {r.target.text(): r for r in compile_set("lickorish", 4)}
    assert str(results["A3"].word()) == "R R A1 R^-1 R^-1"
    assert str(results["C1"].word()) == "C1"
    assert str(results["B4"].word()) == "R R R B1 R^-1 R^-1 R^-1"


def test_flat_expansion_matches_block_matrix():
    rep = surface_rep(3)
    for r in compile_set("four-elements", 3, rep=rep):
        w = r.word()
        assert isinstance(w, Word) and len(w) == r.length
        assert rep.word_matrix(w) == block_matrix(rep, r.block)


def test_three_involutions_genus8():
    rep = surface_rep(8)
    results = compile_set("three-involutions", 8, rep=rep)
    assert len(results) == 24
    assert all(r.verified for r in results)
    # expansion bottoms out in the involution alphabet only
    alpha = set(Compiler("three-involutions", 8).alphabet)
    seen = set()

    def walk(node):
        for child, _ in node.parts:
            if isinstance(child, Word):
                seen.add(child)
            else:
                walk(child)

    for r in results:
        walk(r.block)
    assert seen <= alpha
    # flat cross-check on the shortest compiled word
    smallest = min(results, key=lambda r: r.length)
    w = smallest.word()
    assert rep.word_matrix(w) == block_matrix(rep, smallest.block)


def test_deterministic_compilation():
    first = [encode(r.block) for r in compile_set("three-elements", 4)]
    second = [encode(r.block) for r in compile_set("three-elements", 4)]
    assert first == second


def test_min_genus_enforced():
    with pytest.raises(ValueError):
        Compiler("three-involutions", 7)
    with pytest.raises(ValueError):
        Compiler("four-elements", 2)
