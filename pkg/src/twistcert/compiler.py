"""Constructive compilation of twist generators over each generating set.

The compiler replays the constructive derivations behind the generating-set
theorems: it maintains a ledger of curve pairs (x, y) whose twist difference
T_x T_y^{-1} has a known witness word over the chosen generating set,
saturates the ledger under rotation, slides across curve families, performs
the lantern step to obtain one honest twist, and finally assembles every
A_i, B_i, C_i.

Witness words are kept as straight-line programs (`Block`): immutable
composition DAGs whose leaves are alphabet words.  Blocks share structure,
carry their exact expanded letter count, evaluate to exact matrices through
a per-representation cache, and expand to flat `Word`s on demand.  Every
derivation step is gated by an exact matrix or curve-image check in the
representation; a failed check raises CompilationError.

One catalogued cross-family slide (B1 B2^-1 C1 C2^-1 acting on (b1, a3))
does not hold at the homology level — the verifier module reports it as
failed — so the ledger uses the reflection-partnered slide
(B_g B_1^-1)(C_2 C_1^-1) on (b1, a2) instead, which is checked at runtime.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .matrices import Mat, identity, mat_mul, mat_vec
from .homology import SurfaceRep, surface_rep
from .words import CurveId, Symbol, Word, curve, parse_word

FLAT_WORD_CAP = 2_000_000


class CompilationError(RuntimeError):
    """An intermediate matrix or curve-image check failed."""


# ---------------------------------------------------------------------------
# Straight-line word programs


@dataclass(frozen=True, eq=False)
class Block:
    """A word as a composition DAG: product of (Block-or-Word, sign) factors."""

    genus: int
    parts: tuple[tuple[object, int], ...]
    length: int


def leaf(w: Word) -> Block:
    return Block(w.genus, ((w, 1),), len(w))


def bmul(*factors: Block) -> Block:
    if not factors:
        raise ValueError("empty product")
    g = factors[0].genus
    parts, total = [], 0
    for f in factors:
        if f.genus != g:
            raise ValueError("genus mismatch in block product")
        parts.append((f, 1))
        total += f.length
    return Block(g, tuple(parts), total)


def binv(b: Block) -> Block:
    return Block(b.genus, ((b, -1),), b.length)


def bpow(b: Block, k: int) -> Block:
    if k == 0:
        return Block(b.genus, (), 0)
    sign = 1 if k > 0 else -1
    return Block(b.genus, ((b, sign),) * abs(k), abs(k) * b.length)


def bconj(f: Block, w: Block) -> Block:
    """f w f^-1."""
    return Block(f.genus, ((f, 1), (w, 1), (f, -1)), 2 * f.length + w.length)


def block_matrix(rep: SurfaceRep, b: Block, sign: int = 1) -> Mat:
    """Exact matrix of a block, with shared subterms evaluated once per rep."""
    key = (id(b), sign)
    cached = rep._block_cache.get(key)
    if cached is not None:
        return cached[1]
    if sign < 0:
        m = rep.symplectic_inverse(block_matrix(rep, b, 1))
    else:
        m = identity(rep.dim)
        for child, s in b.parts:
            if isinstance(child, Word):
                cm = rep.word_matrix(child if s > 0 else ~child)
            else:
                cm = block_matrix(rep, child, s)
            m = mat_mul(m, cm)
    rep._block_cache[key] = (b, m)
    return m


def expand(b: Block, cap: int = FLAT_WORD_CAP) -> Word | None:
    """Flatten a block to a Word, or None if longer than `cap` letters."""
    if b.length > cap:
        return None
    letters = []
    stack = [(b, 1)]
    while stack:
        node, sign = stack.pop()
        if isinstance(node, Word):
            if sign > 0:
                letters.extend(node.letters)
            else:
                letters.extend(lt.inverse() for lt in reversed(node.letters))
            continue
        parts = node.parts if sign > 0 else tuple(
            (child, -s) for child, s in reversed(node.parts)
        )
        stack.extend(reversed(parts))
    return Word(b.genus, tuple(letters))


def encode(b: Block) -> str:
    """Stable structural fingerprint (respects sharing); used for determinism checks."""
    names: dict[int, str] = {}
    lines: list[str] = []

    def visit(node) -> str:
        if isinstance(node, Word):
            return f"[{node}]"
        name = names.get(id(node))
        if name is None:
            body = " ".join(
                visit(c) + ("" if s > 0 else "^-1") for c, s in node.parts
            )
            name = f"n{len(names)}"
            names[id(node)] = name
            lines.append(f"{name}=({body})")
        return name

    root = visit(b)
    return "; ".join(lines + [f"root={root}"])


# ---------------------------------------------------------------------------
# Generating sets


@dataclass(frozen=True)
class GeneratingSet:
    key: str        # CLI token
    name: str       # catalogue name
    min_genus: int
    alphabet_texts: object  # genus -> list[str]

    def alphabet(self, genus: int) -> list[Word]:
        if genus < self.min_genus:
            raise ValueError(
                f"set {self.key} requires genus >= {self.min_genus}, got {genus}"
            )
        return [parse_word(t, genus) for t in self.alphabet_texts(genus)]


F1_TEXT = "B1 A2 C3 C4^-1 A6^-1 B7^-1"
COR32_WORD = "A1 B1 C1 C2^-1 B3^-1 A3^-1"

GENERATING_SETS = {
    "lickorish": GeneratingSet(
        "lickorish", "DehnLickorish", 3, lambda g: ["R", "A1", "B1", "C1"]
    ),
    "four-elements": GeneratingSet(
        "four-elements", "FourElements_Thm31", 3,
        lambda g: ["R", "A1 A2^-1", "B1 B2^-1", "C1 C2^-1"],
    ),
    "three-elements": GeneratingSet(
        "three-elements", "ThreeElements_Cor32", 3,
        lambda g: ["R", "A1 A2^-1", COR32_WORD],
    ),
    "three-involutions": GeneratingSet(
        "three-involutions", "ThreeInvolutions_Cor33/Thm42", 8,
        lambda g: ["p1", "p2", "p3 " + F1_TEXT],
    ),
    "four-involutions": GeneratingSet(
        "four-involutions", "FourInvolutions_Thm42", 3,
        lambda g: ["p1", "p2", "p2 A1 A2^-1", "p1 " + COR32_WORD],
    ),
}


def generating_set(key: str) -> GeneratingSet:
    try:
        return GENERATING_SETS[key]
    except KeyError:
        raise ValueError(
            f"unknown generating set {key!r}; expected one of {sorted(GENERATING_SETS)}"
        ) from None


# ---------------------------------------------------------------------------
# Pair ledger


def _ckey(c: CurveId) -> tuple[str, int]:
    return (c.family, c.index)


class PairLedger:
    """Graph of curve pairs with witness blocks realizing T_x T_y^{-1}.

    Edges are stored both ways (the reverse witness is the inverse block).
    Witnesses for non-adjacent pairs are composed along a deterministic
    shortest-witness path: Dijkstra on expanded letter length with a
    lexicographic path tie-break.
    """

    def __init__(self, genus: int):
        self.genus = genus
        self.edges: dict[tuple, dict[tuple, Block]] = {}
        self._witness_cache: dict[tuple, Block] = {}

    def add_pair(self, x: CurveId, y: CurveId, block: Block) -> None:
        kx, ky = _ckey(x.validate(self.genus)), _ckey(y.validate(self.genus))
        self._witness_cache.clear()
        self._put(kx, ky, block)
        self._put(ky, kx, binv(block))

    def _put(self, kx, ky, block):
        slot = self.edges.setdefault(kx, {})
        old = slot.get(ky)
        if old is None or block.length < old.length:
            slot[ky] = block

    def has_pair(self, x: CurveId, y: CurveId) -> bool:
        try:
            self.witness(x, y)
            return True
        except KeyError:
            return False

    def entries(self):
        for kx, slot in sorted(self.edges.items()):
            for ky, block in sorted(slot.items()):
                yield CurveId(*kx), CurveId(*ky), block

    def witness(self, x: CurveId, y: CurveId) -> Block:
        """Witness block for the pair (x, y); identity-length path gives T_x T_x^{-1}."""
        kx, ky = _ckey(x), _ckey(y)
        if kx == ky:
            return Block(self.genus, (), 0)
        hit = self._witness_cache.get((kx, ky))
        if hit is not None:
            return hit
        # Dijkstra with deterministic (length, path) ordering
        best: dict[tuple, tuple[int, tuple]] = {kx: (0, (kx,))}
        done: set[tuple] = set()
        heap = [(0, (kx,), kx)]
        parent: dict[tuple, tuple] = {}
        while heap:
            dist, path, node = heapq.heappop(heap)
            if node in done:
                continue
            done.add(node)
            if node == ky:
                break
            for nxt, blk in sorted(self.edges.get(node, {}).items()):
                if nxt in done:
                    continue
                cand = (dist + blk.length, path + (nxt,))
                if nxt not in best or cand < best[nxt]:
                    best[nxt] = cand
                    parent[nxt] = node
                    heapq.heappush(heap, (cand[0], cand[1], nxt))
        if ky not in done:
            raise KeyError(f"no ledger path from {x.text()} to {y.text()}")
        chain = [ky]
        while chain[-1] != kx:
            chain.append(parent[chain[-1]])
        chain.reverse()
        blocks = [self.edges[a][b] for a, b in zip(chain, chain[1:])]
        result = blocks[0] if len(blocks) == 1 else bmul(*blocks)
        self._witness_cache[(kx, ky)] = result
        return result


# ---------------------------------------------------------------------------
# Compilation


@dataclass
class CompilationResult:
    target: Symbol
    set_key: str
    genus: int
    block: Block
    length: int
    trace: tuple[str, ...]
    verified: bool
    _cap: int = field(default=FLAT_WORD_CAP, repr=False)

    def word(self, cap: int | None = None) -> Word | None:
        """Flat expansion over the base alphabet (None above the letter cap)."""
        return expand(self.block, self._cap if cap is None else cap)


class Compiler:
    """Drives the whole derivation for one (generating set, genus) job."""

    def __init__(self, gen_set: GeneratingSet | str, genus: int,
                 rep: SurfaceRep | None = None, flat_cap: int = FLAT_WORD_CAP):
        if isinstance(gen_set, str):
            gen_set = generating_set(gen_set)
        if genus < gen_set.min_genus:
            raise ValueError(
                f"set {gen_set.key} requires genus >= {gen_set.min_genus}, got {genus}"
            )
        self.gen_set = gen_set
        self.genus = genus
        self.rep = rep if rep is not None else surface_rep(genus)
        self.flat_cap = flat_cap
        self.trace: list[str] = []
        self.alphabet = gen_set.alphabet(genus)
        self.atoms = [leaf(w) for w in self.alphabet]

    # -- checks ------------------------------------------------------------

    def _require_relation(self, blk: Block, target: Mat, what: str) -> None:
        if block_matrix(self.rep, blk) != target:
            raise CompilationError(f"matrix check failed: {what}")

    def _require_word_eq(self, blk: Block, text: str, what: str) -> None:
        self._require_relation(blk, self.rep.word_matrix(parse_word(text, self.genus)), what)

    def _require_image(self, mover: Block, pairs, what: str) -> None:
        m = block_matrix(self.rep, mover)
        for src, dst in pairs:
            u = mat_vec(m, self.rep.curve_class(src))
            v = self.rep.curve_class(dst)
            if u != v and u != tuple(-t for t in v):
                raise CompilationError(
                    f"curve image check failed: {what}: {src.text()} !-> {dst.text()}"
                )

    def _twist(self, c: CurveId) -> Mat:
        return self.rep.transvection(self.rep.curve_class(c))

    # -- prologues: express R and the three differences over the set --------

    def _core_blocks(self):
        key = self.gen_set.key
        if key == "four-elements":
            r, da, db, dc = self.atoms
            self.trace.append("alphabet-differences")
            return r, da, db, dc, []
        if key == "three-elements":
            r, da, v = self.atoms
            return self._cor32_prologue(r, da, v)
        if key == "four-involutions":
            p1, p2, t1, t2 = self.atoms
            r = bmul(p1, p2)
            da = bmul(binv(p2), t1)
            v = bmul(binv(p1), t2)
            self._require_word_eq(r, "R", "p1 p2 = R")
            self._require_word_eq(da, "A1 A2^-1", "p2^-1 (p2 A1 A2^-1) = A1 A2^-1")
            self._require_word_eq(v, COR32_WORD, "p1^-1 (p1 V) = V")
            self.trace.append("involution-pairing")
            return self._cor32_prologue(r, da, v)
        if key == "three-involutions":
            return self._involution_chain_prologue()
        raise ValueError(f"no difference prologue for set {key}")

    def _cor32_prologue(self, r: Block, da: Block, v: Block):
        g = self.genus
        a, b, c = (lambda i: curve("a", i)), (lambda i: curve("b", i)), (lambda i: curve("c", i))
        self._require_image(v, [(a(1), b(1)), (a(2), a(2))], "V(a1,a2)=(b1,a2)")
        self._require_image(v, [(b(1), c(1)), (a(2), a(2))], "V(b1,a2)=(c1,a2)")
        self._require_image(r, [(a(1), a(2)), (a(2), a(3))], "R(a1,a2)=(a2,a3)")
        w_b1a2 = bconj(v, da)
        w_c1a2 = bconj(v, w_b1a2)
        w_a2a3 = bconj(r, da)
        w_b2a3 = bconj(r, w_b1a2)
        w_c2a3 = bconj(r, w_c1a2)
        db = bmul(w_b1a2, w_a2a3, binv(w_b2a3))
        dc = bmul(w_c1a2, w_a2a3, binv(w_c2a3))
        self._require_word_eq(db, "B1 B2^-1", "B1A2^-1 . A2A3^-1 . A3B2^-1 = B1B2^-1")
        self._require_word_eq(dc, "C1 C2^-1", "C1A2^-1 . A2A3^-1 . A3C2^-1 = C1C2^-1")
        extra = [
            (b(1), a(2), w_b1a2),
            (c(1), a(2), w_c1a2),
            (a(2), a(3), w_a2a3),
            (b(2), a(3), w_b2a3),
            (c(2), a(3), w_c2a3),
        ]
        self.trace.append("three-element-slides")
        return r, da, db, dc, extra

    def _involution_chain_prologue(self):
        g = self.genus
        p1, p2, sigma = self.atoms
        r = bmul(p1, p2)
        self._require_word_eq(r, "R", "p1 p2 = R")
        rho3 = bconj(bpow(r, 2), p1)
        self._require_word_eq(rho3, "p3", "R^2 p1 R^-2 = rho3")
        f1 = bmul(binv(rho3), sigma)
        self._require_word_eq(f1, F1_TEXT, "rho3^-1 (rho3 F1) = F1")

        def shifted(text: str, k: int) -> str:
            from .words import rotate_shift
            return str(rotate_shift(parse_word(text, g), k))

        f2 = bconj(r, f1)
        self._require_word_eq(f2, "B2 A3 C4 C5^-1 A7^-1 B8^-1", "F2 = R F1 R^-1")
        f3 = bconj(bmul(f2, f1), f2)
        self._require_word_eq(f3, "A2 A3 C4 C5^-1 B7^-1 B8^-1", "F3 containment")
        f4 = bconj(binv(r), f3)
        self._require_word_eq(f4, "A1 A2 C3 C4^-1 B6^-1 B7^-1", "F4 = R^-1 F3 R")
        f5 = bconj(bmul(f4, f3), f4)
        self._require_word_eq(f5, "A1 A2 C3 C4^-1 C5^-1 B7^-1", "F5 containment")
        bc_65 = bmul(binv(f4), f5)
        self._require_word_eq(bc_65, "B6 C5^-1", "F4^-1 F5 = B6 C5^-1")

        # B_{i+1} C_i^{-1} for every i (indices mod g), then B_i C_i^{-1}
        bc_up = {}
        for i in range(1, g + 1):
            k = (i - 5) % g
            blk = bc_65 if k == 0 else bconj(bpow(r, k), bc_65)
            up = i % g + 1
            self._require_word_eq(blk, f"B{up} C{i}^-1", f"B{up} C{i}^-1 by rotation")
            bc_up[i] = blk
        bc_11 = bconj(p2, bc_up[1])
        self._require_word_eq(bc_11, "B1 C1^-1", "p2 (B2 C1^-1) p2^-1 = B1 C1^-1")
        bc_same = {}
        for i in range(1, g + 1):
            blk = bc_11 if i == 1 else bconj(bpow(r, i - 1), bc_11)
            self._require_word_eq(blk, f"B{i} C{i}^-1", f"B{i} C{i}^-1 by rotation")
            bc_same[i] = blk

        db = bmul(bc_same[1], binv(bc_up[1]))
        self._require_word_eq(db, "B1 B2^-1", "(B1C1^-1)(C1B2^-1) = B1B2^-1")
        dc = bmul(binv(bc_up[1]), bc_same[2])
        self._require_word_eq(dc, "C1 C2^-1", "(C1B2^-1)(B2C2^-1) = C1C2^-1")

        c3c4 = bconj(bpow(r, 2), dc)
        f6 = bmul(f1, binv(c3c4), bc_up[6])
        self._require_word_eq(f6, "B1 A2 A6^-1 C6^-1", "F6 = F1 (C3^-1 C4)(B7 C6^-1)")
        f7 = bconj(r, f6)
        self._require_word_eq(f7, "B2 A3 A7^-1 C7^-1", "F7 = R F6 R^-1")
        f8 = bconj(bmul(f7, f6), f7)
        self._require_word_eq(f8, "A2 A3 A7^-1 C7^-1", "F8 containment")
        ab_22 = bmul(f8, binv(f7))
        self._require_word_eq(ab_22, "A2 B2^-1", "F8 F7^-1 = A2 B2^-1")
        ab_same = {}
        for i in range(1, g + 1):
            blk = ab_22 if i == 2 else bconj(bpow(r, (i - 2) % g), ab_22)
            self._require_word_eq(blk, f"A{i} B{i}^-1", f"A{i} B{i}^-1 by rotation")
            ab_same[i] = blk
        da = bmul(ab_same[1], db, binv(ab_same[2]))
        self._require_word_eq(da, "A1 A2^-1", "(A1B1^-1)(B1B2^-1)(B2A2^-1) = A1A2^-1")

        extra = []
        for i in range(1, g + 1):
            extra.append((curve("a", i), curve("b", i), ab_same[i]))
            extra.append((curve("b", i), curve("c", i), bc_same[i]))
            extra.append((curve("b", i % g + 1), curve("c", i), bc_up[i]))
        self.trace.append("involution-f-chain")
        return r, da, db, dc, extra

    # -- ledger stages -------------------------------------------------------

    def seed_ledger(self) -> PairLedger:
        r, da, db, dc, extra = self._core_blocks()
        self._r, self._da, self._db, self._dc = r, da, db, dc
        ledger = PairLedger(self.genus)
        ledger.add_pair(curve("a", 1), curve("a", 2), da)
        ledger.add_pair(curve("b", 1), curve("b", 2), db)
        ledger.add_pair(curve("c", 1), curve("c", 2), dc)
        for x, y, blk in extra:
            ledger.add_pair(x, y, blk)
        self.trace.append("seed-pairs")
        return ledger

    def saturate_rotation(self, ledger: PairLedger) -> PairLedger:
        """Add R^k-transported adjacent pairs (alpha_k, alpha_{k+1}), indices mod g."""
        g = self.genus
        rot = block_matrix(self.rep, self._r)
        m = identity(self.rep.dim)
        for k in range(g):
            if k:
                m = mat_mul(m, rot)  # rot^k, checked against the shift claim below
            for fam, base in (("a", self._da), ("b", self._db), ("c", self._dc)):
                x0, y0 = curve(fam, 1), curve(fam, 2)
                x, y = x0.shifted(k, g), y0.shifted(k, g)
                for src, dst in ((x0, x), (y0, y)):
                    u = mat_vec(m, self.rep.curve_class(src))
                    v = self.rep.curve_class(dst)
                    if u != v and u != tuple(-t for t in v):
                        raise CompilationError(
                            f"rotation transport failed: R^{k}({src.text()}) != {dst.text()}"
                        )
                if k:
                    ledger.add_pair(x, y, bconj(bpow(self._r, k), base))
        self.trace.append("rotation-saturation")
        return ledger

    def cross_family_pairs(self, ledger: PairLedger) -> PairLedger:
        """Bridge the a-, b- and c-families: one a-b slide and one b-c slide."""
        g = self.genus
        u = bmul(self._da, self._db)
        self._require_image(
            u, [(curve("a", 1), curve("b", 1)), (curve("a", 3), curve("a", 3))],
            "A1A2^-1 B1B2^-1 (a1,a3) = (b1,a3)",
        )
        ledger.add_pair(
            curve("b", 1), curve("a", 3),
            bmul(u, ledger.witness(curve("a", 1), curve("a", 3)), binv(u)),
        )
        # The direct b->c slide (B1B2^-1 C1C2^-1) fails on homology classes;
        # partner the two differences so the moved class never meets the
        # second handle: (B_g B_1^-1)(C_2 C_1^-1) sends (b1, a2) to (c1, a2).
        f = bmul(bconj(bpow(self._r, g - 1), self._db), binv(self._dc))
        self._require_image(
            f, [(curve("b", 1), curve("c", 1)), (curve("a", 2), curve("a", 2))],
            f"B{g}B1^-1 C2C1^-1 (b1,a2) = (c1,a2)",
        )
        ledger.add_pair(
            curve("c", 1), curve("a", 2),
            bmul(f, ledger.witness(curve("b", 1), curve("a", 2)), binv(f)),
        )
        self.trace.append("cross-family-bridges")
        return ledger

    def _d_pairs(self, ledger: PairLedger) -> None:
        g = self.genus
        w = ledger.witness
        w1 = bmul(
            w(curve("b", 2), curve("a", 1)),
            w(curve("c", 1), curve("a", 1)),
            w(curve("a", 1), curve("a", 2)),
            w(curve("c", 2), curve("a", 1)),
        )
        self._require_word_eq(
            w1, "B2 A1^-1 C1 A1^-1 A1 A2^-1 C2 A1^-1", "first d-slide word"
        )
        self._require_image(
            w1, [(curve("b", 2), curve("d", 1)), (curve("a", 1), curve("a", 1))],
            "w1(b2,a1) = (d1,a1)",
        )
        ledger.add_pair(
            curve("d", 1), curve("a", 1),
            bmul(w1, w(curve("b", 2), curve("a", 1)), binv(w1)),
        )
        w2 = bmul(
            w(curve("b", 3), curve("a", 1)),
            w(curve("c", 2), curve("a", 1)),
            w(curve("a", 3), curve("a", 1)),
            w(curve("b", 3), curve("a", 1)),
        )
        self._require_word_eq(
            w2, "B3 A1^-1 C2 A1^-1 A3 A1^-1 B3 A1^-1", "second d-slide word"
        )
        self._require_image(
            w2, [(curve("d", 1), curve("d", 2)), (curve("a", 1), curve("a", 1))],
            "w2(d1,a1) = (d2,a1)",
        )
        ledger.add_pair(
            curve("d", 2), curve("a", 1),
            bmul(w2, w(curve("d", 1), curve("a", 1)), binv(w2)),
        )
        self.trace.append("d-slides")

    def lantern_step(self, ledger: PairLedger) -> CompilationResult:
        """Break out of the difference subgroup: assemble the twist about a_3."""
        self._d_pairs(ledger)
        w = ledger.witness
        a3 = bmul(
            w(curve("a", 2), curve("c", 2)),
            w(curve("d", 1), curve("a", 1)),
            w(curve("d", 2), curve("c", 1)),
        )
        self._require_relation(a3, self._twist(curve("a", 3)), "lantern step: A3")
        self.trace.append("lantern")
        return CompilationResult(
            target=Symbol("A", 3), set_key=self.gen_set.key, genus=self.genus,
            block=a3, length=a3.length, trace=tuple(self.trace),
            verified=True, _cap=self.flat_cap,
        )

    # -- top level -----------------------------------------------------------

    def _targets(self):
        for fam in "ABC":
            for i in range(1, self.genus + 1):
                yield Symbol(fam, i)

    def compile_all(self) -> list[CompilationResult]:
        if self.gen_set.key == "lickorish":
            return self._compile_lickorish()
        ledger = self.seed_ledger()
        self.saturate_rotation(ledger)
        self.cross_family_pairs(ledger)
        a3 = self.lantern_step(ledger)
        results = []
        for sym in self._targets():
            cid = curve(sym.family.lower(), sym.index)
            blk = bmul(ledger.witness(cid, curve("a", 3)), a3.block)
            self._require_relation(blk, self._twist(cid), f"target {sym.text()}")
            results.append(CompilationResult(
                target=sym, set_key=self.gen_set.key, genus=self.genus,
                block=blk, length=blk.length,
                trace=tuple(self.trace) + (f"difference-route:{cid.text()}->a3",),
                verified=True, _cap=self.flat_cap,
            ))
        return results

    def _compile_lickorish(self) -> list[CompilationResult]:
        r, a1, b1, c1 = self.atoms
        base = {"A": a1, "B": b1, "C": c1}
        results = []
        for sym in self._targets():
            blk = base[sym.family] if sym.index == 1 else bconj(bpow(r, sym.index - 1), base[sym.family])
            cid = curve(sym.family.lower(), sym.index)
            self._require_relation(blk, self._twist(cid), f"target {sym.text()}")
            results.append(CompilationResult(
                target=sym, set_key=self.gen_set.key, genus=self.genus,
                block=blk, length=blk.length,
                trace=("rotation-conjugation",), verified=True, _cap=self.flat_cap,
            ))
        return results


def compile_set(set_key: str, genus: int, rep: SurfaceRep | None = None) -> list[CompilationResult]:
    return Compiler(set_key, genus, rep=rep).compile_all()
