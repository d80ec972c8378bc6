"""Finite symplectic quotients: mod-p reduction, vector orbits, group order.

Generation claims over the integers are corroborated here in Sp(2g, F_p):
for small genus a deterministic Schreier-Sims stabilizer chain computes the
exact order of the generated matrix group (the classical order formula is
the independent oracle); for larger genus, transitivity of the generator
orbit on nonzero vectors plus the compiler's exact witness words certify
generation.  Everything is deterministic; no randomized variants.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .matrices import Mat, Vec, identity
from .homology import SurfaceRep, surface_rep


class BudgetExceeded(RuntimeError):
    """A configured resource budget ran out; carries partial progress."""

    def __init__(self, message: str, partial: dict):
        super().__init__(message)
        self.partial = partial


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def sp_order_formula(g: int, p: int) -> int:
    """|Sp(2g, F_p)| = p^(g^2) * prod_{i=1..g} (p^(2i) - 1); the order oracle."""
    if g < 1:
        raise ValueError("g must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    order = p ** (g * g)
    for i in range(1, g + 1):
        order *= p ** (2 * i) - 1
    return order


# ---------------------------------------------------------------------------
# Matrices over F_p


@dataclass(frozen=True)
class ModPMatrix:
    entries: Mat
    p: int
    genus: int


def _form_mod(genus: int, p: int, pairing: int = 1) -> Mat:
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(genus):
        rows[2 * i][2 * i + 1] = pairing % p
        rows[2 * i + 1][2 * i] = (-pairing) % p
    return tuple(tuple(r) for r in rows)


def _mul_mod(a: Mat, b: Mat, p: int) -> Mat:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt) for row in a
    )


def _vec_mod(a: Mat, v: Vec, p: int) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in a)


def _is_symplectic_mod(m: Mat, genus: int, p: int) -> bool:
    at = tuple(zip(*m))
    j = _form_mod(genus, p)
    return _mul_mod(_mul_mod(at, j, p), m, p) == j


def _inverse_mod(m: Mat, p: int) -> Mat:
    """Gauss-Jordan over F_p."""
    n = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] % p), None)
        if pivot is None:
            raise ValueError("matrix not invertible mod p")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def reduce_mod(m: Mat, p: int, genus: int | None = None) -> ModPMatrix:
    """Entrywise reduction; the symplectic invariant must survive."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    g = genus if genus is not None else len(m) // 2
    reduced = tuple(tuple(x % p for x in row) for row in m)
    if not _is_symplectic_mod(reduced, g, p):
        raise ValueError("reduction is not symplectic mod p")
    return ModPMatrix(reduced, p, g)


@dataclass(frozen=True)
class GroupUnderTest:
    generators: tuple[ModPMatrix, ...]
    genus: int
    p: int

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator")
        for m in self.generators:
            if m.p != self.p or m.genus != self.genus:
                raise ValueError("generator has mismatched p or genus")


def group_from_words(texts_or_words, genus: int, p: int,
                     rep: SurfaceRep | None = None) -> GroupUnderTest:
    from .words import parse_word

    rep = rep or surface_rep(genus)
    gens = []
    for w in texts_or_words:
        word = parse_word(w, genus) if isinstance(w, str) else w
        gens.append(reduce_mod(rep.word_matrix(word), p, genus))
    return GroupUnderTest(tuple(gens), genus, p)


# ---------------------------------------------------------------------------
# Orbit of a vector


def orbit_size(group: GroupUnderTest, v: Vec, budget: int | None = None) -> int:
    """Size of the orbit of v under the generated group (BFS closure).

    Closure under the generators alone suffices: the group is finite, so
    every inverse is a positive power.  Deterministic and independent of
    generator order (the result is a set size).
    """
    if all(x % group.p == 0 for x in v):
        raise ValueError("orbit of the zero vector is not meaningful here")
    v = tuple(x % group.p for x in v)
    if group.p == 2:
        return _orbit_size_gf2(group, v, budget)
    gens = [m.entries for m in group.generators]
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for m in gens:
            w = _vec_mod(m, u, group.p)
            if w not in seen:
                seen.add(w)
                queue.append(w)
                if budget is not None and len(seen) > budget:
                    raise BudgetExceeded("orbit budget exceeded", {"orbit_lower_bound": len(seen)})
    return len(seen)


def _orbit_size_gf2(group: GroupUnderTest, v: Vec, budget: int | None) -> int:
    # vectors as bitmasks, rows as masks; one matrix-vector product is
    # 2g popcount parities
    n = 2 * group.genus
    def pack(vec):
        mask = 0
        for i, x in enumerate(vec):
            if x & 1:
                mask |= 1 << i
        return mask

    gens = []
    for m in group.generators:
        gens.append(tuple(pack(row) for row in m.entries))
    start = pack(v)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for rows in gens:
            w = 0
            for i in range(n):
                if (rows[i] & u).bit_count() & 1:
                    w |= 1 << i
            if w not in seen:
                seen.add(w)
                queue.append(w)
                if budget is not None and len(seen) > budget:
                    raise BudgetExceeded("orbit budget exceeded", {"orbit_lower_bound": len(seen)})
    return len(seen)


# ---------------------------------------------------------------------------
# Deterministic Schreier-Sims on the vector action


class _Level:
    __slots__ = ("base", "gens", "transversal", "orbit_version", "verified_version")

    def __init__(self, base: Vec):
        self.base = base
        self.gens: list[tuple[Mat, Mat]] = []  # generators assigned at this depth
        self.transversal: dict[Vec, tuple[Mat, Mat]] = {}
        self.orbit_version = -1
        self.verified_version = -1


class StabilizerChain:
    """Deterministic Schreier-Sims for a matrix group acting on vectors mod p.

    Base points are standard basis vectors in discovery order, which always
    suffices: a matrix fixing every basis vector is the identity.  Level i's
    acting generator set is every generator assigned at depth >= i (those fix
    the first i base points).  `stabilize` sweeps bottom levels repeatedly,
    rebuilding basic orbits and sifting all Schreier generators, until a full
    sweep adds nothing; at that point the order is the product of the basic
    orbit lengths.  A proven-membership cache keeps repeat sweeps cheap.
    """

    def __init__(self, n: int, p: int, budget: int | None = None):
        self.n = n
        self.p = p
        self.levels: list[_Level] = []
        self.budget = budget
        self._work = 0
        self._identity = identity(n)
        self._version = 0          # bumped on every generator insertion
        self._proven: set[Mat] = set()  # matrices known to sift to the identity

    def _charge(self, amount: int = 1):
        if self.budget is None:
            return
        self._work += amount
        if self._work > self.budget:
            raise BudgetExceeded(
                "stabilizer-chain budget exceeded",
                {"order_lower_bound": str(self.order()), "levels": len(self.levels)},
            )

    def order(self) -> int:
        result = 1
        for lvl in self.levels:
            result *= max(1, len(lvl.transversal))
        return result

    def _first_moved_basis(self, m: Mat) -> Vec | None:
        for i in range(self.n):
            e = tuple(1 if j == i else 0 for j in range(self.n))
            if _vec_mod(m, e, self.p) != e:
                return e
        return None

    def _gens_for_level(self, i: int):
        for lvl in self.levels[i:]:
            yield from lvl.gens

    def _strip_from(self, m: Mat, start: int) -> tuple[Mat, int]:
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            image = _vec_mod(m, lvl.base, self.p)
            entry = lvl.transversal.get(image)
            if entry is None:
                return m, i
            m = _mul_mod(entry[1], m, self.p)
            self._charge()
        return m, len(self.levels)

    def _insert(self, m: Mat, start: int) -> bool:
        """Sift from `start`; assign a nontrivial residue at its strip depth.

        The basic orbit at the assignment depth is rebuilt immediately so
        that later sifts in the same pass already see the enlarged
        transversal (otherwise redundant residues pile up as generators).
        """
        if m == self._identity or m in self._proven:
            return False
        residue, depth = self._strip_from(m, start)
        if residue == self._identity:
            self._proven.add(m)
            return False
        if depth == len(self.levels):
            base = self._first_moved_basis(residue)
            if base is None:
                self._proven.add(m)
                return False
            self.levels.append(_Level(base))
        self.levels[depth].gens.append((residue, _inverse_mod(residue, self.p)))
        self._version += 1
        self._rebuild_orbit(depth)
        return True

    def _rebuild_orbit(self, i: int) -> None:
        lvl = self.levels[i]
        if lvl.orbit_version == self._version:
            return
        gens = list(self._gens_for_level(i))
        lvl.transversal = {lvl.base: (self._identity, self._identity)}
        frontier = deque([lvl.base])
        while frontier:
            pt = frontier.popleft()
            u = lvl.transversal[pt][0]
            for g, _ in gens:
                image = _vec_mod(g, pt, self.p)
                self._charge()
                if image not in lvl.transversal:
                    gu = _mul_mod(g, u, self.p)
                    lvl.transversal[image] = (gu, _inverse_mod(gu, self.p))
                    frontier.append(image)
        lvl.orbit_version = self._version

    def _sweep(self) -> bool:
        """One verification pass; returns True if any generator was added."""
        added = False
        i = 0
        while i < len(self.levels):
            lvl = self.levels[i]
            if lvl.verified_version == self._version:
                i += 1
                continue
            self._rebuild_orbit(i)
            version_at_entry = self._version
            gens = list(self._gens_for_level(i))
            points = list(lvl.transversal.keys())
            for pt in points:
                u = lvl.transversal[pt][0]
                for g, _ in gens:
                    image = _vec_mod(g, pt, self.p)
                    gu = _mul_mod(g, u, self.p)
                    s = _mul_mod(lvl.transversal[image][1], gu, self.p)
                    self._charge()
                    if self._insert(s, i + 1):
                        added = True
            if self._version == version_at_entry:
                lvl.verified_version = self._version
            i += 1
        return added

    def stabilize(self) -> None:
        while self._sweep():
            pass


def bsgs_order(group: GroupUnderTest, budget: int | None = None) -> int:
    """Exact order of the generated matrix group via a stabilizer chain."""
    chain = StabilizerChain(2 * group.genus, group.p, budget)
    for m in group.generators:
        chain._insert(m.entries, 0)
    chain.stabilize()
    return chain.order()


# ---------------------------------------------------------------------------
# Full-generation decision


@dataclass
class FiniteCheckResult:
    status: str                # "verified" | "failed"
    method: str                # "bsgs" | "orbit"
    genus: int
    p: int
    set_key: str
    order: int | None = None
    expected_order: int | None = None
    orbit: int | None = None
    expected_orbit: int | None = None
    witnesses: int | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        out = {
            "status": self.status,
            "method": self.method,
            "genus": self.genus,
            "prime": self.p,
            "set": self.set_key,
            "detail": self.detail,
        }
        for key in ("order", "expected_order", "orbit", "expected_orbit", "witnesses"):
            val = getattr(self, key)
            if val is not None:
                out[key] = str(val)
        return out


def check_full_generation_mod_p(set_key: str, genus: int, p: int,
                                method: str = "auto",
                                budget: int | None = None,
                                rep: SurfaceRep | None = None) -> FiniteCheckResult:
    """Decide whether the set's images generate all of Sp(2g, F_p).

    Small genus (or method="bsgs"): compare the stabilizer-chain order with the
    closed-form oracle.  Otherwise: orbit transitivity on nonzero vectors plus
    the compiler's exact integral witnesses for every twist generator.
    """
    from .compiler import CompilationError, Compiler, generating_set

    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    gen_set = generating_set(set_key)
    if genus < gen_set.min_genus:
        raise ValueError(
            f"set {set_key} requires genus >= {gen_set.min_genus}, got {genus}"
        )
    if method not in ("auto", "bsgs", "orbit"):
        raise ValueError(f"unknown method {method!r}")
    rep = rep or surface_rep(genus)
    group = group_from_words(gen_set.alphabet(genus), genus, p, rep=rep)
    if method == "auto":
        method = "bsgs" if genus <= 4 else "orbit"

    if method == "bsgs":
        order = bsgs_order(group, budget=budget)
        expected = sp_order_formula(genus, p)
        ok = order == expected
        return FiniteCheckResult(
            status="verified" if ok else "failed", method="bsgs",
            genus=genus, p=p, set_key=set_key,
            order=order, expected_order=expected,
            detail="stabilizer-chain order vs closed-form oracle",
        )

    basis_one = tuple(1 if i == 0 else 0 for i in range(2 * genus))
    size = orbit_size(group, basis_one, budget=budget)
    expected = p ** (2 * genus) - 1
    transitive = size == expected
    try:
        results = Compiler(set_key, genus, rep=rep).compile_all()
        witnesses = len(results)
        witnessed = True
    except (CompilationError, ValueError):
        witnesses, witnessed = 0, False
    ok = transitive and witnessed
    return FiniteCheckResult(
        status="verified" if ok else "failed", method="orbit",
        genus=genus, p=p, set_key=set_key,
        orbit=size, expected_orbit=expected, witnesses=witnesses,
        detail="orbit transitivity on nonzero vectors + exact integral witnesses",
    )
