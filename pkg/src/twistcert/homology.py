"""Integral symplectic model of the reference genus-g surface.

H1 basis is ordered [a_1],[b_1],[a_2],[b_2],...,[a_g],[b_g].  The
intersection form pairs <a_i,b_i> = +1 by default; constructing the model
with pairing=-1 flips the form globally, which is the regression knob for
convention independence.  A right twist about a class c acts as
x -> x + <x,c>c, so twist matrices are blind to the sign of c.

Classes of the named curves:

* [a_i], [b_i] are basis vectors.
* [c_i] = s_lead*[a_i] + s_trail*[a_{i+1}] (index mod g).  The connecting
  curve threads handles i and i+1, so its class pairs once with b_i and
  once with b_{i+1} and is orthogonal to every a-class.  The two signs are
  fixed by the constraint solver below.
* [d_1] = M(w1)[b_2] and [d_2] = M(w2)[d_1], where w1, w2 are the two
  four-factor slide words; the classes are never entered by hand and are
  cross-validated by the lantern relation.

The rotation R acts as the handle shift with all +1 signs (the wrap sign is
forced by R^g = I); rho1 is the signed handle reflection k -> 4-k; rho2 is
rho1^-1 R.  solve_sign_model enumerates all candidate sign assignments,
keeps every one satisfying the model constraints (involution identities,
symplecticity, the unsigned curve images, the lantern relation), and takes
the first in enumeration order as canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .matrices import (
    Mat,
    Vec,
    identity,
    mat_mul,
    mat_vec,
    mat_pow,
    transpose,
)
from .words import CurveId, Letter, Word, curve, parse_word

W1_TEXT = "B2 A1^-1 C1 A1^-1 A1 A2^-1 C2 A1^-1"
W2_TEXT = "B3 A1^-1 C2 A1^-1 A3 A1^-1 B3 A1^-1"
LANTERN_LHS = "A1 C1 C2 A3"
LANTERN_RHS = "A2 D1 D2"


class SignModelError(RuntimeError):
    """No sign assignment satisfies the model constraints (an internal fault)."""


@dataclass(frozen=True)
class SignAssignment:
    rotation_wrap_a: int
    rotation_wrap_b: int
    reflection_sign: int
    c_lead: int
    c_trail: int

    def as_dict(self) -> dict:
        return {
            "rotation_wrap": [self.rotation_wrap_a, self.rotation_wrap_b],
            "reflection_sign": self.reflection_sign,
            "c_signs": [self.c_lead, self.c_trail],
        }


@dataclass(frozen=True)
class InvolutionModel:
    """Matrices of rho1, rho2, R together with the sign choices behind them."""

    genus: int
    pairing: int
    rho1: Mat
    rho2: Mat
    rotation: Mat
    signs: SignAssignment
    all_satisfying: tuple[SignAssignment, ...]

    def sign_record(self) -> dict:
        rec = {"pairing": self.pairing}
        rec.update(self.signs.as_dict())
        rec["satisfying_models"] = [s.as_dict() for s in self.all_satisfying]
        return rec


def _handle_reflection(k: int, genus: int) -> int:
    return (4 - k - 1) % genus + 1


class SurfaceRep:
    """Exact symplectic representation at a fixed genus and pairing convention.

    `signs` forces a particular satisfying sign assignment (it must be one of
    the solver's solutions); by default the canonical assignment is used.
    """

    def __init__(self, genus: int, pairing: int = 1, signs: SignAssignment | None = None):
        if genus < 3:
            raise ValueError(f"genus must be >= 3, got {genus}")
        if pairing not in (1, -1):
            raise ValueError("pairing must be +1 or -1")
        self.genus = genus
        self.pairing = pairing
        self.dim = 2 * genus
        self.J = self._intersection_form()
        solved = _solve_sign_model(genus, pairing)
        if signs is None or signs == solved.signs:
            self.model = solved
        else:
            if signs not in solved.all_satisfying:
                raise ValueError("sign assignment does not satisfy the model constraints")
            self.model = InvolutionModel(
                genus=genus,
                pairing=pairing,
                rho1=_reflection_matrix(genus, signs.reflection_sign),
                rho2=mat_mul(
                    _reflection_matrix(genus, signs.reflection_sign),
                    _rotation_matrix(genus, signs.rotation_wrap_a, signs.rotation_wrap_b),
                ),
                rotation=_rotation_matrix(genus, signs.rotation_wrap_a, signs.rotation_wrap_b),
                signs=signs,
                all_satisfying=solved.all_satisfying,
            )
        self.rho1 = self.model.rho1
        self.rho2 = self.model.rho2
        self.rotation = self.model.rotation
        self._letter_ops: dict[tuple[str, int | None, int], tuple] = {}
        self._letter_mats: dict[tuple[str, int | None, int], Mat] = {}
        self._block_cache: dict[int, Mat] = {}
        self._install_letter_ops()

    # -- basis and pairing ------------------------------------------------

    def _intersection_form(self) -> Mat:
        return _form_matrix(self.genus, self.pairing)

    def basis_index(self, family: str, i: int) -> int:
        if family == "a":
            return 2 * (i - 1)
        if family == "b":
            return 2 * (i - 1) + 1
        raise ValueError(f"no basis vector for family {family!r}")

    def basis_vector(self, family: str, i: int) -> Vec:
        v = [0] * self.dim
        v[self.basis_index(family, i)] = 1
        return tuple(v)

    def form_apply(self, v: Vec) -> Vec:
        """J*v, using the 2x2 block structure."""
        out = [0] * self.dim
        for i in range(self.genus):
            out[2 * i] = self.pairing * v[2 * i + 1]
            out[2 * i + 1] = -self.pairing * v[2 * i]
        return tuple(out)

    def pair(self, u: Vec, v: Vec) -> int:
        jv = self.form_apply(v)
        return sum(x * y for x, y in zip(u, jv))

    # -- named curve classes ----------------------------------------------

    def curve_class(self, c: CurveId) -> Vec:
        c.validate(self.genus)
        if c.family in ("a", "b"):
            return self.basis_vector(c.family, c.index)
        if c.family == "c":
            return _c_class(self.genus, c.index, self.model.signs)
        return self._d_classes()[c.index - 1]

    def _d_classes(self) -> tuple[Vec, Vec]:
        if not hasattr(self, "_d_pair"):
            w1 = parse_word(W1_TEXT, self.genus)
            w2 = parse_word(W2_TEXT, self.genus)
            d1 = mat_vec(self.word_matrix(w1), self.basis_vector("b", 2))
            d2 = mat_vec(self.word_matrix(w2), d1)
            self._d_pair = (d1, d2)
        return self._d_pair

    # -- twist and word matrices --------------------------------------------

    def transvection(self, v: Vec) -> Mat:
        """Matrix of x -> x + <x,c>c; equals transvection(-c)."""
        if len(v) != self.dim:
            raise ValueError(f"expected vector of length {self.dim}, got {len(v)}")
        jv = self.form_apply(v)
        return tuple(
            tuple((1 if i == j else 0) + v[i] * jv[j] for j in range(self.dim))
            for i in range(self.dim)
        )

    def _install_letter_ops(self):
        # Twist letters first: C-classes are needed to evaluate the d-words,
        # D-letter data is attached afterwards.
        for fam, cf in (("A", "a"), ("B", "b"), ("C", "c")):
            for i in range(1, self.genus + 1):
                self._register_twist(fam, i, self.curve_class(curve(cf, i)))
        for name, mat in (("R", self.rotation), ("p1", self.rho1), ("p2", self.rho2)):
            self._register_perm(name, mat)
        for i in (1, 2):
            self._register_twist("D", i, self.curve_class(curve("d", i)))

    def _register_twist(self, family: str, index: int, cls: Vec):
        jc = self.form_apply(cls)
        for sign in (1, -1):
            self._letter_ops[(family, index, sign)] = ("twist", cls, jc, sign)

    def _register_perm(self, name: str, mat: Mat):
        colmaps = {1: _column_map(mat), -1: _column_map(transpose(mat))}
        for sign in (1, -1):
            self._letter_ops[(name, None, sign)] = ("perm", colmaps[sign])

    def letter_matrix(self, lt: Letter) -> Mat:
        key = (lt.symbol.family, lt.symbol.index, lt.sign)
        m = self._letter_mats.get(key)
        if m is None:
            op = self._letter_ops[key]
            if op[0] == "twist":
                _, cls, jc, sign = op
                m = tuple(
                    tuple((1 if i == j else 0) + sign * cls[i] * jc[j] for j in range(self.dim))
                    for i in range(self.dim)
                )
            else:
                colmap = op[1]
                rows = [[0] * self.dim for _ in range(self.dim)]
                for j, (k, s) in enumerate(colmap):
                    rows[k][j] = s
                m = tuple(tuple(r) for r in rows)
            self._letter_mats[key] = m
        return m

    def word_matrix(self, w: Word) -> Mat:
        """Evaluate a word to its exact matrix (product of letter matrices)."""
        if w.genus != self.genus:
            raise ValueError(f"word has genus {w.genus}, model has genus {self.genus}")
        n = self.dim
        acc = [list(row) for row in identity(n)]
        for lt in w.letters:
            op = self._letter_ops[(lt.symbol.family, lt.symbol.index, lt.sign)]
            if op[0] == "twist":
                # acc <- acc * (I + sign * c (Jc)^T): a rank-one column update
                _, cls, jc, sign = op
                for row in acc:
                    u = sign * sum(x * y for x, y in zip(row, cls))
                    if u:
                        for j in range(n):
                            if jc[j]:
                                row[j] += u * jc[j]
            else:
                colmap = op[1]
                for i in range(n):
                    row = acc[i]
                    acc[i] = [s * row[k] for (k, s) in colmap]
        return tuple(tuple(row) for row in acc)

    def image_class(self, w: Word, c: CurveId) -> Vec:
        return mat_vec(self.word_matrix(w), self.curve_class(c))

    # -- structural checks ---------------------------------------------------

    def is_symplectic(self, m: Mat) -> bool:
        return mat_mul(mat_mul(transpose(m), self.J), m) == self.J

    def symplectic_inverse(self, m: Mat) -> Mat:
        """Inverse of a symplectic matrix: J^-1 M^T J (exact, no division)."""
        jinv = tuple(tuple(-x for x in row) for row in self.J)
        return mat_mul(mat_mul(jinv, transpose(m)), self.J)


def _column_map(mat: Mat) -> tuple[tuple[int, int], ...]:
    """(row, sign) of the single nonzero entry in each column of a signed permutation."""
    n = len(mat)
    cols = []
    for j in range(n):
        hits = [(i, mat[i][j]) for i in range(n) if mat[i][j]]
        if len(hits) != 1 or hits[0][1] not in (1, -1):
            raise ValueError("not a signed permutation matrix")
        cols.append(hits[0])
    return tuple(cols)


def _c_class(genus: int, i: int, signs: SignAssignment) -> Vec:
    v = [0] * (2 * genus)
    v[2 * (i - 1)] = signs.c_lead
    v[2 * (i % genus)] = signs.c_trail
    return tuple(v)


def _rotation_matrix(genus: int, wrap_a: int, wrap_b: int) -> Mat:
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for k in range(1, genus + 1):
        t = k % genus + 1
        sa = wrap_a if k == genus else 1
        sb = wrap_b if k == genus else 1
        rows[2 * (t - 1)][2 * (k - 1)] = sa
        rows[2 * (t - 1) + 1][2 * (k - 1) + 1] = sb
    return tuple(tuple(r) for r in rows)


def _reflection_matrix(genus: int, sign: int) -> Mat:
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for k in range(1, genus + 1):
        t = _handle_reflection(k, genus)
        rows[2 * (t - 1)][2 * (k - 1)] = sign
        rows[2 * (t - 1) + 1][2 * (k - 1) + 1] = sign
    return tuple(tuple(r) for r in rows)


def _is_symplectic(m: Mat, j: Mat) -> bool:
    return mat_mul(mat_mul(transpose(m), j), m) == j


def _proportional_to_basis(v: Vec, idx: int) -> bool:
    return all((x in (1, -1)) if i == idx else x == 0 for i, x in enumerate(v))


def _sign_multiple(u: Vec, v: Vec) -> bool:
    return u == v or u == tuple(-x for x in v)


def _form_matrix(genus: int, pairing: int) -> Mat:
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(genus):
        rows[2 * i][2 * i + 1] = pairing
        rows[2 * i + 1][2 * i] = -pairing
    return tuple(tuple(r) for r in rows)


def _candidate_satisfies(genus: int, pairing: int, cand: SignAssignment) -> bool:
    n = 2 * genus
    form = _form_matrix(genus, pairing)

    rot = _rotation_matrix(genus, cand.rotation_wrap_a, cand.rotation_wrap_b)
    rho1 = _reflection_matrix(genus, cand.reflection_sign)
    rho2 = mat_mul(rho1, rot)  # rho1^-1 R with rho1^2 = I checked below

    ident = identity(n)
    if mat_mul(rho1, rho1) != ident or mat_mul(rho2, rho2) != ident:
        return False
    if mat_pow(rot, genus) != ident:
        return False
    if mat_mul(rho1, rho2) != rot:
        return False
    for m in (rot, rho1, rho2):
        if not _is_symplectic(m, form):
            return False

    def basis(fam, i):
        v = [0] * n
        v[2 * (i - 1) + (0 if fam == "a" else 1)] = 1
        return tuple(v)

    # Unsigned curve images: rho1: a1->a3, b1->b3, c1->c2; rho2: a1->a2.
    if not _proportional_to_basis(mat_vec(rho1, basis("a", 1)), 2 * 2):
        return False
    if not _proportional_to_basis(mat_vec(rho1, basis("b", 1)), 2 * 2 + 1):
        return False
    if not _proportional_to_basis(mat_vec(rho2, basis("a", 1)), 2):
        return False
    c1, c2 = _c_class(genus, 1, cand), _c_class(genus, 2, cand)
    if not _sign_multiple(mat_vec(rho1, c1), c2):
        return False

    # Lantern relation with the twist-word-derived d-classes.
    def transv(v, inv=False):
        jv = mat_vec(form, v)
        s = -1 if inv else 1
        return tuple(
            tuple((1 if p == q else 0) + s * v[p] * jv[q] for q in range(n))
            for p in range(n)
        )

    def apply_word(pairs, vec):
        # pairs as (class-vector, sign), leftmost applied last
        for v, s in reversed(pairs):
            jv = mat_vec(form, v)
            coeff = s * sum(x * y for x, y in zip(vec, jv))
            vec = tuple(x + coeff * y for x, y in zip(vec, v))
        return vec

    a = [None] + [basis("a", i) for i in range(1, genus + 1)]
    b = [None] + [basis("b", i) for i in range(1, genus + 1)]
    c = [None] + [_c_class(genus, i, cand) for i in range(1, genus + 1)]
    w1 = [(b[2], 1), (a[1], -1), (c[1], 1), (a[1], -1), (a[1], 1), (a[2], -1), (c[2], 1), (a[1], -1)]
    d1 = apply_word(w1, b[2])
    w2 = [(b[3], 1), (a[1], -1), (c[2], 1), (a[1], -1), (a[3], 1), (a[1], -1), (b[3], 1), (a[1], -1)]
    d2 = apply_word(w2, d1)
    lhs = mat_mul(mat_mul(transv(a[1]), transv(c[1])), mat_mul(transv(c[2]), transv(a[3])))
    rhs = mat_mul(transv(a[2]), mat_mul(transv(d1), transv(d2)))
    return lhs == rhs


@lru_cache(maxsize=None)
def _solve_sign_model(genus: int, pairing: int) -> InvolutionModel:
    satisfying = []
    for wrap_a, wrap_b, refl, lead, trail in itertools.product((1, -1), repeat=5):
        cand = SignAssignment(wrap_a, wrap_b, refl, lead, trail)
        if _candidate_satisfies(genus, pairing, cand):
            satisfying.append(cand)
    if not satisfying:
        raise SignModelError(f"no sign assignment satisfies the constraints at genus {genus}")
    chosen = satisfying[0]
    return InvolutionModel(
        genus=genus,
        pairing=pairing,
        rho1=_reflection_matrix(genus, chosen.reflection_sign),
        rho2=mat_mul(_reflection_matrix(genus, chosen.reflection_sign),
                     _rotation_matrix(genus, chosen.rotation_wrap_a, chosen.rotation_wrap_b)),
        rotation=_rotation_matrix(genus, chosen.rotation_wrap_a, chosen.rotation_wrap_b),
        signs=chosen,
        all_satisfying=tuple(satisfying),
    )


def involution_matrices(genus: int, pairing: int = 1) -> InvolutionModel:
    """Solve for the rho1/rho2/R matrices at this genus (cached)."""
    return _solve_sign_model(genus, pairing)


@lru_cache(maxsize=None)
def surface_rep(genus: int, pairing: int = 1) -> SurfaceRep:
    return SurfaceRep(genus, pairing)


def involution_product(rho: Word, x: Word, y: Word, rep: SurfaceRep | None = None) -> Word:
    """Build rho x y^-1 after certifying rho^2 = 1 and rho x rho^-1 = y.

    With those two hypotheses the product squares to the identity; the check
    runs in the representation and a failed hypothesis raises ValueError
    rather than returning a word with no involution guarantee.
    """
    rep = rep or surface_rep(rho.genus)
    mr = rep.word_matrix(rho)
    if mat_mul(mr, mr) != identity(rep.dim):
        raise ValueError("hypothesis check failed: rho does not square to the identity")
    lhs = mat_mul(mat_mul(mr, rep.word_matrix(x)), rep.symplectic_inverse(mr))
    if lhs != rep.word_matrix(y):
        raise ValueError("hypothesis check failed: rho x rho^-1 != y in the representation")
    return rho * x * ~y
