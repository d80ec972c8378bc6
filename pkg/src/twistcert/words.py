"""Words over the twist/rotation alphabet of the genus-g reference surface.

The alphabet consists of the twist letters A1..Ag, B1..Bg, C1..Cg, D1, D2 and
the rigid moves R (rotation of order g) and p1, p2 (the two reflection-type
involutions).  Words use functional composition order: the leftmost letter is
applied last.  Each letter carries an exponent sign of +-1; higher powers are
written by repeating the letter, which keeps free reduction a single stack
pass.

The token "p3" is accepted by the parser as a macro for R R p1 R^-1 R^-1 and
is never produced by the printer, so the printable alphabet is exactly the
generating alphabet.

Equality of mapping classes is *not* decided here; this module is purely
syntactic.  Matrix-level equality lives in `homology`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

TWIST_FAMILIES = ("A", "B", "C", "D")
ROTATION_NAMES = ("R", "p1", "p2")
CURVE_FAMILIES = ("a", "b", "c", "d")

MIN_GENUS = 3


class WordSyntaxError(ValueError):
    """Parse failure; `position` is the character offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _check_genus(genus: int) -> None:
    if genus < MIN_GENUS:
        raise ValueError(f"genus must be >= {MIN_GENUS}, got {genus}")


def _check_index(family: str, index: int | None, genus: int) -> None:
    if family in ROTATION_NAMES:
        if index is not None:
            raise ValueError(f"{family} takes no index")
        return
    if family not in TWIST_FAMILIES:
        raise ValueError(f"unknown letter family {family!r}")
    if index is None:
        raise ValueError(f"{family} requires an index")
    top = 2 if family == "D" else genus
    if not 1 <= index <= top:
        raise ValueError(f"index {index} out of range 1..{top} for {family} at genus {genus}")


@dataclass(frozen=True)
class Symbol:
    """A generator name: twist family with index, or an indexless rigid move."""

    family: str
    index: int | None = None

    def text(self) -> str:
        return self.family if self.index is None else f"{self.family}{self.index}"


@dataclass(frozen=True)
class Letter:
    symbol: Symbol
    sign: int = 1

    def inverse(self) -> "Letter":
        return _letter(self.symbol.family, self.symbol.index, -self.sign)

    def text(self) -> str:
        return self.symbol.text() + ("^-1" if self.sign < 0 else "")


# Letters are interned so that long expanded words are tuples of shared
# references rather than fresh objects.
_LETTER_CACHE: dict[tuple[str, int | None, int], Letter] = {}


def _letter(family: str, index: int | None, sign: int) -> Letter:
    key = (family, index, sign)
    lt = _LETTER_CACHE.get(key)
    if lt is None:
        lt = Letter(Symbol(family, index), sign)
        _LETTER_CACHE[key] = lt
    return lt


def letter(family: str, index: int | None = None, sign: int = 1) -> Letter:
    if sign not in (1, -1):
        raise ValueError("exponent sign must be +1 or -1")
    return _letter(family, index, sign)


@dataclass(frozen=True)
class Word:
    """A finite product of signed letters at a fixed genus (leftmost applied last)."""

    genus: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        _check_genus(self.genus)
        for lt in self.letters:
            _check_index(lt.symbol.family, lt.symbol.index, self.genus)
            if lt.sign not in (1, -1):
                raise ValueError("exponent sign must be +1 or -1")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return compose(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        if k == 0:
            return Word(self.genus)
        base = self if k > 0 else invert(self)
        return Word(base.genus, base.letters * abs(k))

    def __str__(self) -> str:
        return format_word(self)

    def is_identity(self) -> bool:
        return not self.letters


@dataclass(frozen=True)
class CurveId:
    """Name of one of the reference curves: a_i, b_i, c_i (i mod g) or d_1, d_2."""

    family: str
    index: int

    def __post_init__(self):
        if self.family not in CURVE_FAMILIES:
            raise ValueError(f"unknown curve family {self.family!r}")

    def validate(self, genus: int) -> "CurveId":
        _check_genus(genus)
        top = 2 if self.family == "d" else genus
        if not 1 <= self.index <= top:
            raise ValueError(f"curve {self.family}{self.index} out of range at genus {genus}")
        return self

    def shifted(self, k: int, genus: int) -> "CurveId":
        if self.family == "d":
            raise ValueError("d-curves have no rotation shift")
        return CurveId(self.family, (self.index - 1 + k) % genus + 1)

    def text(self) -> str:
        return f"{self.family}{self.index}"


def curve(family: str, index: int) -> CurveId:
    return CurveId(family, index)


_TWIST_TOKEN = re.compile(r"([ABCD])([0-9]+)(\^-1)?\Z")
_ROT_TOKEN = re.compile(r"(R|p1|p2|p3)(\^-1)?\Z")


def _rho3_letters(sign: int) -> tuple[Letter, ...]:
    # R^2 p1 R^-2, inverted in place when sign is -1
    return (
        _letter("R", None, 1),
        _letter("R", None, 1),
        _letter("p1", None, sign),
        _letter("R", None, -1),
        _letter("R", None, -1),
    )


def parse_word(text: str, genus: int) -> Word:
    """Parse whitespace-separated tokens like ``A1 C2^-1 R p1`` into a Word."""
    _check_genus(genus)
    letters: list[Letter] = []
    for m in re.finditer(r"\S+", text):
        token, pos = m.group(), m.start()
        tm = _TWIST_TOKEN.match(token)
        if tm:
            family, index, sign = tm.group(1), int(tm.group(2)), -1 if tm.group(3) else 1
            try:
                _check_index(family, index, genus)
            except ValueError as exc:
                raise WordSyntaxError(str(exc), pos) from None
            letters.append(_letter(family, index, sign))
            continue
        rm = _ROT_TOKEN.match(token)
        if rm:
            name, sign = rm.group(1), -1 if rm.group(2) else 1
            if name == "p3":
                letters.extend(_rho3_letters(sign))
            else:
                letters.append(_letter(name, None, sign))
            continue
        raise WordSyntaxError(f"unrecognized token {token!r}", pos)
    return Word(genus, tuple(letters))


def format_word(w: Word) -> str:
    return " ".join(lt.text() for lt in w.letters)


def compose(u: Word, v: Word) -> Word:
    """Concatenate u then v; u's letters come first, i.e. u is applied last."""
    if u.genus != v.genus:
        raise ValueError(f"genus mismatch: {u.genus} != {v.genus}")
    return Word(u.genus, u.letters + v.letters)


def invert(w: Word) -> Word:
    return Word(w.genus, tuple(lt.inverse() for lt in reversed(w.letters)))


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain (single stack pass)."""
    stack: list[Letter] = []
    for lt in w.letters:
        if stack and stack[-1].symbol == lt.symbol and stack[-1].sign == -lt.sign:
            stack.pop()
        else:
            stack.append(lt)
    return Word(w.genus, tuple(stack))


def conjugate(f: Word, w: Word, reduce: bool = False) -> Word:
    """Return f w f^-1 (outermost factor f, matching functional order)."""
    result = compose(compose(f, w), invert(f))
    return free_reduce(result) if reduce else result


def rotation_power(genus: int, k: int) -> Word:
    """The word R^k (negative k gives inverse letters)."""
    _check_genus(genus)
    if k == 0:
        return Word(genus)
    return Word(genus, (_letter("R", None, 1 if k > 0 else -1),) * abs(k))


def rotate_shift(w: Word, k: int) -> Word:
    """Shift every twist index by k (mod genus, into 1..g).

    Defined only for words in the A/B/C families; this is the syntactic
    counterpart of conjugation by R^k, and the two are checked to agree in
    the representation by the verifier.
    """
    shifted = []
    for lt in w.letters:
        fam = lt.symbol.family
        if fam not in ("A", "B", "C"):
            raise ValueError(f"rotate_shift undefined for letter {lt.text()!r}")
        new_index = (lt.symbol.index - 1 + k) % w.genus + 1
        shifted.append(_letter(fam, new_index, lt.sign))
    return Word(w.genus, tuple(shifted))


def twist_word(genus: int, *pairs) -> Word:
    """Convenience builder: twist_word(3, ("A", 1, 1), ("B", 2, -1)) etc."""
    return Word(genus, tuple(_letter(f, i, s) for (f, i, s) in pairs))
