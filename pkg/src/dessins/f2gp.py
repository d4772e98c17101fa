"""
Words in the free group on ``x, y`` that survive in the Gel'fand-Ponomarev
algebra ``k<x, y>/(xy, yx)``, their binary encoding, the word order, string
modules and the ``sl_2`` action on binary forms.

Words are stored left to right as runs ``(letter, exponent)``. A word is a
path from the base point ``e0`` read from its rightmost letter, so ``l . w``
extends the path of ``w`` by the step ``l``.

>>> w = parse_word("x^2*y^-3*x^3*y^-2")
>>> w.direction, encode(w)
('right', ('1100011100', 2))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from . import ratmat
from .ratmat import Matrix

__all__ = [
    "ReducedWord", "StringModule", "Sl2Rep", "NotReduced", "ZeroInQuotient",
    "validate_word", "parse_word", "encode", "decode", "compare", "sort_words",
    "string_module", "sym_rep", "all_words", "LESS", "EQUAL", "GREATER",
]

LESS, EQUAL, GREATER = -1, 0, 1

RIGHT_LETTERS = frozenset({("x", 1), ("y", -1)})
LEFT_LETTERS = frozenset({("x", -1), ("y", 1)})
# at every node the step by x or y sorts below the node, x^-1 or y^-1 above
_ROOT_RANK = {("y", 1): 0, ("x", 1): 1, ("x", -1): 3, ("y", -1): 4}


class NotReduced(ValueError):
    """The word contains a letter next to its inverse."""


class ZeroInQuotient(ValueError):
    """The word mixes the two directions, so it vanishes modulo ``(xy, yx)``."""


Letter = tuple[str, int]


@dataclass(frozen=True)
class ReducedWord:
    runs: tuple[tuple[str, int], ...]

    @property
    def letters(self) -> tuple[Letter, ...]:
        """Single letters ``(name, +-1)`` left to right."""
        return tuple((g, 1 if e > 0 else -1) for g, e in self.runs for _ in range(abs(e)))

    @property
    def direction(self) -> str:
        if not self.runs:
            return "empty"
        g, e = self.runs[0]
        return "right" if (g, 1 if e > 0 else -1) in RIGHT_LETTERS else "left"

    def __len__(self):
        return sum(abs(e) for _, e in self.runs)

    def prepend(self, letter: Letter) -> ReducedWord:
        return validate_word((letter,) + self.letters)

    def __str__(self):
        if not self.runs:
            return "e0"
        return "*".join(g if e == 1 else f"{g}^{e}" for g, e in self.runs)


def _runs(letters: Sequence[Letter]) -> tuple[tuple[str, int], ...]:
    runs: list[list] = []
    for g, s in letters:
        if runs and runs[-1][0] == g:
            runs[-1][1] += s
        else:
            runs.append([g, s])
    return tuple((g, e) for g, e in runs)


def validate_word(letters: Iterable[Letter]) -> ReducedWord:
    """
    Accept a sequence of letters ``(name, +-1)``.

    Raises :class:`NotReduced` for a letter beside its inverse and
    :class:`ZeroInQuotient` for a word using both directions.
    """
    seq = []
    for g, s in letters:
        if g not in ("x", "y") or s not in (1, -1):
            raise ValueError(f"bad letter {(g, s)!r}")
        seq.append((g, s))
    for (g1, s1), (g2, s2) in zip(seq, seq[1:]):
        if g1 == g2 and s1 == -s2:
            raise NotReduced(f"{_fmt((g1, s1))} next to {_fmt((g2, s2))}")
    if seq:
        dirs = {l in RIGHT_LETTERS for l in seq}
        if len(dirs) > 1:
            raise ZeroInQuotient("word mixes {x, y^-1} with {x^-1, y}")
    return ReducedWord(_runs(seq))


_TOKEN = re.compile(r"\s*([xy])\s*(?:\^\s*\(?\s*([+-]?\d+)\s*\)?)?\s*\*?")


def parse_word(text: str) -> ReducedWord:
    """
    Parse caret notation such as ``x^2*y^-3`` (the ``*`` is optional).
    ``e0``, ``e`` and the empty string denote the empty word.
    """
    s = text.strip()
    if s in ("", "e", "e0", "1"):
        return ReducedWord(())
    letters: list[Letter] = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        e = int(m.group(2)) if m.group(2) else 1
        if e == 0:
            raise ValueError(f"zero exponent in {text!r}")
        letters.extend([(m.group(1), 1 if e > 0 else -1)] * abs(e))
        pos = m.end()
    return validate_word(letters)


def _coerce(w) -> ReducedWord:
    if isinstance(w, ReducedWord):
        return w
    if isinstance(w, str):
        return parse_word(w)
    return validate_word(w)


_BITS = {("x", 1): "1", ("y", -1): "0", ("x", -1): "1", ("y", 1): "0"}


def encode(w) -> tuple[str, int | None]:
    """
    Binary string read left to right plus the Cantor copy: rightward words map
    ``x -> 1, y^-1 -> 0`` into copy 2, leftward words ``x^-1 -> 1, y -> 0``
    into copy 1. The empty word has no copy.
    """
    w = _coerce(w)
    if not w.runs:
        return "", None
    bits = "".join(_BITS[l] for l in w.letters)
    return bits, 2 if w.direction == "right" else 1


def decode(bits: str, copy: int | None) -> ReducedWord:
    if not bits:
        if copy is not None:
            raise ValueError("empty string carries no copy")
        return ReducedWord(())
    if copy not in (1, 2):
        raise ValueError(f"copy must be 1 or 2, got {copy!r}")
    table = ({"1": ("x", 1), "0": ("y", -1)} if copy == 2
             else {"1": ("x", -1), "0": ("y", 1)})
    try:
        return validate_word([table[b] for b in bits])
    except KeyError:
        raise ValueError(f"not a binary string: {bits!r}") from None


def compare(w1, w2) -> int:
    """
    Compare two words in the order generated by ``y < x < e0 < x^-1 < y^-1``
    and the extension rules ``x.w < w < y^-1.w`` (rightward) and
    ``y.w < w < x^-1.w`` (leftward). Returns ``LESS``, ``EQUAL`` or ``GREATER``.
    """
    p1 = _coerce(w1).letters[::-1]
    p2 = _coerce(w2).letters[::-1]
    k = 0
    while k < len(p1) and k < len(p2) and p1[k] == p2[k]:
        k += 1
    if k == len(p1) == len(p2):
        return EQUAL
    if k == len(p1):
        return GREATER if _is_small(p2[k]) else LESS
    if k == len(p2):
        return LESS if _is_small(p1[k]) else GREATER
    a, b = p1[k], p2[k]
    if k == 0:
        return LESS if _ROOT_RANK[a] < _ROOT_RANK[b] else GREATER
    # below the root a node has exactly one small and one large child
    return LESS if _is_small(a) else GREATER


def _is_small(letter: Letter) -> bool:
    return letter[1] == 1


def sort_words(words: Iterable) -> list[ReducedWord]:
    from functools import cmp_to_key
    return sorted((_coerce(w) for w in words), key=cmp_to_key(compare))


def all_words(max_length: int, direction: str | None = None) -> list[ReducedWord]:
    """Every valid word of length at most ``max_length`` (optionally one direction only)."""
    out = [ReducedWord(())] if direction in (None, "empty") else []
    alphabets = []
    if direction in (None, "right"):
        alphabets.append((("x", 1), ("y", -1)))
    if direction in (None, "left"):
        alphabets.append((("x", -1), ("y", 1)))
    for alpha in alphabets:
        for length in range(1, max_length + 1):
            out.extend(validate_word(p) for p in product(alpha, repeat=length))
    return out


class StringModule(NamedTuple):
    word: ReducedWord
    dim: int
    X: Matrix
    Y: Matrix

    def sinks(self) -> int:
        """Number of basis vectors killed by both ``X`` and ``Y``."""
        return sum(1 for j in range(self.dim)
                   if all(self.X[i][j] == 0 and self.Y[i][j] == 0 for i in range(self.dim)))


_ZIGZAG = re.compile(r"[xy]*")


def string_module(zigzag) -> StringModule:
    """
    String module of a zig-zag.

    A zig-zag is a string over ``x, y`` (runs alternate letters; the first run
    points forward and orientations alternate) or a valid word, whose exponent
    signs give the orientations. Basis vectors ``v_0..v_m`` sit at the lattice
    points in reading order; a forward step ``v_{t-1} -> v_t`` by ``x`` means
    ``X v_{t-1} = v_t``, a backward step means ``X v_t = v_{t-1}``.

    >>> string_module("x").X
    ((Fraction(0, 1), Fraction(0, 1)), (Fraction(1, 1), Fraction(0, 1)))
    """
    if isinstance(zigzag, str) and _ZIGZAG.fullmatch(zigzag.strip()):
        text = zigzag.strip()
        steps = []
        forward = True
        for i, ch in enumerate(text):
            if i and ch != text[i - 1]:
                forward = not forward
            steps.append((ch, forward))
        letters = [(g, 1 if f else -1) for g, f in steps]
        try:
            word = validate_word(letters)
        except ValueError as exc:
            raise ValueError(f"malformed zig-zag {zigzag!r}: {exc}") from None
    else:
        try:
            word = _coerce(zigzag)
        except ValueError as exc:
            raise ValueError(f"malformed zig-zag {zigzag!r}: {exc}") from None
        steps = [(g, s == 1) for g, s in word.letters]
    dim = len(steps) + 1
    mats = {"x": [[0] * dim for _ in range(dim)], "y": [[0] * dim for _ in range(dim)]}
    for t, (g, forward) in enumerate(steps, 1):
        src, dst = (t - 1, t) if forward else (t, t - 1)
        mats[g][dst][src] = 1
    return StringModule(word, dim, ratmat.mat(mats["x"]), ratmat.mat(mats["y"]))


class Sl2Rep(NamedTuple):
    n: int
    X: Matrix
    Y: Matrix
    H: Matrix


def sym_rep(n: int) -> Sl2Rep:
    """
    ``sl_2`` on degree-``n`` binary forms, basis ``x^n, x^(n-1) y, ..., y^n``:
    ``X = x d/dy``, ``Y = y d/dx``, ``H = diag(a - b)`` on ``x^a y^b``.
    """
    if n < 0:
        raise ValueError("symmetric power must be >= 0")
    d = n + 1
    X = [[Fraction(0)] * d for _ in range(d)]
    Y = [[Fraction(0)] * d for _ in range(d)]
    H = [[Fraction(0)] * d for _ in range(d)]
    for j in range(d):
        a, b = n - j, j
        if b:
            X[j - 1][j] = Fraction(b)
        if a:
            Y[j + 1][j] = Fraction(a)
        H[j][j] = Fraction(a - b)
    return Sl2Rep(n, ratmat.mat(X), ratmat.mat(Y), ratmat.mat(H))


def _fmt(letter: Letter) -> str:
    return letter[0] if letter[1] == 1 else f"{letter[0]}^-1"
