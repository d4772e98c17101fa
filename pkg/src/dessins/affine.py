"""
The affine symmetric group in window notation.

An affine permutation is a bijection ``s: Z -> Z`` with ``s(r + n) = s(r) + n``
and ``s(1) + ... + s(n) = n(n+1)/2``. It is stored as its window
``[s(1), ..., s(n)]``.

>>> u = AffinePermutation(2, (0, 3))
>>> [u(i) for i in range(-1, 5)]
[-2, 1, 0, 3, 2, 5]
>>> split(u)
AffineSplit(finite=(2, 1), translation=(-1, 1))
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .laurent import Laurent, LaurentMatrix
from .permgroup import Permutation

__all__ = [
    "AffinePermutation", "AffineSplit", "validate_window", "apply", "compose",
    "inverse", "split", "generator", "winding_numbers", "to_matrix",
    "identity", "random_word",
]


def validate_window(n: int, window: Sequence[int]) -> bool:
    if n < 1 or len(window) != n:
        return False
    if len({a % n for a in window}) != n:
        return False
    return sum(window) == n * (n + 1) // 2


@dataclass(frozen=True)
class AffinePermutation:
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(a) for a in self.window)
        object.__setattr__(self, "window", window)
        if not validate_window(self.n, window):
            raise ValueError(f"invalid window for n={self.n}: {list(window)}")

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + self.n * q

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def __str__(self):
        return "[" + ", ".join(map(str, self.window)) + "]"


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(1, n + 1)))


def apply(s: AffinePermutation, i: int) -> int:
    return s(i)


def compose(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    """``i -> u(v(i))``."""
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} != {v.n}")
    return AffinePermutation(u.n, tuple(u(a) for a in v.window))


def inverse(u: AffinePermutation) -> AffinePermutation:
    n = u.n
    inv = [0] * n
    for i, a in enumerate(u.window, 1):
        q, r = divmod(a - 1, n)
        # u(i) = r+1 + qn, so u^{-1}(r+1) = i - qn
        inv[r] = i - q * n
    return AffinePermutation(n, tuple(inv))


class AffineSplit(NamedTuple):
    """``window[i] = finite[i] + n * translation[i]`` with ``finite`` in one-line notation."""
    finite: tuple[int, ...]
    translation: tuple[int, ...]

    def finite_permutation(self) -> Permutation:
        return Permutation(self.finite)


def split(s: AffinePermutation) -> AffineSplit:
    n = s.n
    finite, trans = [], []
    for a in s.window:
        q, r = divmod(a - 1, n)
        finite.append(r + 1)
        trans.append(q)
    return AffineSplit(tuple(finite), tuple(trans))


def winding_numbers(s: AffinePermutation) -> tuple[int, ...]:
    """How often each strand wraps the cylinder; positive means clockwise."""
    return split(s).translation


def generator(i: int, n: int) -> AffinePermutation:
    """Coxeter generator: swaps ``i, i+1`` for ``i < n``; ``i = n`` swaps ``0`` and ``1`` (mod n)."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} outside 1..{n}")
    w = list(range(1, n + 1))
    if i < n:
        w[i - 1], w[i] = w[i], w[i - 1]
    else:
        w[0] -= 1
        w[-1] += 1
    return AffinePermutation(n, tuple(w))


def to_matrix(s: AffinePermutation) -> LaurentMatrix:
    """Monomial matrix of ``e_j -> e_{s(j)}`` with ``e_{r + tn} = x^t e_r``."""
    n = s.n
    rows = [[Laurent.zero()] * n for _ in range(n)]
    for j, a in enumerate(s.window):
        t, r = divmod(a - 1, n)
        rows[r][j] = Laurent.monomial(t)
    return LaurentMatrix(rows)


def random_word(n: int, length: int, rng: random.Random) -> AffinePermutation:
    """Product of ``length`` random Coxeter generators."""
    out = identity(n)
    for _ in range(length):
        out = compose(out, generator(rng.randint(1, n), n))
    return out
