"""
Permutations on ``{1..n}``, constellations ``[sigma, alpha, phi]`` and the
combinatorial data of the surface they describe.

Permutations act on the left: ``compose(p, q)(i) == p(q(i))``.

>>> p = Permutation.from_cycles([[1, 3, 2]], 3)
>>> p.images
(3, 1, 2)
>>> torus = Constellation.from_cycles(4, [[1, 2, 3, 4]], [[1, 3], [2, 4]], [[1, 2, 3, 4]])
>>> surface_data(torus).genus
1
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "Permutation", "Constellation", "ValidationReport", "SurfaceData",
    "Overflow", "InvalidConstellation",
    "compose", "inverse", "cycles", "validate_constellation", "surface_data",
    "monodromy_order", "random_constellation", "orbit",
]

DEFAULT_MONODROMY_CAP = 100_000


class InvalidConstellation(ValueError):
    """Raised when an operation needs a valid constellation and did not get one."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}`` in one-line notation (``images[i-1]`` is the image of ``i``)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        n = len(images)
        if n < 1:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycle_list: Iterable[Sequence[int]], n: int) -> Permutation:
        """Build from disjoint cycles; points not mentioned are fixed."""
        images = list(range(1, n + 1))
        seen = set()
        for cyc in cycle_list:
            cyc = [int(c) for c in cyc]
            for c in cyc:
                if not 1 <= c <= n:
                    raise ValueError(f"point {c} outside 1..{n}")
                if c in seen:
                    raise ValueError(f"point {c} appears twice in the cycles")
                seen.add(c)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        return inverse(self)

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, 1))

    def __str__(self):
        cs = [c for c in cycles(self) if len(c) > 1]
        if not cs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-action composite ``i -> p(q(i))``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    pi = p.images
    return Permutation(tuple(pi[j - 1] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, img in enumerate(p.images, 1):
        inv[img - 1] = i
    return Permutation(tuple(inv))


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """
    Disjoint cycles of ``p``, each starting at its minimum, ordered by that minimum.
    Fixed points are reported as 1-cycles.

    >>> cycles(Permutation((3, 4, 1, 2)))
    [(1, 3), (2, 4)]
    """
    seen = [False] * (p.degree + 1)
    out = []
    for start in range(1, p.degree + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p(i)
        out.append(tuple(cyc))
    return out


def orbit(point: int, generators: Sequence[Permutation]) -> set[int]:
    """Orbit of ``point`` under the group generated by ``generators``."""
    found = {point}
    todo = [point]
    while todo:
        i = todo.pop()
        for g in generators:
            j = g(i)
            if j not in found:
                found.add(j)
                todo.append(j)
    return found


@dataclass(frozen=True)
class Constellation:
    """
    A 3-constellation ``[sigma, alpha, phi]`` on ``degree = 2N`` half-edges.

    ``sigma`` rotates half-edges around vertices, ``alpha`` pairs them into
    edges and ``phi`` walks around faces. Construction does not validate; use
    :func:`validate_constellation`.
    """

    sigma: Permutation
    alpha: Permutation
    phi: Permutation

    def __post_init__(self):
        if not (self.sigma.degree == self.alpha.degree == self.phi.degree):
            raise ValueError(
                f"degree mismatch: {self.sigma.degree}, {self.alpha.degree}, {self.phi.degree}")

    @property
    def degree(self) -> int:
        return self.sigma.degree

    @classmethod
    def from_cycles(cls, degree, sigma, alpha, phi=None) -> Constellation:
        """Build from cycle lists. If ``phi`` is omitted it is solved from ``sigma alpha phi = 1``."""
        s = Permutation.from_cycles(sigma, degree)
        a = Permutation.from_cycles(alpha, degree)
        if phi is None:
            f = inverse(compose(s, a))
        else:
            f = Permutation.from_cycles(phi, degree)
        return cls(s, a, f)

    @classmethod
    def from_sigma_alpha(cls, sigma: Permutation, alpha: Permutation) -> Constellation:
        return cls(sigma, alpha, inverse(compose(sigma, alpha)))

    def to_dict(self) -> dict:
        def cyc(p):
            return [list(c) for c in cycles(p) if len(c) > 1]
        return {"degree": self.degree, "sigma": cyc(self.sigma),
                "alpha": cyc(self.alpha), "phi": cyc(self.phi)}

    @classmethod
    def from_dict(cls, data: dict) -> Constellation:
        try:
            degree = int(data["degree"])
            # phi is determined by sigma and alpha; when omitted it is derived
            return cls.from_cycles(degree, data["sigma"], data["alpha"], data.get("phi"))
        except KeyError as exc:
            raise ValueError(f"constellation JSON is missing key {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Constellation:
        return cls.from_dict(json.loads(text))


class ValidationReport(NamedTuple):
    transitive: bool
    product_identity: bool
    alpha_involution_fpf: bool

    @property
    def valid(self) -> bool:
        return self.transitive and self.product_identity and self.alpha_involution_fpf


def validate_constellation(c: Constellation) -> ValidationReport:
    """
    Check the three defining conditions: ``<sigma, alpha>`` transitive,
    ``sigma alpha phi = 1`` and ``alpha`` a fixed-point-free involution.
    """
    n = c.degree
    transitive = len(orbit(1, [c.sigma, c.alpha])) == n
    product = compose(c.sigma, compose(c.alpha, c.phi)).is_identity()
    a = c.alpha
    fpf = all(a(i) != i and a(a(i)) == i for i in range(1, n + 1))
    return ValidationReport(transitive, product, fpf)


def require_valid(c: Constellation) -> None:
    report = validate_constellation(c)
    if not report.valid:
        failed = [k for k, v in report._asdict().items() if not v]
        raise InvalidConstellation("invalid constellation, failed: " + ", ".join(failed))


class SurfaceData(NamedTuple):
    vertices: int
    edges: int
    faces: int
    euler_characteristic: int
    genus: int
    ramification_degrees: tuple[int, ...]


def surface_data(c: Constellation) -> SurfaceData:
    """Vertex/edge/face counts, Euler characteristic and genus of the embedded graph."""
    require_valid(c)
    sigma_cycles = cycles(c.sigma)
    v = len(sigma_cycles)
    e = c.degree // 2
    f = len(cycles(c.phi))
    chi = v - e + f
    if chi % 2:
        raise ArithmeticError(f"odd Euler characteristic {chi} for a valid constellation")
    genus = (2 - chi) // 2
    if genus < 0:
        raise ArithmeticError(f"negative genus from Euler characteristic {chi}")
    return SurfaceData(v, e, f, chi, genus, tuple(len(s) for s in sigma_cycles))


class Overflow(NamedTuple):
    """Returned by :func:`monodromy_order` when the closure exceeds ``cap`` elements."""
    cap: int


def monodromy_order(c: Constellation, cap: int = DEFAULT_MONODROMY_CAP) -> int | Overflow:
    """
    Order of the cartographic group ``<sigma, alpha>`` by breadth-first closure.

    >>> monodromy_order(Constellation.from_cycles(4, [[1, 2, 3, 4]], [[1, 3], [2, 4]]))
    4
    """
    require_valid(c)
    gens = [c.sigma.images, c.alpha.images]
    start = tuple(range(1, c.degree + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = tuple(s[j - 1] for j in g)
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    return Overflow(cap)
                queue.append(h)
    return len(seen)


def random_involution(n: int, rng: random.Random) -> Permutation:
    """Uniform fixed-point-free involution on ``1..n`` (``n`` even)."""
    if n % 2:
        raise ValueError("fixed-point-free involutions need even degree")
    points = list(range(1, n + 1))
    rng.shuffle(points)
    return Permutation.from_cycles(zip(points[::2], points[1::2]), n)


def random_constellation(degree: int, rng: random.Random | None = None,
                         max_tries: int = 1000) -> Constellation:
    """Random valid constellation of the given even degree (rejection-sampled for transitivity)."""
    rng = rng or random.Random()
    for _ in range(max_tries):
        images = list(range(1, degree + 1))
        rng.shuffle(images)
        sigma = Permutation(tuple(images))
        alpha = random_involution(degree, rng)
        if len(orbit(1, [sigma, alpha])) == degree:
            return Constellation.from_sigma_alpha(sigma, alpha)
    raise RuntimeError(f"no transitive constellation found in {max_tries} tries")
