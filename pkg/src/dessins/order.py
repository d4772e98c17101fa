"""
Hereditary orders as valuation patterns and the glued surface order of a constellation.

An order over ``R = Q[[x]]`` inside ``Mat_n(Q((x)))`` is recorded only through
entrywise lower bounds on the x-valuation. ``0`` stands for ``R`` and ``k > 0``
for ``m**k`` with ``m = xR``. The surface order is a product of hereditary
orders, one per vertex of the dessin, in which pairs of diagonal slots are
glued along the residue field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .laurent import Laurent, LaurentMatrix, X
from .permgroup import Constellation, cycles, require_valid

__all__ = [
    "ValuationPattern", "ProjectiveColumn", "SurfaceOrder",
    "hereditary_order", "projective_column", "shift_matrix", "iwahori_pattern",
    "build_surface_order", "membership", "block_pattern",
]


@dataclass(frozen=True)
class ValuationPattern:
    min_val: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        grid = tuple(tuple(int(v) for v in row) for row in self.min_val)
        if not grid or not grid[0]:
            raise ValueError("empty valuation pattern")
        if any(len(r) != len(grid[0]) for r in grid):
            raise ValueError("valuation pattern must be rectangular")
        object.__setattr__(self, "min_val", grid)

    @property
    def rows(self) -> int:
        return len(self.min_val)

    @property
    def cols(self) -> int:
        return len(self.min_val[0])

    def matches(self, m: LaurentMatrix) -> bool:
        """Every entry has valuation at least the bound; entries zero to their precision count as matching."""
        if m.shape != (self.rows, self.cols):
            raise ValueError(f"shape {m.shape} does not fit a {self.rows}x{self.cols} pattern")
        for p in range(self.rows):
            for q in range(self.cols):
                v = m[p, q].valuation
                if v is not None and v < self.min_val[p][q]:
                    return False
        return True

    def symbols(self) -> list[list[str]]:
        def sym(k):
            if k <= 0:
                return "R" if k == 0 else f"m^{k}"
            return "m" if k == 1 else f"m^{k}"
        return [[sym(v) for v in row] for row in self.min_val]

    def __str__(self):
        cells = self.symbols()
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.ljust(width) for c in r) + " ]" for r in cells)


@dataclass(frozen=True)
class ProjectiveColumn:
    vals: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vals)

    def contains(self, other: ProjectiveColumn) -> bool:
        """``other`` is a submodule: its bounds are entrywise at least ours."""
        return self.size == other.size and all(a <= b for a, b in zip(self.vals, other.vals))

    def shifted(self) -> ProjectiveColumn:
        """Bounds of ``shift_matrix(n) @ v`` when ``v`` satisfies these bounds."""
        v = self.vals
        return ProjectiveColumn((v[-1] + 1,) + v[:-1])

    def times_x(self) -> ProjectiveColumn:
        return ProjectiveColumn(tuple(a + 1 for a in self.vals))


def hereditary_order(n: int) -> ValuationPattern:
    """``R`` on and below the diagonal, ``m`` strictly above."""
    if n < 1:
        raise ValueError("hereditary order needs n >= 1")
    return ValuationPattern(tuple(tuple(0 if p >= q else 1 for q in range(n)) for p in range(n)))


def iwahori_pattern(n: int, j: int) -> ValuationPattern:
    if n < 1 or j < 0:
        raise ValueError("iwahori pattern needs n >= 1 and j >= 0")
    return ValuationPattern(tuple(tuple(j if p < q else 0 for q in range(n)) for p in range(n)))


def block_pattern(composition: Sequence[int]) -> ValuationPattern:
    """0 on and below the block diagonal, 1 above it."""
    parts = [int(c) for c in composition]
    if not parts or any(c < 1 for c in parts):
        raise ValueError(f"not a composition: {composition}")
    block = [b for b, size in enumerate(parts) for _ in range(size)]
    n = len(block)
    return ValuationPattern(tuple(tuple(1 if block[p] < block[q] else 0 for q in range(n))
                                  for p in range(n)))


def projective_column(n: int, k: int) -> ProjectiveColumn:
    """Column ``k`` of the hereditary order: ``m`` in the first ``k-1`` rows, ``R`` below."""
    if not 1 <= k <= n:
        raise ValueError(f"column index {k} outside 1..{n}")
    return ProjectiveColumn(tuple(1 if p < k - 1 else 0 for p in range(n)))


def shift_matrix(n: int) -> LaurentMatrix:
    """Ones on the subdiagonal and ``x`` in the top-right corner; its n-th power is ``x I``."""
    if n < 1:
        raise ValueError("shift matrix needs n >= 1")
    one, zero = Laurent.constant(1), Laurent.zero()
    rows = [[zero] * n for _ in range(n)]
    for p in range(1, n):
        rows[p][p - 1] = one
    rows[0][n - 1] = X
    return LaurentMatrix(rows)


@dataclass(frozen=True)
class SurfaceOrder:
    """
    ``vertex_orders[i]`` is the hereditary order of the i-th sigma-cycle.
    A gluing ``((i, k), (j, l))`` (1-based) identifies diagonal slot ``k`` of
    order ``i`` with slot ``l`` of order ``j`` modulo the maximal ideal.
    """

    vertex_orders: tuple[ValuationPattern, ...]
    gluings: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def __post_init__(self):
        slots = [s for g in self.gluings for s in g]
        for i, k in slots:
            if not (1 <= i <= len(self.vertex_orders) and 1 <= k <= self.vertex_orders[i - 1].rows):
                raise ValueError(f"gluing slot {(i, k)} out of range")
        expected = sum(o.rows for o in self.vertex_orders)
        if len(slots) != len(set(slots)) or len(slots) != expected:
            raise ValueError("every diagonal slot must appear in exactly one gluing")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(o.rows for o in self.vertex_orders)

    def to_dict(self) -> dict:
        return {"sizes": list(self.sizes),
                "patterns": [[list(r) for r in o.min_val] for o in self.vertex_orders],
                "gluings": [[list(a), list(b)] for a, b in self.gluings]}

    @classmethod
    def from_dict(cls, data: dict) -> SurfaceOrder:
        orders = tuple(ValuationPattern(p) for p in data["patterns"])
        gl = tuple((tuple(a), tuple(b)) for a, b in data["gluings"])
        return cls(orders, gl)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def report(self) -> str:
        lines = []
        for i, o in enumerate(self.vertex_orders, 1):
            lines.append(f"vertex order {i} ({o.rows}x{o.rows}):")
            lines.extend("  " + ln for ln in str(o).splitlines())
        lines.append("gluings (order, slot) ~ (order, slot):")
        for (i, k), (j, l) in self.gluings:
            lines.append(f"  ({i}, {k}) ~ ({j}, {l})")
        return "\n".join(lines)


def build_surface_order(c: Constellation) -> SurfaceOrder:
    """
    One hereditary order per sigma-cycle and one gluing per alpha-pair.

    A half-edge occupies the slot given by its position in its sigma-cycle
    (cycles rotated to start at their minimum).
    """
    require_valid(c)
    slot = {}
    sig = cycles(c.sigma)
    for i, cyc in enumerate(sig, 1):
        for k, e in enumerate(cyc, 1):
            slot[e] = (i, k)
    gluings = tuple((slot[a], slot[b]) for a, b in cycles(c.alpha))
    return SurfaceOrder(tuple(hereditary_order(len(cyc)) for cyc in sig), gluings)


def membership(order: SurfaceOrder, element: Sequence[LaurentMatrix]) -> bool:
    """
    True iff every matrix satisfies its vertex pattern and glued diagonal
    entries have equal constant terms.
    """
    if len(element) != len(order.vertex_orders):
        raise ValueError(f"expected {len(order.vertex_orders)} matrices, got {len(element)}")
    for m, pat in zip(element, order.vertex_orders):
        if m.shape != (pat.rows, pat.cols):
            raise ValueError(f"matrix of shape {m.shape} for a {pat.rows}x{pat.cols} order")
        if not pat.matches(m):
            return False
    for (i, k), (j, l) in order.gluings:
        a = element[i - 1][k - 1, k - 1]
        b = element[j - 1][l - 1, l - 1]
        if a.constant_term() != b.constant_term():
            return False
    return True
