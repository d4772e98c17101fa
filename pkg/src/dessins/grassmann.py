"""
R-lattices in ``Q((x))**n`` given by column bases, and affine flags of them.

Two bases span the same lattice exactly when the transition matrix
``M1^{-1} M2`` lies in ``GL_n(R)``. That matrix is the only thing any decision
here looks at.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .laurent import Laurent, LaurentMatrix, PrecisionError

__all__ = [
    "LatticeBasis", "FlagReport", "standard_lattice", "standard_flag",
    "lattice_equal", "contains", "component_index", "validate_flag",
    "transition_matrix", "working_precision", "quotient_length",
]


@dataclass(frozen=True, eq=False)
class LatticeBasis:
    """The R-span of the columns of a square matrix with nonzero determinant."""

    matrix: LaurentMatrix

    def __post_init__(self):
        if self.matrix.nrows != self.matrix.ncols:
            raise ValueError(f"lattice basis must be square, got {self.matrix.shape}")

    @property
    def n(self) -> int:
        return self.matrix.nrows

    def act(self, g: LaurentMatrix) -> LatticeBasis:
        """The lattice ``g . L``."""
        return LatticeBasis(g @ self.matrix)

    def scale(self, c) -> LatticeBasis:
        return LatticeBasis(self.matrix.scale(c))

    def to_dict(self) -> dict:
        return self.matrix.to_dict()

    @classmethod
    def from_json_dict(cls, data) -> LatticeBasis:
        return cls(LaurentMatrix.from_json_dict(data))

    def __str__(self):
        return str(self.matrix)


def standard_lattice(n: int, i: int = 0, j: int = 1) -> LatticeBasis:
    """
    ``E(i, j)``: columns ``x^i e_j, ..., x^i e_{j+n-1}`` with ``e_{r + tn} = x^t e_r``.

    >>> print(standard_lattice(2, 0, 2))
    [ 0  x ]
    [ 1  0 ]
    """
    if n < 1:
        raise ValueError("lattice rank must be >= 1")
    rows = [[Laurent.zero()] * n for _ in range(n)]
    for k in range(n):
        t, r = divmod(j + k - 1, n)
        rows[r][k] = Laurent.monomial(i + t)
    return LatticeBasis(LaurentMatrix(rows))


def standard_flag(n: int) -> list[LatticeBasis]:
    """``L_k = span(e_1, ..., e_k, x e_{k+1}, ..., x e_n)`` for ``k = 1..n``."""
    flag = []
    for k in range(1, n + 1):
        rows = [[Laurent.zero()] * n for _ in range(n)]
        for p in range(n):
            rows[p][p] = Laurent.constant(1) if p < k else Laurent.monomial(1)
        flag.append(LatticeBasis(LaurentMatrix(rows)))
    return flag


def working_precision(*mats: LaurentMatrix) -> int:
    """``2 * (largest |valuation| of any entry) + 8``."""
    m = 0
    for mat in mats:
        for row in mat.valuations():
            for v in row:
                if v is not None:
                    m = max(m, abs(v))
    return 2 * m + 8


def _check_sizes(a: LatticeBasis, b: LatticeBasis):
    if a.n != b.n:
        raise ValueError(f"lattices of different rank: {a.n} vs {b.n}")


def transition_matrix(l1: LatticeBasis, l2: LatticeBasis, precision: int | None = None) -> LaurentMatrix:
    """``M1^{-1} M2``: expresses the basis of ``l2`` in the basis of ``l1``."""
    _check_sizes(l1, l2)
    if precision is None:
        precision = working_precision(l1.matrix, l2.matrix)
    return l1.matrix.solve(l2.matrix, precision)


def _integral(t: LaurentMatrix) -> bool:
    """All entries in R; raises when an entry is unresolved below x^0."""
    for row in t.rows:
        for e in row:
            v = e.valuation
            if v is None:
                if e.precision <= 0:
                    raise PrecisionError("transition entry unresolved at nonnegative orders")
            elif v < 0:
                return False
    return True


def contains(l1: LatticeBasis, l2: LatticeBasis, precision: int | None = None) -> bool:
    """True iff ``l2`` is a sublattice of ``l1``."""
    return _integral(transition_matrix(l1, l2, precision))


def component_index(l: LatticeBasis, precision: int | None = None) -> int:
    """Valuation of the determinant of a basis."""
    return l.matrix.det_ord(precision)


def lattice_equal(l1: LatticeBasis, l2: LatticeBasis, precision: int | None = None) -> bool:
    """True iff the transition matrix lies in ``GL_n(R)``."""
    t = transition_matrix(l1, l2, precision)
    if not _integral(t):
        return False
    return t.det_ord(precision) == 0


def quotient_length(big: LatticeBasis, small: LatticeBasis) -> int:
    """``dim_Q(big / small)`` for ``small`` inside ``big``."""
    if not contains(big, small):
        raise ValueError("second lattice is not contained in the first")
    return component_index(small) - component_index(big)


class FlagReport(NamedTuple):
    containments: bool
    x_twist: bool
    index_steps: bool

    @property
    def valid(self) -> bool:
        return self.containments and self.x_twist and self.index_steps


def validate_flag(chain: Sequence[LatticeBasis]) -> FlagReport:
    """
    Check ``L_1 < L_2 < ... < L_n`` with ``x L_n`` inside ``L_1`` and each
    step of codimension one.
    """
    chain = list(chain)
    if not chain:
        raise ValueError("empty flag")
    n = chain[0].n
    for l in chain:
        _check_sizes(chain[0], l)
    if len(chain) != n:
        raise ValueError(f"a complete flag in rank {n} has {n} members, got {len(chain)}")
    containments = all(contains(b, a) for a, b in zip(chain, chain[1:]))
    x_twist = contains(chain[0], chain[-1].scale(Laurent.monomial(1)))
    idx = [component_index(l) for l in chain]
    # the wrap-around step x L_n < L_1 must also have codimension one
    steps = all(a - b == 1 for a, b in zip(idx, idx[1:])) and (idx[-1] + n) - idx[0] == 1
    return FlagReport(containments, x_twist, steps)
