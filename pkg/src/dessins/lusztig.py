"""
Lusztig's embedding of nilpotent matrices, and of nilpotent cyclic-quiver
representations, into lattices over ``R = Q[[x]]``.

Global basis vectors are indexed by integers with ``e_{i + r n} = x^r e_i``.
For a cyclic quiver with vertices ``1..n`` the same rule applies blockwise:
global block ``b`` is vertex block ``((b - 1) mod n) + 1`` scaled by
``x^((b - 1) div n)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import ratmat
from .grassmann import LatticeBasis, component_index, lattice_equal
from .laurent import Laurent, LaurentMatrix
from .order import ValuationPattern, block_pattern
from .ratmat import Matrix

__all__ = [
    "CyclicQuiverRep", "phi_nilpotent", "check_equivariance", "is_nilpotent_rep",
    "big_matrix", "lambda_lattices", "lambda_lattice", "chain_product",
    "partial_flag_type", "rational_to_laurent", "NotNilpotent", "is_nilpotent_matrix",
    "lambda_depth", "embedding_index",
]


class NotNilpotent(ValueError):
    pass


def rational_to_laurent(a: Matrix) -> LaurentMatrix:
    return LaurentMatrix([[Laurent.constant(c) for c in row] for row in a])


def phi_nilpotent(n_mat: Sequence[Sequence]) -> LatticeBasis:
    """
    Basis ``sum_{k=1}^{n} x^(n-k) N^(k-1)``, the finite form of the block
    column ``(N^(n-1); ...; N; I; 0; ...)``.

    >>> print(phi_nilpotent([[0, 1], [0, 0]]))
    [ x  1 ]
    [ 0  x ]
    """
    a = ratmat.mat(n_mat)
    n = len(a)
    if n == 0 or any(len(r) != n for r in a):
        raise ValueError("nilpotent input must be a nonempty square matrix")
    if not ratmat.is_nilpotent(a):
        raise NotNilpotent("matrix is not nilpotent")
    rows = [[Laurent.zero()] * n for _ in range(n)]
    power = ratmat.identity(n)
    for k in range(1, n + 1):
        for p in range(n):
            for q in range(n):
                c = power[p][q]
                if c:
                    rows[p][q] = rows[p][q] + Laurent.monomial(n - k, c)
        power = ratmat.matmul(power, a)
    return LatticeBasis(LaurentMatrix(rows))


def check_equivariance(g: Sequence[Sequence], n_mat: Sequence[Sequence]) -> bool:
    """Decide whether ``Phi(g N g^-1)`` and ``g . Phi(N)`` span the same lattice."""
    g = ratmat.mat(g)
    a = ratmat.mat(n_mat)
    if ratmat.rank(g) != len(g):
        raise ValueError("g is not invertible")
    conj = ratmat.matmul(ratmat.matmul(g, a), ratmat.inverse(g))
    lhs = phi_nilpotent(conj)
    rhs = phi_nilpotent(a).act(rational_to_laurent(g))
    return lattice_equal(lhs, rhs)


@dataclass(frozen=True)
class CyclicQuiverRep:
    """
    Representation of the cyclic quiver on vertices ``1..n``.

    ``maps[i-1]`` is ``A_i`` of shape ``d_{i-1} x d_i`` (indices mod n), a map
    from the space at vertex ``i`` to the space at vertex ``i-1``.
    """

    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 0 for d in dims) or not any(dims):
            raise ValueError(f"bad dimension vector {list(dims)}")
        if len(self.maps) != len(dims):
            raise ValueError(f"{len(dims)} vertices need {len(dims)} maps, got {len(self.maps)}")
        maps = []
        n = len(dims)
        for i, m in enumerate(self.maps, 1):
            m = ratmat.mat(m)
            rows, cols = dims[(i - 2) % n], dims[i - 1]
            if rows == 0:
                m = ()
            elif cols == 0:
                m = ((),) * rows
            elif len(m) != rows or any(len(r) != cols for r in m):
                raise ValueError(f"A_{i} must be {rows}x{cols}")
            maps.append(m)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", tuple(maps))

    @property
    def n(self) -> int:
        return len(self.dims)

    def dim(self, i: int) -> int:
        return self.dims[(i - 1) % self.n]

    def a(self, i: int) -> Matrix:
        return self.maps[(i - 1) % self.n]

    @classmethod
    def zero(cls, dims: Sequence[int]) -> CyclicQuiverRep:
        n = len(dims)
        return cls(tuple(dims), tuple(ratmat.zeros(dims[(i - 1) % n], dims[i]) for i in range(n)))

    def base_change(self, gs: Sequence[Matrix]) -> CyclicQuiverRep:
        """Act by ``(g_1, ..., g_n)``: ``A_i -> g_{i-1} A_i g_i^{-1}``."""
        out = []
        for i in range(1, self.n + 1):
            g_prev = ratmat.mat(gs[(i - 2) % self.n])
            g_inv = ratmat.inverse(ratmat.mat(gs[i - 1])) if self.dim(i) else ()
            left = ratmat.matmul(g_prev, self.a(i), cols=self.dim(i))
            out.append(ratmat.matmul(left, g_inv, cols=self.dim(i)) if left else ())
        return CyclicQuiverRep(self.dims, tuple(out))

    def to_dict(self) -> dict:
        return {"dims": list(self.dims), "maps": [ratmat.to_strings(m) for m in self.maps]}

    @classmethod
    def from_dict(cls, data: dict) -> CyclicQuiverRep:
        try:
            return cls(tuple(data["dims"]),
                       tuple(tuple(tuple(Fraction(c) for c in r) for r in m) for m in data["maps"]))
        except KeyError as exc:
            raise ValueError(f"representation JSON is missing key {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def chain_product(rep: CyclicQuiverRep, j: int, k: int) -> Matrix:
    """``A_j^[k] = A_{j-k+1} ... A_{j-1} A_j``, a map from vertex ``j`` to vertex ``j-k``."""
    d_j = rep.dim(j)
    out = ratmat.identity(d_j)
    for t in range(k):
        out = ratmat.matmul(rep.a(j - t), out, cols=d_j) if rep.dim(j - t - 1) else ()
    return out


def _cycle_composite(rep: CyclicQuiverRep, j: int) -> Matrix:
    return chain_product(rep, j, rep.n)


def is_nilpotent_rep(rep: CyclicQuiverRep, all_rotations: bool = True) -> bool:
    """
    True iff the composite of all ``n`` maps around the cycle is nilpotent.

    With ``all_rotations`` every starting vertex is checked; nilpotency of
    ``AB`` and ``BA`` coincide, so both settings give the same answer.
    """
    starts = range(1, rep.n + 1) if all_rotations else [1]
    return all(ratmat.is_nilpotent(_cycle_composite(rep, j)) for j in starts)


def _offsets(rep: CyclicQuiverRep) -> list[int]:
    off, acc = [], 0
    for d in rep.dims:
        off.append(acc)
        acc += d
    return off


def big_matrix(rep: CyclicQuiverRep) -> LaurentMatrix:
    """
    Block matrix of the operator sending vertex ``i`` to vertex ``i-1`` by ``A_i``.

    Block ``(i-1, i)`` is ``A_i`` for ``i >= 2``; the map out of vertex 1 wraps
    to block ``(n, 1)`` as ``x^-1 A_1``.
    """
    total = sum(rep.dims)
    off = _offsets(rep)
    rows = [[Laurent.zero()] * total for _ in range(total)]
    for i in range(1, rep.n + 1):
        target = (i - 2) % rep.n
        shift = -1 if i == 1 else 0
        a = rep.a(i)
        for p, row in enumerate(a):
            for q, c in enumerate(row):
                if c:
                    rows[off[target] + p][off[i - 1] + q] = Laurent.monomial(shift, c)
    return LaurentMatrix(rows)


def _place(rows, rep, off, block: int, mat_: Matrix, col0: int):
    """Add ``mat_`` (rows indexed by global block ``block``) into columns ``col0..``."""
    t, r = divmod(block - 1, rep.n)
    for p, row in enumerate(mat_):
        for q, c in enumerate(row):
            if c:
                rows[off[r] + p][col0 + q] = rows[off[r] + p][col0 + q] + Laurent.monomial(t, c)


def lambda_lattice(rep: CyclicQuiverRep, j: int, max_depth: int | None = None) -> LatticeBasis:
    """
    The lattice ``Lambda_j``: the vertex-``j`` columns stack ``A_j^[k]`` at
    global block ``j - k`` for ``k = 0, 1, ...`` until the product vanishes; the
    remaining columns are the identity blocks of global blocks ``j+1 .. j+n-1``.
    """
    if not is_nilpotent_rep(rep):
        raise NotNilpotent("representation is not nilpotent")
    total = sum(rep.dims)
    off = _offsets(rep)
    rows = [[Laurent.zero()] * total for _ in range(total)]
    col = 0
    d_j = rep.dim(j)
    limit = max_depth if max_depth is not None else rep.n * (total + 1)
    k = 0
    prod = ratmat.identity(d_j)
    while d_j and prod and not ratmat.is_zero(prod):
        if k > limit:
            raise NotNilpotent("chain products did not vanish")
        _place(rows, rep, off, j - k, prod, col)
        prod = ratmat.matmul(rep.a(j - k), prod, cols=d_j) if rep.dim(j - k - 1) else ()
        k += 1
    col += d_j
    for b in range(j + 1, j + rep.n):
        d = rep.dim(b)
        if d:
            _place(rows, rep, off, b, ratmat.identity(d), col)
            col += d
    return LatticeBasis(LaurentMatrix(rows))


def lambda_lattices(rep: CyclicQuiverRep) -> list[LatticeBasis]:
    return [lambda_lattice(rep, j) for j in range(1, rep.n + 1)]


def lambda_depth(rep: CyclicQuiverRep, j: int) -> int:
    """Number of nonzero products ``A_j^[k]`` (``k = 0, 1, ...``)."""
    if not is_nilpotent_rep(rep):
        raise NotNilpotent("representation is not nilpotent")
    k = 0
    while rep.dim(j) and not ratmat.is_zero(chain_product(rep, j, k)):
        k += 1
    return k


def partial_flag_type(n: int, composition: Sequence[int]) -> ValuationPattern:
    """Block-upper-triangular stabilizer pattern of a partial flag of the given type."""
    if sum(composition) != n:
        raise ValueError(f"composition {list(composition)} does not sum to {n}")
    return block_pattern(composition)


def embedding_index(rep: CyclicQuiverRep) -> list[int]:
    return [component_index(l) for l in lambda_lattices(rep)]


def is_nilpotent_matrix(m: LaurentMatrix) -> bool:
    """Nilpotency over ``Q((x))`` of a matrix with exact entries."""
    if m.nrows != m.ncols:
        raise ValueError("nilpotency needs a square matrix")
    if any(not e.is_exact for r in m.rows for e in r):
        raise ValueError("nilpotency test needs exact entries")
    p = m ** m.nrows
    return all(e.is_zero() for r in p.rows for e in r)
