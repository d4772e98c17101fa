"""
Truncated Laurent series over the rationals and dense matrices of them.

A :class:`Laurent` stores ``coeffs[k]`` as the coefficient of
``x**(lead + k)`` and is known modulo ``x**precision``. Precision is an
integer, or ``math.inf`` for exactly known elements (polynomials, monomials,
constants). Arithmetic propagates precision; series inversion of an exact
non-monomial truncates at a relative precision (``DEFAULT_PRECISION`` unless
given).

Equality follows the usual convention for truncated series: two elements are
equal when they agree up to the smaller of their precisions.

>>> f = parse_series("x^-2 + 3/2*x + O(x^16)")
>>> f.valuation
-2
>>> str((1 - X).inverse(precision=4))
'1 + x + x^2 + x^3 + O(x^4)'
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

__all__ = [
    "Laurent", "LaurentMatrix", "PrecisionError", "SingularMatrix", "DEFAULT_PRECISION", "EXACT",
    "X", "valuation", "parse_series", "det_ord", "matrix_inverse",
]

DEFAULT_PRECISION = 16
EXACT = math.inf


class PrecisionError(ArithmeticError):
    """The known coefficients do not determine the answer."""


class SingularMatrix(PrecisionError):
    """Elimination met an exactly zero column: the determinant is exactly 0."""


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Laurent:
    __slots__ = ("lead", "coeffs", "precision")

    def __init__(self, lead: int, coeffs: Iterable = (), precision=EXACT):
        cs = [_frac(c) for c in coeffs]
        lead = int(lead)
        if precision != EXACT:
            precision = int(precision)
            keep = max(0, precision - lead)
            del cs[keep:]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        cs = cs[start:end]
        if cs:
            lead += start
        else:
            lead = precision if precision != EXACT else 0
        self.lead = lead
        self.coeffs = tuple(cs)
        self.precision = precision

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c, precision=EXACT) -> Laurent:
        return cls(0, [c], precision)

    @classmethod
    def monomial(cls, exponent: int, c=1, precision=EXACT) -> Laurent:
        return cls(exponent, [c], precision)

    @classmethod
    def zero(cls, precision=EXACT) -> Laurent:
        return cls(0, [], precision)

    @classmethod
    def from_dict(cls, terms: dict, precision=EXACT) -> Laurent:
        """From ``{exponent: coefficient}``."""
        terms = {int(e): _frac(c) for e, c in terms.items() if c != 0}
        if not terms:
            return cls.zero(precision)
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)], precision)

    @classmethod
    def coerce(cls, value) -> Laurent:
        if isinstance(value, Laurent):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot interpret {value!r} as a Laurent series")

    # -- inspection --------------------------------------------------------
    @property
    def valuation(self) -> int | None:
        """Exponent of the first nonzero coefficient, or ``None`` if zero to the known precision."""
        return self.lead if self.coeffs else None

    @property
    def is_exact(self) -> bool:
        return self.precision == EXACT

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    def coefficient(self, e: int) -> Fraction:
        if e >= self.precision:
            raise PrecisionError(f"coefficient of x^{e} unknown at precision {self.precision}")
        k = e - self.lead
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def terms(self) -> dict[int, Fraction]:
        return {self.lead + k: c for k, c in enumerate(self.coeffs) if c}

    def truncate(self, precision) -> Laurent:
        return Laurent(self.lead, self.coeffs, min(self.precision, precision))

    def shift(self, k: int) -> Laurent:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return Laurent.zero(self.precision + k)
        return Laurent(self.lead + k, self.coeffs, self.precision + k)

    def _val_or_precision(self):
        return self.lead if self.coeffs else self.precision

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> Laurent:
        if not isinstance(other, Laurent):
            if isinstance(other, (int, Fraction)):
                other = Laurent.constant(other)
            else:
                return NotImplemented
        prec = min(self.precision, other.precision)
        if not self.coeffs:
            return other.truncate(prec)
        if not other.coeffs:
            return self.truncate(prec)
        lo = min(self.lead, other.lead)
        hi = max(self.lead + len(self.coeffs), other.lead + len(other.coeffs))
        if prec != EXACT:
            hi = min(hi, prec)
        if hi <= lo:
            return Laurent.zero(prec)
        out = [Fraction(0)] * (hi - lo)
        for src in (self, other):
            off = src.lead - lo
            for k, c in enumerate(src.coeffs):
                if off + k < len(out):
                    out[off + k] += c
        return Laurent(lo, out, prec)

    __radd__ = __add__

    def __neg__(self) -> Laurent:
        return Laurent(self.lead, [-c for c in self.coeffs], self.precision)

    def __sub__(self, other) -> Laurent:
        if isinstance(other, (int, Fraction)):
            other = Laurent.constant(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Laurent:
        return (-self) + other

    def __mul__(self, other) -> Laurent:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Laurent.zero()
            return Laurent(self.lead, [c * other for c in self.coeffs], self.precision)
        if not isinstance(other, Laurent):
            return NotImplemented
        prec = min(self.precision + other._val_or_precision(),
                   other.precision + self._val_or_precision())
        if not self.coeffs or not other.coeffs:
            return Laurent.zero(prec)
        lead = self.lead + other.lead
        n = len(self.coeffs) + len(other.coeffs) - 1
        if prec != EXACT:
            n = min(n, prec - lead)
        if n <= 0:
            return Laurent.zero(prec)
        out = [Fraction(0)] * n
        b = other.coeffs
        for i, a in enumerate(self.coeffs):
            if i >= n:
                break
            if not a:
                continue
            for j in range(min(len(b), n - i)):
                out[i + j] += a * b[j]
        return Laurent(lead, out, prec)

    __rmul__ = __mul__

    def inverse(self, precision: int | None = None) -> Laurent:
        """
        Multiplicative inverse.

        The result is known to ``precision - 2*valuation``. For an exact
        non-monomial the unit part is expanded to relative precision
        ``precision`` (default ``DEFAULT_PRECISION``).
        """
        if not self.coeffs:
            raise PrecisionError("cannot invert an element that is zero to the known precision")
        a = self.lead
        u = self.coeffs
        if self.is_exact:
            if len(u) == 1:
                return Laurent(-a, [1 / u[0]], EXACT)
            rel = DEFAULT_PRECISION if precision is None else precision
        else:
            rel = self.precision - a
        inv0 = 1 / u[0]
        v = [inv0]
        for k in range(1, rel):
            s = sum((u[i] * v[k - i] for i in range(1, min(k, len(u) - 1) + 1)), Fraction(0))
            v.append(-inv0 * s)
        return Laurent(-a, v, -a + rel)

    def __truediv__(self, other) -> Laurent:
        if isinstance(other, (int, Fraction)):
            return self * (1 / _frac(other))
        if not isinstance(other, Laurent):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> Laurent:
        return Laurent.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> Laurent:
        if k < 0:
            return self.inverse() ** (-k)
        result = Laurent.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Laurent.constant(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def identical(self, other: Laurent) -> bool:
        """Same coefficients *and* same precision."""
        return (self.lead, self.coeffs, self.precision) == (other.lead, other.coeffs, other.precision)

    def __repr__(self):
        return f"Laurent({self})"

    def __str__(self):
        parts = []
        for e, c in self.terms().items():
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = str(c)
            else:
                mono = "x" if e == 1 else f"x^{e}"
                body = mono if c == 1 else f"{c}*{mono}"
            parts.append((sign, body))
        if not self.is_exact:
            parts.append(("+", f"O(x^{self.precision})"))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_dict(self) -> dict:
        return {"lead": self.lead,
                "coeffs": [str(c) for c in self.coeffs],
                "precision": None if self.is_exact else self.precision}

    @classmethod
    def from_json_dict(cls, data: dict) -> Laurent:
        prec = data.get("precision")
        return cls(data["lead"], [Fraction(c) for c in data["coeffs"]],
                   EXACT if prec is None else prec)


X = Laurent.monomial(1)


def valuation(f: Laurent) -> int | None:
    return f.valuation


_TERM = re.compile(r"""
    \s*(?P<sign>[+-])?\s*
    (?:
        O\(\s*x\s*(?:\^\s*(?P<oexp>-?\d+))?\s*\)
      | (?P<coef>\d+(?:/\d+)?)?\s*(?P<star>\*)?\s*(?P<x>x)?(?:\s*\^\s*(?P<exp>-?\d+))?
    )\s*""", re.VERBOSE)


def parse_series(text: str, precision=None) -> Laurent:
    """
    Parse the text format ``"x^-2 + 3/2*x + O(x^16)"``.

    Without an ``O(x^T)`` term the series is exact unless ``precision`` is given.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty series")
    terms: dict[int, Fraction] = {}
    prec = None
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse series {text!r} at position {pos}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing '+' or '-' in {text!r} at position {pos}")
        first = False
        pos = m.end()
        if m.group(0).lstrip().lstrip("+-").lstrip().startswith("O"):
            if prec is not None:
                raise ValueError("two O() terms")
            prec = int(m.group("oexp") or 1)
            continue
        coef, xs, exp, star = m.group("coef"), m.group("x"), m.group("exp"), m.group("star")
        if coef is None and xs is None:
            raise ValueError(f"empty term in {text!r}")
        if star and (coef is None or xs is None):
            raise ValueError(f"malformed product in {text!r}")
        if exp is not None and xs is None:
            raise ValueError(f"exponent without x in {text!r}")
        c = Fraction(coef) if coef else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        e = (int(exp) if exp is not None else 1) if xs else 0
        terms[e] = terms.get(e, 0) + c
    if prec is None:
        prec = EXACT if precision is None else precision
    return Laurent.from_dict(terms, prec)


class LaurentMatrix:
    """
    Dense matrix of :class:`Laurent` entries.

    Each entry keeps its own precision; :attr:`precision` is the minimum.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(Laurent.coerce(e) for e in r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows

    @classmethod
    def identity(cls, n: int, precision=EXACT) -> LaurentMatrix:
        return cls([[Laurent.constant(1 if i == j else 0, precision) for j in range(n)]
                    for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int, precision=EXACT) -> LaurentMatrix:
        return cls([[Laurent.zero(precision)] * c for _ in range(r)])

    @classmethod
    def from_rational(cls, mat: Sequence[Sequence], precision=EXACT) -> LaurentMatrix:
        return cls([[Laurent.constant(_frac(c), precision) for c in row] for row in mat])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def precision(self):
        return min(e.precision for r in self.rows for e in r)

    def __getitem__(self, ij) -> Laurent:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list[Laurent]:
        return [r[j] for r in self.rows]

    def transpose(self) -> LaurentMatrix:
        return LaurentMatrix(zip(*self.rows))

    def valuations(self) -> list[list[int | None]]:
        return [[e.valuation for e in r] for r in self.rows]

    def constant_terms(self) -> list[list[Fraction]]:
        return [[e.constant_term() for e in r] for r in self.rows]

    def map(self, fn) -> LaurentMatrix:
        return LaurentMatrix([[fn(e) for e in r] for r in self.rows])

    def truncate(self, precision) -> LaurentMatrix:
        return self.map(lambda e: e.truncate(precision))

    def __add__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return LaurentMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        return self + (-other)

    def __neg__(self) -> LaurentMatrix:
        return self.map(lambda e: -e)

    def scale(self, c) -> LaurentMatrix:
        c = Laurent.coerce(c)
        return self.map(lambda e: c * e)

    def __matmul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = None
                for a, b in zip(r, c):
                    if a.is_exact and not a.coeffs or b.is_exact and not b.coeffs:
                        continue
                    t = a * b
                    acc = t if acc is None else acc + t
                row.append(acc if acc is not None else Laurent.zero())
            out.append(row)
        return LaurentMatrix(out)

    def __pow__(self, k: int) -> LaurentMatrix:
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    # -- elimination -------------------------------------------------------
    def _require_square(self):
        if self.nrows != self.ncols:
            raise ValueError(f"square matrix required, got {self.shape}")

    def _forward(self, rhs=None, precision=None):
        """
        Gaussian elimination choosing, in each column, the pivot of least valuation.

        Returns (upper-triangular rows, transformed rhs rows, sign of row swaps).
        """
        n = self.nrows
        a = [list(r) for r in self.rows]
        b = [list(r) for r in rhs.rows] if rhs is not None else None
        sign = 1
        for k in range(n):
            best, best_val = None, None
            for i in range(k, n):
                v = a[i][k].valuation
                if v is not None and (best_val is None or v < best_val):
                    best, best_val = i, v
            if best is None:
                if all(a[i][k].is_exact and not a[i][k].coeffs for i in range(k, n)):
                    raise SingularMatrix("matrix is exactly singular")
                raise PrecisionError(f"no pivot with known valuation in column {k}")
            if best != k:
                a[k], a[best] = a[best], a[k]
                if b is not None:
                    b[k], b[best] = b[best], b[k]
                sign = -sign
            pinv = a[k][k].inverse(precision)
            for i in range(k + 1, n):
                if a[i][k].is_exact and not a[i][k].coeffs:
                    continue
                q = a[i][k] * pinv
                for j in range(k + 1, n):
                    a[i][j] = a[i][j] - q * a[k][j]
                a[i][k] = Laurent.zero()
                if b is not None:
                    b[i] = [bi - q * bk for bi, bk in zip(b[i], b[k])]
        return a, b, sign

    def det(self, precision: int | None = None) -> Laurent:
        self._require_square()
        try:
            a, _, sign = self._forward(precision=precision)
        except SingularMatrix:
            return Laurent.zero()
        d = Laurent.constant(sign)
        for k in range(self.nrows):
            d = d * a[k][k]
        return d

    def det_ord(self, precision: int | None = None) -> int:
        """Valuation of the determinant; raises :class:`PrecisionError` when undecidable."""
        self._require_square()
        a, _, _ = self._forward(precision=precision)
        return sum(a[k][k].valuation for k in range(self.nrows))

    def solve(self, rhs: LaurentMatrix, precision: int | None = None) -> LaurentMatrix:
        """The matrix ``Y`` with ``self @ Y == rhs``."""
        self._require_square()
        if rhs.nrows != self.nrows:
            raise ValueError("right-hand side has the wrong number of rows")
        a, b, _ = self._forward(rhs, precision)
        n = self.nrows
        y = [None] * n
        for k in reversed(range(n)):
            row = b[k]
            for j in range(k + 1, n):
                if a[k][j].is_exact and not a[k][j].coeffs:
                    continue
                row = [r - a[k][j] * yj for r, yj in zip(row, y[j])]
            pinv = a[k][k].inverse(precision)
            y[k] = [pinv * r for r in row]
        return LaurentMatrix(y)

    def inverse(self, precision: int | None = None) -> LaurentMatrix:
        self._require_square()
        return self.solve(LaurentMatrix.identity(self.nrows), precision)

    # -- serialisation -----------------------------------------------------
    def to_dict(self) -> dict:
        return {"rows": [[e.to_dict() for e in r] for r in self.rows]}

    @classmethod
    def from_json_dict(cls, data: dict) -> LaurentMatrix:
        rows = data["rows"] if isinstance(data, dict) else data
        return cls([[Laurent.from_json_dict(e) if isinstance(e, dict) else parse_series(str(e))
                     for e in r] for r in rows])

    def __str__(self):
        cells = [[str(e) for e in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self):
        return f"LaurentMatrix({[[str(e) for e in r] for r in self.rows]})"


def det_ord(m: LaurentMatrix, precision: int | None = None) -> int:
    return m.det_ord(precision)


def matrix_inverse(m: LaurentMatrix, precision: int | None = None) -> LaurentMatrix:
    return m.inverse(precision)


def leibniz_det(m: LaurentMatrix) -> Laurent:
    """Determinant by the permutation expansion (small matrices only)."""
    n = m.nrows
    total = Laurent.zero()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Laurent.constant(-1 if inv % 2 else 1)
        for i, p in enumerate(perm):
            term = term * m[i, p]
        total = total + term
    return total
