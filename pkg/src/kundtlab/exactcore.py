"""Exact scalars and dense linear algebra over Q and real quadratic fields Q(sqrt d).

Every verdict in this package (degenerate or not, zero or not) is decided
here without tolerances.  Rationals are :class:`fractions.Fraction`; the few
irrational entries that appear (``2*sqrt2`` in the sl(2,R) normal forms, roots
of quadratic equations when locating degenerate hyperplanes) are handled by
:class:`QuadraticNumber`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

__all__ = [
    "InputError",
    "QuadraticNumber",
    "Scalar",
    "to_scalar",
    "sqrt_scalar",
    "field_sqrt",
    "parse_scalar",
    "format_scalar",
    "sign",
    "Matrix",
    "SignatureTriple",
    "solve_linear",
    "kernel_basis",
    "rank",
    "inverse",
    "signature",
    "congruence",
    "dot",
    "primitive_vector",
    "Subspace",
]


class InputError(ValueError):
    """Raised for malformed or out-of-contract input."""


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, d) with n == s*s*d and d squarefree, for n > 0."""
    s, d = 1, 1
    k = 2
    m = n
    while k * k <= m:
        e = 0
        while m % k == 0:
            m //= k
            e += 1
        s *= k ** (e // 2)
        if e % 2:
            d *= k
        k += 1 if k == 2 else 2
    return s, d * m


class QuadraticNumber:
    """Element a + b*sqrt(d) of Q(sqrt d) with d > 1 squarefree.

    Arithmetic with ints and Fractions is supported in both directions; results
    with vanishing irrational part collapse back to Fraction.  Mixing two
    different fields raises :class:`InputError`.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)

    @staticmethod
    def make(a, b, d: int) -> "Scalar":
        b = Fraction(b)
        if b == 0:
            return Fraction(a)
        return QuadraticNumber(a, b, d)

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                if other.b == 0:
                    return other.a, Fraction(0)
                raise InputError(f"cannot mix Q(sqrt{self.d}) and Q(sqrt{other.d})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadraticNumber.make(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadraticNumber.make(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadraticNumber.make(c[0] - self.a, c[1] - self.b, self.d)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        return QuadraticNumber.make(
            self.a * a + self.b * b * self.d, self.a * b + self.b * a, self.d
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def conjugate(self) -> "Scalar":
        return QuadraticNumber.make(self.a, -self.b, self.d)

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        n = a * a - b * b * self.d
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadraticNumber.make(
            (self.a * a - self.b * b * self.d) / n, (self.b * a - self.a * b) / n, self.d
        )

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadraticNumber(c[0], c[1], self.d) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return 1 / (self ** (-k))
        out: Scalar = Fraction(1)
        for _ in range(k):
            out = out * self
        return out

    def __neg__(self):
        return QuadraticNumber.make(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa >= 0 and sb >= 0:
            return 1 if (sa or sb) else 0
        if sa <= 0 and sb <= 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def _cmp(self, other):
        diff = self - other
        if diff is NotImplemented:
            return None
        return sign(diff)

    def __lt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s >= 0

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"QuadraticNumber({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, QuadraticNumber]


def to_scalar(x) -> Scalar:
    """Coerce ints, Fractions, rational strings and QuadraticNumbers to a Scalar."""
    if isinstance(x, QuadraticNumber):
        return x if x.b != 0 else x.a
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, float):
        raise InputError(f"floats are not exact scalars: {x!r}")
    raise InputError(f"not an exact scalar: {x!r}")


def sign(x: Scalar) -> int:
    if isinstance(x, QuadraticNumber):
        return x.sign()
    return (x > 0) - (x < 0)


def sqrt_scalar(q) -> Scalar:
    """Exact square root of a nonnegative rational, in Q or Q(sqrt d)."""
    q = Fraction(q)
    if q < 0:
        raise InputError(f"square root of negative rational {q}")
    if q == 0:
        return Fraction(0)
    # sqrt(n/m) = sqrt(n*m)/m
    n, m = q.numerator, q.denominator
    s, d = _squarefree_split(n * m)
    if d == 1:
        return Fraction(s, m)
    return QuadraticNumber(0, Fraction(s, m), d)


def field_sqrt(x: Scalar) -> Scalar | None:
    """Square root of x >= 0 inside Q(sqrt d), or None when it leaves the field.

    For rational x the result may lie in a new quadratic field.  For x in
    Q(sqrt d) only roots that stay in Q(sqrt d) are returned.
    """
    if sign(x) < 0:
        return None
    if not isinstance(x, QuadraticNumber):
        return sqrt_scalar(x)
    # (p + q sqrt d)^2 = a + b sqrt d  =>  p^2 = (a +- sqrt(N(x))) / 2
    n = x.norm()
    if n < 0:
        return None
    r = sqrt_scalar(n)
    if not isinstance(r, Fraction):
        return None
    for p2 in ((x.a + r) / 2, (x.a - r) / 2):
        if p2 <= 0:
            continue
        p = sqrt_scalar(p2)
        if not isinstance(p, Fraction):
            continue
        q = x.b / (2 * p)
        cand = QuadraticNumber.make(p, q, x.d)
        if sign(cand) < 0:
            cand = -cand
        if cand * cand == x:
            return cand
    return None


_RAT = r"[+-]?\s*\d+(?:\s*/\s*\d+)?"
_QUAD_RE = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})\s*)?"
    rf"(?:(?P<bsign>[+-])?\s*(?:(?P<b>\d+(?:\s*/\s*\d+)?)\s*\*\s*)?sqrt\s*(?P<d>\d+))\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse "p", "p/q", "p/q+r/s*sqrt2", "-sqrt2" and similar."""
    s = str(text).strip()
    if not s:
        raise InputError("empty scalar")
    if "sqrt" not in s:
        try:
            return Fraction(s.replace(" ", ""))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {text!r}") from exc
    m = _QUAD_RE.match(s)
    if not m:
        raise InputError(f"bad quadratic scalar {text!r}")
    a = Fraction(m.group("a").replace(" ", "")) if m.group("a") else Fraction(0)
    b = Fraction(m.group("b").replace(" ", "")) if m.group("b") else Fraction(1)
    if m.group("bsign") == "-":
        b = -b
    elif m.group("bsign") is None and m.group("a") is not None:
        raise InputError(f"bad quadratic scalar {text!r}")
    d = int(m.group("d"))
    if d <= 1:
        raise InputError(f"sqrt{d} is rational; write it as a rational")
    s2, d2 = _squarefree_split(d)
    return QuadraticNumber.make(a, b * s2, d2)


def format_scalar(x: Scalar) -> str:
    if isinstance(x, QuadraticNumber):
        if x.b == 0:
            return str(x.a)
        mag = abs(x.b)
        irr = f"sqrt{x.d}" if mag == 1 else f"{mag}*sqrt{x.d}"
        if x.a == 0:
            return irr if x.b > 0 else f"-{irr}"
        return f"{x.a}{'+' if x.b > 0 else '-'}{irr}"
    return str(Fraction(x))


def _is_zero(x) -> bool:
    return x == 0


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix with exact entries, stored row-major."""

    __slots__ = ("_data", "rows", "cols")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(to_scalar(x) for x in row) for row in data)
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise InputError("ragged matrix rows")
            ncols = widths.pop()
            if cols is not None and cols != ncols:
                raise InputError("column count mismatch")
        else:
            ncols = cols or 0
        self._data = rows
        self.rows = len(rows)
        self.cols = ncols

    @classmethod
    def _raw(cls, rows: tuple, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m._data = rows
        m.rows = len(rows)
        m.cols = cols
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        return cls._raw(tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [tuple(to_scalar(x) for x in c) for c in columns]
        if not columns:
            return cls._raw(tuple(() for _ in range(rows or 0)), 0)
        n = len(columns[0])
        return cls._raw(tuple(tuple(c[i] for c in columns) for i in range(n)), len(columns))

    # -- access ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(self.col(j) for j in range(self.cols)), self.rows)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._data[i][j] == self._data[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def is_rational(self) -> bool:
        return all(isinstance(x, Fraction) for r in self._data for x in r)

    def trace(self) -> Scalar:
        if not self.is_square():
            raise InputError("trace of non-square matrix")
        return sum((self._data[i][i] for i in range(self.rows)), Fraction(0))

    # -- arithmetic --------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def __mul__(self, k) -> "Matrix":
        if isinstance(k, Matrix):
            return NotImplemented
        k = to_scalar(k)
        return Matrix._raw(tuple(tuple(k * a for a in r) for r in self._data), self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        zero = Fraction(0)
        return Matrix._raw(
            tuple(
                tuple(sum((a * b for a, b in zip(r, c) if a != 0 and b != 0), zero) for c in cols)
                for r in self._data
            ),
            other.cols,
        )

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product, returned as a tuple."""
        if len(v) != self.cols:
            raise InputError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        zero = Fraction(0)
        return tuple(sum((a * b for a, b in zip(r, v) if a != 0 and b != 0), zero) for r in self._data)

    def bilinear(self, x: Sequence, y: Sequence) -> Scalar:
        """x^T M y."""
        return dot(x, self.apply(y))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise InputError("row count mismatch in hstack")
        return Matrix._raw(tuple(a + b for a, b in zip(self._data, other._data)), self.cols + other.cols)

    def map(self, f) -> "Matrix":
        return Matrix(([f(x) for x in r] for r in self._data), cols=self.cols)

    def __repr__(self):
        body = "; ".join(", ".join(format_scalar(x) for x in r) for r in self._data)
        return f"Matrix([{body}])"

    def pretty(self) -> str:
        cells = [[format_scalar(x) for x in r] for r in self._data]
        if not cells or not self.cols:
            return f"<{self.rows}x{self.cols} matrix>"
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in cells)

    # -- elimination -------------------------------------------------------
    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and pivot columns (first nonzero pivot)."""
        m = [list(r) for r in self._data]
        pivots = []
        r = 0
        for c in range(self.cols):
            p = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            piv = m[r][c]
            if piv != 1:
                m[r] = [x / piv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix._raw(tuple(tuple(row) for row in m), self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Scalar:
        if not self.is_square():
            raise InputError("determinant of non-square matrix")
        m = [list(r) for r in self._data]
        n = self.rows
        out: Scalar = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                out = -out
            piv = m[c][c]
            out = out * piv
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] / piv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return out


class SignatureTriple(NamedTuple):
    positive: int
    negative: int
    null: int


def _as_matrix(b) -> tuple[Matrix, bool]:
    if isinstance(b, Matrix):
        return b, False
    return Matrix.from_columns([tuple(b)]), True


def solve_linear(A: Matrix, b) -> Matrix | tuple | None:
    """One exact solution x of A x = b, or None when the system is inconsistent.

    ``b`` may be a Matrix (several right-hand sides) or a plain vector, in
    which case a vector is returned.
    """
    B, was_vector = _as_matrix(b)
    if B.rows != A.rows:
        raise InputError(f"right-hand side has {B.rows} rows, matrix has {A.rows}")
    R, piv = A.hstack(B).rref()
    if any(p >= A.cols for p in piv):
        return None
    x = [[Fraction(0)] * B.cols for _ in range(A.cols)]
    for r, c in enumerate(piv):
        x[c] = list(R.row(r)[A.cols:])
    X = Matrix(x, cols=B.cols)
    return X.col(0) if was_vector else X


def kernel_basis(A: Matrix) -> Matrix:
    """Columns form a basis of the null space; a cols x 0 matrix if trivial."""
    R, piv = A.rref()
    free = [c for c in range(A.cols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * A.cols
        v[f] = Fraction(1)
        for r, c in enumerate(piv):
            v[c] = -R[r, f]
        basis.append(v)
    if not basis:
        return Matrix._raw(tuple(() for _ in range(A.cols)), 0)
    return Matrix.from_columns(basis)


def rank(A: Matrix) -> int:
    return A.rank()


def inverse(A: Matrix) -> Matrix:
    if not A.is_square():
        raise InputError("inverse of non-square matrix")
    n = A.rows
    R, piv = A.hstack(Matrix.identity(n)).rref()
    if tuple(piv[:n]) != tuple(range(n)):
        raise InputError("matrix is singular")
    return Matrix._raw(tuple(R.row(i)[n:] for i in range(n)), n)


def signature(S: Matrix) -> SignatureTriple:
    """Sylvester signature by symmetric Gaussian reduction (congruences only)."""
    if not S.is_symmetric():
        raise InputError("signature requires a symmetric matrix")
    m = [list(r) for r in S._data]
    pos = neg = 0
    active = list(range(S.rows))
    while active:
        k = next((i for i in active if m[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # replace e_i by e_i + e_j: new diagonal entry is 2 m[i][j] != 0
            for t in range(len(m)):
                m[t][i] = m[t][i] + m[t][j]
            for t in range(len(m)):
                m[i][t] = m[i][t] + m[j][t]
            k = i
        piv = m[k][k]
        if sign(piv) > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        row_k = [m[k][t] for t in range(len(m))]
        for i in active:
            if row_k[i] == 0:
                continue
            f = row_k[i] / piv
            for j in active:
                if row_k[j] != 0:
                    m[i][j] = m[i][j] - f * row_k[j]
    return SignatureTriple(pos, neg, S.rows - pos - neg)


def congruence(T: Matrix, S: Matrix) -> Matrix:
    """T^t S T, the matrix of the form S in the basis given by the columns of T."""
    if not T.is_square() or T.rows != S.rows:
        raise InputError(f"incompatible shapes {T.shape} and {S.shape}")
    if T.det() == 0:
        raise InputError("change of basis matrix is singular")
    return T.T @ S @ T


# ---------------------------------------------------------------------------
# vectors and subspaces
# ---------------------------------------------------------------------------


def dot(x: Sequence, y: Sequence) -> Scalar:
    return sum((a * b for a, b in zip(x, y) if a != 0 and b != 0), Fraction(0))


def primitive_vector(v: Sequence) -> tuple:
    """Scale v to smallest integer coordinates with positive leading entry.

    Vectors with irrational entries are scaled so the leading entry is 1.
    """
    v = tuple(to_scalar(x) for x in v)
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        return v
    if all(isinstance(x, Fraction) for x in v):
        den = math.lcm(*(x.denominator for x in v))
        ints = [int(x * den) for x in v]
        g = math.gcd(*ints)
        s = 1 if lead > 0 else -1
        return tuple(Fraction(s * i // g) for i in ints)
    return tuple(x / lead for x in v)


def _rank_of_columns(vectors: Sequence[Sequence], n: int) -> int:
    if not vectors:
        return 0
    return Matrix.from_columns(vectors).rank()


@dataclass(frozen=True, eq=False)
class Subspace:
    """A linear subspace of coordinate space, given by a full-rank basis matrix.

    ``dual_covector`` is set for hyperplanes built from a covector phi with
    ker phi equal to the subspace.  Equality compares subspaces, not bases.
    """

    ambient_dim: int
    basis: Matrix
    dual_covector: tuple | None = None

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise InputError("basis rows must equal the ambient dimension")
        if self.basis.cols and self.basis.rank() != self.basis.cols:
            raise InputError("subspace basis is linearly dependent")
        if self.dual_covector is not None:
            phi = self.dual_covector
            if all(x == 0 for x in phi):
                raise InputError("dual covector must be nonzero")
            if any(dot(phi, b) != 0 for b in self.basis.columns()):
                raise InputError("dual covector does not vanish on the basis")

    @classmethod
    def span(cls, vectors: Sequence[Sequence], ambient_dim: int | None = None) -> "Subspace":
        """Subspace with the given (independent) vectors as basis."""
        vectors = [tuple(to_scalar(x) for x in v) for v in vectors]
        if ambient_dim is None:
            if not vectors:
                raise InputError("ambient dimension needed for the zero subspace")
            ambient_dim = len(vectors[0])
        if any(len(v) != ambient_dim for v in vectors):
            raise InputError("vector length does not match ambient dimension")
        return cls(ambient_dim, Matrix.from_columns(vectors, rows=ambient_dim))

    @classmethod
    def spanned_by(cls, vectors: Sequence[Sequence], ambient_dim: int) -> "Subspace":
        """Span of possibly dependent vectors; a basis is extracted."""
        kept: list[tuple] = []
        for v in vectors:
            v = tuple(to_scalar(x) for x in v)
            if all(x == 0 for x in v):
                continue
            if _rank_of_columns(kept + [v], ambient_dim) > len(kept):
                kept.append(v)
        return cls.span(kept, ambient_dim)

    @classmethod
    def hyperplane(cls, covector: Sequence) -> "Subspace":
        phi = tuple(to_scalar(x) for x in covector)
        if all(x == 0 for x in phi):
            raise InputError("zero covector does not define a hyperplane")
        vectors = kernel_basis(Matrix([phi])).columns()
        return cls(len(phi), Matrix.from_columns(vectors, rows=len(phi)), phi)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls.span([], n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.span([tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)], n)

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    @property
    def vectors(self) -> list[tuple]:
        return self.basis.columns()

    def contains(self, v: Sequence) -> bool:
        v = tuple(to_scalar(x) for x in v)
        if len(v) != self.ambient_dim:
            raise InputError("vector length does not match ambient dimension")
        if all(x == 0 for x in v):
            return True
        if self.dim == 0:
            return False
        return solve_linear(self.basis, v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors)

    def covector(self) -> tuple:
        """A covector phi with ker phi == self (hyperplanes only), normalized."""
        if self.codim != 1:
            raise InputError("covector is defined for hyperplanes only")
        if self.dual_covector is not None:
            return primitive_vector(self.dual_covector)
        return primitive_vector(kernel_basis(self.basis.T).col(0))

    def canonical(self) -> tuple:
        """Reduced row echelon form of the basis rows; equal iff same subspace."""
        if self.dim == 0:
            return ()
        R, piv = self.basis.T.rref()
        return tuple(R.row(i) for i in range(len(piv)))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.ambient_dim, self.canonical()))

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(format_scalar(x) for x in v) + ")" for v in self.vectors)
        return f"Subspace(span{{{vecs}}})"
