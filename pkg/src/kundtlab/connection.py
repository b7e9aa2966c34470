"""Left-invariant Levi-Civita geometry of a metric Lie algebra.

Sign conventions (the source never fixes one, so they are stated here):

* curvature  R(u,v)w = u.(v.w) - v.(u.w) - [u,v].w, where ``.`` is the
  Levi-Civita product, i.e. R(u,v) = [nabla_u, nabla_v] - nabla_[u,v];
* constant curvature c means R(u,v)w = c(<v,w>u - <u,w>v), which makes the
  round bi-invariant metric on su(2) positively curved;
* Ric(u,v) = tr(w -> R(w,u)v), scalar curvature = tr(metric^-1 Ric).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Sequence

from .exactcore import (
    InputError,
    Matrix,
    Scalar,
    SignatureTriple,
    dot,
    inverse,
    signature,
    solve_linear,
)
from .liealg import LieAlgebra, bracket

__all__ = [
    "MetricLieAlgebra",
    "ProductTensor",
    "levi_civita",
    "curvature",
    "curvature_tensor",
    "is_constant_curvature",
    "ricci",
    "scalar_curvature",
    "bianchi_defects",
    "pair_symmetry_defects",
    "curvature_skew_defects",
]


class MetricLieAlgebra:
    """A Lie algebra with a non-degenerate symmetric bilinear form."""

    def __init__(self, algebra: LieAlgebra, metric: Matrix, name: str = ""):
        if not isinstance(metric, Matrix):
            metric = Matrix(metric)
        if metric.shape != (algebra.dim, algebra.dim):
            raise InputError(f"metric must be {algebra.dim}x{algebra.dim}, got {metric.shape}")
        if not metric.is_symmetric():
            raise InputError("metric is not symmetric")
        sig = signature(metric)
        if sig.null:
            raise InputError(f"metric is degenerate (signature {tuple(sig)})")
        self.algebra = algebra
        self.metric = metric
        self.signature: SignatureTriple = sig
        self.name = name

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def is_lorentzian(self) -> bool:
        return self.signature == (self.dim - 1, 1, 0)

    def is_lorentzian_up_to_sign(self) -> bool:
        return self.is_lorentzian() or self.signature == (1, self.dim - 1, 0)

    def inner(self, x: Sequence, y: Sequence) -> Scalar:
        return self.metric.bilinear(x, y)

    @cached_property
    def metric_inverse(self) -> Matrix:
        return inverse(self.metric)

    @cached_property
    def levi_civita(self) -> "ProductTensor":
        return levi_civita(self)

    def product(self, x: Sequence, y: Sequence) -> tuple:
        """Levi-Civita product x.y (= nabla_x y for left-invariant fields)."""
        return self.levi_civita.apply(x, y)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        return bracket(self.algebra, x, y)

    def scaled(self, k) -> "MetricLieAlgebra":
        return MetricLieAlgebra(self.algebra, self.metric * k, self.name)

    def __repr__(self):
        return f"MetricLieAlgebra({self.name or self.algebra.name}, signature={tuple(self.signature)})"


class ProductTensor:
    """Bilinear product p^k_{ij}: x_i . x_j = sum_k p^k_{ij} x_k."""

    def __init__(self, table):
        self.table = tuple(tuple(tuple(v) for v in row) for row in table)
        self.dim = len(self.table)

    def entry(self, i: int, j: int) -> tuple:
        return self.table[i][j]

    def apply(self, x: Sequence, y: Sequence) -> tuple:
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                for k, p in enumerate(row[j]):
                    if p != 0:
                        out[k] = out[k] + c * p
        return tuple(out)

    def torsion_defect(self, g: LieAlgebra) -> list[tuple[int, int]]:
        """Basis pairs where x_i.x_j - x_j.x_i != [x_i, x_j]."""
        bad = []
        for i, j in product(range(self.dim), repeat=2):
            diff = tuple(a - b for a, b in zip(self.table[i][j], self.table[j][i]))
            if diff != g.structure[i][j]:
                bad.append((i, j))
        return bad

    def compatibility_defect(self, metric: Matrix) -> list[tuple[int, int, int]]:
        """Triples where <x_i.x_j, x_l> + <x_j, x_i.x_l> != 0."""
        bad = []
        for i, j, l in product(range(self.dim), repeat=3):
            a = dot(metric.row(l), self.table[i][j])
            b = dot(metric.row(j), self.table[i][l])
            if a + b != 0:
                bad.append((i, j, l))
        return bad

    def __eq__(self, other):
        if not isinstance(other, ProductTensor):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)


def levi_civita(m: MetricLieAlgebra) -> ProductTensor:
    """Solve 2<x_i.x_j, w> = <[x_i,x_j],w> + <[w,x_i],x_j> + <[w,x_j],x_i> for every pair."""
    g, G, n = m.algebra, m.metric, m.dim
    c = g.structure
    # <[x_a, x_b], x_l> for all a, b, l
    lowered = [[tuple(dot(G.row(l), c[a][b]) for l in range(n)) for b in range(n)] for a in range(n)]
    half = Fraction(1, 2)
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            rhs = tuple(
                half * (lowered[i][j][l] + lowered[l][i][j] + lowered[l][j][i]) for l in range(n)
            )
            x = solve_linear(G, rhs)
            if x is None:
                raise InputError("degenerate metric: Levi-Civita system is inconsistent")
            row.append(x)
        table.append(row)
    return ProductTensor(table)


def curvature(m: MetricLieAlgebra, u: Sequence, v: Sequence, w: Sequence) -> tuple:
    p = m.product
    a = p(u, p(v, w))
    b = p(v, p(u, w))
    c = p(m.bracket(u, v), w)
    return tuple(x - y - z for x, y, z in zip(a, b, c))


def curvature_tensor(m: MetricLieAlgebra) -> list:
    """R[i][j][k] = R(x_i, x_j) x_k as a coordinate vector."""
    n = m.dim
    e = [m.algebra.basis_vector(i) for i in range(n)]
    return [[[curvature(m, e[i], e[j], e[k]) for k in range(n)] for j in range(n)] for i in range(n)]


def is_constant_curvature(m: MetricLieAlgebra) -> tuple[bool, Scalar | None]:
    n = m.dim
    e = [m.algebra.basis_vector(i) for i in range(n)]
    R = curvature_tensor(m)
    G = m.metric

    def model(i, j, k):
        return tuple(G[j, k] * a - G[i, k] * b for a, b in zip(e[i], e[j]))

    c = None
    for i, j, k in product(range(n), repeat=3):
        ref = model(i, j, k)
        t = next((t for t, x in enumerate(ref) if x != 0), None)
        if t is not None:
            c = R[i][j][k][t] / ref[t]
            break
    if c is None:
        return False, None
    for i, j, k in product(range(n), repeat=3):
        if R[i][j][k] != tuple(c * x for x in model(i, j, k)):
            return False, None
    return True, c


def ricci(m: MetricLieAlgebra) -> Matrix:
    n = m.dim
    R = curvature_tensor(m)
    return Matrix(
        [[sum((R[w][a][b][w] for w in range(n)), Fraction(0)) for b in range(n)] for a in range(n)]
    )


def scalar_curvature(m: MetricLieAlgebra) -> Scalar:
    return (m.metric_inverse @ ricci(m)).trace()


def bianchi_defects(m: MetricLieAlgebra, R=None) -> list[tuple[int, int, int]]:
    """Basis triples where R(u,v)w + R(v,w)u + R(w,u)v != 0."""
    R = R or curvature_tensor(m)
    n = m.dim
    bad = []
    for i, j, k in product(range(n), repeat=3):
        s = tuple(a + b + c for a, b, c in zip(R[i][j][k], R[j][k][i], R[k][i][j]))
        if any(x != 0 for x in s):
            bad.append((i, j, k))
    return bad


def _lowered(m: MetricLieAlgebra, R) -> list:
    G, n = m.metric, m.dim
    return [[[[dot(G.row(l), R[i][j][k]) for l in range(n)] for k in range(n)] for j in range(n)] for i in range(n)]


def pair_symmetry_defects(m: MetricLieAlgebra, R=None) -> list[tuple[int, int, int, int]]:
    """Basis quadruples where <R(u,v)w, z> != <R(w,z)u, v>."""
    R = R or curvature_tensor(m)
    L = _lowered(m, R)
    n = m.dim
    return [q for q in product(range(n), repeat=4) if L[q[0]][q[1]][q[2]][q[3]] != L[q[2]][q[3]][q[0]][q[1]]]


def curvature_skew_defects(m: MetricLieAlgebra, R=None) -> list[tuple[int, int, int, int]]:
    """Basis quadruples where <R(u,v)w, z> != -<R(u,v)z, w>."""
    R = R or curvature_tensor(m)
    L = _lowered(m, R)
    n = m.dim
    return [q for q in product(range(n), repeat=4) if L[q[0]][q[1]][q[2]][q[3]] != -L[q[0]][q[1]][q[3]][q[2]]]
