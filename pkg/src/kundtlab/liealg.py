"""Lie algebras given by structure constants.

Convention: ``structure[i][j][k]`` is c^k_{ij}, so [x_i, x_j] = sum_k c^k_{ij} x_k.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .exactcore import InputError, Matrix, Scalar, Subspace, inverse, kernel_basis, to_scalar

__all__ = [
    "LieAlgebra",
    "bracket",
    "check_jacobi",
    "ad",
    "killing_form",
    "is_unimodular",
    "derived_algebra",
    "center",
    "is_automorphism",
    "is_subalgebra",
    "is_abelian",
    "bracket_span",
]

Vector = tuple


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q with a labelled basis.

    Antisymmetry is validated on construction.  The Jacobi identity is not:
    call :func:`check_jacobi`, so that deliberately broken tables can still be
    built for negative tests.
    """

    def __init__(self, structure, labels: Sequence[str] | None = None, name: str = ""):
        n = len(structure)
        data = tuple(
            tuple(tuple(to_scalar(c) for c in structure[i][j]) for j in range(n)) for i in range(n)
        )
        for i, j in product(range(n), repeat=2):
            if len(data[i][j]) != n:
                raise InputError("structure tensor must be dim x dim x dim")
            for k in range(n):
                if data[i][j][k] != -data[j][i][k]:
                    raise InputError(
                        f"structure constants not antisymmetric at (i={i}, j={j}, k={k})"
                    )
        if labels is None:
            labels = [f"X{i + 1}" for i in range(n)]
        labels = [str(s) for s in labels]
        if len(labels) != n or len(set(labels)) != n:
            raise InputError("need one distinct label per basis vector")
        self.dim = n
        self.labels = tuple(labels)
        self.structure = data
        self.name = name
        self._terms = [
            (i, j, k, data[i][j][k])
            for i, j, k in product(range(n), repeat=3)
            if data[i][j][k] != 0
        ]

    @classmethod
    def from_brackets(
        cls,
        labels: Sequence[str],
        brackets: Mapping[tuple[str, str], Mapping[str, object]],
        name: str = "",
    ) -> "LieAlgebra":
        """Build from ``{(a, b): {c: coeff}}`` meaning [a, b] = sum coeff * c."""
        n = len(labels)
        index = {s: i for i, s in enumerate(labels)}
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (a, b), rhs in brackets.items():
            try:
                i, j = index[a], index[b]
            except KeyError as exc:
                raise InputError(f"unknown basis label {exc.args[0]!r}") from None
            if i == j:
                raise InputError(f"bracket [{a},{a}] must vanish")
            for lab, coeff in rhs.items():
                if lab not in index:
                    raise InputError(f"unknown basis label {lab!r}")
                k = index[lab]
                val = to_scalar(coeff)
                c[i][j][k] = val
                c[j][i][k] = -val
        return cls(c, labels, name)

    @classmethod
    def abelian(cls, n: int, labels: Sequence[str] | None = None) -> "LieAlgebra":
        return cls([[[0] * n for _ in range(n)] for _ in range(n)], labels, name=f"R^{n}")

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown basis label {label!r}") from None

    def vector(self, coeffs: Mapping[str, object]) -> Vector:
        v = [Fraction(0)] * self.dim
        for lab, c in coeffs.items():
            v[self.index(lab)] += to_scalar(c)
        return tuple(v)

    def brackets(self) -> dict[tuple[str, str], dict[str, Scalar]]:
        """Nonzero brackets [x_i, x_j] with i < j, keyed by labels."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                rhs = {self.labels[k]: c for k, c in enumerate(self.structure[i][j]) if c != 0}
                if rhs:
                    out[(self.labels[i], self.labels[j])] = rhs
        return out

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.labels == other.labels and self.structure == other.structure

    def __hash__(self):
        return hash((self.labels, self.structure))

    def __repr__(self):
        rels = ", ".join(
            f"[{a},{b}]=" + "+".join(f"{c}*{k}" for k, c in rhs.items())
            for (a, b), rhs in self.brackets().items()
        )
        return f"LieAlgebra({self.name or self.dim}: {rels or 'abelian'})"


def _check_len(g: LieAlgebra, *vs) -> None:
    for v in vs:
        if len(v) != g.dim:
            raise InputError(f"vector of length {len(v)} in a {g.dim}-dimensional algebra")


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    _check_len(g, x, y)
    out = [Fraction(0)] * g.dim
    for i, j, k, c in g._terms:
        xi, yj = x[i], y[j]
        if xi != 0 and yj != 0:
            out[k] = out[k] + c * xi * yj
    return tuple(out)


def check_jacobi(g: LieAlgebra) -> Scalar:
    """Largest absolute component of [[x,y],z] + [[y,z],x] + [[z,x],y] over basis triples."""
    worst: Scalar = Fraction(0)
    e = [g.basis_vector(i) for i in range(g.dim)]
    for i, j, k in product(range(g.dim), repeat=3):
        if not (i < j < k):
            # cyclic sum is alternating, so ordered triples suffice
            continue
        x, y, z = e[i], e[j], e[k]
        terms = (
            bracket(g, bracket(g, x, y), z),
            bracket(g, bracket(g, y, z), x),
            bracket(g, bracket(g, z, x), y),
        )
        for comp in zip(*terms):
            s = abs(sum(comp, Fraction(0)))
            if s > worst:
                worst = s
    return worst


def ad(g: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> [x, y] acting on coordinate columns."""
    _check_len(g, x)
    cols = [bracket(g, x, g.basis_vector(j)) for j in range(g.dim)]
    return Matrix.from_columns(cols, rows=g.dim)


def killing_form(g: LieAlgebra) -> Matrix:
    ads = [ad(g, g.basis_vector(i)) for i in range(g.dim)]
    return Matrix([[(ads[i] @ ads[j]).trace() for j in range(g.dim)] for i in range(g.dim)])


def is_unimodular(g: LieAlgebra) -> bool:
    return all(ad(g, g.basis_vector(i)).trace() == 0 for i in range(g.dim))


def bracket_span(g: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """span{[a, b] : a in A, b in B}."""
    vecs = [bracket(g, a, b) for a in A.vectors for b in B.vectors]
    return Subspace.spanned_by(vecs, g.dim)


def derived_algebra(g: LieAlgebra) -> Subspace:
    full = Subspace.full(g.dim)
    return bracket_span(g, full, full)


def center(g: LieAlgebra) -> Subspace:
    # z is central iff ad(e_j) z = 0 for every j
    rows = []
    for j in range(g.dim):
        rows.extend(ad(g, g.basis_vector(j)).tolist())
    K = kernel_basis(Matrix(rows, cols=g.dim))
    return Subspace.span(K.columns(), g.dim)


def is_abelian(g: LieAlgebra, S: Subspace) -> bool:
    vs = S.vectors
    return all(all(c == 0 for c in bracket(g, vs[a], vs[b])) for a in range(len(vs)) for b in range(a + 1, len(vs)))


def is_automorphism(g: LieAlgebra, T: Matrix) -> bool:
    """T invertible and T[x, y] == [Tx, Ty] on all basis pairs."""
    if T.shape != (g.dim, g.dim):
        raise InputError(f"expected a {g.dim}x{g.dim} matrix, got {T.shape}")
    try:
        inverse(T)
    except InputError:
        return False
    images = T.columns()
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = T.apply(g.structure[i][j])
            if lhs != bracket(g, images[i], images[j]):
                return False
    return True


def is_subalgebra(g: LieAlgebra, S: Subspace) -> bool:
    if S.ambient_dim != g.dim:
        raise InputError("subspace lives in a different dimension")
    vs = S.vectors
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            if not S.contains(bracket(g, vs[a], vs[b])):
                return False
    return True
