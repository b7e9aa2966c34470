"""Codimension-one subalgebras of three-dimensional Lie algebras.

A hyperplane ker(phi) is spanned by x, y with x cross y parallel to phi, so
[x, y] = sum_k phi_k [X_i, X_j] over cyclic (i, j, k).  The hyperplane is a
subalgebra iff phi([x, y]) = 0, i.e. iff the quadratic form

    Q(phi) = sum_k sum_m phi_k phi_m c^m_{ij}        ((i, j, k) cyclic)

vanishes.  The real zero set of Q in the projective plane of covectors is
read off from the signature of Q, which gives an exact, exhaustive
description of the family of subalgebras.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

import sympy as sp

from .exactcore import (
    InputError,
    Matrix,
    QuadraticNumber,
    Scalar,
    Subspace,
    field_sqrt,
    kernel_basis,
    primitive_vector,
    sign,
    signature,
)
from .liealg import LieAlgebra, is_subalgebra

__all__ = [
    "SolutionKind",
    "SAMPLE_PARAMETERS",
    "HyperplaneFamily",
    "frobenius_conic",
    "enumerate_hyperplane_subalgebras",
    "binary_quadratic_roots",
    "DegenerateMembers",
    "degenerate_members",
]

SAMPLE_PARAMETERS = tuple(Fraction(x) for x in ("-2", "-1", "-1/2", "1/2", "1", "2"))
SEARCH_BOUND = 32
_CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


class SolutionKind(str, enum.Enum):
    EMPTY = "Empty"
    SINGLE_LINE = "SingleLine"
    TWO_LINES = "TwoLines"
    DOUBLE_LINE = "DoubleLine"
    CONIC_CURVE = "ConicCurve"
    ALL = "All"


def frobenius_conic(g: LieAlgebra) -> Matrix:
    """Symmetric matrix of Q on covectors."""
    if g.dim != 3:
        raise InputError(f"hyperplane enumeration needs dimension 3, got {g.dim}")
    c = g.structure
    L = [[Fraction(0)] * 3 for _ in range(3)]
    for i, j, k in _CYCLIC:
        for m in range(3):
            L[m][k] = c[i][j][m]
    half = Fraction(1, 2)
    return Matrix([[half * (L[a][b] + L[b][a]) for b in range(3)] for a in range(3)])


def _qform(Q: Matrix, x, y=None):
    return Q.bilinear(x, x if y is None else y)


def _unit(i: int) -> tuple:
    return tuple(Fraction(int(k == i)) for k in range(3))


def _complement(vectors: Sequence[tuple]) -> list[tuple]:
    """Standard basis vectors completing ``vectors`` to a basis of Q^3."""
    chosen = list(vectors)
    out = []
    for i in range(3):
        e = _unit(i)
        if Matrix.from_columns(chosen + [e]).rank() == len(chosen) + 1:
            chosen.append(e)
            out.append(e)
        if len(chosen) == 3:
            break
    return out


def binary_quadratic_roots(a, b, c) -> list[tuple] | None:
    """Projective roots (s, t) of a s^2 + 2b s t + c t^2.

    Returns ``None`` when the form vanishes identically.  Raises
    :class:`ArithmeticError` when a root is real but outside the fields handled
    exactly here.
    """
    if a == 0 and b == 0 and c == 0:
        return None
    if a == 0:
        roots = [(Fraction(1), Fraction(0))]
        if b != 0:
            roots.append((-c / (2 * b), Fraction(1)))
        return roots
    disc = b * b - a * c
    if sign(disc) < 0:
        return []
    if disc == 0:
        return [(-b / a, Fraction(1))]
    r = field_sqrt(disc)
    if r is None:
        raise ArithmeticError(f"discriminant {disc} has no square root in a supported field")
    return [((-b + r) / a, Fraction(1)), ((-b - r) / a, Fraction(1))]


def _covector_key(phi: tuple) -> tuple:
    return tuple(float(x) for x in phi) + tuple(str(x) for x in phi)


def _normalize(phi: Sequence) -> tuple:
    return primitive_vector(phi)


@dataclass
class HyperplaneFamily:
    """All hyperplane subalgebras of a three-dimensional algebra.

    ``components`` describes the zero set of Q: each entry is a tuple of one
    covector (a single hyperplane) or two covectors p, q (the pencil
    s p + t q).  For a ConicCurve the zero set is parametrized by
    ``conic_chart = (p, u, w)``: phi(s, t) = Q(w_st) p - 2 Q(p, w_st) w_st with
    w_st = s u + t w, starting from the rational point p.
    """

    algebra: LieAlgebra
    conic: Matrix
    solution_kind: SolutionKind
    components: list[tuple] = field(default_factory=list)
    conic_chart: tuple | None = None
    rational_points: list[tuple] = field(default_factory=list)

    def contains(self, phi: Sequence) -> bool:
        """True iff ker(phi) is a subalgebra (phi nonzero)."""
        if all(x == 0 for x in phi):
            raise InputError("zero covector")
        return _qform(self.conic, tuple(phi)) == 0

    def chart_point(self, s, t) -> tuple:
        p, u, w = self.conic_chart
        ws = tuple(s * a + t * b for a, b in zip(u, w))
        qw = _qform(self.conic, ws)
        bpw = _qform(self.conic, p, ws)
        return tuple(qw * a - 2 * bpw * b for a, b in zip(p, ws))

    def sample_covectors(self, samples: Sequence = SAMPLE_PARAMETERS) -> list[tuple]:
        """Exact members at the given parameter values, deduplicated."""
        out: list[tuple] = []
        kind = self.solution_kind
        if kind == SolutionKind.ALL:
            for t in (Fraction(0),) + tuple(samples):
                out += [(Fraction(1), t, Fraction(0)), (Fraction(0), Fraction(1), t), (t, Fraction(0), Fraction(1))]
        elif kind == SolutionKind.CONIC_CURVE:
            out += list(self.rational_points)
            if self.conic_chart is not None:
                out.append(self.conic_chart[0])
                out.append(self.chart_point(Fraction(0), Fraction(1)))
                out += [self.chart_point(Fraction(1), t) for t in samples]
        else:
            for comp in self.components:
                if len(comp) == 1:
                    out.append(comp[0])
                else:
                    p, q = comp
                    out += [p, q] + [tuple(a + t * b for a, b in zip(p, q)) for t in samples]
        seen, uniq = set(), []
        for phi in out:
            if all(x == 0 for x in phi):
                continue
            key = _normalize(phi)
            if key not in seen:
                seen.add(key)
                uniq.append(key)
        return uniq

    @property
    def representatives(self) -> list[Subspace]:
        reps: list[tuple] = []
        if self.solution_kind == SolutionKind.CONIC_CURVE:
            reps = [_normalize(p) for p in self.rational_points]
        elif self.solution_kind == SolutionKind.ALL:
            reps = [_unit(i) for i in range(3)]
        else:
            for comp in self.components:
                reps += [_normalize(p) for p in comp]
        uniq = list(dict.fromkeys(reps))
        return [Subspace.hyperplane(p) for p in uniq]

    def sample_subspaces(self, samples: Sequence = SAMPLE_PARAMETERS) -> list[Subspace]:
        return [Subspace.hyperplane(p) for p in self.sample_covectors(samples)]

    def describe(self) -> str:
        fmt = lambda v: "(" + ", ".join(str(x) for x in v) + ")"  # noqa: E731
        kind = self.solution_kind
        if kind == SolutionKind.EMPTY:
            return "no codimension-one subalgebra"
        if kind == SolutionKind.ALL:
            return "every hyperplane is a subalgebra"
        if kind == SolutionKind.CONIC_CURVE:
            if self.conic_chart is None:
                return "smooth conic of covectors, no rational point within the search bound"
            p, u, w = self.conic_chart
            return (
                f"smooth conic of covectors through {fmt(p)}; "
                f"phi(s,t) = Q(w)p - 2Q(p,w)w, w = s{fmt(u)} + t{fmt(w)}"
            )
        parts = []
        for comp in self.components:
            if len(comp) == 1:
                parts.append(f"phi ~ {fmt(comp[0])}")
            else:
                parts.append(f"phi = s{fmt(comp[0])} + t{fmt(comp[1])}")
        return "; ".join(parts)


def _rational_points(Q: Matrix, bound: int, limit: int) -> list[tuple]:
    if not Q.is_rational():
        raise InputError("rational point search needs a rational conic")
    den = math.lcm(*(x.denominator for r in Q.tolist() for x in r))
    q = [[int(x * den) for x in r] for r in Q.tolist()]
    found = []
    for r in range(1, bound + 1):
        for x in product(range(-r, r + 1), repeat=3):
            if max(abs(v) for v in x) != r:
                continue
            lead = next(v for v in x if v != 0)
            if lead < 0 or math.gcd(*x) != 1:
                continue
            val = sum(q[i][j] * x[i] * x[j] for i in range(3) for j in range(3))
            if val == 0:
                found.append(tuple(Fraction(v) for v in x))
                if len(found) >= limit:
                    return found
    return found


def _conic_family(g: LieAlgebra, Q: Matrix, kind: SolutionKind) -> HyperplaneFamily:
    points = _rational_points(Q, SEARCH_BOUND, limit=6)
    chart = None
    if points:
        p = points[0]
        u, w = _complement([p])
        chart = (p, u, w)
    return HyperplaneFamily(g, Q, kind, conic_chart=chart, rational_points=points)


@lru_cache(maxsize=64)
def enumerate_hyperplane_subalgebras(g: LieAlgebra) -> HyperplaneFamily:
    Q = frobenius_conic(g)
    pos, neg, null = signature(Q)
    rank = pos + neg
    if rank == 0:
        fam = HyperplaneFamily(g, Q, SolutionKind.ALL)
    elif rank == 1:
        K = kernel_basis(Q).columns()
        fam = HyperplaneFamily(g, Q, SolutionKind.DOUBLE_LINE, components=[tuple(K)])
    elif rank == 2:
        k = kernel_basis(Q).col(0)
        if pos and neg:
            u, w = _complement([k])
            roots = binary_quadratic_roots(_qform(Q, u), _qform(Q, u, w), _qform(Q, w))
            comps = []
            for s, t in roots:
                n = tuple(s * a + t * b for a, b in zip(u, w))
                comps.append((_normalize(k), _normalize(n)))
            fam = HyperplaneFamily(g, Q, SolutionKind.TWO_LINES, components=comps)
        else:
            fam = HyperplaneFamily(g, Q, SolutionKind.SINGLE_LINE, components=[(_normalize(k),)])
    elif pos and neg:
        fam = _conic_family(g, Q, SolutionKind.CONIC_CURVE)
    else:
        fam = HyperplaneFamily(g, Q, SolutionKind.EMPTY)
    for h in fam.representatives:
        assert is_subalgebra(g, h), h
    return fam


# ---------------------------------------------------------------------------
# degenerate members: hyperplanes ker(phi) with phi null for the dual metric
# ---------------------------------------------------------------------------


@dataclass
class DegenerateMembers:
    covectors: list[tuple]
    unresolved: int = 0
    whole_components: list[tuple] = field(default_factory=list)


def _to_sympy(x: Scalar):
    if isinstance(x, QuadraticNumber):
        return sp.Rational(x.a.numerator, x.a.denominator) + sp.Rational(
            x.b.numerator, x.b.denominator
        ) * sp.sqrt(x.d)
    x = Fraction(x)
    return sp.Rational(x.numerator, x.denominator)


def _from_sympy(r) -> Scalar:
    r = sp.nsimplify(sp.expand(r)) if not r.is_Rational else r
    if r.is_Rational:
        return Fraction(int(r.p), int(r.q))
    a, b, d = Fraction(0), Fraction(0), None
    for term, coef in sp.expand(r).as_coefficients_dict().items():
        if not coef.is_Rational:
            raise ArithmeticError(f"cannot represent {r}")
        coef = Fraction(int(coef.p), int(coef.q))
        if term == 1:
            a += coef
        elif term.is_Pow and term.exp == sp.Rational(1, 2) and term.base.is_Integer:
            if d is not None and d != int(term.base):
                raise ArithmeticError(f"cannot represent {r}")
            d = int(term.base)
            b += coef
        else:
            raise ArithmeticError(f"cannot represent {r}")
    if d is None:
        return a
    return QuadraticNumber.make(a, b, d)


def _fields(values) -> set[int]:
    return {x.d for x in values if isinstance(x, QuadraticNumber)}


def _univariate_roots(coeffs: Sequence[Scalar]) -> tuple[list[Scalar], int]:
    """Real roots of sum coeffs[k] x^k lying in Q or one Q(sqrt d); plus unresolved count."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    deg = len(coeffs) - 1
    if deg <= 0:
        return [], 0
    exts = _fields(coeffs)
    if len(exts) > 1:
        return [], deg
    x = sp.Symbol("x")
    expr = sum(_to_sympy(c) * x**k for k, c in enumerate(coeffs))
    kwargs = {"extension": sp.sqrt(next(iter(exts)))} if exts else {}
    _, factors = sp.factor_list(sp.expand(expr), x, **kwargs)
    roots: list[Scalar] = []
    unresolved = 0
    for f, _mult in factors:
        P = sp.Poly(f, x)
        cs = [_from_sympy(c) for c in reversed(P.all_coeffs())]
        if P.degree() == 1:
            roots.append(-cs[0] / cs[1])
        elif P.degree() == 2:
            try:
                pairs = binary_quadratic_roots(cs[2], cs[1] / 2, cs[0])
            except ArithmeticError:
                unresolved += 2
                continue
            for s, t in pairs or []:
                if t != 0:
                    roots.append(s / t)
        else:
            # only real roots count as unresolved
            unresolved += len(sp.real_roots(sp.Poly(f, x))) if not exts else P.degree()
    return list(dict.fromkeys(roots)), unresolved


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def degenerate_members(family: HyperplaneFamily, dual_metric: Matrix) -> DegenerateMembers:
    """Covectors phi of the family with phi^T dual_metric phi == 0.

    ker(phi) is degenerate for a metric G exactly when phi is null for G^-1,
    so pass ``dual_metric = G^-1``.  Whole pencils of degenerate members are
    reported in ``whole_components`` (their samples are included).
    """
    D = dual_metric
    kind = family.solution_kind
    out = DegenerateMembers([])
    if kind == SolutionKind.EMPTY:
        return out
    if kind in (SolutionKind.SINGLE_LINE, SolutionKind.TWO_LINES, SolutionKind.DOUBLE_LINE):
        for comp in family.components:
            if len(comp) == 1:
                if _qform(D, comp[0]) == 0:
                    out.covectors.append(comp[0])
                continue
            p, q = comp
            try:
                roots = binary_quadratic_roots(_qform(D, p), _qform(D, p, q), _qform(D, q))
            except ArithmeticError:
                out.unresolved += 2
                continue
            if roots is None:
                out.whole_components.append(comp)
                out.covectors += [p, q] + [
                    tuple(a + t * b for a, b in zip(p, q)) for t in SAMPLE_PARAMETERS
                ]
                continue
            out.covectors += [tuple(s * a + t * b for a, b in zip(p, q)) for s, t in roots]
    elif kind == SolutionKind.CONIC_CURVE:
        if family.conic_chart is None:
            out.unresolved += 4
        else:
            out.covectors += _conic_null_points(family, D, out)
    else:
        # every hyperplane is a subalgebra: the degenerate ones form the dual null cone
        if D.is_rational() and signature(D)[0] and signature(D)[1]:
            sub = _conic_family(family.algebra, D, SolutionKind.CONIC_CURVE)
            out.covectors += sub.sample_covectors()
        else:
            out.unresolved += 1
    seen, uniq = set(), []
    for phi in out.covectors:
        if all(x == 0 for x in phi):
            continue
        key = _normalize(phi)
        if key not in seen:
            seen.add(key)
            uniq.append(key)
    out.covectors = uniq
    return out


def _conic_null_points(family: HyperplaneFamily, D: Matrix, out: DegenerateMembers) -> list[tuple]:
    p, u, w = family.conic_chart
    Q = family.conic
    # phi(s,t) components as polynomials in x = s/t (t = 1), coefficient lists low->high
    # w_x = x u + w
    def lin(a, b):
        return [b, a]  # b + a x

    wx = [lin(ui, wi) for ui, wi in zip(u, w)]
    qw = [Fraction(0)] * 3
    bpw = [Fraction(0)] * 2
    for i in range(3):
        for j in range(3):
            if Q[i, j] != 0:
                qw = [a + Q[i, j] * b for a, b in zip(qw, _poly_mul(wx[i], wx[j]))]
                bpw = [a + Q[i, j] * p[i] * b for a, b in zip(bpw, wx[j])]
    phi = []
    for i in range(3):
        term1 = [c * p[i] for c in qw]
        term2 = [2 * c for c in _poly_mul(bpw, wx[i])]
        phi.append([a - b for a, b in zip(term1, term2)])
    quartic = [Fraction(0)] * 5
    for i in range(3):
        for j in range(3):
            if D[i, j] != 0:
                quartic = [a + D[i, j] * b for a, b in zip(quartic, _poly_mul(phi[i], phi[j]))]
    pts = []
    if all(c == 0 for c in quartic):
        out.whole_components.append((p,))
        return family.sample_covectors()
    roots, unresolved = _univariate_roots(quartic)
    out.unresolved += unresolved
    pts += [family.chart_point(r, Fraction(1)) for r in roots]
    if quartic[4] == 0:
        # root at t = 0, i.e. the direction s u alone
        pts.append(family.chart_point(Fraction(1), Fraction(0)))
    return pts
