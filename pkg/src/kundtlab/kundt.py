"""Kundt conditions on metric Lie algebras.

A left-invariant isotropic field V is tested against the K1 scalar
conditions and the K2 recurrence conditions.  A codimension-one subalgebra h
is tested for the Kundt pair conditions: h degenerate, h stable under the
Levi-Civita product, and e.e = 0 for a generator e of h^perp.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .connection import MetricLieAlgebra
from .exactcore import (
    InputError,
    Matrix,
    Scalar,
    Subspace,
    kernel_basis,
    primitive_vector,
    solve_linear,
    to_scalar,
)
from .hyperplanes import degenerate_members, enumerate_hyperplane_subalgebras
from .liealg import bracket, bracket_span, is_abelian, is_subalgebra

__all__ = [
    "Verdict",
    "KundtVectorReport",
    "KundtPairReport",
    "orthogonal",
    "is_degenerate",
    "restricted_gram",
    "check_kundt_vector",
    "check_kundt_pair",
    "check_dim3_criterion",
    "classify_kundt_structures",
]


class Verdict(str, enum.Enum):
    KUNDT_PAIR = "KundtPair"
    LOCALLY_KUNDT_ONLY = "LocallyKundtOnly"
    NOT_LOCALLY_KUNDT = "NotLocallyKundt"


def _is_zero_vec(v) -> bool:
    return all(x == 0 for x in v)


def restricted_gram(m: MetricLieAlgebra, S: Subspace) -> Matrix:
    B = S.basis
    return B.T @ m.metric @ B


def orthogonal(m: MetricLieAlgebra, S: Subspace) -> Subspace:
    """Metric orthogonal complement of S."""
    if S.ambient_dim != m.dim:
        raise InputError("subspace lives in a different dimension")
    if S.dim == 0:
        return Subspace.full(m.dim)
    K = kernel_basis(S.basis.T @ m.metric)
    return Subspace.span(K.columns(), m.dim)


def is_degenerate(m: MetricLieAlgebra, S: Subspace) -> bool:
    if S.dim == 0:
        return False
    return restricted_gram(m, S).det() == 0


# ---------------------------------------------------------------------------
# K1 / K2 for a single vector
# ---------------------------------------------------------------------------


@dataclass
class KundtVectorReport:
    v: tuple
    norm_vv: Scalar
    vdotv: tuple
    trace_A: Scalar
    g_BB: Scalar
    g_CC: Scalar
    g_vdotv: Scalar
    perp_basis: list = field(default_factory=list)
    recurrence_alpha: tuple | None = None
    k1_holds: bool = False
    k2_holds: bool = False

    @property
    def k1_traces(self) -> tuple:
        return (self.trace_A, self.g_BB, self.g_CC, self.g_vdotv)

    @property
    def k1_scalars(self) -> tuple:
        return (self.norm_vv,) + self.k1_traces


def _endomorphism_adjoint(m: MetricLieAlgebra, F: Matrix) -> Matrix:
    # <F x, y> = <x, F* y>  =>  F* = G^-1 F^t G
    return m.metric_inverse @ F.T @ m.metric


def check_kundt_vector(m: MetricLieAlgebra, v: Sequence) -> KundtVectorReport:
    v = tuple(to_scalar(x) for x in v)
    if len(v) != m.dim:
        raise InputError(f"vector of length {len(v)} in a {m.dim}-dimensional algebra")
    if _is_zero_vec(v):
        raise InputError("the zero vector is not a Kundt candidate")
    n = m.dim
    e = [m.algebra.basis_vector(i) for i in range(n)]
    A = Matrix.from_columns([m.product(e[j], v) for j in range(n)], rows=n)
    As = _endomorphism_adjoint(m, A)
    half = Fraction(1, 2)
    B = (A + As) * half
    C = (A - As) * half
    g_BB = (B @ _endomorphism_adjoint(m, B)).trace()
    g_CC = (C @ _endomorphism_adjoint(m, C)).trace()
    vv = m.product(v, v)
    norm_vv = m.inner(v, v)
    g_vv = m.inner(vv, vv)
    trA = A.trace()
    k1 = all(x == 0 for x in (norm_vv, trA, g_BB, g_CC, g_vv))

    perp = orthogonal(m, Subspace.span([v], n)).vectors
    line = Matrix.from_columns([v], rows=n)
    alpha = []
    for x in perp:
        c = solve_linear(line, m.product(x, v))
        if c is None:
            alpha = None
            break
        alpha.append(c[0])
    alpha = tuple(alpha) if alpha is not None else None
    k2 = norm_vv == 0 and alpha is not None and _is_zero_vec(vv)
    return KundtVectorReport(
        v=v,
        norm_vv=norm_vv,
        vdotv=vv,
        trace_A=trA,
        g_BB=g_BB,
        g_CC=g_CC,
        g_vdotv=g_vv,
        perp_basis=perp,
        recurrence_alpha=alpha,
        k1_holds=k1,
        k2_holds=k2,
    )


# ---------------------------------------------------------------------------
# Kundt pairs
# ---------------------------------------------------------------------------


@dataclass
class KundtPairReport:
    h: Subspace
    degenerate: bool
    product_stable: bool
    e_generator: tuple
    e_dot_e: tuple
    e_dot_e_zero: bool
    ad_e_into_h: bool
    derived_equals_perp: bool | None
    verdict: Verdict
    stability_witness: tuple | None = None

    @property
    def covector(self) -> tuple:
        return self.h.covector()

    @property
    def is_kundt_pair(self) -> bool:
        return self.verdict == Verdict.KUNDT_PAIR

    @property
    def is_locally_kundt(self) -> bool:
        return self.verdict != Verdict.NOT_LOCALLY_KUNDT


def _require_hyperplane_subalgebra(m: MetricLieAlgebra, h: Subspace) -> None:
    if h.ambient_dim != m.dim:
        raise InputError(f"subspace of dimension {h.ambient_dim} in a {m.dim}-dimensional algebra")
    if h.codim != 1:
        raise InputError(f"h has codimension {h.codim}, expected 1")
    if not is_subalgebra(m.algebra, h):
        raise InputError("h is not a subalgebra")


def _perp_generator(m: MetricLieAlgebra, h: Subspace, degenerate: bool) -> tuple:
    if degenerate:
        k = kernel_basis(restricted_gram(m, h)).col(0)
        e = h.basis.apply(k)
    else:
        e = orthogonal(m, h).vectors[0]
    return primitive_vector(e)


def _ad_into(m: MetricLieAlgebra, e: tuple, h: Subspace) -> bool:
    g = m.algebra
    return all(h.contains(bracket(g, e, g.basis_vector(j))) for j in range(g.dim))


def check_kundt_pair(m: MetricLieAlgebra, h: Subspace) -> KundtPairReport:
    _require_hyperplane_subalgebra(m, h)
    degenerate = is_degenerate(m, h)
    witness = None
    vs = h.vectors
    for a in vs:
        for b in vs:
            p = m.product(a, b)
            if not h.contains(p):
                witness = (a, b, p)
                break
        if witness:
            break
    stable = witness is None
    e = _perp_generator(m, h, degenerate)
    ee = m.product(e, e)
    ee_zero = _is_zero_vec(ee)
    ad_in = _ad_into(m, e, h)
    derived = None
    if m.dim == 3 and not is_abelian(m.algebra, h):
        derived = bracket_span(m.algebra, h, h) == orthogonal(m, h)
    if degenerate and stable:
        verdict = Verdict.KUNDT_PAIR if ee_zero else Verdict.LOCALLY_KUNDT_ONLY
    else:
        verdict = Verdict.NOT_LOCALLY_KUNDT
    return KundtPairReport(
        h=h,
        degenerate=degenerate,
        product_stable=stable,
        e_generator=e,
        e_dot_e=ee,
        e_dot_e_zero=ee_zero,
        ad_e_into_h=ad_in,
        derived_equals_perp=derived,
        verdict=verdict,
        stability_witness=witness,
    )


def check_dim3_criterion(m: MetricLieAlgebra, h: Subspace) -> bool:
    """Three-dimensional shortcut for the Kundt pair test.

    Abelian h: Kundt iff h is degenerate and ad_e(g) lies in h.
    Non-abelian h: Kundt iff h^perp == [h, h] and ad_e(g) lies in h.
    """
    if m.dim != 3:
        raise InputError(f"the three-dimensional criterion needs dim 3, got {m.dim}")
    _require_hyperplane_subalgebra(m, h)
    perp = orthogonal(m, h)
    e = perp.vectors[0]
    if not _ad_into(m, e, h):
        return False
    if is_abelian(m.algebra, h):
        return is_degenerate(m, h)
    return bracket_span(m.algebra, h, h) == perp


def _sort_key(phi: tuple) -> tuple:
    return tuple(float(x) for x in phi)


def candidate_hyperplanes(m: MetricLieAlgebra) -> tuple[list[Subspace], int]:
    """Hyperplane subalgebras worth testing, plus a count of degenerate members
    that could not be written down exactly."""
    fam = enumerate_hyperplane_subalgebras(m.algebra)
    covs = list(fam.sample_covectors())
    covs += [h.covector() for h in fam.representatives]
    deg = degenerate_members(fam, m.metric_inverse)
    covs += deg.covectors
    seen, uniq = set(), []
    for phi in covs:
        key = primitive_vector(phi)
        if key not in seen:
            seen.add(key)
            uniq.append(key)
    uniq.sort(key=_sort_key)
    return [Subspace.hyperplane(phi) for phi in uniq], deg.unresolved


def classify_kundt_structures(m: MetricLieAlgebra) -> list[KundtPairReport]:
    """Kundt pair reports for every enumerated hyperplane subalgebra.

    Family members are sampled at fixed parameters; in addition every
    degenerate member is solved for exactly when its coordinates lie in a
    quadratic field, so no locally Kundt structure is missed in that case.
    Output is ordered by covector.
    """
    if m.dim != 3:
        raise InputError(f"classification needs dimension 3, got {m.dim}")
    subs, _ = candidate_hyperplanes(m)
    return [check_kundt_pair(m, h) for h in subs]
