"""Hand-derived lists of two-dimensional subalgebras, for cross-checking enumeration.

Each unimodular algebra gets a parametrized list (sampled at exact values)
and a membership predicate.  For sl(2) the list is "images of span{h, e}
under automorphisms", and membership is certified by constructing the
automorphism explicitly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exactcore import InputError, Matrix, Subspace, inverse, kernel_basis, solve_linear
from ..hyperplanes import SAMPLE_PARAMETERS, SolutionKind
from ..liealg import LieAlgebra, ad, bracket, bracket_span, is_automorphism, is_subalgebra

__all__ = [
    "EXPECTED_KIND",
    "listed_family_samples",
    "in_listed_family",
    "sl2_normalizing_automorphism",
]

EXPECTED_KIND = {
    "nil": SolutionKind.DOUBLE_LINE,
    "su2": SolutionKind.EMPTY,
    "sol": SolutionKind.TWO_LINES,
    "e02": SolutionKind.SINGLE_LINE,
    "sl2": SolutionKind.CONIC_CURVE,
}

_ONE, _ZERO = Fraction(1), Fraction(0)


def _span(*vs) -> Subspace:
    return Subspace.span(vs, 3)


def _add(x, y, t=_ONE):
    return tuple(a + t * b for a, b in zip(x, y))


def _exp_nilpotent(N: Matrix) -> Matrix:
    # ad_e, ad_f are nilpotent of order 3 on sl(2)
    n = N.rows
    return Matrix.identity(n) + N + (N @ N) * Fraction(1, 2)


def listed_family_samples(entry_id: str, g: LieAlgebra, samples: Sequence = SAMPLE_PARAMETERS) -> list[Subspace]:
    X = [g.basis_vector(i) for i in range(3)]
    out: list[Subspace] = []
    if entry_id == "nil":
        # span{X3, a X1 + b X2}
        out.append(_span(X[2], X[1]))
        for t in samples:
            out.append(_span(X[2], _add(X[0], X[1], t)))
    elif entry_id == "su2":
        pass
    elif entry_id == "sol":
        out.append(_span(X[1], X[2]))
        for a in samples:
            out.append(_span(X[1], _add(X[0], X[2], a)))
            out.append(_span(X[2], _add(X[0], X[1], a)))
    elif entry_id == "e02":
        out.append(_span(X[1], X[2]))
    elif entry_id == "sl2":
        e, f, h = X
        base = _span(h, e)
        out.append(base)
        for s in samples:
            for x in (e, f):
                phi = _exp_nilpotent(ad(g, x) * s)
                out.append(Subspace.span([phi.apply(v) for v in base.vectors], 3))
    else:
        raise InputError(f"no subalgebra list for {entry_id!r}")
    uniq = []
    for s in out:
        if s not in uniq:
            uniq.append(s)
    return uniq


def sl2_normalizing_automorphism(g: LieAlgebra, hsub: Subspace) -> Matrix | None:
    """An automorphism phi of sl(2) with phi(hsub) = span{h, e}, or None.

    Follows the construction: a basis (u, v) of hsub with [u, v] = 2v, an
    eigenvector w of ad_u for -2, normalized so [v, w] = u; then
    (u, v, w) -> (h, e, f).
    """
    if hsub.dim != 2 or not is_subalgebra(g, hsub):
        return None
    der = bracket_span(g, hsub, hsub)
    if der.dim != 1:
        return None
    v = der.vectors[0]
    x = next(b for b in hsub.vectors if not der.contains(b))
    c = solve_linear(Matrix.from_columns([v]), bracket(g, x, v))[0]
    if c == 0:
        return None
    u = tuple(2 * a / c for a in x)
    K = kernel_basis(ad(g, u) + Matrix.identity(3) * 2)
    if K.cols != 1:
        return None
    w = K.col(0)
    alpha = solve_linear(Matrix.from_columns([u]), bracket(g, v, w))
    if alpha is None or alpha[0] == 0:
        return None
    w = tuple(a / alpha[0] for a in w)
    # phi maps u -> h, v -> e, w -> f; in (e, f, h) coordinates phi = target @ source^-1
    source = Matrix.from_columns([v, w, u])
    phi = inverse(source)
    if not is_automorphism(g, phi):
        return None
    return phi


def in_listed_family(entry_id: str, g: LieAlgebra, hsub: Subspace) -> bool:
    if hsub.dim != 2:
        return False
    X = [g.basis_vector(i) for i in range(3)]
    if entry_id == "nil":
        return hsub.contains(X[2])
    if entry_id == "su2":
        return False
    if entry_id == "sol":
        if hsub == _span(X[1], X[2]):
            return True
        for keep, other in ((1, 2), (2, 1)):
            if hsub.contains(X[keep]):
                # need X1 + a X_other in hsub for some a
                B = Matrix.from_columns(list(hsub.vectors) + [X[other]])
                if solve_linear(B, X[0]) is not None:
                    return True
        return False
    if entry_id == "e02":
        return hsub == _span(X[1], X[2])
    if entry_id == "sl2":
        phi = sl2_normalizing_automorphism(g, hsub)
        if phi is None:
            return False
        image = Subspace.span([phi.apply(b) for b in hsub.vectors], 3)
        return image == _span(X[2], X[0])
    raise InputError(f"no subalgebra list for {entry_id!r}")
