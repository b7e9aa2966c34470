"""Algebras, metric normal forms and transformation matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from ..exactcore import InputError, Matrix, QuadraticNumber, Scalar, Subspace, inverse, sign, to_scalar
from ..liealg import LieAlgebra, killing_form

SQRT2 = QuadraticNumber(0, 1, 2)

XS = ("X1", "X2", "X3")
SL2 = ("e", "f", "h")


def _f(x) -> Fraction:
    return Fraction(x)


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------


def nil_algebra() -> LieAlgebra:
    return LieAlgebra.from_brackets(XS, {("X1", "X2"): {"X3": 1}}, name="nil")


def su2_algebra() -> LieAlgebra:
    return LieAlgebra.from_brackets(
        XS,
        {("X1", "X2"): {"X3": 1}, ("X2", "X3"): {"X1": 1}, ("X3", "X1"): {"X2": 1}},
        name="su2",
    )


def sl2_algebra() -> LieAlgebra:
    return LieAlgebra.from_brackets(
        SL2, {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}}, name="sl2"
    )


def sol_algebra() -> LieAlgebra:
    return LieAlgebra.from_brackets(XS, {("X1", "X2"): {"X2": 1}, ("X1", "X3"): {"X3": -1}}, name="sol")


def e02_algebra() -> LieAlgebra:
    return LieAlgebra.from_brackets(XS, {("X1", "X2"): {"X3": 1}, ("X1", "X3"): {"X2": -1}}, name="e02")


def oscillator_labels(n: int) -> list[str]:
    labels = ["em1", "e0"]
    for i in range(1, n + 1):
        labels += [f"e{i}", f"ec{i}"]
    return labels


def oscillator_algebra(lambdas) -> LieAlgebra:
    """[em1, e_i] = l_i ec_i, [em1, ec_i] = -l_i e_i, [e_i, ec_i] = e0."""
    n = len(lambdas)
    br = {}
    for i, lam in enumerate(lambdas, start=1):
        br[("em1", f"e{i}")] = {f"ec{i}": lam}
        br[("em1", f"ec{i}")] = {f"e{i}": -lam}
        br[(f"e{i}", f"ec{i}")] = {"e0": 1}
    return LieAlgebra.from_brackets(oscillator_labels(n), br, name=f"oscillator(n={n})")


def oscillator_metric(lambdas) -> Matrix:
    """2 x_em1 x_e0 + sum (1/l_j)(x_j^2 + xc_j^2)."""
    n = len(lambdas)
    d = 2 * n + 2
    G = [[Fraction(0)] * d for _ in range(d)]
    G[0][1] = G[1][0] = Fraction(1)
    for j, lam in enumerate(lambdas):
        G[2 + 2 * j][2 + 2 * j] = 1 / lam
        G[3 + 2 * j][3 + 2 * j] = 1 / lam
    return Matrix(G)


def r4_algebra() -> LieAlgebra:
    return LieAlgebra.from_brackets(("e1", "e2", "e3", "e4"), {("e1", "e2"): {"e2": 1}}, name="r4")


# ---------------------------------------------------------------------------
# metric normal forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Constraint:
    text: str
    test: Callable[[Mapping[str, Scalar]], bool]


@dataclass(frozen=True)
class MetricSpec:
    """A named metric family: parameter names with defaults and exact constraints.

    ``signature_rule`` is "lorentz" (checked to be (n-1, 1, 0)), "lorentz-up-to-sign"
    (g or -g is Lorentz) or "nondegenerate".
    """

    name: str
    build: Callable[..., Matrix]
    defaults: tuple = ()
    constraints: tuple = ()
    signature_rule: str = "lorentz"
    note: str = ""

    @property
    def param_names(self) -> tuple:
        return tuple(k for k, _ in self.defaults)


def _pos(name):
    return Constraint(f"{name} > 0", lambda p: sign(p[name]) > 0)


def _nonzero(name):
    return Constraint(f"{name} != 0", lambda p: p[name] != 0)


def _m(rows) -> Matrix:
    return Matrix(rows)


NIL_METRICS = (
    MetricSpec("n1", lambda mu: _m([[1, 0, 0], [0, -1, 0], [0, 0, mu]]), (("mu", _f(1)),), (_pos("mu"),)),
    MetricSpec("n2", lambda mu: _m([[1, 0, 0], [0, 1, 0], [0, 0, -mu]]), (("mu", _f(1)),), (_pos("mu"),)),
    MetricSpec("n3", lambda: _m([[1, 0, 0], [0, 0, 1], [0, 1, 0]])),
)

SU2_METRICS = (
    MetricSpec(
        "killing-scaled",
        lambda: killing_form(su2_algebra()) * Fraction(-1, 8),
        signature_rule="nondegenerate",
        note="round bi-invariant form, -Killing/8; Riemannian",
    ),
    MetricSpec("diag", lambda: _m([[1, 0, 0], [0, 1, 0], [0, 0, -1]]), note="diag(1, 1, -1)"),
)

_V_LT = Constraint("u < v", lambda p: p["u"] < p["v"])

SOL_METRICS = (
    MetricSpec(
        "sol1",
        lambda u, v: _m([[4 / _nz(u * u - v * v, "u^2 != v^2"), 0, 0], [0, 1, u / v], [0, u / v, 1]]),
        (("u", _f(0)), ("v", _f(1))),
        (_pos("v"), _V_LT, Constraint("u != -v", lambda p: p["u"] != -p["v"])),
    ),
    MetricSpec(
        "sol2",
        lambda u, v: _m([[4 / _nz(v * v - u * u, "u^2 != v^2"), 0, 0], [0, u / v, -1], [0, -1, u / v]]),
        (("u", _f(0)), ("v", _f(1))),
        (_pos("v"), _V_LT, Constraint("u != -v", lambda p: p["u"] != -p["v"])),
        note="negative definite when u < -v; rejected by the signature check",
    ),
    MetricSpec(
        "sol-item1",
        lambda lam: _m([[lam, 0, 0], [0, 0, -1], [0, -1, 0]]),
        (("lambda", _f(1)),),
        (_pos("lambda"),),
        note="sol2 at u = 0 rescaled: lambda = 4/v^2",
    ),
    MetricSpec(
        "sol3",
        lambda u, v: _m([[1 / (u + v), 0, 0], [0, -v / u, 1], [0, 1, 1]]),
        (("u", _f(1)), ("v", _f(1))),
        (_pos("u"), _pos("v")),
    ),
    MetricSpec("sol4", lambda u: _m([[1 / u, 0, 0], [0, -1, 0], [0, 0, 1]]), (("u", _f(1)),), (_pos("u"),)),
    MetricSpec(
        "sol5",
        lambda b: _m([[0, 0, -2 / b], [0, 1, 1], [-2 / b, 1, 1]]),
        (("b", _f(1)),),
        (_pos("b"),),
    ),
    MetricSpec(
        "sol6",
        lambda lam: _m([[lam * lam, 0, 0], [0, lam, 1], [0, 1, 0]]),
        (("lambda", _f(1)),),
        (_nonzero("lambda"),),
    ),
    MetricSpec("sol7", lambda: _m([[0, 0, 1], [0, 1, 0], [1, 0, 0]])),
)

E02_METRICS = (
    MetricSpec(
        "form1",
        lambda u, v: _m([[0, 1, 0], [1, u, 0], [0, 0, v]]),
        (("u", _f(1)), ("v", _f(1))),
        (_pos("u"), _pos("v")),
    ),
    MetricSpec(
        "form2",
        lambda u, v: _m([[0, 1, 0], [1, u, 0], [0, 0, v]]),
        (("u", _f(1)), ("v", _f(1))),
        (_pos("u"), _pos("v")),
        note="printed identically to form1; kept as printed",
    ),
    MetricSpec(
        "form3",
        lambda mu: _m([[0, 1, 0], [1, 0, 0], [0, 0, mu]]),
        (("mu", _f(1)),),
        (_pos("mu"),),
    ),
)

SL2_METRICS = (
    MetricSpec(
        "form1",
        lambda alpha, beta: _m([[0, 4 * alpha, 0], [4 * alpha, 0, 0], [0, 0, 8 * beta]]),
        (("alpha", _f(1)), ("beta", _f(1))),
        (_nonzero("alpha"), _pos("beta")),
    ),
    MetricSpec(
        "form2",
        lambda alpha, beta: _m([[0, 4 * alpha, 0], [4 * alpha, 1, 0], [0, 0, 8 * beta]]),
        (("alpha", _f(1)), ("beta", _f(1))),
        (_nonzero("alpha"), _pos("beta")),
    ),
    MetricSpec(
        "form3",
        lambda alpha: _m([[0, 4 * alpha, 0], [4 * alpha, 0, 2 * SQRT2], [0, 2 * SQRT2, 8 * alpha]]),
        (("alpha", _f(1)),),
        (_nonzero("alpha"),),
        signature_rule="lorentz-up-to-sign",
        note="signature (1, 2) for alpha < 0, i.e. minus a Lorentz form",
    ),
    MetricSpec("killing", lambda: killing_form(sl2_algebra())),
)

R4_METRICS = (
    MetricSpec(
        "default",
        lambda: _m([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
    ),
)


def _nz(x, text):
    if x == 0:
        raise InputError(f"parameter constraint violated: {text}")
    return x


# ---------------------------------------------------------------------------
# sl(2) transformation matrices
# ---------------------------------------------------------------------------


def sl2_stabilizer(a, b) -> Matrix:
    """Automorphisms of sl(2) preserving span{e, h}."""
    a, b = to_scalar(a), to_scalar(b)
    if a == 0:
        raise InputError("parameter constraint violated: a != 0")
    return _m([[a, -a * b * b, -2 * a * b], [0, 1 / a, 0], [0, b, 1]])


SL2_M = _m([[0, 4, 0], [4, 0, 0], [0, 0, 8]])
SL2_P12 = _m([[-SQRT2, 1, -1], [0, 0, Fraction(1, 4)], [SQRT2 / 4, 0, Fraction(1, 2)]])
SL2_P3 = _m([[1, -SQRT2, -1], [0, 0, Fraction(1, 4)], [0, SQRT2 / 4, Fraction(1, 2)]])
SL2_T1 = _m([[1, -4, -4], [0, 1, 0], [0, 2, 1]])
SL2_T2 = _m([[4, -1, -4], [0, Fraction(1, 4), 0], [0, Fraction(1, 2), 1]])
SL2_T3 = SL2_T2
SL2_GRAM_12 = _m([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
SL2_GRAM_3 = _m([[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def sl2_normal_operator(case: int, alpha, beta=None) -> Matrix:
    """Matrix of the Killing-symmetric operator A in the adapted basis."""
    alpha = to_scalar(alpha)
    if case == 1:
        return Matrix.diag([to_scalar(beta), alpha, alpha])
    if case == 2:
        return _m([[to_scalar(beta), 0, 0], [0, alpha, 1], [0, 0, alpha]])
    if case == 3:
        return _m([[alpha, 1, 0], [0, alpha, 1], [0, 0, alpha]])
    raise InputError(f"no sl2 normal form case {case}")


def sl2_base_metric(case: int, alpha, beta=None) -> Matrix:
    """Metric in the basis (e, f, h): (P A P^-1)^t M."""
    P = SL2_P3 if case == 3 else SL2_P12
    A = P @ sl2_normal_operator(case, alpha, beta) @ inverse(P)
    return A.T @ SL2_M


def sl2_transform(case: int) -> Matrix:
    return {1: SL2_T1, 2: SL2_T2, 3: SL2_T3}[case]


def sl2_result_matrix(case: int, alpha, beta=None) -> Matrix:
    spec = SL2_METRICS[case - 1]
    return spec.build(alpha, beta) if case < 3 else spec.build(alpha)


# ---------------------------------------------------------------------------
# entry descriptions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EntrySpec:
    id: str
    build_algebra: Callable[..., LieAlgebra]
    metrics: tuple
    subalgebras: Mapping[str, list] = field(default_factory=dict)
    provenance: str = ""


def _s(*vecs):
    return list(vecs)


ENTRY_SPECS: dict[str, EntrySpec] = {
    "nil": EntrySpec(
        "nil",
        nil_algebra,
        NIL_METRICS,
        {
            "h0-plus": _s({"X1": 1, "X2": 1}, {"X3": 1}),
            "h0-minus": _s({"X1": 1, "X2": -1}, {"X3": 1}),
            "h13": _s({"X1": 1}, {"X3": 1}),
            "h23": _s({"X2": 1}, {"X3": 1}),
        },
        "Heisenberg algebra; metric normal forms n1, n2, n3; Kundt pairs (n1, X1+-X2, X3) and (n3, X1, X3)",
    ),
    "su2": EntrySpec(
        "su2",
        su2_algebra,
        SU2_METRICS,
        {},
        "compact simple algebra; no two-dimensional subalgebra",
    ),
    "sl2": EntrySpec(
        "sl2",
        sl2_algebra,
        SL2_METRICS,
        {"eh": _s({"e": 1}, {"h": 1})},
        "split simple algebra in the basis (e, f, h); three Kundt normal forms on span{e, h}",
    ),
    "sol": EntrySpec(
        "sol",
        sol_algebra,
        SOL_METRICS,
        {
            "h23": _s({"X2": 1}, {"X3": 1}),
            "h21": _s({"X2": 1}, {"X1": 1}),
            "h31": _s({"X3": 1}, {"X1": 1}),
        },
        "solvable algebra; metric normal forms sol1..sol7 plus the u = 0 member of sol2",
    ),
    "e02": EntrySpec(
        "e02",
        e02_algebra,
        E02_METRICS,
        {"h23": _s({"X2": 1}, {"X3": 1})},
        "Euclidean motion algebra; forms 1 and 2 are printed identically and stored as printed",
    ),
    "r4-counterexample": EntrySpec(
        "r4-counterexample",
        r4_algebra,
        R4_METRICS,
        {"h134": _s({"e1": 1}, {"e3": 1}, {"e4": 1})},
        "four-dimensional locally Kundt structure that is not a Kundt pair",
    ),
}
