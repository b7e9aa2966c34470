"""Executable checks for every classification statement in the catalog."""

from __future__ import annotations

import fnmatch
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, Mapping

from ..connection import MetricLieAlgebra
from ..exactcore import InputError, Matrix, Subspace, congruence
from ..hyperplanes import enumerate_hyperplane_subalgebras
from ..kundt import (
    Verdict,
    candidate_hyperplanes,
    check_dim3_criterion,
    check_kundt_pair,
    check_kundt_vector,
    classify_kundt_structures,
)
from ..liealg import bracket, check_jacobi, is_automorphism, is_subalgebra, killing_form
from . import data
from .entries import NamedMetric, instantiate_metric, load, metric_spec
from .families import EXPECTED_KIND, in_listed_family, listed_family_samples

__all__ = [
    "Claim",
    "ClaimResult",
    "ClassificationCase",
    "classification_cases",
    "metric_samples",
    "paper_theorem_suite",
    "run_suite",
]

F = Fraction
POSITIVE = (F(1, 2), F(1), F(2))


@dataclass
class ClassificationCase:
    entry: str
    metric_name: str
    bindings: dict
    metric: MetricLieAlgebra
    h: Subspace
    expect_kundt: bool

    @property
    def label(self) -> str:
        b = ",".join(f"{k}={v}" for k, v in self.bindings.items())
        phi = ",".join(str(x) for x in self.h.covector())
        return f"{self.entry}/{self.metric_name}({b}) h=ker({phi})"


def metric_samples(entry_id: str, name: str) -> list[dict]:
    """Parameter bindings at which a metric form is exercised."""
    S = (F(-2), F(-1), F(-1, 2), F(1, 2), F(1), F(2))
    table = {
        ("nil", "n1"): [{"mu": m} for m in POSITIVE],
        ("nil", "n2"): [{"mu": m} for m in POSITIVE],
        ("nil", "n3"): [{}],
        ("sol", "sol1"): [{"u": u, "v": v} for v in POSITIVE for u in S if u < v and u != -v],
        ("sol", "sol2"): [{"u": u, "v": v} for v in POSITIVE for u in S if -v < u < v],
        ("sol", "sol-item1"): [{"lambda": x} for x in POSITIVE],
        ("sol", "sol3"): [{"u": u, "v": v} for u in POSITIVE for v in POSITIVE],
        ("sol", "sol4"): [{"u": u} for u in POSITIVE],
        ("sol", "sol5"): [{"b": b} for b in POSITIVE],
        ("sol", "sol6"): [{"lambda": x} for x in S],
        ("sol", "sol7"): [{}],
        ("e02", "form1"): [{"u": u, "v": v} for u in POSITIVE for v in POSITIVE],
        ("e02", "form2"): [{"u": u, "v": v} for u in POSITIVE for v in POSITIVE],
        ("e02", "form3"): [{"mu": m} for m in POSITIVE],
        ("sl2", "form1"): [{"alpha": a, "beta": b} for a, b in ((F(1), F(1)), (F(-1), F(2)), (F(1, 2), F(1)))],
        ("sl2", "form2"): [{"alpha": a, "beta": b} for a, b in ((F(1), F(1)), (F(-1), F(2)), (F(1, 2), F(1)))],
        ("sl2", "form3"): [{"alpha": a} for a in (F(1), F(-1), F(1, 2))],
    }
    return table[(entry_id, name)]


def _metric(entry_id: str, name: str, binding: dict, overrides=None) -> MetricLieAlgebra:
    e = load(entry_id, binding, metrics=[name], overrides=overrides)
    return e.metric(name)


def _fmt(v) -> str:
    return ", ".join(str(x) for x in v)


def _X(*coeffs) -> tuple:
    return tuple(F(c) for c in coeffs)


def _span(*vs) -> Subspace:
    return Subspace.span(vs, len(vs[0]))


# expected Kundt pairs inside each fixed normal form
def _expected(entry_id: str, name: str, binding: dict) -> list[Subspace]:
    if entry_id == "nil":
        if name == "n1":
            return [_span(_X(1, 1, 0), _X(0, 0, 1)), _span(_X(1, -1, 0), _X(0, 0, 1))]
        if name == "n3":
            return [_span(_X(1, 0, 0), _X(0, 0, 1))]
        return []
    if entry_id == "sol":
        h23 = _span(_X(0, 1, 0), _X(0, 0, 1))
        h21 = _span(_X(0, 1, 0), _X(1, 0, 0))
        h31 = _span(_X(0, 0, 1), _X(1, 0, 0))
        if name == "sol-item1" or (name == "sol2" and binding.get("u") == 0):
            return [h21, h31]
        if name == "sol6":
            return [h31]
        if name in ("sol5", "sol7"):
            return [h23]
        return []
    if entry_id == "e02":
        return [_span(_X(0, 1, 0), _X(0, 0, 1))] if name == "form3" else []
    raise InputError(entry_id)


_FORMS = {
    "nil": ("n1", "n2", "n3"),
    "sol": ("sol1", "sol2", "sol-item1", "sol3", "sol4", "sol5", "sol6", "sol7"),
    "e02": ("form1", "form2", "form3"),
}


def classification_cases(entry_id: str, overrides=None) -> Iterator[ClassificationCase]:
    """Every (metric sample, enumerated hyperplane subalgebra) pair with its expected verdict.

    sl2 yields only the normal forms paired with span{e, h}.
    """
    if entry_id == "sl2":
        for name in ("form1", "form2", "form3"):
            for b in metric_samples("sl2", name):
                m = _metric("sl2", name, b, overrides)
                h = _span(_X(1, 0, 0), _X(0, 0, 1))
                yield ClassificationCase("sl2", name, b, m, h, True)
        return
    for name in _FORMS[entry_id]:
        for b in metric_samples(entry_id, name):
            m = _metric(entry_id, name, b, overrides)
            expected = _expected(entry_id, name, b)
            subs, _ = candidate_hyperplanes(m)
            for h in list(dict.fromkeys(subs + expected)):
                yield ClassificationCase(entry_id, name, b, m, h, h in expected)


# ---------------------------------------------------------------------------
# claims
# ---------------------------------------------------------------------------


@dataclass
class ClaimResult:
    claim_id: str
    passed: bool
    detail: str = ""


@dataclass
class Claim:
    claim_id: str
    description: str
    check: Callable[[], tuple[bool, str]]

    def run(self) -> ClaimResult:
        try:
            ok, detail = self.check()
        except InputError as exc:
            ok, detail = False, f"input error: {exc}"
        return ClaimResult(self.claim_id, bool(ok), detail)


def _verdicts_match(cases) -> tuple[bool, str]:
    n = 0
    for c in cases:
        n += 1
        got = check_kundt_pair(c.metric, c.h).verdict == Verdict.KUNDT_PAIR
        if got != c.expect_kundt:
            return False, f"{c.label}: expected kundt={c.expect_kundt}, got {got}"
    return n > 0, f"{n} pairs checked"


def _pairs(entry_id, name, subs, overrides):
    for b in metric_samples(entry_id, name):
        m = _metric(entry_id, name, b, overrides)
        for h in subs:
            yield ClassificationCase(entry_id, name, b, m, h, True)


def paper_theorem_suite(overrides: Mapping[str, object] | None = None) -> list[Claim]:
    """Claims in a fixed order.

    ``overrides`` maps "entry/metric" to a replacement matrix, e.g.
    {"nil/n3": Matrix(...)} to run the suite against a corrupted form.
    """
    ov: dict[str, dict] = {}
    for key, M in (overrides or {}).items():
        entry, _, name = key.partition("/")
        if not name:
            raise InputError(f"override key {key!r} must look like entry/metric")
        ov.setdefault(entry, {})[name] = M if isinstance(M, Matrix) else Matrix(M)

    def o(entry):
        return ov.get(entry)

    def only(entry, names):
        return [c for c in classification_cases(entry, o(entry)) if c.metric_name in names]

    X13 = _span(_X(1, 0, 0), _X(0, 0, 1))
    H23 = _span(_X(0, 1, 0), _X(0, 0, 1))
    H21 = _span(_X(0, 1, 0), _X(1, 0, 0))
    H31 = _span(_X(0, 0, 1), _X(1, 0, 0))
    HPM = [_span(_X(1, 1, 0), _X(0, 0, 1)), _span(_X(1, -1, 0), _X(0, 0, 1))]

    claims: list[Claim] = []

    def add(cid, desc):
        def deco(fn):
            claims.append(Claim(cid, desc, fn))
            return fn

        return deco

    @add("jacobi-all", "every catalog algebra satisfies the Jacobi identity")
    def _():
        ids = ["nil", "su2", "sl2", "sol", "e02", "r4-counterexample"]
        gs = [load(i).algebra for i in ids]
        gs += [load("oscillator", {"lambda": lam}).algebra for lam in ((1,), (1, 2))]
        bad = [g.name for g in gs if check_jacobi(g) != 0]
        return not bad, f"failing: {bad}" if bad else f"{len(gs)} algebras"

    @add("nil-thm-1", "n1(mu) with span{X1+-X2, X3} is a Kundt pair")
    def _():
        return _verdicts_match(_pairs("nil", "n1", HPM, o("nil")))

    @add("nil-thm-2", "n3 with span{X1, X3} is a Kundt pair")
    def _():
        return _verdicts_match(_pairs("nil", "n3", [X13], o("nil")))

    @add("nil-exhaustive", "no other (nil form, subalgebra) pair is Kundt; n2 admits none")
    def _():
        return _verdicts_match(classification_cases("nil", o("nil")))

    @add("su2-empty", "su(2) has no two-dimensional subalgebra")
    def _():
        fam = enumerate_hyperplane_subalgebras(load("su2").algebra)
        return fam.solution_kind.value == "Empty", fam.solution_kind.value

    @add("su2-no-kundt", "su(2) with a Lorentz metric has no locally Kundt structure")
    def _():
        e = load("su2", overrides=o("su2"))
        reps = classify_kundt_structures(e.metric("diag"))
        return not reps, f"{len(reps)} reports"

    @add("sol-thm-1", "item-1 form with span{X2, X1} and span{X3, X1}")
    def _():
        return _verdicts_match(_pairs("sol", "sol-item1", [H21, H31], o("sol")))

    @add("sol-thm-2", "sol6 with span{X3, X1}")
    def _():
        return _verdicts_match(_pairs("sol", "sol6", [H31], o("sol")))

    @add("sol-thm-3", "sol5 with span{X2, X3}")
    def _():
        return _verdicts_match(_pairs("sol", "sol5", [H23], o("sol")))

    @add("sol-thm-4", "sol7 with span{X2, X3}")
    def _():
        return _verdicts_match(_pairs("sol", "sol7", [H23], o("sol")))

    @add("sol-item1-is-sol2", "the item-1 form is sol2 at u = 0 up to rescaling X1")
    def _():
        for v in POSITIVE:
            a = _metric("sol", "sol2", {"u": F(0), "v": v}).metric
            b = _metric("sol", "sol-item1", {"lambda": 4 / (v * v)}).metric
            if a != b:
                return False, f"v={v}"
        return True, "v in {1/2, 1, 2}"

    @add("sol-exhaustive", "no other (sol form, subalgebra) pair is Kundt")
    def _():
        return _verdicts_match(classification_cases("sol", o("sol")))

    @add("e02-thm", "third form with span{X2, X3} is the only Kundt pair")
    def _():
        return _verdicts_match(classification_cases("e02", o("e02")))

    @add("e02-forms12-nondegenerate", "span{X2, X3} is non-degenerate for forms 1 and 2")
    def _():
        from ..kundt import is_degenerate

        for c in only("e02", ("form1", "form2")):
            if c.h == H23 and is_degenerate(c.metric, c.h):
                return False, c.label
        return True, "forms 1, 2 at all samples"

    @add("sl2-killing", "Killing form of sl(2) in (e, f, h)")
    def _():
        K = killing_form(load("sl2").algebra)
        return K == data.SL2_M, K.pretty()

    @add("sl2-stabilizer", "T(a, b) is an automorphism preserving span{e, h}")
    def _():
        g = load("sl2").algebra
        eh = _span(_X(1, 0, 0), _X(0, 0, 1))
        vals = (F(-2), F(-1, 2), F(1), F(2), F(3))
        for a, b in product(vals, repeat=2):
            T = data.sl2_stabilizer(a, b)
            if not is_automorphism(g, T):
                return False, f"a={a}, b={b} not an automorphism"
            if Subspace.span([T.apply(v) for v in eh.vectors], 3) != eh:
                return False, f"a={a}, b={b} moves span{{e,h}}"
        for k in (1, 2, 3):
            if not is_automorphism(g, data.sl2_transform(k)):
                return False, f"T{k}"
        return True, "25 parameter pairs and T1, T2, T3"

    for case in (1, 2, 3):

        def _cong(case=case):
            samples = metric_samples("sl2", f"form{case}")
            for b in samples:
                alpha, beta = b["alpha"], b.get("beta")
                S = data.sl2_base_metric(case, alpha, beta)
                P = data.SL2_P3 if case == 3 else data.SL2_P12
                gram = data.SL2_GRAM_3 if case == 3 else data.SL2_GRAM_12
                if congruence(P, data.SL2_M) != gram:
                    return False, "P^t M P differs from the adapted Gram matrix"
                got = congruence(data.sl2_transform(case), S)
                want = data.sl2_result_matrix(case, alpha, beta)
                if got != want:
                    return False, f"{b}: got {got.pretty()}"
            return True, f"{len(samples)} parameter samples"

        claims.append(Claim(f"sl2-cong-{case}", f"T{case}^t S{case} T{case} equals normal form {case}", _cong))

    @add("sl2-normal-forms", "the three normal forms with span{e, h} are Kundt pairs")
    def _():
        return _verdicts_match(classification_cases("sl2", o("sl2")))

    for eid in ("nil", "su2", "sol", "e02", "sl2"):

        def _lists(eid=eid):
            g = load(eid).algebra
            fam = enumerate_hyperplane_subalgebras(g)
            if fam.solution_kind != EXPECTED_KIND[eid]:
                return False, f"kind {fam.solution_kind.value}"
            listed = listed_family_samples(eid, g)
            for h in listed:
                if not is_subalgebra(g, h) or not fam.contains(h.covector()):
                    return False, f"listed {h} not enumerated"
            for h in fam.sample_subspaces() + fam.representatives:
                if not in_listed_family(eid, g, h):
                    return False, f"enumerated {h} not listed"
            return True, f"{len(listed)} listed, kind {fam.solution_kind.value}"

        claims.append(Claim(f"subalgebras-{eid}", f"two-dimensional subalgebras of {eid}", _lists))

    @add("biinv-adinv", "k_lambda([x,y],z) + k_lambda(y,[x,z]) = 0")
    def _():
        for lam in ((F(1, 2),), (F(1),), (F(2),), (F(1), F(2))):
            e = load("oscillator", {"lambda": lam})
            g, G = e.algebra, e.metrics["k"].matrix
            E = [g.basis_vector(i) for i in range(g.dim)]
            for x, y, z in product(E, repeat=3):
                if G.bilinear(bracket(g, x, y), z) + G.bilinear(y, bracket(g, x, z)) != 0:
                    return False, f"lambda={lam}"
        return True, "n=1 (three lambdas) and n=2"

    @add("osc-levi-civita", "x.y = [x,y]/2 for the oscillator form")
    def _():
        for lam in ((F(1, 2),), (F(1),), (F(2),), (F(1), F(2))):
            m = load("oscillator", {"lambda": lam}).metric("k")
            g = m.algebra
            for i, j in product(range(g.dim), repeat=2):
                want = tuple(c / 2 for c in g.structure[i][j])
                if m.levi_civita.entry(i, j) != want:
                    return False, f"lambda={lam} pair ({i},{j})"
        return True, "all basis pairs"

    @add("osc-parallel", "e0 is parallel for the oscillator form")
    def _():
        for lam in ((F(1, 2),), (F(1),), (F(2),), (F(1), F(2))):
            m = load("oscillator", {"lambda": lam}).metric("k")
            rep = check_kundt_vector(m, m.algebra.vector({"e0": 1}))
            if not rep.k2_holds or rep.recurrence_alpha is None or any(a != 0 for a in rep.recurrence_alpha):
                return False, f"lambda={lam}"
        return True, "k2 holds with alpha = 0"

    @add("r4-local-only", "the four-dimensional example is locally Kundt but not a Kundt pair")
    def _():
        e = load("r4-counterexample", overrides=o("r4-counterexample"))
        r = check_kundt_pair(e.metric("default"), e.subalgebra("h134"))
        ok = r.verdict == Verdict.LOCALLY_KUNDT_ONLY and not r.ad_e_into_h
        return ok, f"{r.verdict.value}, e=({_fmt(r.e_generator)}), e.e=({_fmt(r.e_dot_e)})"

    @add("dim3-criterion", "the three-dimensional shortcut agrees with the Kundt pair test")
    def _():
        n = 0
        for eid in ("nil", "sol", "e02", "sl2"):
            for c in classification_cases(eid, o(eid)):
                n += 1
                a = check_dim3_criterion(c.metric, c.h)
                b = check_kundt_pair(c.metric, c.h).verdict == Verdict.KUNDT_PAIR
                if a != b:
                    return False, c.label
        return True, f"{n} triples"

    return claims


def run_suite(pattern: str | None = None, overrides=None) -> list[ClaimResult]:
    out = []
    for claim in paper_theorem_suite(overrides):
        if pattern and not fnmatch.fnmatch(claim.claim_id, pattern):
            continue
        out.append(claim.run())
    return out
