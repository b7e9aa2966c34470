from fractions import Fraction as F

import pytest

from kundtlab.catalog import CATALOG_IDS, load, metric_spec
from kundtlab.catalog.data import ENTRY_SPECS, SL2_M, sl2_base_metric, sl2_result_matrix, sl2_transform
from kundtlab.catalog.theorems import metric_samples, paper_theorem_suite, run_suite
from kundtlab.exactcore import InputError, Matrix, congruence, signature
from kundtlab.liealg import ad, bracket, check_jacobi, is_subalgebra, killing_form

FORMS = [(eid, s.name) for eid, es in ENTRY_SPECS.items() for s in es.metrics]


def sampled_forms():
    for eid, name in FORMS:
        try:
            bindings = metric_samples(eid, name)
        except KeyError:
            bindings = [{}]
        for b in bindings:
            yield eid, name, b


class TestLoad:
    def test_su2_brackets(self):
        g = load("su2").algebra
        X = [g.basis_vector(i) for i in range(3)]
        assert bracket(g, X[0], X[1]) == X[2]
        assert bracket(g, X[1], X[2]) == X[0]
        assert bracket(g, X[2], X[0]) == X[1]

    def test_oscillator_n1(self):
        e = load("oscillator", {"n": 1, "lambda1": 1})
        g = e.algebra
        v = lambda lab: g.vector({lab: 1})  # noqa: E731
        assert g.dim == 4
        assert bracket(g, v("em1"), v("e1")) == v("ec1")
        assert bracket(g, v("em1"), v("ec1")) == tuple(-x for x in v("e1"))
        assert bracket(g, v("e1"), v("ec1")) == v("e0")
        k = e.metrics["k"].matrix
        assert k.bilinear(v("em1"), v("e0")) == 1
        assert k.bilinear(v("e1"), v("e1")) == 1 and k.bilinear(v("ec1"), v("ec1")) == 1

    def test_sol5(self):
        M = load("sol", {"b": 2}, metrics=["sol5"]).metrics["sol5"].matrix
        assert M == Matrix([[0, 0, -1], [0, 1, 1], [-1, 1, 1]])

    def test_unknown_id(self):
        with pytest.raises(InputError):
            load("heisenberg")

    @pytest.mark.parametrize(
        "entry,params,metrics,needle",
        [
            ("nil", {"mu": 0}, ["n1"], "mu > 0"),
            ("sol", {"u": 2, "v": 1}, ["sol1"], "u < v"),
            ("sol", {"b": -1}, ["sol5"], "b > 0"),
            ("sol", {"lambda": 0}, ["sol6"], "lambda != 0"),
            ("sl2", {"alpha": 0}, ["form3"], "alpha != 0"),
            ("sl2", {"beta": -1}, ["form1"], "beta > 0"),
            ("oscillator", {"lambda": (2, 1)}, None, "lambda1 <= ... <= lambdan"),
            ("oscillator", {"lambda": (0,)}, None, "0 < lambda1"),
        ],
    )
    def test_constraint_named(self, entry, params, metrics, needle):
        with pytest.raises(InputError, match=r"constraint violated.*" + needle.replace(".", r"\.")):
            load(entry, params, metrics=metrics)

    def test_unknown_parameter(self):
        with pytest.raises(InputError):
            load("nil", {"nu": 1})

    def test_overrides(self):
        M = Matrix.diag([1, 1, -1])
        e = load("nil", overrides={"n3": M})
        assert e.metrics["n3"].matrix == M

    def test_provenance_present(self):
        for eid in CATALOG_IDS:
            assert load(eid).provenance


class TestInvariants:
    @pytest.mark.parametrize("eid", CATALOG_IDS)
    def test_jacobi(self, eid):
        assert check_jacobi(load(eid).algebra) == 0

    def test_every_sampled_metric_lorentz(self):
        count = 0
        for eid, name, b in sampled_forms():
            M = load(eid, b, metrics=[name]).metrics[name].matrix
            sig = tuple(signature(M))
            rule = metric_spec(eid, name).signature_rule
            if rule == "lorentz":
                assert sig == (2, 1, 0) or sig == (3, 1, 0), (eid, name, b)
            else:
                assert sig[2] == 0
            count += 1
        assert count > 50

    def test_sol3_and_n2_lorentz(self):
        assert tuple(signature(load("sol", {"u": 1, "v": 1}, metrics=["sol3"]).metrics["sol3"].matrix)) == (2, 1, 0)
        assert tuple(signature(load("nil", {"mu": 1}, metrics=["n2"]).metrics["n2"].matrix)) == (2, 1, 0)

    def test_sl2_third_form_sign_flip(self):
        # at negative alpha the printed third form is Lorentzian only after g -> -g
        M = load("sl2", {"alpha": -1}, metrics=["form3"]).metrics["form3"].matrix
        assert tuple(signature(M)) == (1, 2, 0)
        assert tuple(signature(-M)) == (2, 1, 0)

    def test_e02_forms_printed_identically(self):
        e = load("e02", {"u": 1, "v": 2}, metrics=["form1", "form2"])
        assert e.metrics["form1"].matrix == e.metrics["form2"].matrix

    @pytest.mark.parametrize("lam", [(F(1, 2),), (F(1),), (F(2),), (F(1), F(2)), (F(1, 3), F(1, 3))])
    def test_oscillator_biinvariance(self, lam):
        e = load("oscillator", {"lambda": lam})
        g, k = e.algebra, e.metrics["k"].matrix
        for i in range(g.dim):
            A = ad(g, g.basis_vector(i))
            assert (A.T @ k + k @ A).is_zero()

    @pytest.mark.parametrize("eid", CATALOG_IDS)
    def test_subalgebras(self, eid):
        e = load(eid)
        for h in e.subalgebras.values():
            assert is_subalgebra(e.algebra, h)


class TestSl2Matrices:
    def test_killing(self):
        assert killing_form(load("sl2").algebra) == SL2_M

    @pytest.mark.parametrize("case", [1, 2, 3])
    @pytest.mark.parametrize("alpha,beta", [(F(1), F(1)), (F(-1), F(2)), (F(1, 2), F(1))])
    def test_congruences(self, case, alpha, beta):
        S = sl2_base_metric(case, alpha, beta)
        assert congruence(sl2_transform(case), S) == sl2_result_matrix(case, alpha, beta)

    def test_transforms_exposed(self):
        t = load("sl2", {"alpha": 1, "beta": 1}).transforms
        assert {"M", "P12", "P3", "T1", "T2", "T3", "S1", "S2", "S3"} <= set(t)


class TestSuite:
    def test_all_claims_pass(self):
        results = run_suite()
        failed = [(r.claim_id, r.detail) for r in results if not r.passed]
        assert not failed
        assert len(results) == len(paper_theorem_suite())

    def test_order_deterministic(self):
        assert [c.claim_id for c in paper_theorem_suite()] == [c.claim_id for c in paper_theorem_suite()]

    def test_filter(self):
        ids = [r.claim_id for r in run_suite("sl2-*")]
        assert ids and all(i.startswith("sl2-") for i in ids)

    def test_corrupted_n3(self):
        bad = {"nil/n3": Matrix([[1, 0, 0], [0, 1, 0], [0, 0, -1]])}
        res = {r.claim_id: r.passed for r in run_suite("nil-*", overrides=bad)}
        assert res["nil-thm-2"] is False
        assert res["nil-thm-1"] is True
