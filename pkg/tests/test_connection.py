import random
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from kundtlab.catalog import load
from kundtlab.catalog.data import nil_algebra, oscillator_algebra, oscillator_metric, su2_algebra
from kundtlab.connection import (
    MetricLieAlgebra,
    bianchi_defects,
    curvature,
    curvature_skew_defects,
    curvature_tensor,
    is_constant_curvature,
    levi_civita,
    pair_symmetry_defects,
    ricci,
    scalar_curvature,
)
from kundtlab.exactcore import InputError, Matrix, Subspace
from kundtlab.hyperplanes import enumerate_hyperplane_subalgebras
from kundtlab.kundt import check_kundt_pair
from kundtlab.liealg import LieAlgebra, bracket

from randmetrics import random_degenerate_metric, random_hyperplane_subalgebra, random_lorentz_metric

N3 = Matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
X = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
ZERO = (0, 0, 0)


def nil_n3():
    return MetricLieAlgebra(nil_algebra(), N3)


class TestLeviCivita:
    def test_nil_n3_table(self):
        # independent solve of the Koszul system, frozen
        expected = {(1, 0): (0, 0, -1), (1, 1): (1, 0, 0)}
        lc = levi_civita(nil_n3())
        for i, j in product(range(3), repeat=2):
            assert lc.entry(i, j) == expected.get((i, j), ZERO), (i, j)

    def test_abelian_products_vanish(self):
        m = MetricLieAlgebra(LieAlgebra.abelian(3), Matrix.diag([1, 1, -1]))
        for i, j in product(range(3), repeat=2):
            assert levi_civita(m).entry(i, j) == ZERO

    def test_oscillator_half_bracket(self):
        lam = (F(1), F(2))
        g = oscillator_algebra(lam)
        m = MetricLieAlgebra(g, oscillator_metric(lam))
        for i, j in product(range(g.dim), repeat=2):
            half = tuple(x / 2 for x in bracket(g, g.basis_vector(i), g.basis_vector(j)))
            assert m.levi_civita.entry(i, j) == half

    def test_degenerate_metric_rejected(self):
        with pytest.raises(InputError):
            MetricLieAlgebra(nil_algebra(), Matrix.diag([1, 1, 0]))

    def test_cached(self):
        m = nil_n3()
        assert m.levi_civita is m.levi_civita


class TestCurvature:
    def test_abelian_flat(self):
        m = MetricLieAlgebra(LieAlgebra.abelian(3), Matrix.diag([1, 1, -1]))
        assert is_constant_curvature(m) == (True, 0)
        assert ricci(m).is_zero() and scalar_curvature(m) == 0

    def test_round_su2(self):
        m = MetricLieAlgebra(su2_algebra(), Matrix.identity(3) * F(1, 4))
        assert curvature(m, X[0], X[1], X[1]) == (F(1, 4), 0, 0)
        ok, c = is_constant_curvature(m)
        assert ok and c == 1
        assert ricci(m) == m.metric * (2 * c)
        assert scalar_curvature(m) == 6

    def test_nil_n1_not_constant(self):
        m = load("nil", {"mu": 1}).metric("n1")
        assert curvature(m, X[0], X[1], X[0]) == (0, F(-3, 4), 0)
        assert curvature(m, X[0], X[2], X[0]) == (0, 0, F(1, 4))
        assert is_constant_curvature(m) == (False, None)

    def test_nil_n3_flat(self):
        m = nil_n3()
        assert ricci(m).is_zero()
        assert is_constant_curvature(m) == (True, 0)

    def test_oscillator_biinvariant_formula(self):
        lam = (F(1, 2),)
        g = oscillator_algebra(lam)
        m = MetricLieAlgebra(g, oscillator_metric(lam))
        B = [g.basis_vector(i) for i in range(g.dim)]
        for u, v, w in product(B, repeat=3):
            expected = tuple(-x / 4 for x in bracket(g, bracket(g, u, v), w))
            assert curvature(m, u, v, w) == expected

    def test_antisymmetric_first_pair(self):
        m = load("sol", {"u": 1, "v": 1}, metrics=["sol3"]).metric("sol3")
        for u, w in product(X, repeat=2):
            assert curvature(m, u, u, w) == ZERO


def _random_catalog_metric(seed):
    rng = random.Random(seed)
    entry = rng.choice(["nil", "sol", "e02", "sl2", "su2"])
    g = load(entry).algebra
    return MetricLieAlgebra(g, random_lorentz_metric(rng, 3))


class TestInvariants:
    @settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(st.integers(0, 10**6))
    def test_random_metrics(self, seed):
        m = _random_catalog_metric(seed)
        lc = m.levi_civita
        assert lc.torsion_defect(m.algebra) == []
        assert lc.compatibility_defect(m.metric) == []
        R = curvature_tensor(m)
        assert bianchi_defects(m, R) == []
        assert pair_symmetry_defects(m, R) == []
        assert curvature_skew_defects(m, R) == []

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6))
    def test_curvature_preserves_stable_hyperplanes(self, seed):
        # metrics degenerate on a chosen subalgebra make stability common
        rng = random.Random(seed)
        g = load(rng.choice(["nil", "sol", "e02"])).algebra
        m = MetricLieAlgebra(g, random_degenerate_metric(rng, random_hyperplane_subalgebra(rng, g)))
        for h in enumerate_hyperplane_subalgebras(g).sample_subspaces():
            if not check_kundt_pair(m, h).product_stable:
                continue
            for u, v, w in product(h.vectors, repeat=3):
                assert h.contains(curvature(m, u, v, w))

    def test_stable_hyperplane_curvature_on_kundt_catalog(self):
        m = load("nil", {"mu": 2}).metric("n1")
        h = Subspace.span([(1, 1, 0), (0, 0, 1)], 3)
        assert check_kundt_pair(m, h).product_stable
        for u, v, w in product(h.vectors, repeat=3):
            assert h.contains(curvature(m, u, v, w))

    def test_constant_curvature_ricci_relation(self):
        for scale in (F(1, 4), F(1), F(3)):
            m = MetricLieAlgebra(su2_algebra(), Matrix.identity(3) * scale)
            ok, c = is_constant_curvature(m)
            assert ok
            assert ricci(m) == m.metric * (2 * c)
