import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from kundtlab.catalog import load
from kundtlab.catalog.data import e02_algebra, nil_algebra, r4_algebra, sl2_algebra, sol_algebra, su2_algebra
from kundtlab.catalog.families import EXPECTED_KIND, in_listed_family, listed_family_samples
from kundtlab.connection import MetricLieAlgebra
from kundtlab.exactcore import InputError, Matrix, Subspace, inverse
from kundtlab.hyperplanes import (
    SolutionKind,
    binary_quadratic_roots,
    degenerate_members,
    enumerate_hyperplane_subalgebras,
    frobenius_conic,
)
from kundtlab.kundt import is_degenerate
from kundtlab.liealg import LieAlgebra, is_subalgebra

from randmetrics import random_lorentz_metric

ALGEBRAS = {"nil": nil_algebra, "su2": su2_algebra, "sol": sol_algebra, "e02": e02_algebra, "sl2": sl2_algebra}
small_int = st.integers(-9, 9)


class TestConic:
    def test_su2_definite(self):
        Q = frobenius_conic(su2_algebra())
        assert Q == Matrix.identity(3) or Q == -Matrix.identity(3)

    def test_dimension_check(self):
        with pytest.raises(InputError):
            frobenius_conic(r4_algebra())
        with pytest.raises(InputError):
            enumerate_hyperplane_subalgebras(r4_algebra())

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(sorted(ALGEBRAS)), small_int, small_int, small_int)
    def test_conic_decides_subalgebra(self, name, a, b, c):
        if (a, b, c) == (0, 0, 0):
            return
        g = ALGEBRAS[name]()
        fam = enumerate_hyperplane_subalgebras(g)
        phi = (F(a), F(b), F(c))
        assert fam.contains(phi) == is_subalgebra(g, Subspace.hyperplane(phi))


class TestKinds:
    @pytest.mark.parametrize("name", sorted(ALGEBRAS))
    def test_expected_kind(self, name):
        assert enumerate_hyperplane_subalgebras(ALGEBRAS[name]()).solution_kind == EXPECTED_KIND[name]

    def test_abelian_all(self):
        assert enumerate_hyperplane_subalgebras(LieAlgebra.abelian(3)).solution_kind == SolutionKind.ALL

    def test_nil_double_line(self):
        fam = enumerate_hyperplane_subalgebras(nil_algebra())
        assert fam.contains((1, 0, 0)) and fam.contains((2, -3, 0))
        assert not fam.contains((0, 0, 1))

    def test_sol_two_lines(self):
        fam = enumerate_hyperplane_subalgebras(sol_algebra())
        assert fam.contains((0, 1, 0)) and fam.contains((0, 0, 1)) and fam.contains((1, 3, 0))
        assert not fam.contains((0, 1, 1))

    def test_su2_has_no_samples(self):
        fam = enumerate_hyperplane_subalgebras(su2_algebra())
        assert fam.representatives == [] and fam.sample_subspaces() == []

    @pytest.mark.parametrize("name", sorted(ALGEBRAS))
    def test_representatives_are_subalgebras(self, name):
        g = ALGEBRAS[name]()
        fam = enumerate_hyperplane_subalgebras(g)
        for h in fam.representatives + fam.sample_subspaces():
            assert is_subalgebra(g, h)

    def test_sl2_conic_has_rational_points(self):
        fam = enumerate_hyperplane_subalgebras(sl2_algebra())
        assert fam.conic_chart is not None
        for s in (F(-2), F(1, 3), F(5)):
            phi = fam.chart_point(s, F(1))
            assert any(phi) and fam.contains(phi)


class TestListedFamilies:
    @pytest.mark.parametrize("name", sorted(ALGEBRAS))
    def test_listed_members_are_enumerated(self, name):
        g = ALGEBRAS[name]()
        fam = enumerate_hyperplane_subalgebras(g)
        for h in listed_family_samples(name, g):
            assert fam.contains(h.covector())

    @pytest.mark.parametrize("name", sorted(ALGEBRAS))
    def test_enumerated_members_are_listed(self, name):
        g = ALGEBRAS[name]()
        for h in enumerate_hyperplane_subalgebras(g).sample_subspaces():
            assert in_listed_family(name, g, h)

    def test_membership_rejects_non_subalgebra(self):
        g = sl2_algebra()
        assert not in_listed_family("sl2", g, Subspace.span([(1, 0, 0), (0, 1, 0)], 3))


class TestBinaryQuadratic:
    def test_split(self):
        roots = binary_quadratic_roots(F(1), F(0), F(-4))
        assert sorted(a / b for a, b in roots) == [-2, 2]

    def test_zero_form(self):
        assert binary_quadratic_roots(0, 0, 0) is None

    def test_definite(self):
        assert binary_quadratic_roots(1, 0, 1) == []


class TestDegenerateMembers:
    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(["nil", "sol", "e02", "sl2"]), st.integers(0, 10**6))
    def test_members_are_degenerate_subalgebras(self, name, seed):
        rng = random.Random(seed)
        g = ALGEBRAS[name]()
        m = MetricLieAlgebra(g, random_lorentz_metric(rng, 3))
        fam = enumerate_hyperplane_subalgebras(g)
        dm = degenerate_members(fam, inverse(m.metric))
        for phi in dm.covectors:
            h = Subspace.hyperplane(phi)
            assert is_subalgebra(g, h)
            assert is_degenerate(m, h)

    def test_nil_n1_finds_both_lines(self):
        m = load("nil", {"mu": 1}).metric("n1")
        dm = degenerate_members(enumerate_hyperplane_subalgebras(m.algebra), m.metric_inverse)
        hs = {Subspace.hyperplane(p) for p in dm.covectors}
        assert Subspace.span([(1, 1, 0), (0, 0, 1)], 3) in hs
        assert Subspace.span([(1, -1, 0), (0, 0, 1)], 3) in hs
