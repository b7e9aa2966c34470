from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from kundtlab.catalog.data import (
    e02_algebra,
    nil_algebra,
    oscillator_algebra,
    sl2_algebra,
    sl2_stabilizer,
    sol_algebra,
    su2_algebra,
)
from kundtlab.exactcore import InputError, Matrix, Subspace
from kundtlab.hyperplanes import enumerate_hyperplane_subalgebras
from kundtlab.liealg import (
    LieAlgebra,
    ad,
    bracket,
    center,
    check_jacobi,
    derived_algebra,
    is_automorphism,
    is_subalgebra,
    is_unimodular,
    killing_form,
)

UNIMODULAR = [nil_algebra, su2_algebra, sl2_algebra, sol_algebra, e02_algebra]
small_q = st.builds(F, st.integers(-5, 5), st.integers(1, 3))
vec3 = st.tuples(small_q, small_q, small_q)


class TestBrackets:
    def test_nil(self):
        g = nil_algebra()
        assert bracket(g, (1, 0, 0), (0, 1, 0)) == (0, 0, 1)

    def test_sl2_h_e(self):
        g = sl2_algebra()
        e, h = g.basis_vector(0), g.basis_vector(2)
        assert bracket(g, h, e) == tuple(2 * x for x in e)

    def test_su2_cyclic(self):
        g = su2_algebra()
        X = [g.basis_vector(i) for i in range(3)]
        assert bracket(g, X[0], X[1]) == X[2]
        assert bracket(g, X[1], X[2]) == X[0]
        assert bracket(g, X[2], X[0]) == X[1]

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            bracket(nil_algebra(), (1, 0), (0, 1, 0))

    def test_antisymmetry_enforced(self):
        S = [[[F(0)] * 2 for _ in range(2)] for _ in range(2)]
        S[0][1][1] = F(1)
        with pytest.raises(InputError):
            LieAlgebra(S)

    @given(vec3)
    def test_self_bracket_zero(self, x):
        for mk in UNIMODULAR:
            assert bracket(mk(), x, x) == (0, 0, 0)


class TestJacobi:
    @pytest.mark.parametrize("mk", UNIMODULAR)
    def test_catalog(self, mk):
        assert check_jacobi(mk()) == 0

    def test_oscillator(self):
        assert check_jacobi(oscillator_algebra((F(1), F(2)))) == 0

    def test_perturbed_su2(self):
        S = [[list(v) for v in row] for row in su2_algebra().structure]
        S[0][1][0] = F(1)
        S[1][0][0] = F(-1)
        assert check_jacobi(LieAlgebra(S)) == 1


class TestAdjoint:
    def test_nil_ad_x1(self):
        g = nil_algebra()
        assert ad(g, (1, 0, 0)) == Matrix([[0, 0, 0], [0, 0, 0], [0, 1, 0]])

    def test_center_element(self):
        g = nil_algebra()
        assert ad(g, (0, 0, 1)).is_zero()
        assert center(g) == Subspace.span([(0, 0, 1)], 3)

    def test_sl2_ad_h(self):
        g = sl2_algebra()
        assert ad(g, g.basis_vector(2)) == Matrix.diag([2, -2, 0])

    @settings(max_examples=30, deadline=None)
    @given(vec3, vec3)
    def test_ad_matches_bracket(self, x, y):
        for mk in UNIMODULAR:
            g = mk()
            assert ad(g, x).apply(y) == bracket(g, x, y)


class TestKilling:
    def test_sl2(self):
        assert killing_form(sl2_algebra()) == Matrix([[0, 4, 0], [4, 0, 0], [0, 0, 8]])

    def test_nil_zero(self):
        assert killing_form(nil_algebra()).is_zero()

    def test_abelian_zero(self):
        assert killing_form(LieAlgebra.abelian(4)).is_zero()

    def test_su2_negative_definite(self):
        assert killing_form(su2_algebra()) == Matrix.diag([-2, -2, -2])


class TestUnimodular:
    @pytest.mark.parametrize("mk", UNIMODULAR)
    def test_catalog(self, mk):
        assert is_unimodular(mk())

    def test_two_dim_nonunimodular(self):
        g = LieAlgebra.from_brackets(["u", "v"], {("u", "v"): {"v": 1}})
        assert not is_unimodular(g)

    def test_abelian(self):
        assert is_unimodular(LieAlgebra.abelian(3))

    @settings(max_examples=30, deadline=None)
    @given(vec3)
    def test_trace_free(self, x):
        for mk in UNIMODULAR:
            assert ad(mk(), x).trace() == 0


class TestDerived:
    def test_nil(self):
        assert derived_algebra(nil_algebra()) == Subspace.span([(0, 0, 1)], 3)

    def test_abelian(self):
        assert derived_algebra(LieAlgebra.abelian(3)).dim == 0

    def test_sol(self):
        assert derived_algebra(sol_algebra()) == Subspace.span([(0, 1, 0), (0, 0, 1)], 3)

    def test_nil_derived_inside_every_hyperplane(self):
        g = nil_algebra()
        d = derived_algebra(g)
        for h in enumerate_hyperplane_subalgebras(g).sample_subspaces():
            assert h.contains_subspace(d)


nonzero_q = small_q.filter(lambda x: x != 0)


class TestAutomorphism:
    def test_identity(self):
        for mk in UNIMODULAR:
            assert is_automorphism(mk(), Matrix.identity(3))

    def test_sl2_stabilizer(self):
        assert is_automorphism(sl2_algebra(), sl2_stabilizer(2, 3))

    def test_nil_swap(self):
        swap = Matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
        assert not is_automorphism(nil_algebra(), swap)

    def test_singular_rejected(self):
        assert not is_automorphism(LieAlgebra.abelian(2), Matrix.zeros(2, 2))

    @settings(max_examples=40, deadline=None)
    @given(nonzero_q, small_q, nonzero_q, small_q)
    def test_composition(self, a1, b1, a2, b2):
        g = sl2_algebra()
        T, S = sl2_stabilizer(a1, b1), sl2_stabilizer(a2, b2)
        assert is_automorphism(g, T) and is_automorphism(g, S)
        assert is_automorphism(g, T @ S)


class TestSubalgebra:
    def test_nil(self):
        assert is_subalgebra(nil_algebra(), Subspace.span([(0, 0, 1), (1, 1, 0)], 3))

    def test_su2_has_none(self):
        assert not is_subalgebra(su2_algebra(), Subspace.span([(1, 0, 0), (0, 1, 0)], 3))

    def test_full(self):
        for mk in UNIMODULAR:
            assert is_subalgebra(mk(), Subspace.full(3))
