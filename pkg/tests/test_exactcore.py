from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from kundtlab.exactcore import (
    InputError,
    Matrix,
    QuadraticNumber,
    SignatureTriple,
    Subspace,
    congruence,
    field_sqrt,
    format_scalar,
    inverse,
    kernel_basis,
    parse_scalar,
    primitive_vector,
    signature,
    solve_linear,
)

small_q = st.builds(F, st.integers(-6, 6), st.integers(1, 4))


def matrices(rows, cols):
    return st.lists(st.lists(small_q, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(Matrix)


@st.composite
def invertible(draw, n):
    M = draw(matrices(n, n))
    if M.det() == 0:
        M = M + Matrix.identity(n) * (abs(M.det()) + 7)
        if M.det() == 0:
            M = Matrix.identity(n)
    return M


@st.composite
def symmetric(draw, n):
    M = draw(matrices(n, n))
    return M + M.T


class TestScalars:
    def test_quadratic_arithmetic(self):
        r2 = QuadraticNumber.make(0, 1, 2)
        assert r2 * r2 == 2
        assert (1 + r2) * (1 - r2) == -1
        assert 1 / (1 + r2) == r2 - 1
        assert r2 > F(141, 100) and r2 < F(142, 100)

    def test_make_collapses_to_rational(self):
        assert isinstance(QuadraticNumber.make(F(1, 2), 0, 2), F)

    def test_field_sqrt(self):
        assert field_sqrt(F(9, 4)) == F(3, 2)
        assert field_sqrt(F(8)) == 2 * QuadraticNumber.make(0, 1, 2)
        assert field_sqrt(F(-1)) is None

    @pytest.mark.parametrize("text,value", [("3/4", F(3, 4)), ("-2", F(-2)), ("0.5", F(1, 2))])
    def test_parse_rational(self, text, value):
        assert parse_scalar(text) == value

    def test_parse_sqrt2_round_trip(self):
        x = parse_scalar("1/2+3*sqrt2")
        assert x == F(1, 2) + 3 * QuadraticNumber.make(0, 1, 2)
        assert parse_scalar(format_scalar(x)) == x

    @pytest.mark.parametrize("bad", ["", "1/0", "abc", "2**3"])
    def test_parse_rejects(self, bad):
        with pytest.raises(InputError):
            parse_scalar(bad)

    @given(small_q)
    def test_format_round_trip(self, q):
        assert parse_scalar(format_scalar(q)) == q


class TestSolve:
    def test_identity(self):
        assert solve_linear(Matrix.identity(3), (1, 2, 3)) == (1, 2, 3)

    def test_permutation(self):
        assert solve_linear(Matrix([[0, 1], [1, 0]]), (4, 0)) == (0, 4)

    def test_inconsistent(self):
        assert solve_linear(Matrix([[1, 1], [2, 2]]), (1, 3)) is None

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            solve_linear(Matrix.identity(2), (1, 2, 3))

    @settings(max_examples=60, deadline=None)
    @given(invertible(3), st.lists(small_q, min_size=3, max_size=3))
    def test_solution_satisfies_system(self, A, b):
        x = solve_linear(A, tuple(b))
        assert A.apply(x) == tuple(b)

    @settings(max_examples=40, deadline=None)
    @given(invertible(3))
    def test_inverse(self, A):
        assert A @ inverse(A) == Matrix.identity(3)


class TestKernel:
    def test_trivial(self):
        assert kernel_basis(Matrix.identity(2)).cols == 0

    def test_row(self):
        K = kernel_basis(Matrix([[1, 0, 0]]))
        assert Subspace.span(K.columns(), 3) == Subspace.span([(0, 1, 0), (0, 0, 1)], 3)

    def test_rank_one(self):
        K = kernel_basis(Matrix([[1, 1], [1, 1]]))
        assert Subspace.span(K.columns(), 2) == Subspace.span([(1, -1)], 2)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda r: matrices(r, 4)))
    def test_rank_nullity(self, A):
        K = kernel_basis(A)
        assert A.rank() + K.cols == A.cols
        for v in K.columns():
            assert all(x == 0 for x in A.apply(v))


class TestSignature:
    def test_diagonal(self):
        assert signature(Matrix.diag([1, -1, 2])) == SignatureTriple(2, 1, 0)

    def test_off_diagonal_block(self):
        assert signature(Matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]])) == (2, 1, 0)

    def test_zero(self):
        assert signature(Matrix.zeros(3, 3)) == (0, 0, 3)

    def test_nonsymmetric(self):
        with pytest.raises(InputError):
            signature(Matrix([[1, 2], [0, 1]]))

    def test_sqrt2_entries(self):
        r2 = QuadraticNumber.make(0, 1, 2)
        assert signature(Matrix([[r2, 0], [0, 1 - r2]])) == (1, 1, 0)

    @settings(max_examples=60, deadline=None)
    @given(symmetric(3), invertible(3))
    def test_sylvester(self, S, T):
        assert signature(congruence(T, S)) == signature(S)
        assert sum(signature(S)) == 3


class TestCongruence:
    def test_identity(self):
        S = Matrix([[1, 2], [2, 5]])
        assert congruence(Matrix.identity(2), S) == S

    def test_scaling(self):
        assert congruence(Matrix.diag([2, 1]), Matrix.identity(2)) == Matrix.diag([4, 1])

    def test_singular(self):
        with pytest.raises(InputError):
            congruence(Matrix([[1, 1], [1, 1]]), Matrix.identity(2))


class TestSubspace:
    def test_equality_ignores_basis(self):
        assert Subspace.span([(1, 1, 0), (0, 0, 1)], 3) == Subspace.span([(2, 2, 1), (0, 0, 3)], 3)

    def test_hyperplane_covector(self):
        h = Subspace.hyperplane((0, 0, 1))
        assert h == Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
        assert h.covector() == (0, 0, 1)

    def test_dependent_basis_rejected(self):
        with pytest.raises(InputError):
            Subspace.span([(1, 0), (2, 0)], 2)

    def test_spanned_by_extracts_basis(self):
        assert Subspace.spanned_by([(1, 0), (2, 0), (0, 0)], 2).dim == 1

    def test_primitive_vector(self):
        assert primitive_vector((F(-1, 2), F(1, 3), 0)) == (3, -2, 0)
