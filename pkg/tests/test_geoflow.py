import csv
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kundtlab.catalog import load
from kundtlab.catalog.data import nil_algebra
from kundtlab.connection import MetricLieAlgebra
from kundtlab.exactcore import InputError, Matrix, Subspace
from kundtlab.geoflow import energy_drift, flow, leaf_invariance_batch, leaf_invariance_defect, write_csv
from kundtlab.liealg import LieAlgebra

N3 = Matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
H13 = Subspace.span([(1, 0, 0), (0, 0, 1)], 3)
H12 = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)


def terminal_error_ratio(m, v0, t_end=5.0):
    # steps coarse enough that the error (~1e-10) sits well above roundoff
    ref = flow(m, v0, t_end, 5e-4).final
    e1 = np.linalg.norm(flow(m, v0, t_end, 4e-2).final - ref)
    e2 = np.linalg.norm(flow(m, v0, t_end, 2e-2).final - ref)
    return e1 / e2


class TestFlow:
    def test_abelian_constant(self):
        m = MetricLieAlgebra(LieAlgebra.abelian(3), Matrix.diag([1, 1, -1]))
        traj = flow(m, [0.3, -1.0, 2.0], 10.0, 1e-2)
        assert np.all(traj.velocities == traj.velocities[0])

    def test_oscillator_constant(self):
        m = load("oscillator", {"lambda": (1, 2)}).metric()
        v0 = np.zeros(m.dim)
        v0[0] = 1.0
        v0[2] = 1.0
        traj = flow(m, v0, 10.0, 1e-3)
        assert np.max(np.abs(traj.velocities - v0)) == 0.0
        assert energy_drift(traj) == 0.0

    def test_nil_n3_energy(self):
        traj = flow(MetricLieAlgebra(nil_algebra(), N3), [1, 1, 0], 10.0, 1e-3)
        assert np.ptp(traj.velocities[:, 0]) > 1.0
        assert energy_drift(traj) < 1e-9

    def test_nil_n3_polynomial_trajectory(self):
        # v2 constant, v1 linear, v3 quadratic in t: RK4 reproduces it to roundoff
        traj = flow(MetricLieAlgebra(nil_algebra(), N3), [1, 1, 0], 10.0, 1e-2)
        assert np.allclose(traj.final, [-9.0, 1.0, -40.0], rtol=0, atol=1e-9)

    def test_ends_at_t_end(self):
        traj = flow(MetricLieAlgebra(nil_algebra(), N3), [1, 1, 0], 1.0, 0.3)
        assert traj.times[-1] == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("dt", [0.0, -1e-3, float("nan")])
    def test_bad_step(self, dt):
        with pytest.raises(InputError):
            flow(MetricLieAlgebra(nil_algebra(), N3), [1, 0, 0], 1.0, dt)

    def test_bad_length(self):
        with pytest.raises(InputError):
            flow(MetricLieAlgebra(nil_algebra(), N3), [1, 0], 1.0, 1e-2)

    @settings(max_examples=8, deadline=None)
    @given(st.integers(0, 10**6))
    def test_energy_conservation(self, seed):
        rng = np.random.default_rng(seed)
        m = [
            load("nil", {"mu": 1}, metrics=["n1"]).metric("n1"),
            load("su2", metrics=["diag"]).metric("diag"),
            load("sol", metrics=["sol7"]).metric("sol7"),
            load("e02", {"mu": 2}, metrics=["form3"]).metric("form3"),
        ][seed % 4]
        v0 = rng.uniform(-1, 1, 3)
        v0 *= rng.uniform(0.1, 2.0) / np.linalg.norm(v0)
        traj = flow(m, v0, 10.0, 1e-3, record_every=10)
        if np.all(np.isfinite(traj.velocities)) and np.max(np.abs(traj.velocities)) < 1e3:
            assert energy_drift(traj) < 1e-8


class TestConvergence:
    def test_fourth_order_nil_n1(self):
        m = load("nil", {"mu": 1}, metrics=["n1"]).metric("n1")
        assert 8 <= terminal_error_ratio(m, [1.0, 0.5, 0.3]) <= 32

    def test_fourth_order_su2(self):
        m = load("su2", metrics=["diag"]).metric("diag")
        assert 8 <= terminal_error_ratio(m, [0.5, 0.3, 0.2]) <= 32


class TestLeafInvariance:
    def test_nil_n3_kundt_leaf(self):
        m = MetricLieAlgebra(nil_algebra(), N3)
        assert leaf_invariance_defect(m, H13, [1, 0, 0]) < 1e-9

    def test_abelian_zero(self):
        m = MetricLieAlgebra(LieAlgebra.abelian(3), Matrix.diag([1, 1, -1]))
        assert leaf_invariance_defect(m, H12, [1, 2, 0], t_end=2.0) == 0.0

    def test_negative_control(self):
        m = load("nil", {"mu": 1}, metrics=["n2"]).metric("n2")
        assert leaf_invariance_defect(m, H13, [1, 0, 1]) > 1e-3

    def test_v0_outside_h(self):
        with pytest.raises(InputError):
            leaf_invariance_defect(MetricLieAlgebra(nil_algebra(), N3), H13, [0, 1, 0])

    def test_batch_matches_single(self):
        m = MetricLieAlgebra(nil_algebra(), N3)
        m2 = load("nil", {"mu": 1}, metrics=["n2"]).metric("n2")
        items = [(m, H13, [1, 0, 1]), (m2, H13, [1, 0, 1])]
        batch = leaf_invariance_batch(items, t_end=2.0, dt=1e-2)
        for (mm, h, v), (d, _, _) in zip(items, batch):
            assert d == pytest.approx(leaf_invariance_defect(mm, h, v, t_end=2.0, dt=1e-2), rel=1e-9, abs=1e-15)

    def test_batch_dimension_mix(self):
        osc = load("oscillator", {"lambda": (1,)})
        items = [(MetricLieAlgebra(nil_algebra(), N3), H13, [1, 0, 0]), (osc.metric(), osc.subalgebra("e0-perp"), [0, 1, 0, 0])]
        with pytest.raises(InputError):
            leaf_invariance_batch(items)


def test_csv(tmp_path):
    traj = flow(MetricLieAlgebra(nil_algebra(), N3), [1, 1, 0], 1.0, 0.1)
    path = tmp_path / "t.csv"
    write_csv(traj, path, ["X1", "X2", "X3"])
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["t", "X1", "X2", "X3", "energy"]
    assert len(rows) == len(traj) + 1
    assert float(rows[-1][0]) == pytest.approx(1.0)
