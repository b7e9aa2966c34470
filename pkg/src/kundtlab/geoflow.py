"""Geodesic flow of a left-invariant metric in body coordinates.

A geodesic gamma with body velocity v(t) = dL_{gamma^-1} gamma'(t) obeys
v' = -v.v, where . is the Levi-Civita product.  Integration is classical
fixed-step RK4 in floating point; the product tensor is converted once.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .connection import MetricLieAlgebra
from .exactcore import InputError, Subspace

__all__ = [
    "FlowState",
    "Trajectory",
    "float_product_tensor",
    "flow",
    "energy_drift",
    "leaf_invariance_defect",
    "leaf_invariance_batch",
    "write_csv",
]


@dataclass(frozen=True)
class FlowState:
    t: float
    v: np.ndarray


@dataclass
class Trajectory:
    """Sampled flow: ``times`` has shape (N,), ``velocities`` shape (N, dim)
    or (N, batch, dim) for batched initial data."""

    times: np.ndarray
    velocities: np.ndarray
    metric: np.ndarray

    def __len__(self):
        return len(self.times)

    def __getitem__(self, k) -> FlowState:
        return FlowState(float(self.times[k]), self.velocities[k])

    @property
    def final(self) -> np.ndarray:
        return self.velocities[-1]

    def energies(self) -> np.ndarray:
        V = self.velocities
        return np.einsum("...i,ij,...j->...", V, self.metric, V)


def float_product_tensor(m: MetricLieAlgebra) -> np.ndarray:
    """P[i, j, k] with x_i . x_j = sum_k P[i, j, k] x_k."""
    lc = m.levi_civita
    n = m.dim
    return np.array([[[float(x) for x in lc.entry(i, j)] for j in range(n)] for i in range(n)])


def _float_matrix(M) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in M.tolist()])


def flow(
    m: MetricLieAlgebra,
    v0: Sequence[float] | np.ndarray,
    t_end: float,
    dt: float,
    record_every: int = 1,
) -> Trajectory:
    """RK4 for v' = -v.v from v(0) = v0 up to t_end.

    ``v0`` may be a single vector or a (batch, dim) array of initial data.
    The last step is shortened so the run ends exactly at t_end.
    """
    if not (dt > 0) or not np.isfinite(dt):
        raise InputError(f"time step must be positive, got {dt}")
    if not (t_end > 0) or not np.isfinite(t_end):
        raise InputError(f"final time must be positive, got {t_end}")
    v = np.array(v0, dtype=float)
    if v.shape[-1] != m.dim or v.ndim > 2:
        raise InputError(f"initial velocity must have length {m.dim}")
    P = float_product_tensor(m)
    times, states = _rk4(lambda x: -np.einsum("...i,...j,ijk->...k", x, x, P), v, t_end, dt, record_every)
    return Trajectory(times, states, _float_matrix(m.metric))


def _rk4(rhs, v, t_end, dt, record_every=1):
    n_steps = int(np.ceil(t_end / dt - 1e-12))
    times = [0.0]
    states = [v.copy()]
    t = 0.0
    for step in range(n_steps):
        h = min(dt, t_end - t)
        k1 = rhs(v)
        k2 = rhs(v + 0.5 * h * k1)
        k3 = rhs(v + 0.5 * h * k2)
        k4 = rhs(v + h * k3)
        v = v + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        t += h
        if (step + 1) % record_every == 0 or step == n_steps - 1:
            times.append(t)
            states.append(v.copy())
    return np.array(times), np.array(states)


def energy_drift(traj: Trajectory) -> float:
    E = traj.energies()
    return float(np.max(np.abs(E - E[0])))


def _orthonormal_basis(h: Subspace) -> np.ndarray:
    B = _float_matrix(h.basis)
    Q, _ = np.linalg.qr(B)
    return Q


def distance_to_subspace(V: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Euclidean distance of each row of V to the column span of orthonormal Q."""
    proj = (V @ Q) @ Q.T
    return np.linalg.norm(V - proj, axis=-1)


def leaf_invariance_defect(
    m: MetricLieAlgebra,
    h: Subspace,
    v0: Sequence[float] | np.ndarray,
    t_end: float = 10.0,
    dt: float = 1e-3,
    tol_start: float = 1e-12,
    relative: bool = False,
) -> float:
    """Largest Euclidean distance from v(t) to h along the flow started at v0 in h.

    With ``relative`` each distance is divided by |v(t)|, which is the
    meaningful measure when the velocity grows (roundoff scales with |v|).
    """
    if h.ambient_dim != m.dim:
        raise InputError("subspace lives in a different dimension")
    Q = _orthonormal_basis(h)
    v0 = np.array(v0, dtype=float)
    d0 = distance_to_subspace(v0, Q)
    if np.max(d0) > tol_start:
        raise InputError(f"initial velocity is not in h (distance {float(np.max(d0)):.3e})")
    traj = flow(m, v0, t_end, dt)
    d = distance_to_subspace(traj.velocities, Q)
    if relative:
        d = d / np.maximum(np.linalg.norm(traj.velocities, axis=-1), np.finfo(float).tiny)
    return float(np.max(d))


def leaf_invariance_batch(items, t_end: float = 10.0, dt: float = 1e-3, tol_start: float = 1e-12):
    """(defect, relative defect, energy drift) for many (metric, h, v0) triples
    of one dimension, integrated together in a single vectorized RK4 run."""
    if not items:
        return []
    if not (dt > 0) or not (t_end > 0):
        raise InputError("time step and final time must be positive")
    dims = {m.dim for m, _, _ in items}
    if len(dims) != 1:
        raise InputError("batched runs need a common dimension")
    P = np.stack([float_product_tensor(m) for m, _, _ in items])
    G = np.stack([_float_matrix(m.metric) for m, _, _ in items])
    Qs = [_orthonormal_basis(h) for _, h, _ in items]
    v0 = np.array([np.array(v, dtype=float) for _, _, v in items])
    for Q, v in zip(Qs, v0):
        d = distance_to_subspace(v, Q)
        if d > tol_start:
            raise InputError(f"initial velocity is not in h (distance {float(d):.3e})")
    _, V = _rk4(lambda x: -np.einsum("bi,bj,bijk->bk", x, x, P), v0, t_end, dt)
    E = np.einsum("tbi,bij,tbj->tb", V, G, V)
    drift = np.max(np.abs(E - E[0]), axis=0)
    out = []
    for b, Q in enumerate(Qs):
        d = distance_to_subspace(V[:, b, :], Q)
        rel = d / np.maximum(np.linalg.norm(V[:, b, :], axis=-1), np.finfo(float).tiny)
        out.append((float(np.max(d)), float(np.max(rel)), float(drift[b])))
    return out


def write_csv(traj: Trajectory, path, labels: Sequence[str] | None = None) -> None:
    V = traj.velocities
    if V.ndim != 2:
        raise InputError("CSV export takes a single trajectory")
    dim = V.shape[1]
    labels = list(labels) if labels else [f"v{i + 1}" for i in range(dim)]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t"] + labels + ["energy"])
        for t, v, e in zip(traj.times, V, traj.energies()):
            w.writerow([f"{t:.10g}"] + [f"{x:.17g}" for x in v] + [f"{e:.17g}"])
