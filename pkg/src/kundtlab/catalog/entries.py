"""Instantiating catalog entries with checked parameters."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from ..connection import MetricLieAlgebra
from ..exactcore import InputError, Matrix, Scalar, Subspace, sign, signature, to_scalar
from ..liealg import LieAlgebra, check_jacobi
from . import data
from .data import ENTRY_SPECS, MetricSpec

__all__ = ["CatalogEntry", "NamedMetric", "CATALOG_IDS", "load", "metric_spec"]

CATALOG_IDS = ("nil", "su2", "sl2", "sol", "e02", "oscillator", "r4-counterexample")


@dataclass
class NamedMetric:
    name: str
    matrix: Matrix
    bindings: dict = field(default_factory=dict)
    note: str = ""


@dataclass
class CatalogEntry:
    id: str
    algebra: LieAlgebra
    metrics: dict
    subalgebras: dict
    transforms: dict
    provenance: str
    params: dict = field(default_factory=dict)

    def metric(self, name: str | None = None) -> MetricLieAlgebra:
        if name is None:
            name = next(iter(self.metrics))
        if name not in self.metrics:
            raise InputError(
                f"entry {self.id!r} has no metric {name!r}; choose from {', '.join(self.metrics)}"
            )
        nm = self.metrics[name]
        return MetricLieAlgebra(self.algebra, nm.matrix, name=f"{self.id}/{name}")

    def subalgebra(self, name: str) -> Subspace:
        if name not in self.subalgebras:
            raise InputError(f"entry {self.id!r} has no subalgebra {name!r}")
        return self.subalgebras[name]


def _check_signature(spec_name: str, rule: str, M: Matrix) -> None:
    n = M.rows
    if not M.is_symmetric():
        raise InputError(f"metric {spec_name} is not symmetric")
    sig = tuple(signature(M))
    lorentz = (n - 1, 1, 0)
    if rule == "lorentz" and sig != lorentz:
        raise InputError(f"metric {spec_name} has signature {sig}, expected Lorentz {lorentz}")
    if rule == "lorentz-up-to-sign" and sig not in (lorentz, (1, n - 1, 0)):
        raise InputError(f"metric {spec_name} has signature {sig}, expected +-Lorentz")
    if sig[2]:
        raise InputError(f"metric {spec_name} is degenerate")


def metric_spec(entry_id: str, name: str) -> MetricSpec:
    for spec in ENTRY_SPECS[entry_id].metrics:
        if spec.name == name:
            return spec
    raise InputError(f"entry {entry_id!r} has no metric {name!r}")


def instantiate_metric(spec: MetricSpec, params: Mapping[str, object]) -> NamedMetric:
    bound = {k: to_scalar(params[k]) if k in params else v for k, v in spec.defaults}
    for c in spec.constraints:
        if not c.test(bound):
            shown = ", ".join(f"{k}={v}" for k, v in bound.items())
            raise InputError(f"parameter constraint violated for {spec.name}: {c.text} ({shown})")
    M = spec.build(*bound.values())
    _check_signature(spec.name, spec.signature_rule, M)
    return NamedMetric(spec.name, M, bound, spec.note)


def _oscillator_lambdas(params: Mapping[str, object]) -> tuple:
    if "lambda" in params:
        raw = params["lambda"]
        lams = [to_scalar(x) for x in (raw if isinstance(raw, (list, tuple)) else str(raw).split(","))]
        if "n" in params and int(params["n"]) != len(lams):
            raise InputError(f"n={params['n']} but {len(lams)} lambda values given")
    else:
        n = int(params.get("n", 1))
        if n < 1:
            raise InputError("parameter constraint violated: n >= 1")
        lams = [to_scalar(params.get(f"lambda{i}", 1)) for i in range(1, n + 1)]
    for i, lam in enumerate(lams):
        if sign(lam) <= 0:
            raise InputError(f"parameter constraint violated: 0 < lambda{i + 1}")
        if i and lam < lams[i - 1]:
            raise InputError("parameter constraint violated: lambda1 <= ... <= lambdan")
    return tuple(lams)


def _load_oscillator(params: Mapping[str, object]) -> CatalogEntry:
    lams = _oscillator_lambdas(params)
    g = data.oscillator_algebra(lams)
    M = data.oscillator_metric(lams)
    _check_signature("k", "lorentz", M)
    binds = {f"lambda{i + 1}": x for i, x in enumerate(lams)}
    n = len(lams)
    perp = [g.basis_vector(i) for i in range(1, 2 * n + 2)]
    return CatalogEntry(
        id="oscillator",
        algebra=g,
        metrics={"k": NamedMetric("k", M, binds, "bi-invariant Lorentz form")},
        subalgebras={"e0-perp": Subspace.span(perp, g.dim)},
        transforms={},
        provenance=f"oscillator algebra with n={n}, lambda={tuple(str(x) for x in lams)}",
        params={"n": n, **binds},
    )


def _transforms(entry_id: str, params: Mapping[str, object]) -> dict:
    if entry_id != "sl2":
        return {}
    alpha = to_scalar(params.get("alpha", 1))
    beta = to_scalar(params.get("beta", 1))
    out = {
        "M": data.SL2_M,
        "P12": data.SL2_P12,
        "P3": data.SL2_P3,
        "T1": data.SL2_T1,
        "T2": data.SL2_T2,
        "T3": data.SL2_T3,
    }
    for case in (1, 2, 3):
        out[f"A{case}"] = data.sl2_normal_operator(case, alpha, beta)
        out[f"S{case}"] = data.sl2_base_metric(case, alpha, beta)
    return out


def load(
    entry_id: str,
    params: Mapping[str, object] | None = None,
    metrics: list[str] | None = None,
    overrides: Mapping[str, Matrix] | None = None,
) -> CatalogEntry:
    """Instantiate a catalog entry.

    ``params`` binds metric parameters by name (every metric declaring the
    name receives the value).  ``metrics`` restricts which named metrics are
    built.  ``overrides`` replaces a metric matrix wholesale, bypassing the
    normal form (used to build corrupted fixtures).
    """
    params = dict(params or {})
    if entry_id == "oscillator":
        return _load_oscillator(params)
    if entry_id not in ENTRY_SPECS:
        raise InputError(f"unknown catalog id {entry_id!r}; choose from {', '.join(CATALOG_IDS)}")
    es = ENTRY_SPECS[entry_id]
    g = es.build_algebra()
    if check_jacobi(g) != 0:
        raise InputError(f"catalog algebra {entry_id} fails the Jacobi identity")
    known = {k for s in es.metrics for k in s.param_names} | {"alpha", "beta"}
    unknown = set(params) - known
    if unknown:
        raise InputError(f"unknown parameter(s) for {entry_id}: {', '.join(sorted(unknown))}")
    names = [s.name for s in es.metrics]
    if metrics is not None:
        bad = [m for m in metrics if m not in names]
        if bad:
            raise InputError(f"entry {entry_id!r} has no metric {bad[0]!r}; choose from {', '.join(names)}")
    out = {}
    for spec in es.metrics:
        if metrics is not None and spec.name not in metrics:
            continue
        out[spec.name] = instantiate_metric(spec, params)
    for name, M in (overrides or {}).items():
        out[name] = NamedMetric(name, M if isinstance(M, Matrix) else Matrix(M), {}, "override")
    subs = {
        name: Subspace.span([g.vector(v) for v in vecs], g.dim) for name, vecs in es.subalgebras.items()
    }
    return CatalogEntry(
        id=entry_id,
        algebra=g,
        metrics=out,
        subalgebras=subs,
        transforms=_transforms(entry_id, params),
        provenance=es.provenance,
        params={k: to_scalar(v) for k, v in params.items()},
    )
