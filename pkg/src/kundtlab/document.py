"""JSON algebra documents.

    {
      "schema": 1,
      "dim": 3,
      "basis": ["X1", "X2", "X3"],
      "brackets": [{"i": "X1", "j": "X2", "coeffs": {"X3": "1"}}],
      "metric": [["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]
    }

Scalars are strings ("3/4", "-2", "1/2+3*sqrt2") so the format stays exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .connection import MetricLieAlgebra
from .exactcore import InputError, Matrix, format_scalar, parse_scalar
from .liealg import LieAlgebra

__all__ = ["SCHEMA_VERSION", "AlgebraDocument", "parse_document", "load_document", "dump_document"]

SCHEMA_VERSION = 1


@dataclass
class AlgebraDocument:
    algebra: LieAlgebra
    metric: Matrix | None = None
    name: str = ""

    def metric_algebra(self) -> MetricLieAlgebra:
        if self.metric is None:
            raise InputError("document has no metric")
        return MetricLieAlgebra(self.algebra, self.metric, self.name)

    def to_json(self) -> dict:
        g = self.algebra
        out = {
            "schema": SCHEMA_VERSION,
            "name": self.name or g.name,
            "dim": g.dim,
            "basis": list(g.labels),
            "brackets": [
                {"i": a, "j": b, "coeffs": {k: format_scalar(c) for k, c in rhs.items()}}
                for (a, b), rhs in g.brackets().items()
            ],
        }
        if self.metric is not None:
            out["metric"] = [[format_scalar(x) for x in row] for row in self.metric.tolist()]
        return out


def _scalar(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(f"{where}: expected a rational string, got {value!r}")
    try:
        return parse_scalar(str(value))
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def parse_document(obj) -> AlgebraDocument:
    if not isinstance(obj, dict):
        raise InputError("document: top level must be an object")
    schema = obj.get("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise InputError(f"schema: unsupported version {schema!r}")
    basis = obj.get("basis")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise InputError("basis: expected a list of names")
    dim = obj.get("dim", len(basis))
    if not isinstance(dim, int) or dim != len(basis):
        raise InputError(f"dim: {dim!r} does not match {len(basis)} basis names")
    brackets = obj.get("brackets", [])
    if not isinstance(brackets, list):
        raise InputError("brackets: expected a list")
    table = {}
    for k, br in enumerate(brackets):
        where = f"brackets[{k}]"
        if not isinstance(br, dict):
            raise InputError(f"{where}: expected an object")
        for key in ("i", "j"):
            if br.get(key) not in basis:
                raise InputError(f"{where}.{key}: unknown basis name {br.get(key)!r}")
        coeffs = br.get("coeffs", {})
        if not isinstance(coeffs, dict):
            raise InputError(f"{where}.coeffs: expected an object")
        rhs = {}
        for lab, c in coeffs.items():
            if lab not in basis:
                raise InputError(f"{where}.coeffs: unknown basis name {lab!r}")
            rhs[lab] = _scalar(c, f"{where}.coeffs.{lab}")
        pair = (br["i"], br["j"])
        if pair in table or pair[::-1] in table:
            raise InputError(f"{where}: bracket [{pair[0]},{pair[1]}] given twice")
        table[pair] = rhs
    try:
        g = LieAlgebra.from_brackets(basis, table, name=str(obj.get("name", "")))
    except InputError as exc:
        raise InputError(f"brackets: {exc}") from None
    metric = None
    if "metric" in obj:
        rows = obj["metric"]
        if not isinstance(rows, list) or len(rows) != dim:
            raise InputError(f"metric: expected {dim} rows")
        parsed = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != dim:
                raise InputError(f"metric[{i}]: expected {dim} entries")
            parsed.append([_scalar(x, f"metric[{i}][{j}]") for j, x in enumerate(row)])
        metric = Matrix(parsed)
        if not metric.is_symmetric():
            raise InputError("metric: not symmetric")
    return AlgebraDocument(g, metric, str(obj.get("name", "")))


def load_document(path) -> AlgebraDocument:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_document(obj)


def dump_document(doc: AlgebraDocument) -> str:
    return json.dumps(doc.to_json(), indent=2)
