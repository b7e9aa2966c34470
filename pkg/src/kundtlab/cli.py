"""Command line interface.

Exit codes: 0 success or positive verdict, 2 negative verdict, 1 input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .catalog import CATALOG_IDS, load
from .catalog.theorems import run_suite
from .connection import MetricLieAlgebra, is_constant_curvature, ricci, scalar_curvature
from .document import SCHEMA_VERSION, AlgebraDocument, dump_document, load_document
from .exactcore import InputError, Matrix, Subspace, format_scalar, to_scalar
from .geoflow import energy_drift, flow, leaf_invariance_defect, write_csv
from .hyperplanes import enumerate_hyperplane_subalgebras
from .kundt import Verdict, check_kundt_pair, check_kundt_vector, classify_kundt_structures
from .liealg import LieAlgebra

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE = 0, 1, 2

_TERM = re.compile(r"\s*([+-])?\s*(?:([0-9]+(?:\.[0-9]*)?(?:e-?[0-9]+)?(?:/[0-9]+)?)\s*\*\s*)?([A-Za-z_][A-Za-z0-9_]*)\s*")


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------


def parse_vector(g: LieAlgebra, spec: str, exact: bool = True) -> tuple:
    """Parse "X1+1/2*X3-X2" into coordinates.  Floats are allowed when not exact."""
    spec = spec.strip()
    if not spec:
        raise InputError("empty vector spec")
    pos = 0
    coords = [Fraction(0) if exact else 0.0 for _ in range(g.dim)]
    first = True
    while pos < len(spec):
        m = _TERM.match(spec, pos)
        if not m or m.end() == pos or (m.group(1) is None and not first):
            raise InputError(f"cannot parse vector spec {spec!r} near position {pos}")
        sgn, coef, label = m.groups()
        if coef is None:
            c = 1
        elif exact:
            if "." in coef or "e" in coef:
                raise InputError(f"coefficient {coef!r} must be rational (p or p/q)")
            c = Fraction(coef)
        else:
            c = float(Fraction(coef)) if "/" in coef else float(coef)
        if sgn == "-":
            c = -c
        coords[g.index(label)] += c
        pos = m.end()
        first = False
    return tuple(coords)


def parse_subalgebra(g: LieAlgebra, spec: str) -> Subspace:
    vecs = [parse_vector(g, part) for part in spec.split(",")]
    try:
        return Subspace.span(vecs, g.dim)
    except InputError as exc:
        raise InputError(f"subalgebra spec {spec!r}: {exc}") from None


def format_vector(g: LieAlgebra, v) -> str:
    parts = []
    for lab, c in zip(g.labels, v):
        if c == 0:
            continue
        s = format_scalar(c) if not isinstance(c, float) else f"{c:.6g}"
        neg = s.startswith("-")
        mag = s[1:] if neg else s
        term = lab if mag == "1" else f"{mag}*{lab}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("-" if neg else "+") + term)
    return "".join(parts) or "0"


def _parse_params(items) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise InputError(f"parameter {item!r} must look like name=value")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _resolve(args, need_metric: bool = True) -> tuple[LieAlgebra, MetricLieAlgebra | None, str]:
    params = _parse_params(getattr(args, "param", None))
    if args.file:
        doc = load_document(args.file)
        m = doc.metric_algebra() if (need_metric or doc.metric is not None) else None
        return doc.algebra, m, str(args.file)
    if not args.catalog:
        raise InputError("give --catalog ID or --file PATH")
    if args.catalog == "oscillator":
        entry = load("oscillator", params)
    else:
        metrics = [args.metric] if getattr(args, "metric", None) else None
        entry = load(args.catalog, params, metrics=metrics)
    name = getattr(args, "metric", None)
    m = entry.metric(name) if entry.metrics else None
    label = f"{entry.id}/{m.name.split('/')[-1]}" if m else entry.id
    return entry.algebra, m, label


def _scal(x):
    return format_scalar(x)


def _vec(v):
    return [format_scalar(x) for x in v]


def _mat(M: Matrix):
    return [[format_scalar(x) for x in row] for row in M.tolist()]


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        payload = {"schema": SCHEMA_VERSION, **payload}
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _pair_payload(g, r) -> dict:
    return {
        "h": [_vec(v) for v in r.h.vectors],
        "covector": _vec(r.h.covector()),
        "degenerate": r.degenerate,
        "product_stable": r.product_stable,
        "e_generator": _vec(r.e_generator),
        "e_dot_e": _vec(r.e_dot_e),
        "e_dot_e_zero": r.e_dot_e_zero,
        "ad_e_into_h": r.ad_e_into_h,
        "derived_equals_perp": r.derived_equals_perp,
        "verdict": r.verdict.value,
    }


def _pair_text(g, r) -> str:
    h = ", ".join(format_vector(g, v) for v in r.h.vectors)
    lines = [
        f"h = span{{{h}}}",
        f"  degenerate           {r.degenerate}",
        f"  product stable       {r.product_stable}",
        f"  e spanning h^perp    {format_vector(g, r.e_generator)}",
        f"  e.e                  {format_vector(g, r.e_dot_e)}",
        f"  ad_e(g) in h         {r.ad_e_into_h}",
    ]
    if r.derived_equals_perp is not None:
        lines.append(f"  [h,h] == h^perp      {r.derived_equals_perp}")
    if r.stability_witness:
        a, b, p = r.stability_witness
        lines.append(
            f"  witness              ({format_vector(g, a)}).({format_vector(g, b)}) = {format_vector(g, p)} not in h"
        )
    lines.append(f"  verdict              {r.verdict.value}")
    return "\n".join(lines)


def cmd_check(args) -> int:
    g, m, label = _resolve(args)
    if args.vector:
        rep = check_kundt_vector(m, parse_vector(g, args.vector))
        payload = {
            "command": "check",
            "source": label,
            "vector": _vec(rep.v),
            "norm_vv": _scal(rep.norm_vv),
            "vdotv": _vec(rep.vdotv),
            "k1_traces": [_scal(x) for x in rep.k1_traces],
            "recurrence_alpha": None if rep.recurrence_alpha is None else _vec(rep.recurrence_alpha),
            "k1_holds": rep.k1_holds,
            "k2_holds": rep.k2_holds,
        }
        alpha = "none" if rep.recurrence_alpha is None else ", ".join(_vec(rep.recurrence_alpha))
        text = "\n".join(
            [
                f"{label}: V = {format_vector(g, rep.v)}",
                f"  <V,V>                {_scal(rep.norm_vv)}",
                f"  V.V                  {format_vector(g, rep.vdotv)}",
                "  tr A, g(B,B), g(C,C), g(V.V,V.V)  " + ", ".join(_scal(x) for x in rep.k1_traces),
                f"  alpha on V^perp      {alpha}",
                f"  K1 {rep.k1_holds}   K2 {rep.k2_holds}",
            ]
        )
        _emit(args, payload, text)
        return EXIT_OK if rep.k2_holds else EXIT_NEGATIVE
    if args.subalgebra:
        h = parse_subalgebra(g, args.subalgebra)
        r = check_kundt_pair(m, h)
        _emit(args, {"command": "check", "source": label, **_pair_payload(g, r)}, f"{label}\n{_pair_text(g, r)}")
        return EXIT_OK if r.verdict == Verdict.KUNDT_PAIR else EXIT_NEGATIVE
    reps = classify_kundt_structures(m)
    payload = {"command": "check", "source": label, "reports": [_pair_payload(g, r) for r in reps]}
    text = f"{label}: {len(reps)} hyperplane subalgebras tested\n" + "\n".join(_pair_text(g, r) for r in reps)
    _emit(args, payload, text)
    return EXIT_OK if any(r.verdict == Verdict.KUNDT_PAIR for r in reps) else EXIT_NEGATIVE


def cmd_enumerate(args) -> int:
    g, _, label = _resolve(args, need_metric=False)
    fam = enumerate_hyperplane_subalgebras(g)
    reps = fam.representatives
    payload = {
        "command": "enumerate",
        "source": label,
        "conic": _mat(fam.conic),
        "solution_kind": fam.solution_kind.value,
        "description": fam.describe(),
        "representatives": [[_vec(v) for v in h.vectors] for h in reps],
    }
    lines = [f"{label}", "conic Q on covectors:", fam.conic.pretty(), f"solution kind: {fam.solution_kind.value}"]
    lines.append(f"family: {fam.describe()}")
    for h in reps:
        lines.append("  span{" + ", ".join(format_vector(g, v) for v in h.vectors) + "}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _parse_override(items) -> dict:
    out = {}
    for item in items or []:
        key, sep, raw = item.partition("=")
        if not sep:
            raise InputError(f"override {item!r} must look like entry/metric=[[...]]")
        path = Path(raw)
        text = path.read_text() if path.suffix == ".json" and path.exists() else raw
        try:
            rows = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"override {key}: {exc.msg}") from None
        out[key.strip()] = Matrix([[to_scalar(str(x)) for x in row] for row in rows])
    return out


def cmd_verify_paper(args) -> int:
    results = run_suite(args.only, _parse_override(args.override))
    if not results:
        raise InputError(f"no claim matches {args.only!r}")
    payload = {
        "command": "verify-paper",
        "claims": [{"id": r.claim_id, "passed": r.passed, "detail": r.detail} for r in results],
        "all_passed": all(r.passed for r in results),
    }
    width = max(len(r.claim_id) for r in results)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.claim_id:<{width}}  {r.detail.splitlines()[0] if r.detail else ''}" for r in results]
    n_ok = sum(r.passed for r in results)
    lines.append(f"{n_ok}/{len(results)} claims pass")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if n_ok == len(results) else EXIT_NEGATIVE


def cmd_flow(args) -> int:
    g, m, label = _resolve(args)
    v0 = np.array(parse_vector(g, args.v0, exact=False), dtype=float)
    traj = flow(m, v0, args.t_end, args.dt)
    drift = energy_drift(traj)
    payload = {
        "command": "flow",
        "source": label,
        "v0": v0.tolist(),
        "dt": args.dt,
        "t_end": args.t_end,
        "steps": len(traj) - 1,
        "final": traj.final.tolist(),
        "energy_drift": drift,
    }
    lines = [
        f"{label}: v0 = {format_vector(g, v0)}, dt = {args.dt:g}, t_end = {args.t_end:g}",
        f"  final velocity   {format_vector(g, traj.final)}",
        f"  energy drift     {drift:.3e}",
    ]
    if args.leaf:
        h = parse_subalgebra(g, args.leaf)
        d = leaf_invariance_defect(m, h, v0, args.t_end, args.dt)
        payload["leaf"] = [_vec(v) for v in h.vectors]
        payload["leaf_defect"] = d
        lines.append(f"  leaf defect      {d:.3e}")
    if args.csv:
        write_csv(traj, args.csv, g.labels)
        lines.append(f"  trajectory written to {args.csv}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_export(args) -> int:
    g, m, label = _resolve(args, need_metric=False)
    doc = AlgebraDocument(g, m.metric if m else None, label)
    text = dump_document(doc)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_curvature(args) -> int:
    g, m, label = _resolve(args)
    n = g.dim
    lc = m.levi_civita
    table = {
        f"{g.labels[i]}.{g.labels[j]}": _vec(lc.entry(i, j))
        for i in range(n)
        for j in range(n)
        if any(x != 0 for x in lc.entry(i, j))
    }
    Ric = ricci(m)
    scal = scalar_curvature(m)
    const, c = is_constant_curvature(m)
    payload = {
        "command": "curvature",
        "source": label,
        "signature": list(m.signature),
        "levi_civita": table,
        "ricci": _mat(Ric),
        "scalar_curvature": _scal(scal),
        "constant_curvature": const,
        "curvature_constant": None if c is None else _scal(c),
    }
    lines = [f"{label}: signature {tuple(m.signature)}", "Levi-Civita products (nonzero):"]
    for k, v in table.items():
        lines.append(f"  {k} = {format_vector(g, [to_scalar(x) for x in v])}")
    lines += ["Ricci:", Ric.pretty(), f"scalar curvature {_scal(scal)}"]
    lines.append(f"constant curvature: {'yes, c = ' + _scal(c) if const else 'no'}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _add_json(p: argparse.ArgumentParser) -> None:
    # accepted after the subcommand too
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON report")


def _add_source(p: argparse.ArgumentParser, metric: bool = True) -> None:
    _add_json(p)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--catalog", choices=CATALOG_IDS, help="catalog entry id")
    src.add_argument("--file", help="JSON algebra document")
    if metric:
        p.add_argument("--metric", help="named metric of the catalog entry")
    p.add_argument("--param", action="append", metavar="NAME=VALUE", help="metric parameter (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kundtlab", description="Kundt structures on metric Lie algebras")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="emit one JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="Kundt pair / Kundt vector checks")
    _add_source(p)
    what = p.add_mutually_exclusive_group()
    what.add_argument("--subalgebra", help='comma separated vectors, e.g. "X1+X2,X3"')
    what.add_argument("--vector", help='a vector, e.g. "e0"')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="codimension-one subalgebras of a 3-dimensional algebra")
    _add_source(p, metric=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-paper", help="run every catalog classification claim")
    _add_json(p)
    p.add_argument("--only", help="glob over claim ids, e.g. 'sl2-*'")
    p.add_argument("--override", action="append", metavar="ENTRY/METRIC=MATRIX", help="replace a metric matrix")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("flow", help="geodesic flow in body coordinates")
    _add_source(p)
    p.add_argument("--v0", required=True, help='initial velocity, e.g. "em1+e1"')
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--t-end", type=float, default=10.0)
    p.add_argument("--leaf", help="subalgebra to measure invariance against")
    p.add_argument("--csv", help="write the trajectory to this CSV file")
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("export", help="write an algebra document")
    _add_source(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("curvature", help="Levi-Civita product, Ricci and curvature")
    _add_source(p)
    p.set_defaults(func=cmd_curvature)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        if args.json:
            print(json.dumps({"schema": SCHEMA_VERSION, "command": args.command, "error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
