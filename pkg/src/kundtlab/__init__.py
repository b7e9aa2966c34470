"""Exact Kundt and locally Kundt checks on metric Lie algebras."""

__version__ = "0.1.0"

from .connection import MetricLieAlgebra, curvature, is_constant_curvature, levi_civita, ricci, scalar_curvature
from .exactcore import InputError, Matrix, QuadraticNumber, SignatureTriple, Subspace, signature
from .hyperplanes import HyperplaneFamily, SolutionKind, enumerate_hyperplane_subalgebras
from .kundt import (
    KundtPairReport,
    KundtVectorReport,
    Verdict,
    check_dim3_criterion,
    check_kundt_pair,
    check_kundt_vector,
    classify_kundt_structures,
    is_degenerate,
    orthogonal,
)
from .liealg import LieAlgebra, bracket, check_jacobi, killing_form

__all__ = [
    "InputError",
    "Matrix",
    "QuadraticNumber",
    "SignatureTriple",
    "Subspace",
    "signature",
    "LieAlgebra",
    "bracket",
    "check_jacobi",
    "killing_form",
    "MetricLieAlgebra",
    "levi_civita",
    "curvature",
    "is_constant_curvature",
    "ricci",
    "scalar_curvature",
    "HyperplaneFamily",
    "SolutionKind",
    "enumerate_hyperplane_subalgebras",
    "Verdict",
    "KundtPairReport",
    "KundtVectorReport",
    "orthogonal",
    "is_degenerate",
    "check_kundt_vector",
    "check_kundt_pair",
    "check_dim3_criterion",
    "classify_kundt_structures",
]
