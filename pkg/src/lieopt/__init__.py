"""Exact tools for the one-parameter family L(k) of four-dimensional Lie
algebras attached to a nonlinear Black-Scholes model: classification into
standard forms, adjoint-group reductions, and machine-checked optimal
systems of subalgebras."""

from .scalars import PosScale, Rational, RationalFunction, param_eval, param_simplify
from .lie_core import (
    LieAlgebra,
    Subalgebra,
    bracket,
    center,
    check_jacobi,
    close_subspace,
    derived_subalgebra,
    normalizer,
)
from .classify import classify_k, paper_algebra, structural_invariants, to_standard_basis

__all__ = [
    "PosScale",
    "Rational",
    "RationalFunction",
    "param_eval",
    "param_simplify",
    "LieAlgebra",
    "Subalgebra",
    "bracket",
    "center",
    "check_jacobi",
    "close_subspace",
    "derived_subalgebra",
    "normalizer",
    "classify_k",
    "paper_algebra",
    "structural_invariants",
    "to_standard_basis",
]

__version__ = "0.1.0"
