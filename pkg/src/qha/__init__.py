"""Exact Hochschild cohomology HH^0..HH^2 of quiver algebras ``KQ/I``.

The pipeline is: parse or build a presentation, complete it to a reduced
Groebner basis, enumerate the irreducible-path basis, compute the minimal
generators ``f^0..f^3`` and bimodule maps ``A_1..A_3``, then take ranks of
the induced cochain matrices.
"""

from __future__ import annotations

from .dsl import format_presentation, parse_presentation
from .errors import (CapExceeded, DSLSyntaxError, InvariantError, OracleMismatch, OracleTooLarge,
                     QHAError, ValidationError)
from .estimator import HochschildEstimator, check_presentation
from .families import (build_gamma_eta2, build_gamma_star, build_lambda_eta, build_lambda_family,
                       dim_report)
from .field import QQ, FieldSpec
from .hochschild import HHReport, bar_hh_dims, cochain_complex, hh_dims, reduced_bar_hh_dims
from .quiver import Element, Path, Presentation, Quiver
from .resolution import Resolution, min_resolution_simples
from .rewriting import Algebra, GroebnerBasis, buchberger, enumerate_basis

__version__ = "0.1.0"

__all__ = [
    "Algebra", "CapExceeded", "DSLSyntaxError", "Element", "FieldSpec", "GroebnerBasis", "HHReport",
    "HochschildEstimator", "InvariantError", "OracleMismatch", "OracleTooLarge", "Path",
    "Presentation", "QHAError", "QQ", "Quiver", "Resolution", "ValidationError", "bar_hh_dims",
    "build_gamma_eta2", "build_gamma_star", "build_lambda_eta", "build_lambda_family", "buchberger",
    "check_presentation", "cochain_complex", "dim_report", "enumerate_basis", "format_presentation",
    "hh_dims", "min_resolution_simples", "parse_presentation", "reduced_bar_hh_dims",
]
