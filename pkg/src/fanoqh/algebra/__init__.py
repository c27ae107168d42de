"""Exact algebra: polynomials, Groebner bases, linear algebra, univariate tools."""

from .groebner import GroebnerBasis, GroebnerError, buchberger, normal_form
from .linalg import char_poly
from .poly import DEFAULT_ORDER, MultiPoly, WeightedRevLex, poly_arith
from .unipoly import (
    ComplexRoot,
    RootFindingError,
    UniPoly,
    complex_roots,
    interpolate,
    squarefree_decomposition,
)

__all__ = [
    "ComplexRoot",
    "DEFAULT_ORDER",
    "GroebnerBasis",
    "GroebnerError",
    "MultiPoly",
    "RootFindingError",
    "UniPoly",
    "WeightedRevLex",
    "buchberger",
    "char_poly",
    "complex_roots",
    "interpolate",
    "normal_form",
    "poly_arith",
    "squarefree_decomposition",
]
