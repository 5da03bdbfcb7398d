"""Exact characteristic-2 algebra: quadratic forms and pairs, Clifford
algebras with their canonical semi-traces, and octonion triality."""

from .fields import (
    GF, BinaryField, RatFuncField, function_field, fraction_normalize,
    ASClass, artin_schreier_solve, artin_schreier_class,
    FieldMismatchError, UndecidedError, Poly,
)

__all__ = [
    "GF", "BinaryField", "RatFuncField", "function_field",
    "fraction_normalize", "ASClass", "artin_schreier_solve",
    "artin_schreier_class", "FieldMismatchError", "UndecidedError", "Poly",
]

__version__ = "0.1.0"
