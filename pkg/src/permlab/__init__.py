"""Finite-field toolkit for checking permutation-polynomial classifications against brute force."""

from .gf import FieldCtx, FieldError, QuadExtCtx, build_field, field_for, quad_ext_for
from .poly import Poly

__version__ = "0.1.0"

__all__ = ["FieldCtx", "FieldError", "QuadExtCtx", "Poly", "build_field", "field_for", "quad_ext_for", "__version__"]
