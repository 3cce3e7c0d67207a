"""Ext algebra of the trivial simple cohomological Mackey functor for (C_p)^r."""

from .basis import admissible_basis, count_basis
from .group import GroupCtx, Line, make_context
from .rewrite import multiply, normal_form
from .series import poincare_coeffs
from .words import Element, parse_element, format_element

__all__ = [
    "Element",
    "GroupCtx",
    "Line",
    "admissible_basis",
    "count_basis",
    "format_element",
    "make_context",
    "multiply",
    "normal_form",
    "parse_element",
    "poincare_coeffs",
]

__version__ = "0.1.0"
