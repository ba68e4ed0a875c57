"""Euler characteristics, weightings and Möbius inversion for finite categories."""

from .core import FinCat, Functor, make_category, validate_category
from .builders import build, build_functor
from .mobius import euler_characteristic, mobius_matrix, weighting, coweighting

__version__ = "0.1.0"

__all__ = ["FinCat", "Functor", "make_category", "validate_category", "build", "build_functor",
           "euler_characteristic", "mobius_matrix", "weighting", "coweighting"]
