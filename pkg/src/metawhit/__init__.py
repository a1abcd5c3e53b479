"""Exact computation of spherical Whittaker values on tame covers of unramified groups."""

from .scalars import GaussSym, Scalar

__all__ = ["GaussSym", "Scalar"]
