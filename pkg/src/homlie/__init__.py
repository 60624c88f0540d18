"""Exact computations for finite-dimensional multiplicative Hom-Lie algebras."""

__version__ = "0.1.0"
