"""Exact structure-constant toolkit for finite-dimensional Leibniz algebras."""

__version__ = '0.3.0'
