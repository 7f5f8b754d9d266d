"""Exact calculus of differential, twisted and quantum operators on free algebras."""

__version__ = "0.1.0"
