"""Exact computations with cocycle twists of group algebras and Cherednik algebras."""

__version__ = "0.1.0"
