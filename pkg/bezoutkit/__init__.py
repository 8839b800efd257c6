"""Compute certified gcds, factorizations and normal forms over ℤ, ℚ[x] and H."""

__version__ = "0.1.0"
__author__ = "Bezout Kit developers"
__license__ = "License :: OSI Approved :: MIT License"
__status__ = "Beta"
