"""Exact minimal-model transfer for Koszul factorizations of a potential.

The package computes the higher products transferred onto the exterior
algebra of odd generators over the u-line, verifies the identities the
construction relies on, and evaluates the semiorthogonal numerology of the
associated decompositions.  Everything is exact rational arithmetic.
"""

__version__ = "0.1.0"
