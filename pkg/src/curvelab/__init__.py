"""curvelab: exact-arithmetic laboratory for plane algebraic curves.

Construct geometric loci from base curves, turn rational parametrizations
into implicit equations by exact elimination, and analyze the resulting
algebraic curves (factorization, singular points, symmetry, asymptotes).
"""

from .poly import MultiPoly, Q, content_primitive, poly_gcd, square_free_part

__version__ = "0.1.0"

__all__ = [
    "MultiPoly",
    "Q",
    "content_primitive",
    "poly_gcd",
    "square_free_part",
    "__version__",
]
