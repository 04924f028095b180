"""Exact construction and numerical verification of multi-indexed and
Krein-Adler orthogonal polynomials and their discrete orthogonality at the
zeros of a fixed member of the family."""
from __future__ import annotations

__version__ = "0.1.0"

from .classical import Family, energy, virtual_energy
from .deform import deformed_family, deformed_poly, denominator_poly
from .errors import DiscOrthoError
from .exactalg import GaussianRational, Polynomial
from .mindex import KA, MI, MultiIndexSpec, enumerate_extras

__all__ = [
    "DiscOrthoError",
    "Family",
    "GaussianRational",
    "KA",
    "MI",
    "MultiIndexSpec",
    "Polynomial",
    "__version__",
    "deformed_family",
    "deformed_poly",
    "denominator_poly",
    "energy",
    "enumerate_extras",
    "virtual_energy",
]
