"""Exact transverse Kahler calculus on Sasakian Lie models.

The package builds finite-dimensional invariant-form models of compact
Sasakian manifolds, attaches flat bundles with explicit harmonic data,
and verifies the whole transverse operator calculus, the DDc lemma, the
almost-formality chain, deformation-germ quadraticity and cup-product
vanishing by exact linear algebra over Q(i).
"""

from .scalars import GaussianRational, format_scalar, parse_scalar
from .matrix import ExactMatrix
from .subspace import Subspace, image, kernel

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "ExactMatrix",
    "Subspace",
    "kernel",
    "image",
    "format_scalar",
    "parse_scalar",
    "__version__",
]
