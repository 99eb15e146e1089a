"""Exact construction, search, and verification of sign-prescribed
Tverberg partitions over the rationals."""

__version__ = "0.1.0"

from tvpm.kernel import BACKEND
from tvpm.core import (
    AffineCertificate,
    Intersection,
    PointConfig,
    SignPattern,
    build_system,
    canonical_partition,
    intersect_affine_hulls,
    sign_pattern,
    verify_certificate,
)

__all__ = [
    "BACKEND",
    "__version__",
    "AffineCertificate",
    "Intersection",
    "PointConfig",
    "SignPattern",
    "build_system",
    "canonical_partition",
    "intersect_affine_hulls",
    "sign_pattern",
    "verify_certificate",
]
