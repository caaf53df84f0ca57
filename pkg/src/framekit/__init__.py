"""framekit: finite frames, Gabor systems, and sampled reconstruction."""

from . import gabor, sampling, serialization
from .errors import (
    AliasingError,
    ConvergenceError,
    DimensionMismatchError,
    DomainError,
    NotAFrameError,
    NotHermitianError,
    NotPerfectReconstructionError,
    NotTightUnitError,
    NotUnitaryError,
    ParseError,
    ProtectedBinError,
)
from .frames import (
    ExactnessProfile,
    Frame,
    FrameBounds,
    LeftInverse,
    NaimarkDilation,
    analyze,
    canonical_dual,
    check_biorthonormal,
    exactness_profile,
    frame_bounds,
    frame_operator,
    frame_threshold,
    harmonic_frame,
    is_left_inverse,
    left_inverse,
    naimark_dilate,
    pseudo_inverse,
    range_projection,
    reconstruct,
    remove_vector,
    tighten,
    unitary_transform,
)
from .hermitian import is_hermitian, jacobi_eigh, spectral_map

__version__ = "0.1.0"

__all__ = [
    "AliasingError",
    "ConvergenceError",
    "DimensionMismatchError",
    "DomainError",
    "ExactnessProfile",
    "Frame",
    "FrameBounds",
    "LeftInverse",
    "NaimarkDilation",
    "NotAFrameError",
    "NotHermitianError",
    "NotPerfectReconstructionError",
    "NotTightUnitError",
    "NotUnitaryError",
    "ParseError",
    "ProtectedBinError",
    "analyze",
    "canonical_dual",
    "check_biorthonormal",
    "exactness_profile",
    "frame_bounds",
    "frame_operator",
    "frame_threshold",
    "gabor",
    "harmonic_frame",
    "is_hermitian",
    "is_left_inverse",
    "jacobi_eigh",
    "left_inverse",
    "naimark_dilate",
    "pseudo_inverse",
    "range_projection",
    "reconstruct",
    "remove_vector",
    "sampling",
    "serialization",
    "spectral_map",
    "tighten",
    "unitary_transform",
    "__version__",
]
