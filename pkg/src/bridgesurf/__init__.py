"""Exact construction and certification of high-distance bridge surfaces.

The package builds pants decompositions of marked surfaces, iterates Dehn
twist towers on them with exact big-integer bookkeeping, and emits replayable
certificates for curve-complex distance lower bounds of the resulting bridge
splittings.
"""

from .complexes import MarkedSurface, SurfaceComplex, build_surface

__version__ = "0.1.0"

__all__ = [
    "MarkedSurface",
    "SurfaceComplex",
    "build_surface",
    "__version__",
]
