"""Exact Fourier-Dedekind sums via a Barvinok short-rational-function pipeline."""

from .api import FDResult, compute, fourier_dedekind, validate
from .cone import FDInstance

__all__ = ["FDInstance", "FDResult", "compute", "fourier_dedekind", "validate"]
__version__ = "0.1.0"
