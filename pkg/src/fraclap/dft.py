"""Discrete Fourier transforms with the convention used throughout.

Forward transform (unnormalized):  û_p = Σ_m v_m e^{-2πimp/M},
inverse transform:                  v_m = (1/M) Σ_p û_p e^{2πimp/M}.

Backed by numpy's pocketfft, which is O(M log M) for every length,
including large primes (it falls back to Bluestein's chirp transform
internally), so composite and prime lengths are equally supported.
"""

from __future__ import annotations

import numpy as np

from .errors import ParameterError

__all__ = ["forward", "inverse"]


def forward(v, axis: int = -1) -> np.ndarray:
    """Unnormalized forward DFT along ``axis``."""
    v = np.asarray(v)
    if v.shape[axis if axis >= 0 else v.ndim + axis] == 0:
        raise ParameterError("cannot transform an empty vector")
    return np.fft.fft(v, axis=axis)


def inverse(v, axis: int = -1) -> np.ndarray:
    """Inverse DFT along ``axis`` (includes the 1/M normalization)."""
    v = np.asarray(v)
    if v.shape[axis if axis >= 0 else v.ndim + axis] == 0:
        raise ParameterError("cannot transform an empty vector")
    return np.fft.ifft(v, axis=axis)
