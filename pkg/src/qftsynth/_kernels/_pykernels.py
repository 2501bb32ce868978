"""Vectorized numpy kernels for the hot amplitude-update loops.

These mirror the compiled kernels in ``_ckernels`` and are the fallback
selected when the extension is not built.  Unlike the compiled versions
they also accept 2-D arrays (shape ``(2**n, k)``), updating along axis 0,
which is how dense circuit expansion reuses them.
"""

import math

import numpy as np

_INV_SQRT2 = math.sqrt(0.5)


def _paired_indices(size: int, q: int) -> np.ndarray:
    """Indices 0..size-1 whose bit q is 0, in ascending order."""
    g = np.arange(size >> 1, dtype=np.int64)
    return ((g >> q) << (q + 1)) | (g & ((1 << q) - 1))


def hadamard(amps: np.ndarray, q: int) -> None:
    """In-place Hadamard on qubit q: mixes amplitude pairs differing in bit q."""
    i0 = _paired_indices(amps.shape[0], q)
    i1 = i0 | (1 << q)
    a0 = amps[i0]
    a1 = amps[i1]
    amps[i0] = (a0 + a1) * _INV_SQRT2
    amps[i1] = (a0 - a1) * _INV_SQRT2


def controlled_phase(amps: np.ndarray, qa: int, qb: int, u: int) -> None:
    """In-place phase exp(2*pi*i / 2**u) on amplitudes with bits qa and qb set."""
    j = np.arange(amps.shape[0], dtype=np.int64)
    both = (((j >> qa) & (j >> qb)) & 1).astype(bool)
    amps[both] *= np.exp(2j * np.pi / (1 << u))


def swap(amps: np.ndarray, qa: int, qb: int) -> None:
    """In-place exchange of amplitudes at indices that differ in bits qa, qb."""
    j = np.arange(amps.shape[0], dtype=np.int64)
    sel = (((j >> qa) & 1) == 1) & (((j >> qb) & 1) == 0)
    i1 = j[sel]
    i2 = i1 ^ ((1 << qa) | (1 << qb))
    tmp = amps[i1]
    amps[i1] = amps[i2]
    amps[i2] = tmp


def butterfly_stage(dst: np.ndarray, src: np.ndarray, s: int, lim: int) -> None:
    """One radix-2 butterfly stage, twiddle built from destination bits s+1..lim.

    For every index pair (j0, j1) differing in bit s:
        dst[j0] = (src[j0] + w*src[j1]) / sqrt(2)
        dst[j1] = (src[j0] - w*src[j1]) / sqrt(2)
    with w = exp(2*pi*i * e / 2**n) and e the bit-weighted twiddle exponent
    sum(j0_t * 2**(n+s-t-1) for t in s+1..lim).  lim = n-1 is the full
    (exact) stage; smaller lim truncates the twiddle to the leading bits.
    """
    size = src.shape[0]
    n = size.bit_length() - 1
    j0 = _paired_indices(size, s)
    j1 = j0 | (1 << s)
    e = np.zeros(size >> 1, dtype=np.int64)
    for t in range(s + 1, lim + 1):
        e += ((j0 >> t) & 1) << (n + s - t - 1)
    w = np.exp((2j * np.pi / size) * e)
    x0 = src[j0]
    x1 = src[j1] * w
    dst[j0] = (x0 + x1) * _INV_SQRT2
    dst[j1] = (x0 - x1) * _INV_SQRT2
