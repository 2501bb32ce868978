"""Reference discrete Fourier transforms and the radix-2 butterfly FFT.

Conventions used throughout the package:

* length N = 2**n, unitary normalization 1/sqrt(N), positive-exponent
  root of unity w = exp(2*pi*i/N), so the transform is
  ``Y[c] = (1/sqrt(N)) * sum_a X[a] * w**(a*c)``;
* bit t of an index j is ``(j >> t) & 1`` (bit 0 least significant);
* root-of-unity powers are always reduced mod N before calling exp, so
  large integer exponents never reach the trig routines.

``dft_direct`` and ``dft_approx_direct`` are deliberately written as the
literal definition sums: they are the slow oracles that everything faster
(the butterfly FFT here, the stage factorization, the synthesized
circuits) is verified against.

The approximate transform keeps only the bit-pair phase terms with
n-m <= j+k <= n-1; level m = n is the exact transform and m = 1 drops
every phase.  The butterfly variant truncates each stage twiddle to its
leading bits, which realizes the same restriction.
"""

import functools
import math

import numpy as np

from . import _kernels
from .linalg import MAX_DENSE_QUBITS, as_vector

MAX_VECTOR_QUBITS = 26


def exponent_of_two(length: int) -> int:
    """n such that length == 2**n, or ValueError."""
    n = int(length).bit_length() - 1
    if length < 1 or (1 << n) != length:
        raise ValueError(f"length {length} is not a power of two")
    return n


def bit(value: int, t: int) -> int:
    """Bit t of value (bit 0 least significant)."""
    return (value >> t) & 1


def binary_fraction(value: int, width: int) -> float:
    """sum of bit(value, t) / 2**(t+1) over t in 0..width-1.

    The low bit contributes 1/2, so the result lies in [0, 1).
    """
    return sum(bit(value, t) / (1 << (t + 1)) for t in range(width))


def bit_reverse(value: int, width: int) -> int:
    """The integer whose width-bit binary digits are value's reversed."""
    if width < 0:
        raise ValueError("width must be non-negative")
    if not 0 <= value < (1 << width):
        raise ValueError(f"value {value} out of range for width {width}")
    r = 0
    for t in range(width):
        r |= bit(value, t) << (width - 1 - t)
    return r


@functools.lru_cache(maxsize=None)
def bit_reverse_indices(width: int) -> np.ndarray:
    """Read-only array r with r[j] = bit_reverse(j, width)."""
    j = np.arange(1 << width, dtype=np.int64)
    r = np.zeros_like(j)
    for t in range(width):
        r |= ((j >> t) & 1) << (width - 1 - t)
    r.setflags(write=False)
    return r


def _check_level(m: int, n: int) -> None:
    if not 1 <= m <= n:
        raise ValueError(f"approximation level m={m} outside 1..{n}")


def dft_direct(x) -> np.ndarray:
    """Brute-force unitary DFT, O(N^2)."""
    v = as_vector(x)
    n = exponent_of_two(v.size)
    if n == 0:
        return v
    size = v.size
    a = np.arange(size, dtype=np.int64)
    roots = np.exp((2j * np.pi / size) * a)
    y = np.empty(size, dtype=np.complex128)
    for c in range(size):
        y[c] = roots[(a * c) % size] @ v
    return y / math.sqrt(size)


def dft_matrix(n: int) -> np.ndarray:
    """The N x N unitary DFT matrix, entries w**(a*c) / sqrt(N)."""
    if not 0 <= n <= MAX_DENSE_QUBITS:
        raise ValueError(f"n={n} outside 0..{MAX_DENSE_QUBITS} for dense matrices")
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    e = np.outer(idx, idx) % size
    return np.exp((2j * np.pi / size) * e) / math.sqrt(size)


def _restricted_exponents(n: int, lo: int, hi: int) -> np.ndarray:
    """Integer phase exponents E[c, a] = sum a_j * c_k * 2**(j+k), lo <= j+k <= hi."""
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    e = np.zeros((size, size), dtype=np.int64)
    for j in range(n):
        abit = (idx >> j) & 1
        for k in range(n):
            if lo <= j + k <= hi:
                e += np.outer((idx >> k) & 1, abit) << (j + k)
    return e


def approx_dft_matrix(n: int, m: int) -> np.ndarray:
    """Matrix of the level-m approximate transform (phase terms n-m <= j+k <= n-1)."""
    if not 0 <= n <= MAX_DENSE_QUBITS:
        raise ValueError(f"n={n} outside 0..{MAX_DENSE_QUBITS} for dense matrices")
    if n == 0:
        return np.ones((1, 1), dtype=np.complex128)
    _check_level(m, n)
    size = 1 << n
    e = _restricted_exponents(n, n - m, n - 1) % size
    return np.exp((2j * np.pi / size) * e) / math.sqrt(size)


def dft_approx_direct(x, m: int) -> np.ndarray:
    """Brute-force level-m approximate transform; m = n recovers dft_direct.

    Deliberately O(N^2 * n^2): the explicit restricted bit-pair double sum,
    kept as the oracle for the truncated butterfly FFT and the approximate
    circuits.
    """
    v = as_vector(x)
    n = exponent_of_two(v.size)
    if n == 0:
        if m < 1:
            raise ValueError(f"approximation level m={m} must be at least 1")
        return v
    return approx_dft_matrix(n, m) @ v


def phase_error_bound(n: int, m: int) -> float:
    """Worst-case phase deviation 2*pi*n/2**m of the level-m transform."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_level(m, n)
    return (2.0 * math.pi * n) * 2.0 ** (-m)


def min_m_for_error(eps_max: float, n: int) -> int:
    """Smallest level m with phase_error_bound(n, m) <= eps_max, clamped to 1..n.

    Computed as ceil(log2(2*pi*n / eps_max)); when the unclamped value
    exceeds n the bound is not attainable and n is returned.
    """
    if eps_max <= 0:
        raise ValueError("eps_max must be positive")
    if n < 1:
        raise ValueError("n must be at least 1")
    raw = math.ceil(math.log2((2.0 * math.pi * n) / eps_max))
    return max(1, min(n, raw))


def _butterfly_transform(v: np.ndarray, n: int, m: int) -> np.ndarray:
    """Stages s = n-1..0 over ping-pong buffers, then bit-reversal re-ordering."""
    src = v
    dst = np.empty_like(v)
    for s in range(n - 1, -1, -1):
        _kernels.butterfly_stage(dst, src, s, min(s + m - 1, n - 1))
        src, dst = dst, src
    return src[bit_reverse_indices(n)]


def fft_classical(x) -> np.ndarray:
    """Radix-2 FFT of the unitary DFT, O(N log N)."""
    v = as_vector(x)
    n = exponent_of_two(v.size)
    if n > MAX_VECTOR_QUBITS:
        raise ValueError(f"length 2**{n} exceeds the 2**{MAX_VECTOR_QUBITS} limit")
    if n == 0:
        return v
    return _butterfly_transform(v, n, n)


def fft_approx_classical(x, m: int) -> np.ndarray:
    """Radix-2 FFT with stage twiddles truncated to their m leading bits.

    Bit-identical to fft_classical when m = n (the truncation is inactive);
    otherwise equals dft_approx_direct up to rounding.
    """
    v = as_vector(x)
    n = exponent_of_two(v.size)
    if n > MAX_VECTOR_QUBITS:
        raise ValueError(f"length 2**{n} exceeds the 2**{MAX_VECTOR_QUBITS} limit")
    if n == 0:
        if m < 1:
            raise ValueError(f"approximation level m={m} must be at least 1")
        return v
    _check_level(m, n)
    return _butterfly_transform(v, n, m)
