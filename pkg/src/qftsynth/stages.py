"""Per-stage matrices of the butterfly FFT and their gate-level factorization.

Stage s of the radix-2 butterfly (n-1 down to 0) is a 2**n unitary with
exactly two nonzero entries per row: a 1/sqrt(2) mixing coefficient and a
twiddle phase, sitting on the diagonal and on the sub/superdiagonal at
offset 2**s.  Its columns are orthonormal and each is a unit phase times a
real column, so QR decomposition degenerates: rescaling column k by a unit
phase (``column_phases``) yields a real orthogonal factor that is exactly
a Hadamard acting on qubit s (``hadamard_factor``), leaving a diagonal
phase factor (``phase_factor``) which further splits into two-qubit
controlled-phase factors (``controlled_phase_matrix``).  Chaining every
stage and the final bit-reversal permutation rebuilds the full DFT matrix
(``transform_from_stages``); the same factors, read as gates, are the
synthesized circuit in :mod:`qftsynth.circuit`.

``decompose_stage`` performs the phase extraction numerically from the
matrix entries and cross-checks the result against the closed forms, so
the factorization is executable and falsifiable rather than assumed.
"""

from dataclasses import dataclass

import numpy as np

from .fourier import bit_reverse_indices
from .linalg import (
    DEFAULT_TOL,
    INV_SQRT2,
    MAX_DENSE_QUBITS,
    STRICT_TOL,
    as_matrix,
    max_entry_distance,
)


def _check_stage(n: int, s: int) -> None:
    if not 1 <= n <= MAX_DENSE_QUBITS:
        raise ValueError(f"n={n} outside 1..{MAX_DENSE_QUBITS} for dense matrices")
    if not 0 <= s < n:
        raise ValueError(f"stage s={s} outside 0..{n - 1}")


def _twiddle_exponents(n: int, s: int) -> np.ndarray:
    """E[j] = sum of bit t of j times 2**(n+s-t-1) over t = s..n-1 (< 2**n)."""
    j = np.arange(1 << n, dtype=np.int64)
    e = np.zeros_like(j)
    for t in range(s, n):
        e += ((j >> t) & 1) << (n + s - t - 1)
    return e


def stage_matrix(n: int, s: int) -> np.ndarray:
    """The 2**n butterfly-stage unitary for stage s.

    Row j holds 1/sqrt(2) on the column with bit s cleared and the twiddle
    w**E(j)/sqrt(2) on the column with bit s set, where E(j) keeps the bits
    of j from position s upward, reversed into the high positions.
    """
    _check_stage(n, s)
    size = 1 << n
    j = np.arange(size)
    sbit = (j >> s) & 1
    lo = j[sbit == 0]
    hi = j[sbit == 1]
    w = np.exp((2j * np.pi / size) * _twiddle_exponents(n, s))
    p = np.zeros((size, size), dtype=np.complex128)
    p[lo, lo] = INV_SQRT2
    p[lo, lo + (1 << s)] = w[lo] * INV_SQRT2
    p[hi, hi - (1 << s)] = INV_SQRT2
    p[hi, hi] = w[hi] * INV_SQRT2
    return p


def hadamard_factor(n: int, s: int) -> np.ndarray:
    """The real orthogonal factor of stage s: a Hadamard on qubit s.

    Same sparsity as stage_matrix with every twiddle replaced by the
    diagonal sign (-1)**(bit s of j); equals the Kronecker chain
    I x ... x H x ... x I with H in slot s.
    """
    _check_stage(n, s)
    size = 1 << n
    j = np.arange(size)
    sbit = (j >> s) & 1
    lo = j[sbit == 0]
    hi = j[sbit == 1]
    m = np.zeros((size, size), dtype=np.complex128)
    m[lo, lo] = INV_SQRT2
    m[lo, lo + (1 << s)] = INV_SQRT2
    m[hi, hi - (1 << s)] = INV_SQRT2
    m[hi, hi] = -INV_SQRT2
    return m


def phase_factor(n: int, s: int) -> np.ndarray:
    """The diagonal factor of stage s: 1 where bit s is clear, -w**E(j) where set.

    The identity for s = n-1; otherwise the product of the stage's
    controlled-phase factors.
    """
    _check_stage(n, s)
    size = 1 << n
    j = np.arange(size)
    sbit = (j >> s) & 1
    w = np.exp((2j * np.pi / size) * _twiddle_exponents(n, s))
    d = np.where(sbit == 1, -w, 1.0 + 0.0j)
    return np.diag(d)


def column_phases(n: int, s: int) -> np.ndarray:
    """Unit phases that rescale stage s's columns to the real orthogonal factor.

    Entry k is (-1)**(bit s of k) times the conjugate twiddle of column k
    (exponent reduced mod 2**n; the nominal extra full turn 2**n in the
    exponent drops out).  Conjugate of the phase_factor diagonal.
    """
    _check_stage(n, s)
    size = 1 << n
    k = np.arange(size, dtype=np.int64)
    kbit = (k >> s) & 1
    e_full = np.zeros_like(k)
    for t in range(n):
        e_full += ((k >> t) & 1) << (n + s - t - 1)
    exponent = (size - kbit * e_full) % size
    return np.where(kbit == 1, -1.0, 1.0) * np.exp((2j * np.pi / size) * exponent)


def controlled_phase_matrix(n: int, qa: int, qb: int, u: int) -> np.ndarray:
    """Diagonal 2**n matrix applying exp(2*pi*i/2**u) where bits qa and qb are set.

    The two-qubit controlled-phase gate embedded on qubits (qa, qb);
    symmetric in qa, qb.
    """
    if not 1 <= n <= MAX_DENSE_QUBITS:
        raise ValueError(f"n={n} outside 1..{MAX_DENSE_QUBITS} for dense matrices")
    if not (0 <= qa < n and 0 <= qb < n):
        raise ValueError(f"qubit indices ({qa}, {qb}) out of range for n={n}")
    if qa == qb:
        raise ValueError("control and target must differ")
    if not 1 <= u <= n:
        raise ValueError(f"phase exponent u={u} outside 1..{n}")
    size = 1 << n
    j = np.arange(size, dtype=np.int64)
    d = np.ones(size, dtype=np.complex128)
    d[(((j >> qa) & (j >> qb)) & 1) == 1] = np.exp(2j * np.pi / (1 << u))
    return np.diag(d)


def bit_reversal_matrix(n: int) -> np.ndarray:
    """Permutation matrix A with A[j, bit_reverse(j)] = 1 (symmetric involution)."""
    if not 1 <= n <= MAX_DENSE_QUBITS:
        raise ValueError(f"n={n} outside 1..{MAX_DENSE_QUBITS} for dense matrices")
    size = 1 << n
    a = np.zeros((size, size), dtype=np.complex128)
    a[np.arange(size), bit_reverse_indices(n)] = 1.0
    return a


def transform_from_stages(n: int) -> np.ndarray:
    """Full DFT matrix as bit-reversal times the chain of stage factorizations.

    Matrix product (stage 0 factors leftmost, stage n-1 rightmost, so stage
    n-1 acts first on a state):
        A @ (M_0 @ N_0) @ (M_1 @ N_1) @ ... @ (M_{n-1} @ N_{n-1}).
    """
    if not 1 <= n <= MAX_DENSE_QUBITS:
        raise ValueError(f"n={n} outside 1..{MAX_DENSE_QUBITS} for dense matrices")
    acc = np.eye(1 << n, dtype=np.complex128)
    for s in range(n):
        acc = acc @ hadamard_factor(n, s) @ phase_factor(n, s)
    return bit_reversal_matrix(n) @ acc


@dataclass(eq=False)
class StageDecomposition:
    """Numerically extracted factorization of one butterfly stage.

    stage = orthogonal_factor @ diagonal_factor; diagonal_factor is the
    conjugate of column_phases on the diagonal; residuals are max-entry
    distances of the factorization and of each factor against its closed
    form.
    """

    n: int
    s: int
    stage: np.ndarray
    orthogonal_factor: np.ndarray
    diagonal_factor: np.ndarray
    column_phases: np.ndarray
    residual_factorization: float
    residual_orthogonal: float
    residual_diagonal: float


def decompose_stage(p, n: int, s: int, tol: float = DEFAULT_TOL) -> StageDecomposition:
    """Extract the orthogonal x diagonal factorization of a stage matrix.

    The input must be the stage-s butterfly matrix (checked against
    stage_matrix within tol).  Since its columns are already orthonormal
    and each is a unit phase times a real column, the Gram-Schmidt pass
    reduces to per-column phase extraction: column k is rescaled by the
    unit phase that makes it real with diagonal sign (-1)**(bit s of k).
    The extracted factors are cross-checked against the closed forms at
    1e-12 before being returned.
    """
    p = as_matrix(p)
    _check_stage(n, s)
    size = 1 << n
    if p.shape[0] != size:
        raise ValueError(f"matrix dimension {p.shape[0]} does not match n={n}")
    if max_entry_distance(p, stage_matrix(n, s)) > tol:
        raise ValueError(f"input is not the stage matrix for n={n}, s={s}")

    gram = p.conj().T @ p
    if float(np.max(np.abs(gram - np.eye(size)))) > STRICT_TOL:
        raise ValueError("stage columns are not orthonormal")

    diag = np.diagonal(p)
    target_sign = np.where(((np.arange(size) >> s) & 1) == 1, -1.0, 1.0)
    alpha = target_sign * diag.conj() / np.abs(diag)

    ortho = p * alpha[np.newaxis, :]
    diagonal = np.diag(alpha.conj())

    residual_factorization = max_entry_distance(ortho @ diagonal, p)
    residual_orthogonal = max_entry_distance(ortho, hadamard_factor(n, s))
    residual_diagonal = max_entry_distance(diagonal, phase_factor(n, s))
    if max(residual_orthogonal, residual_diagonal) > STRICT_TOL:
        raise ValueError("extracted factors deviate from the closed forms")

    return StageDecomposition(
        n=n,
        s=s,
        stage=p,
        orthogonal_factor=ortho,
        diagonal_factor=diagonal,
        column_phases=alpha,
        residual_factorization=residual_factorization,
        residual_orthogonal=residual_orthogonal,
        residual_diagonal=residual_diagonal,
    )


def format_matrix_grid(mat) -> str:
    """Debug dump: one row per line, entries as re+imi with full precision."""
    mat = as_matrix(mat)
    lines = []
    for row in mat:
        lines.append(" ".join(f"{z.real:.17g}{z.imag:+.17g}i" for z in row))
    return "\n".join(lines) + "\n"
