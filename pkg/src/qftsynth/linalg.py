"""Dense complex linear algebra helpers sized for desk-scale verification.

Everything works on plain numpy arrays: vectors are 1-D complex128,
matrices are square 2-D complex128.  Inputs are validated (finiteness,
shape, dimension agreement) and dense sizes are capped at 2**12 so an
accidental Kronecker blow-up fails fast instead of exhausting memory.
"""

import math

import numpy as np

INV_SQRT2 = math.sqrt(0.5)

DEFAULT_TOL = 1e-10
STRICT_TOL = 1e-12

MAX_DENSE_QUBITS = 12
MAX_DENSE_DIM = 1 << MAX_DENSE_QUBITS


def as_vector(x) -> np.ndarray:
    """Coerce to a fresh 1-D complex128 array, rejecting NaN/Inf entries."""
    v = np.ascontiguousarray(x, dtype=np.complex128)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("expected a non-empty 1-D vector")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    if v is x:
        v = v.copy()
    return v


def as_matrix(x) -> np.ndarray:
    """Coerce to a fresh square 2-D complex128 array, rejecting NaN/Inf."""
    m = np.ascontiguousarray(x, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError("expected a non-empty square matrix")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    if m is x:
        m = m.copy()
    return m


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def matvec(a, v) -> np.ndarray:
    a = as_matrix(a)
    v = as_vector(v)
    if a.shape[0] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {v.shape[0]}")
    return a @ v


def kron(a, b) -> np.ndarray:
    """Kronecker product; the left factor acts on the more significant bits."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[0] * b.shape[0] > MAX_DENSE_DIM:
        raise ValueError(
            f"kron result dimension {a.shape[0] * b.shape[0]} exceeds "
            f"the dense limit {MAX_DENSE_DIM}"
        )
    return np.kron(a, b)


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T.copy()


def max_entry_distance(a, b) -> float:
    """Largest entrywise absolute difference between two equal-size matrices."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return float(np.max(np.abs(a - b)))


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    """True iff max-entry norm of a @ a.conj().T - I is within tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a = as_matrix(a)
    gram = a @ a.conj().T
    return float(np.max(np.abs(gram - np.eye(a.shape[0])))) <= tol
