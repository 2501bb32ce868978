"""State-vector simulation: O(2**n) per gate, no dense matrices.

Gate application goes through the selected kernel backend (compiled if
available, numpy otherwise), so circuits well past the dense-expansion
limit remain cheap to run.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .circuit import Circuit, ControlledPhase, Gate, Hadamard, Swap, _check_gate
from .fourier import MAX_VECTOR_QUBITS, exponent_of_two
from .linalg import as_vector

NORM_TOL = 1e-9


@dataclass(eq=False)
class StateVector:
    """n-qubit register amplitudes; index bit q is qubit q's basis value."""

    n: int
    amplitudes: np.ndarray


def prepare_state(x, normalize: bool = False) -> StateVector:
    """Load amplitudes into a register, enforcing unit norm.

    With normalize=False the input must already have Euclidean norm 1
    (within 1e-9); with normalize=True any nonzero vector is scaled.
    """
    v = as_vector(x)
    n = exponent_of_two(v.size)
    if n > MAX_VECTOR_QUBITS:
        raise ValueError(f"length 2**{n} exceeds the 2**{MAX_VECTOR_QUBITS} limit")
    norm = float(np.linalg.norm(v))
    if normalize:
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        v /= norm
    elif abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"input norm {norm!r} is not 1 (pass normalize=True to rescale)")
    return StateVector(n, v)


def _apply_inplace(amps: np.ndarray, g: Gate) -> None:
    if isinstance(g, Hadamard):
        _kernels.hadamard(amps, g.target)
    elif isinstance(g, ControlledPhase):
        _kernels.controlled_phase(amps, g.control, g.target, g.u)
    else:
        _kernels.swap(amps, g.a, g.b)


def _working_copy(st: StateVector) -> np.ndarray:
    # fresh buffer, coerced and size-checked for the kernels (directly
    # built StateVectors may carry real, non-contiguous, or mismatched
    # amplitude arrays; the compiled kernels do no bounds checking)
    amps = np.array(st.amplitudes, dtype=np.complex128, order="C")
    if amps.shape != (1 << st.n,):
        raise ValueError(f"amplitude array shape {amps.shape} does not match {st.n} qubits")
    return amps


def apply_gate(st: StateVector, g: Gate) -> StateVector:
    """Apply one gate, returning a fresh state."""
    _check_gate(g, st.n)
    amps = _working_copy(st)
    _apply_inplace(amps, g)
    return StateVector(st.n, amps)


def run_circuit(st: StateVector, c: Circuit, validate: bool = False) -> StateVector:
    """Fold apply_gate over the circuit's gates in list order.

    validate=True re-checks unit norm after every gate (debug aid; all
    three gate kinds are norm-preserving, so drift indicates a bug).
    """
    if st.n != c.n:
        raise ValueError(f"state has {st.n} qubits but circuit has {c.n}")
    amps = _working_copy(st)
    for g in c.gates:
        _apply_inplace(amps, g)
        if validate:
            norm = float(np.linalg.norm(amps))
            if abs(norm - 1.0) > NORM_TOL:
                raise AssertionError(f"norm drifted to {norm!r} after {g!r}")
    return StateVector(st.n, amps)
