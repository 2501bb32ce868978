"""qftsynth: QFT circuit synthesis and verification from the radix-2 FFT.

The package mechanizes one derivation end to end: the butterfly stages of
the classical FFT are built as explicit unitaries, factored (degenerate
QR: orthogonal x diagonal) into a per-stage Hadamard and controlled-phase
gates, assembled into exact and approximate QFT circuits, and every step
is checked numerically against brute-force transform oracles.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .circuit import (
    Circuit,
    CircuitParseError,
    ControlledPhase,
    Gate,
    GateCounts,
    Hadamard,
    Swap,
    circuit_to_unitary,
    emit_circuit_text,
    gate_counts,
    gate_unitary,
    parse_circuit_text,
    synth_aqft,
    synth_qft,
)
from .fourier import (
    bit_reverse,
    dft_approx_direct,
    dft_direct,
    dft_matrix,
    approx_dft_matrix,
    fft_approx_classical,
    fft_classical,
    min_m_for_error,
    phase_error_bound,
)
from .linalg import is_unitary, kron, matmul, matvec, max_entry_distance
from .simulator import StateVector, apply_gate, prepare_state, run_circuit
from .stages import (
    StageDecomposition,
    bit_reversal_matrix,
    column_phases,
    controlled_phase_matrix,
    decompose_stage,
    hadamard_factor,
    phase_factor,
    stage_matrix,
    transform_from_stages,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "Circuit",
    "CircuitParseError",
    "ControlledPhase",
    "Gate",
    "GateCounts",
    "Hadamard",
    "StateVector",
    "StageDecomposition",
    "Swap",
    "apply_gate",
    "approx_dft_matrix",
    "bit_reversal_matrix",
    "bit_reverse",
    "circuit_to_unitary",
    "column_phases",
    "controlled_phase_matrix",
    "decompose_stage",
    "dft_approx_direct",
    "dft_direct",
    "dft_matrix",
    "emit_circuit_text",
    "fft_approx_classical",
    "fft_classical",
    "gate_counts",
    "gate_unitary",
    "hadamard_factor",
    "is_unitary",
    "kron",
    "matmul",
    "matvec",
    "max_entry_distance",
    "min_m_for_error",
    "parse_circuit_text",
    "phase_error_bound",
    "phase_factor",
    "prepare_state",
    "run_circuit",
    "stage_matrix",
    "synth_aqft",
    "synth_qft",
    "transform_from_stages",
]
