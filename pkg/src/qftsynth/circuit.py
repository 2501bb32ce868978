"""Gate-level circuit representation, QFT synthesis, and dense expansion.

Qubit convention: qubit index = bit position of basis-state integers, so
qubit 0 is the least significant bit.  Gates apply to the state in list
order.

The synthesized QFT follows the stage factorization in
:mod:`qftsynth.stages` literally: for each stage s from n-1 down to 0 the
diagonal factor's controlled phases (t descending), then the Hadamard on
qubit s; finally the swap network that realizes the bit-reversal
re-ordering.  The approximate variant keeps, per stage, only the
controlled phases with angle at least 2*pi/2**m.

Circuit text format (UTF-8, LF):
    qubits <n>
    h <q> | cp <control> <target> <u> | swap <a> <b>
Lines starting with '#' and blank lines are ignored.
"""

from dataclasses import dataclass, field

import numpy as np

from . import stages
from ._kernels import _pykernels
from .linalg import INV_SQRT2, MAX_DENSE_QUBITS, kron

MAX_SYNTH_QUBITS = 24

_HADAMARD_2 = np.array([[1, 1], [1, -1]], dtype=np.complex128) * INV_SQRT2


class CircuitParseError(ValueError):
    """Raised on malformed circuit text; message carries the line number."""


@dataclass(frozen=True)
class Hadamard:
    target: int


@dataclass(frozen=True)
class ControlledPhase:
    """Phase exp(2*pi*i / 2**u) applied where control and target bits are both 1.

    The gate is symmetric in (control, target); the distinction only fixes
    the emission order.
    """

    control: int
    target: int
    u: int


@dataclass(frozen=True)
class Swap:
    a: int
    b: int


Gate = Hadamard | ControlledPhase | Swap


def _check_gate(g: Gate, n: int) -> None:
    if isinstance(g, Hadamard):
        if not 0 <= g.target < n:
            raise ValueError(f"qubit index {g.target} out of range for n={n}")
    elif isinstance(g, ControlledPhase):
        if not (0 <= g.control < n and 0 <= g.target < n):
            raise ValueError(
                f"qubit indices ({g.control}, {g.target}) out of range for n={n}"
            )
        if g.control == g.target:
            raise ValueError("controlled phase requires control != target")
        if g.u < 1:
            raise ValueError(f"phase exponent u={g.u} must be at least 1")
    elif isinstance(g, Swap):
        if not (0 <= g.a < n and 0 <= g.b < n):
            raise ValueError(f"qubit indices ({g.a}, {g.b}) out of range for n={n}")
        if g.a == g.b:
            raise ValueError("swap requires two distinct qubits")
    else:
        raise ValueError(f"unknown gate {g!r}")


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.n < 1:
            raise ValueError("circuit needs at least one qubit")
        for g in self.gates:
            _check_gate(g, self.n)


@dataclass(frozen=True)
class GateCounts:
    hadamards: int
    controlled_phases: int
    swaps: int
    total: int


def gate_counts(c: Circuit) -> GateCounts:
    h = sum(1 for g in c.gates if isinstance(g, Hadamard))
    cp = sum(1 for g in c.gates if isinstance(g, ControlledPhase))
    sw = sum(1 for g in c.gates if isinstance(g, Swap))
    return GateCounts(h, cp, sw, h + cp + sw)


def synth_qft(n: int) -> Circuit:
    """Exact QFT circuit: n Hadamards, n(n-1)/2 controlled phases, n//2 swaps."""
    return synth_aqft(n, n)


def synth_aqft(n: int, m: int) -> Circuit:
    """Level-m approximate QFT circuit.

    Per stage s (n-1 down to 0): controlled phases on (s, t) with
    u = t-s+1 for t from min(s+m-1, n-1) down to s+1, then a Hadamard on
    qubit s; finally swaps (t, n-1-t).  m = n yields the exact circuit
    gate for gate; m = 1 leaves only Hadamards and swaps.
    """
    if not 1 <= n <= MAX_SYNTH_QUBITS:
        raise ValueError(f"n={n} outside 1..{MAX_SYNTH_QUBITS}")
    if not 1 <= m <= n:
        raise ValueError(f"approximation level m={m} outside 1..{n}")
    gates: list[Gate] = []
    for s in range(n - 1, -1, -1):
        for t in range(min(s + m - 1, n - 1), s, -1):
            gates.append(ControlledPhase(control=s, target=t, u=t - s + 1))
        gates.append(Hadamard(s))
    for t in range(n // 2):
        gates.append(Swap(t, n - 1 - t))
    return Circuit(n, tuple(gates))


def gate_unitary(g: Gate, n: int) -> np.ndarray:
    """Dense 2**n embedding of a single gate."""
    if n > MAX_DENSE_QUBITS:
        raise ValueError(f"n={n} too large for dense expansion (max {MAX_DENSE_QUBITS})")
    _check_gate(g, n)
    if isinstance(g, Hadamard):
        u = _HADAMARD_2
        if g.target > 0:
            u = kron(u, np.eye(1 << g.target, dtype=np.complex128))
        if g.target < n - 1:
            u = kron(np.eye(1 << (n - 1 - g.target), dtype=np.complex128), u)
        return u
    if isinstance(g, ControlledPhase):
        return stages.controlled_phase_matrix(n, g.control, g.target, g.u)
    size = 1 << n
    j = np.arange(size)
    swapped = j.copy()
    sel = (((j >> g.a) ^ (j >> g.b)) & 1) == 1
    swapped[sel] = j[sel] ^ ((1 << g.a) | (1 << g.b))
    perm = np.zeros((size, size), dtype=np.complex128)
    perm[j, swapped] = 1.0
    return perm


def circuit_to_unitary(c: Circuit) -> np.ndarray:
    """Product of the gate embeddings in application order (first gate rightmost).

    Computed by applying each gate's row action to an accumulating dense
    matrix instead of materializing per-gate 2**n x 2**n factors; the
    result is identical (see gate_unitary for the explicit embeddings).
    """
    if c.n > MAX_DENSE_QUBITS:
        raise ValueError(
            f"n={c.n} too large for dense expansion (max {MAX_DENSE_QUBITS})"
        )
    u = np.eye(1 << c.n, dtype=np.complex128)
    for g in c.gates:
        if isinstance(g, Hadamard):
            _pykernels.hadamard(u, g.target)
        elif isinstance(g, ControlledPhase):
            _pykernels.controlled_phase(u, g.control, g.target, g.u)
        else:
            _pykernels.swap(u, g.a, g.b)
    return u


def emit_circuit_text(c: Circuit) -> str:
    """Serialize a circuit to the line format; round-trips through parse."""
    lines = [f"qubits {c.n}"]
    for g in c.gates:
        if isinstance(g, Hadamard):
            lines.append(f"h {g.target}")
        elif isinstance(g, ControlledPhase):
            lines.append(f"cp {g.control} {g.target} {g.u}")
        else:
            lines.append(f"swap {g.a} {g.b}")
    return "\n".join(lines) + "\n"


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise CircuitParseError(f"line {lineno}: expected integer, got {token!r}") from None


def parse_circuit_text(text: str) -> Circuit:
    """Parse the circuit line format; inverse of emit_circuit_text on its image."""
    n = None
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "qubits" or len(tokens) != 2:
                raise CircuitParseError(f"line {lineno}: expected 'qubits <n>'")
            n = _parse_int(tokens[1], lineno)
            if n < 1:
                raise CircuitParseError(f"line {lineno}: qubit count must be positive")
            continue
        op, args = tokens[0], tokens[1:]
        if op == "h" and len(args) == 1:
            gate: Gate = Hadamard(_parse_int(args[0], lineno))
        elif op == "cp" and len(args) == 3:
            gate = ControlledPhase(*(_parse_int(a, lineno) for a in args))
        elif op == "swap" and len(args) == 2:
            gate = Swap(*(_parse_int(a, lineno) for a in args))
        else:
            raise CircuitParseError(f"line {lineno}: unrecognized gate line {line!r}")
        try:
            _check_gate(gate, n)
        except ValueError as exc:
            raise CircuitParseError(f"line {lineno}: {exc}") from None
        gates.append(gate)
    if n is None:
        raise CircuitParseError("missing 'qubits <n>' header")
    return Circuit(n, tuple(gates))
