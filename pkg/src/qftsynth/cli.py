"""Command-line front end.

Subcommands: synth, fft, simulate, verify, compare-approx, decompose.
Data goes to stdout, diagnostics to stderr; exit status 0 means the
operation (and its verdict, where one is computed) succeeded.

Vector files carry one amplitude per line as "<re> <im>"; amplitudes are
printed with 17 significant digits so output round-trips bit-exactly.
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import circuit as circ
from . import fourier, simulator, stages
from .linalg import DEFAULT_TOL, max_entry_distance

DEFAULT_SEED = 12345
VERIFY_MAX_QUBITS = 8


def read_vector_file(path: str) -> np.ndarray:
    """Parse a vector file: power-of-two count of "<re> <im>" lines."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"{path}:{lineno}: expected '<re> <im>', got {line!r}")
        try:
            re, im = float(tokens[0]), float(tokens[1])
        except ValueError:
            raise ValueError(f"{path}:{lineno}: tokens do not parse as reals") from None
        if not (np.isfinite(re) and np.isfinite(im)):
            raise ValueError(f"{path}:{lineno}: non-finite amplitude")
        values.append(complex(re, im))
    if not values:
        raise ValueError(f"{path}: empty vector file")
    fourier.exponent_of_two(len(values))
    return np.array(values, dtype=np.complex128)


def format_amplitudes(v: np.ndarray) -> str:
    return "\n".join(f"{z.real:.17g} {z.imag:.17g}" for z in v) + "\n"


@dataclass
class RunReport:
    """Outcome of a verification-style subcommand."""

    subcommand: str
    parameters: dict
    checks: list = field(default_factory=list)  # (name, max_error, bound) triples
    metrics: dict = field(default_factory=dict)

    def add_check(self, name: str, max_error: float, bound: float) -> None:
        self.checks.append((name, max_error, bound))

    @property
    def passed(self) -> bool:
        return all(err <= bound for _, err, bound in self.checks)

    def render(self) -> str:
        lines = [f"report: {self.subcommand}"]
        for key, value in self.parameters.items():
            lines.append(f"{key}: {value}")
        for name, err, bound in self.checks:
            status = "pass" if err <= bound else "FAIL"
            lines.append(f"check {name}: max_error={err:.3e} tolerance={bound:.3e} {status}")
        for key, value in self.metrics.items():
            lines.append(f"{key}: {value}")
        lines.append(f"verdict: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_synth(args) -> int:
    m = args.n if args.m is None else args.m
    c = circ.synth_aqft(args.n, m)
    counts = circ.gate_counts(c)
    _write_or_print(circ.emit_circuit_text(c), args.out)
    print(
        f"gates: hadamards={counts.hadamards} "
        f"controlled_phases={counts.controlled_phases} "
        f"swaps={counts.swaps} total={counts.total}",
        file=sys.stderr,
    )
    return 0


def cmd_fft(args) -> int:
    v = read_vector_file(args.infile)
    if args.m is None:
        y = fourier.fft_classical(v)
    else:
        y = fourier.fft_approx_classical(v, args.m)
    sys.stdout.write(format_amplitudes(y))
    return 0


def cmd_simulate(args) -> int:
    v = read_vector_file(args.infile)
    with open(args.circuit, "r", encoding="utf-8") as fh:
        c = circ.parse_circuit_text(fh.read())
    if v.size != 1 << c.n:
        raise ValueError(
            f"vector length {v.size} does not match the {c.n}-qubit circuit "
            f"(expected {1 << c.n})"
        )
    st = simulator.prepare_state(v, normalize=args.normalize)
    out = simulator.run_circuit(st, c)
    sys.stdout.write(format_amplitudes(out.amplitudes))
    return 0


def _seeded_unit_vector(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return v / np.linalg.norm(v)


def cmd_verify(args) -> int:
    n, tol, seed = args.n, args.tolerance, args.seed
    if not 1 <= n <= VERIFY_MAX_QUBITS:
        raise ValueError(f"n={n} outside 1..{VERIFY_MAX_QUBITS}")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    t0 = time.perf_counter()
    report = RunReport("verify", {"n": n, "tolerance": tol, "seed": seed})
    eye = np.eye(1 << n)

    err = 0.0
    for s in range(n):
        p = stages.stage_matrix(n, s)
        err = max(err, float(np.max(np.abs(p @ p.conj().T - eye))))
    report.add_check("stage_unitarity", err, tol)

    err = 0.0
    for s in range(n):
        p = stages.stage_matrix(n, s)
        mn = stages.hadamard_factor(n, s) @ stages.phase_factor(n, s)
        err = max(err, max_entry_distance(mn, p))
    report.add_check("stage_factorization", err, tol)

    err = 0.0
    for s in range(n):
        chain = circ.gate_unitary(circ.Hadamard(s), n)
        err = max(err, max_entry_distance(stages.hadamard_factor(n, s), chain))
    report.add_check("hadamard_tensor_form", err, tol)

    err = 0.0
    for s in range(n):
        prod = np.eye(1 << n, dtype=np.complex128)
        for t in range(s + 1, n):
            prod = prod @ stages.controlled_phase_matrix(n, s, t, t - s + 1)
        err = max(err, max_entry_distance(prod, stages.phase_factor(n, s)))
    report.add_check("phase_factor_product", err, tol)

    err = 0.0
    for s in range(n):
        d = stages.decompose_stage(stages.stage_matrix(n, s), n, s, tol=tol)
        err = max(
            err, d.residual_factorization, d.residual_orthogonal, d.residual_diagonal
        )
    report.add_check("phase_extraction", err, tol)

    matrix_route = stages.transform_from_stages(n)
    report.add_check(
        "stages_vs_direct_dft",
        max_entry_distance(matrix_route, fourier.dft_matrix(n)),
        tol,
    )

    qft = circ.synth_qft(n)
    gate_route = circ.circuit_to_unitary(qft)
    report.add_check(
        "circuit_vs_matrix_route", max_entry_distance(gate_route, matrix_route), tol
    )

    x = _seeded_unit_vector(n, seed)
    simulated = simulator.run_circuit(simulator.prepare_state(x), qft)
    report.add_check(
        "simulator_vs_classical_fft",
        float(np.max(np.abs(simulated.amplitudes - fourier.fft_classical(x)))),
        tol,
    )

    counts = circ.gate_counts(qft)
    report.metrics["max_entry_error"] = f"{max(e for _, e, _ in report.checks):.3e}"
    report.metrics["gate_counts"] = (
        f"hadamards={counts.hadamards} controlled_phases={counts.controlled_phases} "
        f"swaps={counts.swaps} total={counts.total}"
    )
    report.metrics["elapsed_seconds"] = f"{time.perf_counter() - t0:.3f}"
    sys.stdout.write(report.render())
    return 0 if report.passed else 1


def cmd_compare_approx(args) -> int:
    n = args.n
    if not 1 <= n <= VERIFY_MAX_QUBITS:
        raise ValueError(f"n={n} outside 1..{VERIFY_MAX_QUBITS}")
    exact = circ.circuit_to_unitary(circ.synth_qft(n))
    print(f"approximation sweep: n={n}")
    print("m controlled_phases max_phase_deviation bound within_bound")
    all_ok = True
    for m in range(1, n + 1):
        approx = circ.circuit_to_unitary(circ.synth_aqft(n, m))
        deviation = float(np.max(np.abs(np.angle(approx * exact.conj()))))
        bound = fourier.phase_error_bound(n, m)
        ok = deviation <= bound + 1e-12
        all_ok = all_ok and ok
        cp = circ.gate_counts(circ.synth_aqft(n, m)).controlled_phases
        print(f"{m} {cp} {deviation:.6e} {bound:.6e} {'yes' if ok else 'NO'}")
    print("minimum level for target phase error:")
    for eps in (3.0, 1.0, 0.3, 0.1, 0.03, 0.01):
        print(f"eps_max={eps}: m={fourier.min_m_for_error(eps, n)}")
    return 0 if all_ok else 1


def cmd_decompose(args) -> int:
    d = stages.decompose_stage(stages.stage_matrix(args.n, args.s), args.n, args.s)
    parts = [
        f"stage: n={args.n} s={args.s}",
        "stage matrix:",
        stages.format_matrix_grid(d.stage),
        "orthogonal factor:",
        stages.format_matrix_grid(d.orthogonal_factor),
        "diagonal factor:",
        stages.format_matrix_grid(d.diagonal_factor),
        "column phases:",
        " ".join(f"{z.real:.17g}{z.imag:+.17g}i" for z in d.column_phases) + "\n",
        f"residual factorization: {d.residual_factorization:.3e}",
        f"residual orthogonal: {d.residual_orthogonal:.3e}",
        f"residual diagonal: {d.residual_diagonal:.3e}",
    ]
    _write_or_print("\n".join(parts) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qftsynth",
        description="Synthesize, simulate, and verify QFT circuits derived "
        "from the radix-2 FFT factorization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize a QFT/AQFT circuit to circuit text")
    p.add_argument("--n", type=int, required=True, help="qubit count")
    p.add_argument("--m", type=int, help="approximation level (default: exact)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("fft", help="classical FFT of a vector file")
    p.add_argument("--in", dest="infile", required=True, help="input vector file")
    p.add_argument("--m", type=int, help="approximation level (default: exact)")
    p.set_defaults(func=cmd_fft)

    p = sub.add_parser("simulate", help="run a circuit file on a vector file")
    p.add_argument("--in", dest="infile", required=True, help="input vector file")
    p.add_argument("--circuit", required=True, help="circuit text file")
    p.add_argument(
        "--normalize", action="store_true", help="rescale the input to unit norm"
    )
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run the factorization checks for one n")
    p.add_argument("--n", type=int, required=True, help="qubit count (1..8)")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "compare-approx", help="deviation vs bound for every approximation level"
    )
    p.add_argument("--n", type=int, required=True, help="qubit count (1..8)")
    p.set_defaults(func=cmd_compare_approx)

    p = sub.add_parser("decompose", help="dump one stage's matrices and phases")
    p.add_argument("--n", type=int, required=True, help="qubit count")
    p.add_argument("--s", type=int, required=True, help="stage index (0..n-1)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_decompose)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
