#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the two hot paths on every importable backend:
  * gate loop: applying a full synthesized QFT circuit to a random state;
  * butterfly loop: the staged classical FFT of a random vector.
Results of the backends are compared entrywise as a sanity check.

Run from the repository root:
    python3 benchmarks/bench_kernels.py --sizes 14 16 18 --repeats 5
"""

import argparse
import time

import numpy as np

from qftsynth._kernels import available_backends
from qftsynth.circuit import ControlledPhase, Hadamard, synth_qft
from qftsynth.fourier import bit_reverse_indices


def apply_circuit(kernels, amps, gates):
    for g in gates:
        if isinstance(g, Hadamard):
            kernels.hadamard(amps, g.target)
        elif isinstance(g, ControlledPhase):
            kernels.controlled_phase(amps, g.control, g.target, g.u)
        else:
            kernels.swap(amps, g.a, g.b)
    return amps


def butterfly_fft(kernels, amps, n):
    src = amps
    dst = np.empty_like(amps)
    for s in range(n - 1, -1, -1):
        kernels.butterfly_stage(dst, src, s, n - 1)
        src, dst = dst, src
    return src[bit_reverse_indices(n)]


def best_of(repeats, fn):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[12, 14, 16, 18])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = available_backends()
    names = sorted(backends)
    print(f"backends: {', '.join(names)}")
    rng = np.random.default_rng(args.seed)

    header = f"{'task':<10} {'n':>3} " + " ".join(f"{b:>12}" for b in names)
    if len(names) == 2:
        header += f" {'speedup':>9} {'max diff':>10}"
    print(header)

    for n in args.sizes:
        x = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
        x /= np.linalg.norm(x)
        gates = synth_qft(n).gates

        for task, runner in (
            ("qft gates", lambda mod: apply_circuit(mod, x.copy(), gates)),
            ("fft", lambda mod: butterfly_fft(mod, x.copy(), n)),
        ):
            times, outputs = {}, {}
            for name in names:
                times[name], outputs[name] = best_of(
                    args.repeats, lambda mod=backends[name]: runner(mod)
                )
            row = f"{task:<10} {n:>3} " + " ".join(f"{times[b]*1e3:>10.2f}ms" for b in names)
            if len(names) == 2:
                ratio = times["python"] / times["cython"]
                diff = float(np.max(np.abs(outputs[names[0]] - outputs[names[1]])))
                row += f" {ratio:>8.1f}x {diff:>10.2e}"
            print(row)


if __name__ == "__main__":
    main()
