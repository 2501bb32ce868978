"""Shared test utilities: random inputs and independent slow oracles."""

import numpy as np

INV_SQRT2 = np.sqrt(0.5)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) * INV_SQRT2


def random_complex_vector(n, rng):
    size = 1 << n
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def random_unit_vector(n, rng):
    v = random_complex_vector(n, rng)
    return v / np.linalg.norm(v)


def random_unitary(dim, rng):
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, _ = np.linalg.qr(z)
    return q


def hadamard_chain(n):
    """H tensored n times."""
    h = np.array([[1.0]], dtype=np.complex128)
    for _ in range(n):
        h = np.kron(h, HADAMARD)
    return h


def gates_commute(g1, g2, n):
    """True iff the two gates' dense embeddings commute on n qubits."""
    from qftsynth.circuit import gate_unitary

    u1 = gate_unitary(g1, n)
    u2 = gate_unitary(g2, n)
    return np.max(np.abs(u1 @ u2 - u2 @ u1)) < 1e-12


def eliminated_exponents(n, m):
    """Integer exponents of the phase terms the level-m transform drops.

    E[c, a] = sum of a_j * c_k * 2**(j+k) over bit pairs with j+k < n-m;
    the exact and approximate operator entries differ by exactly
    exp(2j*pi*E/2**n).
    """
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    e = np.zeros((size, size), dtype=np.int64)
    for j in range(n):
        for k in range(n):
            if j + k < n - m:
                e += np.outer((idx >> k) & 1, (idx >> j) & 1) << (j + k)
    return e
