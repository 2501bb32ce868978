import numpy as np
import pytest

from helpers import HADAMARD, INV_SQRT2, random_unitary
from qftsynth import linalg
from qftsynth.stages import hadamard_factor, phase_factor, stage_matrix

I2 = np.eye(2, dtype=np.complex128)
I4 = np.eye(4, dtype=np.complex128)

# stage 0 for two qubits, every entry evaluated by hand from the four-case
# rule (root of unity i, twiddle exponents 0, 2, 1, 3 for rows 0..3)
STAGE_2Q_0 = INV_SQRT2 * np.array(
    [
        [1, 1, 0, 0],
        [1, -1, 0, 0],
        [0, 0, 1, 1j],
        [0, 0, 1, -1j],
    ],
    dtype=np.complex128,
)


def test_matmul_identity():
    assert np.array_equal(linalg.matmul(I4, I4), I4)


def test_matmul_hadamard_involution():
    assert linalg.max_entry_distance(linalg.matmul(HADAMARD, HADAMARD), I2) < 1e-15


def test_matmul_rebuilds_two_qubit_stage():
    product = linalg.matmul(hadamard_factor(2, 0), phase_factor(2, 0))
    assert linalg.max_entry_distance(product, STAGE_2Q_0) < 1e-12
    assert linalg.max_entry_distance(stage_matrix(2, 0), STAGE_2Q_0) < 1e-12


def test_matmul_dimension_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        linalg.matmul(I2, I4)


def test_matvec_identity():
    assert np.array_equal(linalg.matvec(I2, [1, 0]), np.array([1, 0], complex))


def test_matvec_hadamard_column():
    np.testing.assert_allclose(
        linalg.matvec(HADAMARD, [1, 0]), [INV_SQRT2, INV_SQRT2], atol=1e-15
    )


def test_matvec_single_qubit_stage():
    # one-qubit stage matrix is H; second column read off by hand
    np.testing.assert_allclose(
        linalg.matvec(stage_matrix(1, 0), [0, 1]), [INV_SQRT2, -INV_SQRT2], atol=1e-15
    )


def test_matvec_dimension_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        linalg.matvec(I4, [1, 0])


def test_kron_identities():
    assert np.array_equal(linalg.kron(I2, I2), I4)


def test_kron_right_identity_half_index_rule():
    # (A x I2)[j, k] = A[j//2, k//2] when j and k share parity, else 0
    rng = np.random.default_rng(7)
    for dim in (2, 4, 8):
        a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        b = linalg.kron(a, I2)
        for j in range(2 * dim):
            for k in range(2 * dim):
                expected = a[j // 2, k // 2] if (j - k) % 2 == 0 else 0.0
                assert b[j, k] == expected


def test_kron_hadamard_right_identity_entries():
    b = linalg.kron(HADAMARD, I2)
    for j in range(4):
        for k in range(4):
            expected = HADAMARD[j // 2, k // 2] if (j - k) % 2 == 0 else 0.0
            assert b[j, k] == expected


def test_kron_left_identity_is_stage_orthogonal_factor():
    assert np.array_equal(linalg.kron(I2, HADAMARD), hadamard_factor(2, 0))


def test_kron_result_dimension_guard():
    big = np.eye(128, dtype=np.complex128)
    with pytest.raises(ValueError, match="dense limit"):
        linalg.kron(big, np.eye(64, dtype=np.complex128))


def test_is_unitary_basics():
    assert linalg.is_unitary(np.eye(8))
    assert linalg.is_unitary(HADAMARD)
    assert not linalg.is_unitary(np.array([[1, 1], [0, 1]], dtype=complex))


@pytest.mark.parametrize("n", range(1, 7))
def test_is_unitary_every_stage(n):
    for s in range(n):
        assert linalg.is_unitary(stage_matrix(n, s), tol=1e-12)


def test_is_unitary_closed_under_product():
    rng = np.random.default_rng(11)
    tol = linalg.DEFAULT_TOL
    for dim in (2, 8, 32):
        a = random_unitary(dim, rng)
        b = random_unitary(dim, rng)
        assert linalg.is_unitary(a, tol)
        assert linalg.is_unitary(b, tol)
        assert linalg.is_unitary(linalg.matmul(a, b), 10 * tol)


def test_matmul_associativity_on_unitaries():
    rng = np.random.default_rng(13)
    for dim in (4, 16, 64):
        a, b, c = (random_unitary(dim, rng) for _ in range(3))
        left = linalg.matmul(linalg.matmul(a, b), c)
        right = linalg.matmul(a, linalg.matmul(b, c))
        assert linalg.max_entry_distance(left, right) < 1e-12


def test_max_entry_distance_identical():
    assert linalg.max_entry_distance(I2, I2) == 0.0


def test_max_entry_distance_identity_vs_hadamard():
    # four entry distances by hand; |1 - (-1/sqrt(2))| dominates
    assert linalg.max_entry_distance(I2, HADAMARD) == pytest.approx(1 + INV_SQRT2)


def test_max_entry_distance_dimension_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        linalg.max_entry_distance(I2, I4)


def test_tolerance_must_be_positive():
    with pytest.raises(ValueError):
        linalg.is_unitary(I2, tol=0.0)


def test_non_finite_inputs_rejected():
    with pytest.raises(ValueError, match="non-finite"):
        linalg.as_vector([1.0, np.nan])
    with pytest.raises(ValueError, match="non-finite"):
        linalg.matmul(np.array([[np.inf, 0], [0, 1]]), I2)


def test_shape_validation():
    with pytest.raises(ValueError):
        linalg.as_matrix(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        linalg.as_vector(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        linalg.as_vector(np.array([]))


def test_inputs_are_not_aliased():
    a = np.eye(2, dtype=np.complex128)
    out = linalg.as_matrix(a)
    out[0, 0] = 5.0
    assert a[0, 0] == 1.0


def test_adjoint_of_unitary_is_inverse():
    rng = np.random.default_rng(17)
    a = random_unitary(8, rng)
    assert linalg.max_entry_distance(linalg.matmul(a, linalg.adjoint(a)), np.eye(8)) < 1e-12
