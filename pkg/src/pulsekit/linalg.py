"""Dense complex linear algebra over m-qubit operator spaces.

Operators are plain ``numpy.ndarray`` matrices of shape (2**m, 2**m) with
dtype complex128; states are 1-D arrays of length 2**m.  Everything here is
a pure function over immutable inputs.
"""

from __future__ import annotations

import math

import numpy as np

MAX_QUBITS = 10

HERMITICITY_TOL = 1e-12


def num_qubits(dim: int) -> int:
    """Qubit count for an operator/state dimension; rejects non-power-of-two
    or dims beyond the desk-scale cap."""
    m = dim.bit_length() - 1
    if dim <= 0 or (1 << m) != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    if m > MAX_QUBITS:
        raise ValueError(f"dimension {dim} exceeds the {MAX_QUBITS}-qubit cap")
    return m


def as_operator(a: np.ndarray) -> np.ndarray:
    """Validate and coerce a square operator to complex128."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    num_qubits(a.shape[0])
    return a


def dag(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor (Kronecker) product."""
    return np.kron(a, b)


def frobenius_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Frobenius inner product Tr(a^dag b)."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def fro_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def is_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    return bool(np.linalg.norm(a - a.conj().T) <= tol * max(1.0, np.linalg.norm(a)))


def is_unitary(a: np.ndarray, tol: float = 1e-10) -> bool:
    d = a.shape[0]
    return bool(np.linalg.norm(a.conj().T @ a - np.eye(d)) <= tol)


def expm_hermitian(h: np.ndarray, t: float) -> np.ndarray:
    """exp(-i*t*h) for Hermitian h, via eigendecomposition.

    Diagonalizing keeps the result unitary to machine precision, which
    matters more than speed at dims <= 1024.
    """
    h = as_operator(h)
    if not is_hermitian(h):
        raise ValueError("expm_hermitian requires a Hermitian matrix")
    w, v = np.linalg.eigh(h)
    phases = np.exp(-1j * t * w)
    return (v * phases) @ v.conj().T


def expm_hermitian_batch(hs: np.ndarray, t: float) -> np.ndarray:
    """Batched exp(-i*t*h) over a stack of Hermitian matrices (n, d, d)."""
    w, v = np.linalg.eigh(hs)
    phases = np.exp(-1j * t * w)
    return np.einsum("nij,nj,nkj->nik", v, phases, v.conj())


def basis_state(m: int, bits: str | int) -> np.ndarray:
    """Computational basis state |b_0 b_1 ... b_{m-1}> with qubit 0 leftmost
    (most significant)."""
    if isinstance(bits, str):
        if len(bits) != m or any(c not in "01" for c in bits):
            raise ValueError(f"bad basis string {bits!r} for {m} qubits")
        index = int(bits, 2)
    else:
        index = int(bits)
    dim = 1 << m
    num_qubits(dim)
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for {m} qubits")
    psi = np.zeros(dim, dtype=complex)
    psi[index] = 1.0
    return psi


def normalize(psi: np.ndarray) -> np.ndarray:
    """Unit-normalize a state vector."""
    psi = np.asarray(psi, dtype=complex)
    n = np.linalg.norm(psi)
    if n == 0:
        raise ValueError("cannot normalize the zero vector")
    return psi / n


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """GUE-style random Hermitian matrix with entry scale ``scale``."""
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * (a + a.conj().T) / 2.0


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random unitary from the QR of a Ginibre matrix."""
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(a)
    # fix the phase ambiguity of QR so the distribution is well defined
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    return normalize(rng.normal(size=dim) + 1j * rng.normal(size=dim))


def decompose_single_qubit(u: np.ndarray) -> tuple[float, np.ndarray, np.ndarray, np.ndarray]:
    """Factor a 2x2 unitary as u = exp(-i*alpha) * A X B X C with A B C = I.

    Used to build controlled versions of arbitrary one-qubit gates: the
    returned A, B, C are unitary, and because A B C = I the controlled
    circuit acts as the identity when the control is |0>.

    Construction: extract the global phase, then split Z-Y-Z Euler angles
    (beta, gamma, delta) across the factors as
    A = Rz(beta) Ry(gamma/2), B = Ry(-gamma/2) Rz(-(delta+beta)/2),
    C = Rz((delta-beta)/2).
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got {u.shape}")
    if not is_unitary(u, tol=1e-10):
        raise ValueError("decompose_single_qubit requires a unitary matrix")

    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    phi = 0.5 * math.atan2(det.imag, det.real)
    v = u * np.exp(-1j * phi)  # det(v) = 1

    # v = [[a, b], [-conj(b), conj(a)]] in SU(2)
    a, b = v[0, 0], v[0, 1]
    gamma = 2.0 * math.atan2(abs(b), abs(a))
    if abs(b) < 1e-12:
        beta = -2.0 * np.angle(a) if abs(a) > 0 else 0.0
        delta = 0.0
    elif abs(a) < 1e-12:
        beta = -2.0 * np.angle(-b)
        delta = 0.0
    else:
        s = -np.angle(a)          # (beta + delta) / 2
        d = -np.angle(-b)         # (beta - delta) / 2
        beta = s + d
        delta = s - d

    def rz(theta: float) -> np.ndarray:
        return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]])

    def ry(theta: float) -> np.ndarray:
        c, sn = math.cos(theta / 2), math.sin(theta / 2)
        return np.array([[c, -sn], [sn, c]], dtype=complex)

    a_mat = rz(beta) @ ry(gamma / 2)
    b_mat = ry(-gamma / 2) @ rz(-(delta + beta) / 2)
    c_mat = rz((delta - beta) / 2)
    alpha = -phi
    return alpha, a_mat, b_mat, c_mat
