"""Small dense linear-algebra helpers shared by the rest of the package.

Matrices are plain ``numpy.ndarray`` objects. Phase matrices keep
unit-modulus entries (no ``1/sqrt(n)`` prefactor); state constructors apply
their own normalisation.
"""

from __future__ import annotations

import os

import numpy as np

DEFAULT_TOL = 1e-10


class InvalidDimensionError(ValueError):
    """Raised when a dimension argument is outside the supported range."""


def default_tolerance() -> float:
    """Tolerance used for equality checks, overridable via ``QBK_TOLERANCE``."""
    raw = os.environ.get("QBK_TOLERANCE")
    if raw is None:
        return DEFAULT_TOL
    tol = float(raw)
    if not tol > 0:
        raise ValueError(f"QBK_TOLERANCE must be positive, got {raw!r}")
    return tol


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def dft_matrix(n: int) -> np.ndarray:
    """n x n Fourier matrix with entries ``exp(2 pi i j p / n)``."""
    if n < 1:
        raise InvalidDimensionError(f"DFT size must be >= 1, got {n}")
    jp = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(2j * np.pi * jp / n)


def walsh_int(size: int) -> np.ndarray:
    """Sylvester-Hadamard matrix as exact integers, ``H(2m) = H(2) (x) H(m)``."""
    if not is_power_of_two(size):
        raise InvalidDimensionError(f"Walsh size must be a power of two, got {size}")
    h2 = np.array([[1, 1], [1, -1]], dtype=np.int64)
    h = np.ones((1, 1), dtype=np.int64)
    while h.shape[0] < size:
        h = np.kron(h2, h)
    return h


def walsh_matrix(size: int) -> np.ndarray:
    return walsh_int(size).astype(np.complex128)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(a), np.asarray(b))


def is_unitary(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) < tol)


def gram(vectors: np.ndarray) -> np.ndarray:
    """Gram matrix ``G[i, j] = <v_i|v_j>`` of the rows of ``vectors``."""
    v = np.asarray(vectors)
    return v.conj() @ v.T
