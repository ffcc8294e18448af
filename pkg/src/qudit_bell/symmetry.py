"""Exchange (SWAP) symmetry, entanglement checks and the odd-d obstruction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bell_basis import BellState, full_basis
from .linalg import DEFAULT_TOL, InvalidDimensionError

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
NEITHER = "neither"


@dataclass(frozen=True)
class SymmetryClass:
    label: str
    residual: float

    @property
    def eigenvalue(self) -> int | None:
        return {SYMMETRIC: 1, ANTISYMMETRIC: -1}.get(self.label)


@dataclass(frozen=True)
class ObstructionReport:
    d: int
    sym_dim: int
    needed: int
    skew_det_samples: list[tuple[int, float]]

    @property
    def holds(self) -> bool:
        return self.sym_dim < self.needed and all(
            det < 1e-8 for _, det in self.skew_det_samples
        )


def _amplitudes(state: BellState | np.ndarray) -> tuple[np.ndarray, int]:
    if isinstance(state, BellState):
        return state.amplitudes, state.d
    amps = np.asarray(state, dtype=np.complex128).ravel()
    d = int(round(np.sqrt(amps.size)))
    if d * d != amps.size:
        raise ValueError(f"amplitude vector of length {amps.size} is not d**2")
    return amps, d


def swap_apply(state: BellState | np.ndarray) -> np.ndarray:
    """Exchange left and right internal states: ``out[i, j] = in[j, i]``."""
    amps, d = _amplitudes(state)
    return amps.reshape(d, d).T.ravel().copy()


def classify_symmetry(state: BellState | np.ndarray, tol: float = DEFAULT_TOL) -> SymmetryClass:
    amps, _ = _amplitudes(state)
    swapped = swap_apply(amps)
    r_sym = float(np.linalg.norm(swapped - amps))
    r_anti = float(np.linalg.norm(swapped + amps))
    if r_sym < tol:
        return SymmetryClass(SYMMETRIC, r_sym)
    if r_anti < tol:
        return SymmetryClass(ANTISYMMETRIC, r_anti)
    return SymmetryClass(NEITHER, min(r_sym, r_anti))


def symmetry_counts(d: int) -> tuple[int, int]:
    """Number of symmetric and antisymmetric states in the even-d basis."""
    if d < 2 or d % 2:
        raise InvalidDimensionError(f"symmetry counts are defined for even d only, got {d}")
    return d * (d + 1) // 2, d * (d - 1) // 2


def count_by_classification(d: int, mode: str = "dft", tol: float = DEFAULT_TOL) -> tuple[int, int]:
    """Count sectors by classifying every constructed basis state."""
    labels = [classify_symmetry(s, tol).label for s in full_basis(d, mode)]
    if NEITHER in labels:
        raise AssertionError(f"basis state for d={d} is not a SWAP eigenstate")
    return labels.count(SYMMETRIC), labels.count(ANTISYMMETRIC)


def reduced_density(state: BellState | np.ndarray, subsystem: str = "left") -> np.ndarray:
    """Partial trace of ``|psi><psi|`` keeping ``subsystem``."""
    amps, d = _amplitudes(state)
    chi = amps.reshape(d, d)
    if subsystem == "left":
        return chi @ chi.conj().T
    if subsystem == "right":
        return chi.T @ chi.conj()
    raise ValueError(f"subsystem must be 'left' or 'right', got {subsystem!r}")


def entanglement_residual(state: BellState | np.ndarray) -> float:
    """Max entrywise deviation of both reduced density matrices from ``I/d``."""
    amps, d = _amplitudes(state)
    target = np.eye(d) / d
    return max(
        float(np.max(np.abs(reduced_density(amps, side) - target)))
        for side in ("left", "right")
    )


def odd_d_obstruction(d: int, n_samples: int = 100, rng_seed: int = 0) -> ObstructionReport:
    """Numerical illustration that odd d admits no symmetrized Bell basis.

    Symmetric coefficient matrices span only ``d(d+1)/2 < d**2`` dimensions,
    and every antisymmetric one is singular (so never unitary). The second
    fact is sampled on seeded random real skew-symmetric matrices.
    """
    if d < 3 or d % 2 == 0:
        raise InvalidDimensionError(f"obstruction applies to odd d >= 3, got {d}")
    samples = []
    for i in range(n_samples):
        seed = rng_seed + i
        a = np.random.default_rng(seed).uniform(-1.0, 1.0, size=(d, d))
        skew = np.triu(a, 1) - np.triu(a, 1).T
        samples.append((seed, float(abs(np.linalg.det(skew)))))
    return ObstructionReport(d, d * (d + 1) // 2, d * d, samples)
