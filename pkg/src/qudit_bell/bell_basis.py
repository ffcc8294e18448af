"""Exchange-symmetrized Bell bases for a pair of qudits of even dimension.

A state is labelled by a correlation class ``c`` (which left/right basis
states are paired) and a phase class ``p`` (relative phases between terms).
Class ``c = 0`` pairs every ``|k>`` with itself; classes ``1..d-1`` come from
the rounds of a round-robin tournament on ``d`` players, so each two-particle
basis state ``|s>|t>`` is used by exactly one class and always together with
its mirror ``|t>|s>``.

Amplitudes are stored densely in row-major order, index ``left * d + right``.

Gauge conventions
-----------------
Within a round the pair index ``j`` follows generation order. The member of a
pair that receives the ``+`` sign (``s``) is the smaller label; the mirrored
term carries ``(-1)**p``. This reproduces the d = 6 states usually quoted for
this construction, e.g. ``|Psi_2^5>`` has ``+e^{4 pi i/3}|1>|3>`` even though
the tournament lists the match as ``(3, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .linalg import InvalidDimensionError, dft_matrix, is_power_of_two, walsh_int

PHASE_MODES = ("dft", "walsh")


class UnsupportedModeError(ValueError):
    """Raised for an unknown phase mode or Walsh phases with d/2 not a power of two."""


def _check_even(d: int) -> None:
    if d < 2 or d % 2:
        raise InvalidDimensionError(
            f"no symmetrized basis exists for odd d (got d={d}); d must be even and >= 2"
        )


def _check_mode(d: int, mode: str) -> None:
    if mode not in PHASE_MODES:
        raise UnsupportedModeError(f"unknown phase mode {mode!r}")
    if mode == "walsh" and not is_power_of_two(d // 2):
        raise UnsupportedModeError(f"walsh phases need d/2 to be a power of two, got d={d}")


@dataclass(frozen=True)
class PairingSchedule:
    """``d - 1`` perfect matchings of ``{0..d-1}`` covering every pair once."""

    d: int
    rounds: tuple[tuple[tuple[int, int], ...], ...]

    def pairs(self, c: int) -> tuple[tuple[int, int], ...]:
        """Pairs of correlation class ``c >= 1`` (round ``c - 1``)."""
        return self.rounds[c - 1]

    def validate(self) -> None:
        d = self.d
        if len(self.rounds) != d - 1:
            raise ValueError(f"expected {d - 1} rounds, got {len(self.rounds)}")
        seen: set[frozenset[int]] = set()
        for r, rnd in enumerate(self.rounds):
            players = sorted(x for pair in rnd for x in pair)
            if players != list(range(d)):
                raise ValueError(f"round {r + 1} is not a perfect matching: {rnd}")
            for s, t in rnd:
                key = frozenset((s, t))
                if key in seen:
                    raise ValueError(f"pair {(s, t)} repeated")
                seen.add(key)


@lru_cache(maxsize=None)
def round_robin_schedule(d: int) -> PairingSchedule:
    """Circle-method schedule with player 0 fixed.

    In round ``r`` (1-based) player 0 meets ``r`` and the remaining players
    ``1..d-1`` sit on a circle, pairing ``r + k`` with ``r - k`` (taken
    cyclically on ``1..d-1``) for ``k = 1..d/2 - 1``.
    """
    _check_even(d)
    n = d - 1

    def wrap(x: int) -> int:
        return (x - 1) % n + 1

    rounds = []
    for r in range(1, d):
        rnd = [(0, r)]
        rnd.extend((wrap(r + k), wrap(r - k)) for k in range(1, d // 2))
        rounds.append(tuple(rnd))
    return PairingSchedule(d, tuple(rounds))


@lru_cache(maxsize=None)
def _phase_table(d: int, mode: str) -> np.ndarray:
    half = d // 2
    if mode == "walsh":
        return walsh_int(half).astype(np.complex128)
    # exp(i * q * 4 pi j / d) == DFT(d/2)[j, q]
    return dft_matrix(half)


def phase_matrix(d: int, mode: str = "dft") -> np.ndarray:
    """(d/2) x (d/2) unit-modulus matrix whose column ``p // 2`` holds the phases."""
    _check_even(d)
    _check_mode(d, mode)
    return _phase_table(d, mode).copy()


def phase(j: int, p: int, d: int, mode: str = "dft") -> complex:
    """Phase factor of pair ``j`` in phase class ``p``."""
    _check_even(d)
    _check_mode(d, mode)
    if not 0 <= j < d // 2:
        raise ValueError(f"pair index j={j} out of range for d={d}")
    if not 0 <= p < d:
        raise ValueError(f"phase class p={p} out of range for d={d}")
    if mode == "dft":
        return complex(np.exp(1j * (p // 2) * 4 * np.pi * j / d))
    return complex(_phase_table(d, mode)[j, p // 2])


@dataclass(frozen=True, eq=False)
class BellState:
    """Two-qudit state with dense amplitudes indexed by ``left * d + right``.

    ``mode`` is ``"dft"`` or ``"walsh"`` for symmetrized states and
    ``"canonical"`` for the standard ``(n, m)`` basis, in which case ``c``
    holds ``m`` and ``p`` holds ``n``.
    """

    d: int
    c: int
    p: int
    amplitudes: np.ndarray = field(repr=False)
    mode: str = "dft"

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=np.complex128).copy()
        if amps.shape != (self.d * self.d,):
            raise ValueError(f"expected {self.d ** 2} amplitudes, got shape {amps.shape}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def coefficients(self) -> np.ndarray:
        """Amplitudes as a d x d matrix ``chi[left, right]``."""
        return self.amplitudes.reshape(self.d, self.d)

    @property
    def label(self) -> tuple[int, int]:
        return (self.c, self.p)

    def support(self, tol: float = 1e-12) -> frozenset[tuple[int, int]]:
        idx = np.flatnonzero(np.abs(self.amplitudes) > tol)
        return frozenset((int(i) // self.d, int(i) % self.d) for i in idx)

    def overlap(self, other: BellState | np.ndarray) -> complex:
        """``<self|other>``."""
        vec = other.amplitudes if isinstance(other, BellState) else np.asarray(other)
        return complex(np.vdot(self.amplitudes, vec))

    def __repr__(self) -> str:
        return f"BellState(d={self.d}, c={self.c}, p={self.p}, mode={self.mode!r})"


def bell_state(d: int, c: int, p: int, mode: str = "dft") -> BellState:
    """Symmetrized Bell state ``|Psi_c^p>``."""
    _check_even(d)
    _check_mode(d, mode)
    if not 0 <= c < d:
        raise ValueError(f"correlation class c={c} out of range for d={d}")
    if not 0 <= p < d:
        raise ValueError(f"phase class p={p} out of range for d={d}")

    phases = _phase_table(d, mode)[:, p // 2]
    sign = -1.0 if p % 2 else 1.0
    chi = np.zeros((d, d), dtype=np.complex128)
    if c == 0:
        for j in range(d // 2):
            chi[2 * j, 2 * j] = phases[j]
            chi[2 * j + 1, 2 * j + 1] = sign * phases[j]
    else:
        for j, pair in enumerate(round_robin_schedule(d).pairs(c)):
            s, t = sorted(pair)
            chi[s, t] = phases[j]
            chi[t, s] = sign * phases[j]
    return BellState(d, c, p, chi.ravel() / np.sqrt(d), mode)


def full_basis(d: int, mode: str = "dft") -> list[BellState]:
    """All ``d**2`` states ordered by ``(c, p)``."""
    return [bell_state(d, c, p, mode) for c in range(d) for p in range(d)]


def canonical_bell_state(d: int, n: int, m: int) -> BellState:
    """Standard qudit Bell state ``sum_k e^{2 pi i n k/d} |k>|k+m mod d> / sqrt(d)``."""
    if d < 2:
        raise InvalidDimensionError(f"d must be >= 2, got {d}")
    if not (0 <= n < d and 0 <= m < d):
        raise ValueError(f"(n, m)=({n}, {m}) out of range for d={d}")
    k = np.arange(d)
    chi = np.zeros((d, d), dtype=np.complex128)
    chi[k, (k + m) % d] = np.exp(2j * np.pi * ((n * k) % d) / d)
    return BellState(d, m, n, chi.ravel() / np.sqrt(d), "canonical")


def canonical_basis(d: int) -> list[BellState]:
    return [canonical_bell_state(d, n, m) for m in range(d) for n in range(d)]


def basis_matrix(states: list[BellState]) -> np.ndarray:
    """Stack amplitudes as rows."""
    return np.array([s.amplitudes for s in states])
