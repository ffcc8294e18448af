"""Noiseless qudit dense coding over the shared state ``|Psi_0^0>``.

Message ``0`` is ``(c, p) = (0, 0)``; message ``m >= 1`` is
``(ceil(m / 2), (m - 1) % 2)``, giving an alphabet of ``2d - 1`` codewords.
Alice applies a signed permutation to her qudit and Bob decodes with the
beam-splitter analyser from :mod:`qudit_bell.lelm`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bell_basis import BellState, _check_even, bell_state, round_robin_schedule
from .lelm import (
    Signature,
    device_unitary,
    detection_distribution,
    distinguishable,
    signature_support,
)

GLOBAL_PHASE_TOL = 1e-10


class UndecodableSignatureError(LookupError):
    """Signature lies outside the support of every codeword."""


@dataclass(frozen=True)
class TranscriptEntry:
    message_sent: int
    signature_observed: Signature
    message_decoded: int

    def to_json(self) -> dict:
        return {
            "sent": self.message_sent,
            "signature": list(self.signature_observed),
            "decoded": self.message_decoded,
        }


def message_label(d: int, message: int) -> tuple[int, int]:
    _check_even(d)
    if not 0 <= message <= 2 * d - 2:
        raise ValueError(f"message {message} outside 0..{2 * d - 2}")
    if message == 0:
        return 0, 0
    return (message + 1) // 2, (message - 1) % 2


def label_message(c: int, p: int) -> int:
    return 0 if c == 0 else 2 * c - 1 + p


def _apply_local(u: np.ndarray, state: BellState) -> np.ndarray:
    return (u @ state.coefficients).ravel()


def alice_unitary(d: int, c: int, p: int, mode: str = "dft") -> np.ndarray:
    """Signed permutation taking ``|Psi_0^0>`` to ``|Psi_c^p>`` when applied on the left.

    For ``c != 0`` the pairs of class ``c`` are swapped and, for ``p = 1``,
    ``|s> -> -|t>`` on each pair. For ``c = 0, p = 1`` the odd basis states
    get a ``-1``. The result is checked against the target state and any
    pair whose sign lands on the wrong side is flipped.
    """
    _check_even(d)
    if p not in (0, 1):
        raise ValueError(f"p must be 0 or 1, got {p}")
    if not 0 <= c < d:
        raise ValueError(f"correlation class c={c} out of range for d={d}")

    u = np.zeros((d, d))
    if c == 0:
        u[np.arange(d), np.arange(d)] = [(-1.0) ** (k % 2 * p) for k in range(d)]
        pairs = [(k, k) for k in range(d)]
    else:
        pairs = [tuple(sorted(pair)) for pair in round_robin_schedule(d).pairs(c)]
        for s, t in pairs:
            u[t, s] = -1.0 if p else 1.0
            u[s, t] = 1.0

    start = bell_state(d, 0, 0, mode)
    target = bell_state(d, c, p, mode)
    got = _apply_local(u, start).reshape(d, d)
    want = target.coefficients
    ref = complex(np.vdot(want.ravel(), got.ravel()))
    ref /= abs(ref)
    for s, t in pairs:
        # column s of U feeds |t>_L|s>_R
        if abs(got[t, s] - ref * want[t, s]) > GLOBAL_PHASE_TOL:
            u[:, s] *= -1
    final = _apply_local(u, start)
    if abs(abs(np.vdot(target.amplitudes, final)) - 1) > GLOBAL_PHASE_TOL:
        raise AssertionError(f"no signed permutation found for (c, p)=({c}, {p})")
    return u


def encode(d: int, message: int, mode: str = "dft") -> BellState:
    c, p = message_label(d, message)
    u = alice_unitary(d, c, p, mode)
    return BellState(d, c, p, _apply_local(u, bell_state(d, 0, 0, mode)), mode)


@lru_cache(maxsize=None)
def _decoder(d: int, statistics: str, mode: str) -> dict[Signature, int]:
    device = device_unitary(d)
    states = [encode(d, m, mode) for m in range(2 * d - 1)]
    ok, certificate = distinguishable(states, device, statistics)
    if not ok:
        raise AssertionError(f"codewords for d={d} are not distinguishable with {statistics}s")
    return certificate


def decode(signature: Signature, d: int, statistics: str = "boson", mode: str = "dft") -> int:
    sig = tuple(sorted(int(x) for x in signature))
    try:
        return _decoder(d, statistics, mode)[sig]
    except KeyError:
        raise UndecodableSignatureError(f"signature {sig} is not produced by any codeword") from None


def codeword_supports(d: int, statistics: str = "boson", mode: str = "dft") -> dict[int, frozenset[Signature]]:
    device = device_unitary(d)
    return {
        m: signature_support(encode(d, m, mode), device, statistics)
        for m in range(2 * d - 1)
    }


def roundtrip(
    d: int,
    messages: list[int],
    statistics: str = "boson",
    rng_seed: int | None = 0,
    mode: str = "dft",
) -> list[TranscriptEntry]:
    """Encode each message, sample one detection signature, decode it."""
    rng = np.random.default_rng(rng_seed)
    device = device_unitary(d)
    cache: dict[int, tuple[list[Signature], np.ndarray]] = {}
    transcript = []
    for m in messages:
        if m not in cache:
            dist = detection_distribution(encode(d, m, mode), device, statistics)
            sigs = sorted(dist.entries)
            probs = np.array([dist.entries[s] for s in sigs])
            cache[m] = (sigs, probs / probs.sum())
        sigs, probs = cache[m]
        sig = sigs[rng.choice(len(sigs), p=probs)]
        transcript.append(TranscriptEntry(m, sig, decode(sig, d, statistics, mode)))
    return transcript
