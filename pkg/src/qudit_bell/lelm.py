"""Linear-evolution / local-measurement Bell analyser for qudit pairs.

The device is a 50/50 beam splitter acting on the spatial (L/R) mode followed
by generalized polarizing beam splitters that route each internal state to
its own detector. Input mode ``side * d + k`` (L = 0, R = 1) and detector
``out_side * d + k`` (A = 0, B = 1). The beam splitter uses the real
convention ``L -> (A + B)/sqrt2``, ``R -> (A - B)/sqrt2``.

A detection signature is the unordered pair of detectors that fire. For two
particles in output amplitude tensor ``C[n1, n2]`` the signature
probabilities are

* bosons:   ``|C[n1,n2] + C[n2,n1]|**2 / (1 + [n1 == n2])``
* fermions: ``|C[n1,n2] - C[n2,n1]|**2`` (``n1 < n2`` only)

which sum to one for any unitary device.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .bell_basis import BellState, bell_state, canonical_basis, full_basis
from .linalg import DEFAULT_TOL, InvalidDimensionError, is_unitary

SUPPORT_TOL = 1e-12
STATISTICS = ("boson", "fermion")

Signature = tuple[int, int]


@dataclass(frozen=True, eq=False)
class ModeUnitary:
    d: int
    matrix: np.ndarray = field(repr=False)

    def side(self, detector: int) -> int:
        return detector // self.d


def device_unitary(d: int) -> ModeUnitary:
    """Beam splitter on the side index, identity on the internal index."""
    if d < 2 or d % 2:
        raise InvalidDimensionError(f"device is defined for even d, got {d}")
    bs = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2)
    m = np.kron(bs, np.eye(d)).astype(np.complex128)
    m.setflags(write=False)
    return ModeUnitary(d, m)


def _check_statistics(statistics: str) -> None:
    if statistics not in STATISTICS:
        raise ValueError(f"statistics must be one of {STATISTICS}, got {statistics!r}")


def output_tensor(state: BellState, device: ModeUnitary) -> np.ndarray:
    """``C[n1, n2] = sum chi[a, b] M[n1, a] M[n2, d + b]``."""
    if state.d != device.d:
        raise ValueError(f"state has d={state.d} but device has d={device.d}")
    d = device.d
    m_left = device.matrix[:, :d]
    m_right = device.matrix[:, d:]
    return m_left @ state.coefficients @ m_right.T


def signature_weights(state: BellState, device: ModeUnitary, statistics: str = "boson") -> np.ndarray:
    """Upper-triangular array ``W[n1, n2]`` (n1 <= n2) of signature probabilities."""
    _check_statistics(statistics)
    c = output_tensor(state, device)
    if statistics == "boson":
        w = np.abs(c + c.T) ** 2
        w[np.diag_indices_from(w)] /= 2
    else:
        w = np.abs(c - c.T) ** 2
    return np.triu(w)


@dataclass(frozen=True)
class SignatureDistribution:
    statistics: str
    entries: dict[Signature, float]

    @property
    def total(self) -> float:
        return float(sum(self.entries.values()))

    def support(self, tol: float = SUPPORT_TOL) -> frozenset[Signature]:
        return frozenset(sig for sig, prob in self.entries.items() if prob > tol)


def detection_distribution(
    state: BellState, device: ModeUnitary, statistics: str = "boson", tol: float = DEFAULT_TOL
) -> SignatureDistribution:
    """Probabilities of every signature with nonzero weight.

    Normalisation is checked, not imposed.
    """
    w = signature_weights(state, device, statistics)
    total = float(w.sum())
    norm = float(np.vdot(state.amplitudes, state.amplitudes).real)
    if abs(total - norm) > tol:
        raise AssertionError(f"signature probabilities sum to {total}, expected {norm}")
    n1, n2 = np.nonzero(w > SUPPORT_TOL)
    entries = {(int(a), int(b)): float(w[a, b]) for a, b in zip(n1, n2)}
    return SignatureDistribution(statistics, entries)


def signature_support(
    state: BellState, device: ModeUnitary, statistics: str = "boson"
) -> frozenset[Signature]:
    w = signature_weights(state, device, statistics)
    n1, n2 = np.nonzero(w > SUPPORT_TOL)
    return frozenset((int(a), int(b)) for a, b in zip(n1, n2))


def is_same_side(sig: Signature, d: int) -> bool:
    return sig[0] // d == sig[1] // d


def distinguishable(
    states: Sequence[BellState], device: ModeUnitary, statistics: str = "boson"
) -> tuple[bool, dict[Signature, int]]:
    """Whether the states have pairwise-disjoint supports.

    The certificate maps each signature to the index (in ``states``) of its
    owner; when supports overlap it holds the first owner seen.
    """
    certificate: dict[Signature, int] = {}
    ok = True
    for i, state in enumerate(states):
        for sig in signature_support(state, device, statistics):
            if sig in certificate:
                ok = False
            else:
                certificate[sig] = i
    return ok, dict(sorted(certificate.items()))


def codeword_set(d: int, mode: str = "dft") -> list[BellState]:
    """``(0, 0)`` plus ``(c, 0)`` and ``(c, 1)`` for every ``c != 0``."""
    states = [bell_state(d, 0, 0, mode)]
    for c in range(1, d):
        states.append(bell_state(d, c, 0, mode))
        states.append(bell_state(d, c, 1, mode))
    return states


def conflict_graph(supports: Sequence[frozenset[Signature]]) -> list[set[int]]:
    """Adjacency lists: an edge joins states whose supports intersect."""
    n = len(supports)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if supports[i] & supports[j]:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def _clique_cover_bound(candidates: list[int], adj: list[set[int]]) -> int:
    """Size of a greedy clique cover, an upper bound on any independent set."""
    cliques: list[list[int]] = []
    for v in candidates:
        for clique in cliques:
            if all(u in adj[v] for u in clique):
                clique.append(v)
                break
        else:
            cliques.append([v])
    return len(cliques)


def _greedy_independent_set(n: int, adj: list[set[int]]) -> list[int]:
    chosen: list[int] = []
    blocked: set[int] = set()
    for v in sorted(range(n), key=lambda v: (len(adj[v]), v)):
        if v not in blocked:
            chosen.append(v)
            blocked |= adj[v] | {v}
    return sorted(chosen)


def maximum_independent_set(
    adj: list[set[int]], budget: int | None = None
) -> tuple[list[int], bool, int]:
    """Exact maximum independent set by branch and bound.

    Vertices are branched in index order, include before exclude, so the
    returned set is the lexicographically smallest of maximum size. A greedy
    solution seeds the bound; a greedy clique cover prunes. With ``budget``
    set, the search stops after that many nodes and returns the best set
    found with ``optimal=False``.

    Returns ``(vertices, optimal, nodes_visited)``.
    """
    n = len(adj)
    greedy = _greedy_independent_set(n, adj)
    target = len(greedy)
    best: list[int] | None = None
    nodes = 0
    exhausted = False

    def search(chosen: list[int], candidates: list[int]) -> None:
        nonlocal best, target, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if budget is not None and nodes > budget:
            exhausted = True
            return
        if not candidates:
            size = len(chosen)
            if size > target or (best is None and size == target):
                best = list(chosen)
                target = size
            return
        # before any DFS solution exists, sets tying the greedy size still count
        needed = target if best is None else target + 1
        if len(chosen) + _clique_cover_bound(candidates, adj) < needed:
            return
        v, rest = candidates[0], candidates[1:]
        search(chosen + [v], [u for u in rest if u not in adj[v]])
        search(chosen, rest)

    search([], list(range(n)))
    if best is None:
        best = greedy
    return best, not exhausted, nodes


@dataclass(frozen=True)
class DistinguishabilityResult:
    states: list[tuple[int, int]]
    size: int
    conflict_graph_edges: int
    certificate: dict[Signature, tuple[int, int]]
    optimal: bool = True
    nodes_visited: int = 0


def max_distinguishable_set(
    d: int,
    device: ModeUnitary | None = None,
    statistics: str = "boson",
    search_budget: int | None = None,
    mode: str = "dft",
    basis: Iterable[BellState] | None = None,
) -> DistinguishabilityResult:
    """Largest subset of a basis that the device distinguishes unambiguously.

    Uses the symmetrized basis in ``mode`` unless ``basis`` is given (e.g.
    ``canonical_basis(d)``).
    """
    device = device_unitary(d) if device is None else device
    states = list(full_basis(d, mode) if basis is None else basis)
    supports = [signature_support(s, device, statistics) for s in states]
    adj = conflict_graph(supports)
    chosen, optimal, nodes = maximum_independent_set(adj, search_budget)
    certificate = {
        sig: states[i].label for i in chosen for sig in supports[i]
    }
    return DistinguishabilityResult(
        states=[states[i].label for i in chosen],
        size=len(chosen),
        conflict_graph_edges=sum(len(a) for a in adj) // 2,
        certificate=dict(sorted(certificate.items())),
        optimal=optimal,
        nodes_visited=nodes,
    )


def canonical_max_distinguishable(d: int, statistics: str = "boson") -> DistinguishabilityResult:
    """Same search over the standard (unsymmetrized) basis; valid for any d >= 2."""
    if d % 2:
        raise InvalidDimensionError("the beam-splitter device here is built for even d")
    return max_distinguishable_set(d, statistics=statistics, basis=canonical_basis(d))


def device_is_unitary(device: ModeUnitary, tol: float = 1e-12) -> bool:
    return is_unitary(device.matrix, tol)
