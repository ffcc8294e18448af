from collections import defaultdict
from itertools import combinations

import numpy as np
import pytest

from qudit_bell.bell_basis import bell_state, canonical_basis, full_basis
from qudit_bell.lelm import (
    codeword_set,
    conflict_graph,
    detection_distribution,
    device_is_unitary,
    device_unitary,
    distinguishable,
    is_same_side,
    max_distinguishable_set,
    maximum_independent_set,
    signature_support,
)
from qudit_bell.linalg import InvalidDimensionError, gram, kron


def fock_oracle(state, device, statistics):
    """Signature probabilities by expanding creation operators term by term.

    Each product b+_{n1} b+_{n2}|vac> is rewritten as a normalised
    occupation-number ket: bosons pick up sqrt(2) on double occupation,
    fermions a sign when n1 > n2 and vanish when n1 == n2.
    """
    d = state.d
    m = device.matrix
    amps = defaultdict(complex)
    for a in range(d):
        for b in range(d):
            chi = state.coefficients[a, b]
            if chi == 0:
                continue
            for n1 in range(2 * d):
                for n2 in range(2 * d):
                    x = chi * m[n1, a] * m[n2, d + b]
                    key = (min(n1, n2), max(n1, n2))
                    if statistics == "boson":
                        amps[key] += x * (np.sqrt(2) if n1 == n2 else 1)
                    elif n1 != n2:
                        amps[key] += x if n1 < n2 else -x
    return {k: abs(v) ** 2 for k, v in amps.items()}


def test_device_d2_matrix():
    expected = np.array([[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, -1, 0], [0, 1, 0, -1]]) / np.sqrt(2)
    np.testing.assert_allclose(device_unitary(2).matrix, expected, atol=1e-15)


@pytest.mark.parametrize("d", [2, 4, 6, 8, 12])
def test_device_unitary(d):
    assert device_is_unitary(device_unitary(d), 1e-12)


def test_device_d6_factorizes():
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    np.testing.assert_allclose(device_unitary(6).matrix, kron(h, np.eye(6)), atol=1e-15)


def test_device_rejects_odd():
    with pytest.raises(InvalidDimensionError):
        device_unitary(3)


@pytest.mark.parametrize("statistics", ["boson", "fermion"])
@pytest.mark.parametrize("d", [2, 4])
def test_distribution_matches_fock_oracle(d, statistics):
    dev = device_unitary(d)
    for s in full_basis(d) + canonical_basis(d):
        got = detection_distribution(s, dev, statistics).entries
        ref = fock_oracle(s, dev, statistics)
        for sig in set(got) | set(ref):
            assert abs(got.get(sig, 0.0) - ref.get(sig, 0.0)) < 1e-12
        assert abs(sum(ref.values()) - 1) < 1e-10


def test_d2_bunching_examples():
    dev = device_unitary(2)
    singlet = detection_distribution(bell_state(2, 1, 1), dev, "boson")
    assert all(not is_same_side(sig, 2) for sig in singlet.support())
    assert singlet.total == pytest.approx(1, abs=1e-12)
    phi = detection_distribution(bell_state(2, 0, 0), dev, "boson")
    assert all(is_same_side(sig, 2) for sig in phi.support())


@pytest.mark.parametrize("statistics", ["boson", "fermion"])
@pytest.mark.parametrize("d", [2, 4, 6, 8])
def test_normalization(d, statistics):
    dev = device_unitary(d)
    for s in full_basis(d):
        assert abs(detection_distribution(s, dev, statistics).total - 1) < 1e-10


@pytest.mark.parametrize("d", [2, 4, 6, 8])
def test_fermion_patterns_follow_computed_distribution(d):
    # fermions: the mirror of the bosonic pattern; checked against the oracle above
    dev = device_unitary(d)
    for s in full_basis(d):
        supp = signature_support(s, dev, "fermion")
        assert all(a < b for a, b in supp)
        sym = s.c == 0 or s.p % 2 == 0
        assert all(is_same_side(sig, d) != sym for sig in supp)


def test_fermion_singlet_cross_side_only():
    supp = signature_support(bell_state(2, 1, 1), device_unitary(2), "fermion")
    assert supp == {(0, 1), (2, 3)}


def test_d2_support_relations():
    dev = device_unitary(2)
    sup = {lbl: signature_support(bell_state(2, *lbl), dev, "boson") for lbl in [(0, 0), (0, 1), (1, 0), (1, 1)]}
    assert not sup[(0, 0)] & sup[(1, 0)]
    assert sup[(0, 0)] & sup[(0, 1)]


def test_distinguishable_examples():
    dev = device_unitary(2)
    full = full_basis(2)
    assert distinguishable(full, dev)[0] is False
    ok, cert = distinguishable([bell_state(2, 0, 0), bell_state(2, 1, 0), bell_state(2, 1, 1)], dev)
    assert ok and set(cert.values()) == {0, 1, 2}
    assert distinguishable([full[0]], dev)[0] is True


@pytest.mark.parametrize("d,n", [(2, 3), (4, 7), (6, 11)])
def test_codeword_set(d, n):
    cw = codeword_set(d)
    assert len(cw) == n
    assert [s.label for s in cw][:3] == [(0, 0), (1, 0), (1, 1)]
    g = gram(np.array([s.amplitudes for s in cw]))
    assert np.max(np.abs(g - np.eye(n))) < 1e-10


@pytest.mark.parametrize(
    "d,mode", [(2, "dft"), (4, "dft"), (6, "dft"), (8, "dft"), (2, "walsh"), (4, "walsh"), (8, "walsh")]
)
def test_codewords_distinguishable(d, mode):
    ok, cert = distinguishable(codeword_set(d, mode), device_unitary(d), "boson")
    assert ok
    assert set(cert.values()) == set(range(2 * d - 1))


def brute_force_mis_size(adj):
    n = len(adj)
    for k in range(n, 0, -1):
        for sub in combinations(range(n), k):
            if all(b not in adj[a] for a, b in combinations(sub, 2)):
                return k
    return 0


def test_mis_against_brute_force_on_random_graphs():
    rng = np.random.default_rng(5)
    for _ in range(40):
        n = int(rng.integers(1, 12))
        adj = [set() for _ in range(n)]
        for a, b in combinations(range(n), 2):
            if rng.random() < 0.4:
                adj[a].add(b)
                adj[b].add(a)
        chosen, optimal, _ = maximum_independent_set(adj)
        assert optimal
        assert len(chosen) == brute_force_mis_size(adj)
        assert all(b not in adj[a] for a, b in combinations(chosen, 2))


def test_mis_is_lexicographically_first():
    # path 0-1-2-3: maximum sets {0,2}, {0,3}, {1,3}
    adj = [{1}, {0, 2}, {1, 3}, {2}]
    assert maximum_independent_set(adj)[0] == [0, 2]


def test_mis_budget_flags_non_optimal():
    adj = [set() for _ in range(30)]
    chosen, optimal, nodes = maximum_independent_set(adj, budget=3)
    assert not optimal
    assert len(chosen) == 30  # greedy already finds it, but optimality is not certified


@pytest.mark.parametrize("d", [2, 4, 6])
def test_max_set_is_2d_minus_1(d):
    res = max_distinguishable_set(d, statistics="boson")
    assert res.optimal and res.size == 2 * d - 1
    assert res.states == [s.label for s in codeword_set(d)]
    owners = list(res.certificate.values())
    assert set(owners) == set(res.states)


def test_no_2d_subset_is_distinguishable_d4():
    # direct check of the certificate claim on the conflict graph
    dev = device_unitary(4)
    basis = full_basis(4)
    adj = conflict_graph([signature_support(s, dev, "boson") for s in basis])
    chosen, _, _ = maximum_independent_set(adj)
    assert len(chosen) == 7


def test_global_phase_invariance():
    dev = device_unitary(6)
    s = bell_state(6, 3, 2)
    from qudit_bell.bell_basis import BellState

    t = BellState(6, 3, 2, np.exp(0.7j) * s.amplitudes)
    a = detection_distribution(s, dev).entries
    b = detection_distribution(t, dev).entries
    assert a.keys() == b.keys()
    assert all(abs(a[k] - b[k]) < 1e-14 for k in a)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        detection_distribution(bell_state(4, 0, 0), device_unitary(6))
