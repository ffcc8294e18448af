# Building an exchange-symmetrized Bell basis for d = 6
# ------------------------------------------------------
# Correlation classes come from a round-robin tournament on six players,
# phase classes from the 3 x 3 Fourier matrix.

import numpy as np

from qudit_bell import bell_state, canonical_bell_state, full_basis, round_robin_schedule
from qudit_bell.symmetry import classify_symmetry, entanglement_residual, swap_apply

d = 6
for r, rnd in enumerate(round_robin_schedule(d).rounds, start=1):
    print(f"round {r}: {list(rnd)}")


def show(state):
    terms = []
    for (i, j) in sorted(state.support()):
        a = state.coefficients[i, j] * np.sqrt(state.d)
        terms.append(f"({a.real:+.3f}{a.imag:+.3f}i)|{i}{j}>")
    return " ".join(terms)


# a few states, with their behaviour under SWAP
for c, p in [(0, 4), (0, 5), (1, 1), (2, 5)]:
    s = bell_state(d, c, p)
    print(f"Psi_{c}^{p} = {show(s)} / sqrt(6)   [{classify_symmetry(s).label}]")

# the standard (n, m) basis is not made of SWAP eigenstates
std = canonical_bell_state(d, 1, 1)
print("standard |Psi_11>: |<psi|SWAP|psi>| =", round(abs(np.vdot(std.amplitudes, swap_apply(std))), 3))

basis = full_basis(d)
vecs = np.array([s.amplitudes for s in basis])
print("max |G - I| =", np.max(np.abs(vecs.conj() @ vecs.T - np.eye(d * d))))
print("max reduced-density deviation from I/d =", max(entanglement_residual(s) for s in basis))
labels = [classify_symmetry(s).label for s in basis]
print("symmetric:", labels.count("symmetric"), "antisymmetric:", labels.count("antisymmetric"))

# for d = 2^n, Walsh phases give the +-1 hyperentangled variant
walsh = full_basis(8, "walsh")
print("d=8 walsh phases:", sorted({round(float(x.real) * np.sqrt(8)) for s in walsh for x in s.amplitudes if abs(x) > 0}))
