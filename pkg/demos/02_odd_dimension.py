# Why odd d has no symmetrized Bell basis
# ----------------------------------------
# A fully entangled state has a (scaled) unitary coefficient matrix. An
# antisymmetric odd-sized matrix is always singular, and symmetric matrices
# alone span too few dimensions.

from qudit_bell.symmetry import classify_symmetry, odd_d_obstruction
from qudit_bell.bell_basis import canonical_basis

for d in (3, 5, 7):
    rep = odd_d_obstruction(d, n_samples=100, rng_seed=0)
    worst = max(det for _, det in rep.skew_det_samples)
    print(f"d={d}: symmetric dim {rep.sym_dim} < {rep.needed} needed; largest |det(skew)| = {worst:.1e}")

labels = [classify_symmetry(s).label for s in canonical_basis(3)]
print("d=3 standard basis labels:", {lbl: labels.count(lbl) for lbl in set(labels)})
