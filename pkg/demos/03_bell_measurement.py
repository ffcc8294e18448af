# Bell-state measurement with a beam splitter and internal-state sorters
# -----------------------------------------------------------------------
# Symmetric states bunch (both detections on one side), antisymmetric states
# anti-bunch. Combined with the correlation class read off the detectors
# this distinguishes 2d - 1 states.

from qudit_bell import bell_state, detection_distribution, device_unitary, max_distinguishable_set
from qudit_bell.lelm import canonical_max_distinguishable

d = 4
dev = device_unitary(d)
for c, p in [(0, 0), (1, 0), (1, 1), (2, 2)]:
    dist = detection_distribution(bell_state(d, c, p), dev, "boson")
    print(f"Psi_{c}^{p}:", {sig: round(prob, 3) for sig, prob in dist.entries.items()})

for d in (2, 4, 6, 8):
    for stats in ("boson", "fermion"):
        res = max_distinguishable_set(d, statistics=stats)
        print(f"d={d} {stats}: largest distinguishable set {res.size} (2d-1 = {2 * d - 1}), "
              f"{res.conflict_graph_edges} conflicts")

# the standard basis does much worse with this particular device
for d in (2, 4, 6):
    print(f"d={d} standard basis: {canonical_max_distinguishable(d).size}")
