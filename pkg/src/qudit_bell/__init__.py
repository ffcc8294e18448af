"""Exchange-symmetrized Bell bases for qudit pairs of even dimension."""

from .bell_basis import (
    BellState,
    PairingSchedule,
    bell_state,
    canonical_basis,
    canonical_bell_state,
    full_basis,
    phase,
    round_robin_schedule,
)
from .dense_coding import alice_unitary, decode, encode, roundtrip
from .lelm import (
    codeword_set,
    detection_distribution,
    device_unitary,
    distinguishable,
    max_distinguishable_set,
    signature_support,
)
from .linalg import dft_matrix, kron, walsh_matrix
from .symmetry import (
    classify_symmetry,
    odd_d_obstruction,
    reduced_density,
    swap_apply,
    symmetry_counts,
)

__version__ = "0.1.0"
