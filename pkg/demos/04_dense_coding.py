# Dense coding with 2d - 1 codewords
# ----------------------------------
# Alice turns the shared |Psi_0^0> into one of the codewords with a signed
# permutation on her qudit; Bob decodes from the detector pair that fires.

from qudit_bell import alice_unitary, roundtrip

print(alice_unitary(6, 1, 1).astype(int))

for d in (2, 4, 6, 8):
    msgs = [m for m in range(2 * d - 1) for _ in range(100)]
    t = roundtrip(d, msgs, rng_seed=1)
    ok = sum(e.message_sent == e.message_decoded for e in t)
    print(f"d={d}: {ok}/{len(t)} decoded correctly, alphabet of {2 * d - 1}")
