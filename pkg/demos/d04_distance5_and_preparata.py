"""
APN maps, distance-5 codes and a Preparata-like code
====================================================

With an APN permutation f, pairing the Hamming code with an odd coset over
the columns f(alpha_i) gives a distance-5 code that meets the anticode bound
against the radius-2 ball.  The same pairing yields a binary code of length
2n with distance 6.
"""

from dpcodes import BinaryWord, ball, build_d5, build_preparata, default_spec, power
from dpcodes.codes import build_preparata_evf
from dpcodes.operators import differential_uniformity, satisfies_propf
from dpcodes.verifier import is_diameter_perfect, min_distance

spec = default_spec(3)
u = power(spec, 3)
print("differential uniformity of x^3 on GF(8):", differential_uniformity(u))
print("six-element sum property:", satisfies_propf(u))

code = build_d5(spec, u)
print("distance-5 code:", len(code), "words, minimum distance", min_distance(code).value)
rep = is_diameter_perfect(code, ball(BinaryWord(8, 0), 2))
print(f"{rep.code_size} * {rep.anticode_size} = {rep.code_size * rep.anticode_size} = |X^8| = {rep.space_size}")

prep = build_preparata(spec, u)
print(f"Preparata-like code: length {prep.n}, {len(prep)} words, distance {min_distance(prep).value}")
same = set(prep.bits.tolist()) == set(build_preparata_evf(spec, u).bits.tolist())
print("second description gives the same set:", same)

# At m = 5 the code has 2^26 words; only sampling is practical.
spec5 = default_spec(5)
big = build_d5(spec5, power(spec5, 3))
rep = min_distance(big, "sampled", samples=200_000, seed=1)
print(f"m = 5: {len(big)} words, smallest distance over {rep.pairs_checked} random pairs: {rep.value}")
