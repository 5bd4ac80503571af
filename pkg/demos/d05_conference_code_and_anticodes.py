"""
The 12-word distance-4 code and anticode sizes
==============================================

Rows of a 6x6 conference matrix give 12 words of X^6 at distance 4.  Their
neighbourhoods split the binary cube into a perfect two-colouring.  A clique
search finds the largest anticodes for small n.
"""

from dpcodes import TernaryWord, anticode_A, build_d4_conference, diameter
from dpcodes.verifier import check_perfect_coloring, is_diameter_perfect, max_anticode_size, min_distance

code = build_d4_conference()
print([str(w) for w in code])
print("minimum distance:", min_distance(code).value)

A = anticode_A(TernaryWord(6, 1, 0))
print(f"|A_z| = {len(A)}, diameter {diameter(A)}")
rep = is_diameter_perfect(code, A)
print(f"{rep.code_size} * {rep.anticode_size} = {rep.space_size}:", rep.ok)

col = check_perfect_coloring(code)
print(f"colour classes {col.size_c1} + {col.size_c2}; neighbour counts {col.c1_counts} {col.c2_counts}")

for n, D in [(4, 2), (6, 2), (6, 3), (6, 4)]:
    print(f"largest diameter-{D} anticode in X^{n}: {max_anticode_size(n, D)}")
