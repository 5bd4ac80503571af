"""
Field arithmetic and the space of one-star words
================================================

Elements of GF(2^m) are bit patterns; coordinate i of a length-n word is
bit i-1 and prints leftmost.
"""

from dpcodes import (
    BinaryWord,
    Edge,
    ball,
    chi,
    default_spec,
    edge_distance,
    field,
    hamming_distance,
    parse_word,
    space_size,
)

# GF(8) with modulus x^3 + x + 1.  The generator x has order 7.
gf = field(default_spec(3))
print("GF(8) elements:", [format(a, "03b") for a in gf.elements()])
print("x * x =", format(gf.mul(0b010, 0b010), "03b"), " x^3 =", format(gf.pow(0b010, 3), "03b"))
print("order of x:", gf.order_of(0b010))

# A ternary word has exactly one star.  Distance counts differing positions,
# with the star counting as a symbol of its own.
a, b = parse_word("*100"), parse_word("1*01")
print(f"d({a}, {b}) = {hamming_distance(a, b)}")
print("|X^n| for n = 1..8:", [space_size(n) for n in range(1, 9)])

# Each ternary word is an edge of the binary cube; the star marks its direction.
e = Edge.between(BinaryWord(4, 0b0010), BinaryWord(4, 0b0110))
print(f"edge {e} -> {chi(e)}")

# Edge distance agrees with the distance of the ternary images.
f = Edge.between(parse_word("0001"), parse_word("0101"))
print(f"d*({e}, {f}) = {edge_distance(e, f)} = {hamming_distance(chi(e), chi(f))}")

# The radius-1 ball around a one-star word has n elements.
z = parse_word("*000")
print(f"ball({z}, 1):", sorted(str(w) for w in ball(z, 1)))
