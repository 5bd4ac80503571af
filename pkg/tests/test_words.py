from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from dpcodes.words import (
    Automorphism,
    BinaryWord,
    Edge,
    TernaryWord,
    all_binary_words,
    all_edges,
    all_ternary_words,
    anticode_A,
    ball,
    chi,
    chi_inv,
    diameter,
    edge_distance,
    hamming_distance,
    parse_word,
    space_size,
    square_anticode,
)


def position_distance(a: str, b: str) -> int:
    """Oracle: count differing characters of two rendered words."""
    assert len(a) == len(b)
    return sum(x != y for x, y in zip(a, b))


def ternary_text(draw_n=st.integers(1, 10)):
    @st.composite
    def build(draw):
        n = draw(draw_n)
        star = draw(st.integers(0, n - 1))
        chars = [draw(st.sampled_from("01")) for _ in range(n)]
        chars[star] = "*"
        return "".join(chars)

    return build()


def test_parse_and_render():
    w = parse_word("01*0")
    assert isinstance(w, TernaryWord)
    assert w.star == 3 and w[1] == 0 and w[2] == 1 and w[3] == "*" and w[4] == 0
    assert str(w) == "01*0"
    b = parse_word("0110")
    assert isinstance(b, BinaryWord) and str(b) == "0110" and b.weight == 2
    for bad in ("", "0*1*", "01a"):
        with pytest.raises(ValueError):
            parse_word(bad)


def test_bit_under_star_is_rejected():
    with pytest.raises(ValueError):
        TernaryWord(3, 1, 0b001)


def test_distance_example():
    # position-wise: (*,1) (1,*) (0,0) (0,1) -> three differences
    a, b = "*100", "1*01"
    assert position_distance(a, b) == 3
    assert hamming_distance(parse_word(a), parse_word(b)) == 3


def test_distance_mixed_alphabets():
    assert hamming_distance(parse_word("0*0"), parse_word("000")) == 1
    assert hamming_distance(parse_word("*00"), parse_word("0*0")) == 2
    with pytest.raises(ValueError):
        hamming_distance(parse_word("0*"), parse_word("0*0"))


@given(ternary_text(), st.data())
def test_distance_matches_oracle(a, data):
    chars = [data.draw(st.sampled_from("01")) for _ in a]
    chars[data.draw(st.integers(0, len(a) - 1))] = "*"
    b = "".join(chars)
    assert hamming_distance(parse_word(a), parse_word(b)) == position_distance(a, b)


@given(ternary_text(st.just(6)), ternary_text(st.just(6)), ternary_text(st.just(6)))
def test_distance_is_a_metric(a, b, c):
    x, y, z = map(parse_word, (a, b, c))
    assert hamming_distance(x, y) == hamming_distance(y, x)
    assert (hamming_distance(x, y) == 0) == (x == y)
    assert hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z)


@pytest.mark.parametrize("n", range(1, 9))
def test_space_size(n):
    words = list(all_ternary_words(n))
    assert len(words) == len(set(words)) == n * 2 ** (n - 1) == space_size(n)
    assert len(list(all_binary_words(n))) == 2**n


def test_chi_example():
    e = Edge.between(parse_word("0100"), parse_word("0110"))
    assert str(chi(e)) == "01*0"
    assert chi_inv(parse_word("01*0")) == e


@pytest.mark.parametrize("n", range(1, 6))
def test_chi_is_a_bijection(n):
    edges = list(all_edges(n))
    images = [chi(e) for e in edges]
    assert set(images) == set(all_ternary_words(n))
    assert all(chi_inv(chi(e)) == e for e in edges)


def edge_distance_oracle(e1: Edge, e2: Edge) -> int:
    """Closest cross distance between endpoints, plus 2 for non-parallel edges."""
    ends1 = [str(w) for w in e1.endpoints]
    ends2 = [str(w) for w in e2.endpoints]
    d = min(position_distance(a, b) for a in ends1 for b in ends2)
    return d if e1.direction == e2.direction else d + 2


@pytest.mark.parametrize("n", range(1, 6))
def test_edge_distance_equals_ternary_distance(n):
    edges = list(all_edges(n))
    for e1 in edges:
        for e2 in edges:
            d = edge_distance(e1, e2)
            assert d == hamming_distance(chi(e1), chi(e2))
            assert d == edge_distance_oracle(e1, e2)


def ball_oracle(z, radius):
    return {w for w in all_ternary_words(z.n) if position_distance(str(w), str(z)) <= radius}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("radius", [0, 1, 2, 3])
def test_ball_matches_brute_force(n, radius):
    z_t = TernaryWord(n, 2, 0b1 if n > 2 else 0)
    z_b = BinaryWord(n, 0b101 & ((1 << n) - 1))
    assert ball(z_t, radius) == ball_oracle(z_t, radius)
    assert ball(z_b, radius) == ball_oracle(z_b, radius)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_anticode_sizes(n):
    z = TernaryWord(n, 1, 0)
    bz = ball(z, 1)
    assert len(bz) == n and diameter(bz) == 2
    az = anticode_A(z)
    assert len(az) == 3 * n - 2 and diameter(az) == 3
    b2 = ball(BinaryWord(n, 0), 2)
    assert len(b2) == n * n and diameter(b2) == 4


def test_square_anticode():
    for n in (2, 4, 6):
        sq = square_anticode(n)
        assert len(sq) == 4 and diameter(sq) == 2
    assert {str(w) for w in square_anticode(2)} == {"*0", "0*", "*1", "1*"}


def test_diameter_small():
    assert diameter([parse_word("*0")]) == 0
    assert diameter(map(parse_word, ["*0", "*1"])) == 1


def random_automorphism(draw, n):
    perm = draw(st.permutations(list(range(1, n + 1))))
    shift = draw(st.integers(0, (1 << n) - 1))
    return Automorphism(tuple(perm), shift)


@st.composite
def automorphism_and_words(draw):
    n = draw(st.integers(2, 7))
    t = random_automorphism(draw, n)
    star = draw(st.integers(1, n))
    bits = draw(st.integers(0, (1 << n) - 1)) & ~(1 << (star - 1))
    star2 = draw(st.integers(1, n))
    bits2 = draw(st.integers(0, (1 << n) - 1)) & ~(1 << (star2 - 1))
    return t, random_automorphism(draw, n), TernaryWord(n, star, bits), TernaryWord(n, star2, bits2)


@given(automorphism_and_words())
def test_automorphism_group_laws(case):
    t, u, w, v = case
    assert t.inverse()(t(w)) == w
    assert t(t.inverse()(w)) == w
    assert t.compose(u)(w) == t(u(w))
    assert t.compose(t.inverse())(w) == w
    assert hamming_distance(t(w), t(v)) == hamming_distance(w, v)


def test_automorphism_explicit():
    # coordinate 1 -> 2, 2 -> 3, 3 -> 1, then add 001 (text)
    t = Automorphism((2, 3, 1), 0b100)
    assert str(t(parse_word("*10"))) == "0*0"
    assert t(parse_word("*10")).star == 2


@pytest.mark.parametrize("n", [3, 4])
def test_automorphisms_preserve_distance_exhaustive(n):
    words = list(all_ternary_words(n))
    for perm in list(permutations(range(1, n + 1)))[:6]:
        t = Automorphism(perm, 0b1)
        for a, b in combinations(words, 2):
            assert hamming_distance(t(a), t(b)) == hamming_distance(a, b)


def test_edge_distance_examples():
    e1 = Edge.between(parse_word("0000"), parse_word("1000"))
    e2 = Edge.between(parse_word("0011"), parse_word("1011"))
    assert edge_distance(e1, e2) == 2
    assert edge_distance(e1, e1) == 0
    # non-parallel edges sharing the vertex 10
    e3 = Edge.between(parse_word("00"), parse_word("10"))
    e4 = Edge.between(parse_word("10"), parse_word("11"))
    assert edge_distance(e3, e4) == 2 == hamming_distance(parse_word("*0"), parse_word("1*"))
