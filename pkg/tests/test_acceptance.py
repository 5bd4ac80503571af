"""The nine acceptance criteria, each under its stated runtime budget.

A summary line per criterion is printed at the end of the pytest run.
"""

import time
from itertools import permutations

import numpy as np

from dpcodes.codes import build_d3, build_d4_conference, build_d5, build_preparata, build_preparata_evf
from dpcodes.gf2field import default_spec
from dpcodes.hamming import ColumnMap, Coset, pair_q
from dpcodes.operators import gold, inverse, is_apn, is_bijective, parse_operator, power, satisfies_propf, table_operator
from dpcodes.verifier import (
    check_cf_distance,
    check_matching,
    check_perfect_coloring,
    check_transitivity,
    is_diameter_perfect,
    is_perfect_d3,
    max_anticode_size,
    min_distance,
    nonequivalence_certificate,
    pair_q_by_search,
    shorten_scan,
)
from dpcodes.words import BinaryWord, TernaryWord, all_edges, anticode_A, ball, chi, diameter, edge_distance, hamming_distance


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def d3(m, literal):
    spec = default_spec(m)
    return build_d3(spec, parse_operator(literal, spec))


def test_criterion_1(record_property):
    """1. distance-3 family at m = 2, 3, 4 (< 5 s)"""
    sizes = []
    with Clock() as clock:
        for m, literal, size in [(2, "matrix2", 8), (3, "matrix3", 128), (4, "sum(matrix2,matrix2)", 32768)]:
            c = d3(m, literal)
            assert len(c) == size == 2 ** (2**m - 1)
            assert min_distance(c).value == 3
            assert is_perfect_d3(c)
            rep = check_matching(c)
            assert rep.is_matching and rep.is_perfect and rep.parallel_ok
            sizes.append(len(c))
    record_property("detail", f"sizes {sizes}")
    assert clock.seconds < 5


def test_criterion_2(record_property):
    """2. transitivity at m = 2, 3 (< 10 s)"""
    with Clock() as clock:
        reached = []
        for m, literal in [(2, "matrix2"), (3, "matrix3")]:
            rep = check_transitivity(d3(m, literal))
            assert rep.ok and rep.reached == rep.total
            reached.append(f"{rep.reached}/{rep.total}")
    record_property("detail", "reached " + ", ".join(reached))
    assert clock.seconds < 10


def test_criterion_3(record_property):
    """3. shortening dichotomy and nonequivalence at m = 4 (< 5 min)"""
    with Clock() as clock:
        g = d3(4, "sum(matrix2,matrix2)")
        h = d3(4, "gamma")
        found_g = shorten_scan(g, 4)
        assert found_g
        for k in (2, 4, 8):
            assert shorten_scan(h, k) == []
        cert = nonequivalence_certificate(g, h)
        assert cert.verdict == "NONEQUIVALENT" and cert.witness_k == 4
    record_property("detail", f"g: {len(found_g)} fixings at k=4; h: none; {cert.verdict}")
    assert clock.seconds < 300


def test_criterion_4(record_property):
    """4. distance-5 family at m = 3 (< 1 s); m = 5 sampled, reported only"""
    spec = default_spec(3)
    with Clock() as clock:
        measured = {}
        for f in (power(spec, 3), inverse(spec)):
            c = build_d5(spec, f)
            assert len(c) == 16
            d = min_distance(c).value
            assert d >= 5
            measured[f.name] = d
            rep = is_diameter_perfect(c, ball(BinaryWord(8, 0), 2))
            assert rep.ok and rep.code_size * rep.anticode_size == 1024 == rep.space_size
    assert clock.seconds < 1
    # m = 5: 2^26 words, sampled only
    spec5 = default_spec(5)
    big = build_d5(spec5, power(spec5, 3))
    sampled = min_distance(big, "sampled", samples=10**6, seed=2024)
    rng = np.random.default_rng(1)
    bits, stars = big.sample(1000, rng)
    members = sum(TernaryWord(32, int(s), int(b)) in big for b, s in zip(bits, stars))
    record_property(
        "detail",
        f"m=3 exact distance {measured}; m=5 sampled: {sampled.pairs_checked} pairs, "
        f"min {sampled.value}, {members}/1000 membership",
    )


def test_criterion_5(record_property):
    """5. Preparata-like code at m = 3 is (16, 256, 6) (< 1 s)"""
    spec = default_spec(3)
    with Clock() as clock:
        f = power(spec, 3)
        c = build_preparata(spec, f)
        rep = min_distance(c)
        assert (c.n, len(c), rep.value) == (16, 256, 6)
        assert rep.pairs_checked == 256 * 255 // 2
        assert set(build_preparata_evf(spec, f).bits.tolist()) == set(c.bits.tolist())
    record_property("detail", f"({c.n}, {len(c)}, {rep.value})")
    assert clock.seconds < 1


def test_criterion_6(record_property):
    """6. operator certificates (< 1 min)"""
    with Clock() as clock:
        for m in (3, 4, 5):
            u = power(default_spec(m), 3)
            assert is_apn(u)
            assert is_bijective(u) == (m % 2 == 1)
        for m in (3, 4, 5, 6):
            assert is_apn(inverse(default_spec(m))) == (m % 2 == 1)
        for m, l in [(3, 1), (5, 1), (5, 2)]:
            assert satisfies_propf(gold(default_spec(m), l))
    record_property("detail", "pow:3 APN m=3..5; inv APN iff m odd; gold propf (3,1) (5,1) (5,2)")
    assert clock.seconds < 60


def test_criterion_7(record_property):
    """7. conference-matrix distance-4 code (< 1 s)"""
    with Clock() as clock:
        c = build_d4_conference()
        assert len(c) == 12
        assert min_distance(c).value == 4
        rep = is_diameter_perfect(c, anticode_A(TernaryWord(6, 1, 0)))
        assert rep.ok and (rep.code_size, rep.anticode_size, rep.space_size) == (12, 16, 192)
        col = check_perfect_coloring(c)
        assert col.ok and col.c1_counts == {(1, 5)} and col.c2_counts == {(3, 3)}
    record_property("detail", f"|C1|={col.size_c1} |C2|={col.size_c2}")
    assert clock.seconds < 1


def test_criterion_8(record_property):
    """8. anticode sizes and diameters for n = 4, 6, 8 (< 1 min)"""
    with Clock() as clock:
        for n in (4, 6, 8):
            z = TernaryWord(n, 1, 0)
            bz, az, b2 = ball(z, 1), anticode_A(z), ball(BinaryWord(n, 0), 2)
            assert (len(bz), diameter(bz)) == (n, 2)
            assert (len(az), diameter(az)) == (3 * n - 2, 3)
            assert (len(b2), diameter(b2)) == (n * n, 4)
        assert max_anticode_size(4, 2) == 4
    assert clock.seconds < 60


def test_criterion_9(record_property):
    """9. oracle cross-checks (< 30 s)"""
    with Clock() as clock:
        pairs = 0
        for n in range(1, 6):
            edges = list(all_edges(n))
            for e1 in edges:
                for e2 in edges:
                    assert edge_distance(e1, e2) == hamming_distance(chi(e1), chi(e2))
                    pairs += 1
        points = 0
        for m in (2, 3):
            spec = default_spec(m)
            ident = ColumnMap.identity(spec)
            maps = [ident] + ([ColumnMap.from_table(spec, power(spec, 3).table, "pow:3")] if m == 3 else [])
            for cq in maps:
                for bp in range(spec.n):
                    P = Coset(ident, 0, bp)
                    for bq in range(spec.n):
                        Q = Coset(cq, 1, bq)
                        for p in P:
                            assert pair_q(p, P, Q) == pair_q_by_search(p, Q)
                            points += 1
        spec = default_spec(3)
        apn = 0
        for perm in permutations(range(8)):
            f = table_operator(spec, perm)
            if is_apn(f):
                d = check_cf_distance(spec, f)
                assert d is None or d >= 6
                apn += 1
        for f in (power(spec, 3), inverse(spec)):
            assert check_cf_distance(spec, f) >= 6
    record_property("detail", f"{pairs} edge pairs, {points} pairings, {apn} APN permutations")
    assert clock.seconds < 30
