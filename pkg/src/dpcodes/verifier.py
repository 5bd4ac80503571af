"""Brute-force oracles for the claimed properties of constructed codes.

Everything here recomputes from the raw words of a code.  Metadata is only
read where the property itself is about the construction (transitivity
needs the automorphisms tau_z).  Distances between ternary words use the
one-hot encoding ``0 -> 001, 1 -> 010, * -> 100`` per coordinate, for which
Hamming distance is half the popcount of the XOR.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .codes import Code, LazyCode, tau_z
from .gf2field import FieldSpec
from .hamming import Coset
from .operators import MOperator
from .words import (
    BinaryWord,
    TernaryWord,
    Word,
    all_ternary_words,
    diameter,
    hamming_distance,
    space_size,
)

__all__ = [
    "ColoringReport",
    "DiameterPerfectReport",
    "DistanceReport",
    "MatchingReport",
    "NonequivalenceReport",
    "TransitivityReport",
    "check_cf_distance",
    "check_matching",
    "check_perfect_coloring",
    "check_transitivity",
    "is_diameter_perfect",
    "is_perfect_d3",
    "max_anticode_size",
    "min_distance",
    "nonequivalence_certificate",
    "pair_q_by_search",
    "shorten_scan",
]

EXACT_PAIR_CAP = 10**5
_ONE = np.uint64(1)


def _star_masks(stars: np.ndarray) -> np.ndarray:
    return _ONE << (np.asarray(stars, dtype=np.int64) - 1).astype(np.uint64)


def _one_hot(n: int, bits: np.ndarray, stars: np.ndarray | None) -> np.ndarray:
    out = np.zeros(len(bits), dtype=np.uint64)
    for i in range(n):
        sym = (bits >> np.uint64(i)) & _ONE  # 0 or 1
        code = _ONE << sym  # 1 or 2
        if stars is not None:
            code = np.where(stars == i + 1, np.uint64(4), code)
        out |= code << np.uint64(3 * i)
    return out


def _pair_distances(n, b1, s1, b2, s2) -> np.ndarray:
    """Elementwise distance between words given as (bits, stars) arrays."""
    m1 = np.zeros_like(b1) if s1 is None else _star_masks(s1)
    m2 = np.zeros_like(b2) if s2 is None else _star_masks(s2)
    return (np.bitwise_count((b1 ^ b2) & ~(m1 | m2)) + np.bitwise_count(m1 ^ m2)).astype(np.int64)


@dataclass
class DistanceReport:
    """``value`` is exact in exact mode; in sampled mode it is an upper bound."""

    value: int
    mode: str
    witness: tuple[Word, Word] | None
    pairs_checked: int
    claimed: int | None = None

    @property
    def violation(self) -> bool:
        return self.claimed is not None and self.value < self.claimed


def _exact_min(n, bits, stars, block: int = 1024):
    """``(min distance, (i, j))`` over all pairs ``i < j``."""
    N = len(bits)
    if stars is None:
        enc, halve = bits, False
    elif 3 * n <= 64:
        enc, halve = _one_hot(n, bits, stars), True
    else:
        enc = None

    def dist(a, b):
        if enc is not None:
            return np.bitwise_count(enc[a][:, None] ^ enc[b][None, :])
        return _pair_distances(n, bits[a][:, None], stars[a][:, None], bits[b][None, :], stars[b][None, :])

    best, arg = None, None
    for i in range(0, N, block):
        j = min(i + block, N)
        inner = dist(slice(i, j), slice(i, j)).astype(np.int64)
        inner[np.tril_indices(j - i)] = np.iinfo(np.int64).max
        candidates = [(inner, i, i)]
        if j < N:
            candidates.append((dist(slice(i, j), slice(j, N)), i, j))
        for d, r0, c0 in candidates:
            if d.size == 0:
                continue
            v = int(d.min())
            if best is None or v < best:
                k = int(d.argmin())
                best, arg = v, (r0 + k // d.shape[1], c0 + k % d.shape[1])
    if halve:
        best //= 2
    return best, arg


def _word(n, bits, stars, k) -> Word:
    if stars is None:
        return BinaryWord(n, int(bits[k]))
    return TernaryWord(n, int(stars[k]), int(bits[k]))


def min_distance(
    c: Code | LazyCode,
    mode: str = "exact",
    samples: int = 10**6,
    seed: int = 2024,
) -> DistanceReport:
    """Minimum distance over all pairs, or over ``samples`` random pairs.

    Exact mode is refused above :data:`EXACT_PAIR_CAP` words.  Sampled mode
    draws pairs from a seeded generator and only reports what it saw.
    """
    if len(c) < 2:
        raise ValueError("a code needs at least two words")
    n = c.n
    if mode == "exact":
        if isinstance(c, LazyCode) or len(c) > EXACT_PAIR_CAP:
            raise ValueError(f"exact distance over {len(c)} words is out of reach; use sampled")
        best, (i, j) = _exact_min(n, c.bits, c.stars)
        witness = (_word(n, c.bits, c.stars, i), _word(n, c.bits, c.stars, j))
        N = len(c)
        return DistanceReport(best, "exact", witness, N * (N - 1) // 2, c.claimed_distance)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = np.random.default_rng(seed)
    b1, s1 = c.sample(samples, rng)
    b2, s2 = c.sample(samples, rng)
    d = _pair_distances(n, b1, s1, b2, s2)
    d[d == 0] = np.iinfo(np.int64).max  # identical draws
    k = int(d.argmin())
    witness = (_word(n, b1, s1, k), _word(n, b2, s2, k))
    distinct = int((d != np.iinfo(np.int64).max).sum())
    return DistanceReport(int(d[k]), "sampled", witness, distinct, c.claimed_distance)


def _ball_keys(n: int, bits: np.ndarray, stars: np.ndarray) -> np.ndarray:
    """Keys ``star << n | bits`` of every word within distance 1 of each codeword."""
    masks = _star_masks(stars)
    base = (stars.astype(np.uint64) << np.uint64(n)) | bits
    keys = [base]
    for i in range(n):
        flip = _ONE << np.uint64(i)
        keys.append(np.where(masks == flip, base, base ^ flip))
    keys = np.stack(keys, axis=1)
    # the "flip" under the star repeats the word itself; drop those duplicates
    dup = np.zeros(keys.shape, dtype=bool)
    dup[np.arange(len(bits)), stars] = True
    return keys[~dup]


def is_perfect_d3(c: Code) -> bool:
    """True iff the radius-1 balls around the codewords partition X^n."""
    if c.alphabet != "ternary":
        return False
    if c.n > 16:
        raise ValueError("perfectness check is capped at n <= 16")
    keys = _ball_keys(c.n, c.bits, c.stars)
    return len(keys) == space_size(c.n) and len(np.unique(keys)) == len(keys)


@dataclass
class DiameterPerfectReport:
    code_size: int
    anticode_size: int
    space_size: int
    anticode_diameter: int
    code_distance: int
    precondition_ok: bool
    bound_holds: bool
    equality: bool

    @property
    def ok(self) -> bool:
        return self.precondition_ok and self.equality


def is_diameter_perfect(c: Code, anticode: Iterable[TernaryWord]) -> DiameterPerfectReport:
    """Compare |C| * |A| with |X^n| for an anticode of diameter below the code distance."""
    anticode = list(anticode)
    diam = diameter(anticode)
    dist = min_distance(c).value
    product = len(c) * len(anticode)
    total = space_size(c.n)
    return DiameterPerfectReport(
        code_size=len(c),
        anticode_size=len(anticode),
        space_size=total,
        anticode_diameter=diam,
        code_distance=dist,
        precondition_ok=diam < dist,
        bound_holds=product <= total,
        equality=product == total,
    )


@dataclass
class MatchingReport:
    is_matching: bool
    is_perfect: bool | None  # None when |C| != 2^(n-1)
    parallel_ok: bool
    min_parallel_distance: int | None
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.is_matching and self.is_perfect is not False and self.parallel_ok


def check_matching(c: Code) -> MatchingReport:
    """Edges of the code as a matching in {0,1}^n: disjoint, perfect, parallel edges far apart.

    Parallel edges are measured by the closest pair of endpoints, which must
    be at least 3.
    """
    if c.alphabet != "ternary":
        raise ValueError("matching check needs a ternary code")
    n = c.n
    masks = _star_masks(c.stars)
    ends = np.concatenate([c.bits, c.bits | masks])
    uniq, counts = np.unique(ends, return_counts=True)
    is_matching = len(uniq) == len(ends)
    witness = None
    if not is_matching:
        v = int(uniq[counts > 1][0])
        witness = ("shared vertex", BinaryWord(n, v))
    is_perfect = None
    if len(c) == 1 << (n - 1):
        is_perfect = is_matching and len(uniq) == 1 << n
    best = None
    for d in range(1, n + 1):
        group = c.bits[c.stars == d]
        if len(group) < 2:
            continue
        mask = np.uint64(((1 << n) - 1) ^ (1 << (d - 1)))
        dist = np.bitwise_count((group[:, None] ^ group[None, :]) & mask).astype(np.int64)
        np.fill_diagonal(dist, np.iinfo(np.int64).max)
        k = int(dist.argmin())
        v = int(dist.flat[k])
        if best is None or v < best:
            best = v
            if v < 3:
                i, j = divmod(k, len(group))
                witness = (
                    "parallel edges",
                    TernaryWord(n, d, int(group[i])),
                    TernaryWord(n, d, int(group[j])),
                )
    parallel_ok = best is None or best >= 3
    return MatchingReport(is_matching, is_perfect, parallel_ok, best, witness)


def _is_perfect_subcode(n: int, bits: np.ndarray, stars: np.ndarray, k: int) -> bool:
    if len(bits) != 1 << (k - 1):
        return False
    if len(bits) < 2:
        return False
    best, _ = _exact_min(n, bits, stars)
    return best >= 3


def shorten_scan(
    c: Code, k: int, first_only: bool = False
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every fixing of n-k coordinates whose shortened code is a perfect distance-3 code in X^k.

    A fixing is ``(positions, values)``.  For each set of positions the
    codewords avoiding them are bucketed by their values there; a bucket of
    size 2^(k-1) whose words are pairwise at distance >= 3 is perfect, since
    k * 2^(k-1) = |X^k|.
    """
    if c.alphabet != "ternary":
        raise ValueError("shortening scan needs a ternary code")
    n = c.n
    if not 1 < k < n:
        raise ValueError(f"need 1 < k < n, got k={k}, n={n}")
    if n > 16:
        raise ValueError("shortening scan is capped at n <= 16")
    target = 1 << (k - 1)
    masks = _star_masks(c.stars)
    found = []
    for positions in combinations(range(1, n + 1), n - k):
        tmask = 0
        for p in positions:
            tmask |= 1 << (p - 1)
        tm = np.uint64(tmask)
        eligible = (masks & tm) == 0
        keys = (c.bits[eligible] & tm).astype(np.int64)
        counts = np.bincount(keys, minlength=1)
        for key in np.nonzero(counts == target)[0]:
            sel = eligible.copy()
            sel[eligible] = keys == key
            if _is_perfect_subcode(n, c.bits[sel], c.stars[sel], k):
                values = tuple(int(key) >> (p - 1) & 1 for p in positions)
                found.append((positions, values))
                if first_only:
                    return found
    return found


@dataclass
class NonequivalenceReport:
    verdict: str  # NONEQUIVALENT | INCONCLUSIVE
    profile_left: dict[int, bool]
    profile_right: dict[int, bool]
    witness_k: int | None = None


def shortening_profile(c: Code, ks: Sequence[int] | None = None) -> dict[int, bool]:
    """For each k: does some fixing shorten ``c`` to a perfect code in X^k?"""
    if ks is None:
        ks = [k for k in (2**j for j in range(1, c.n.bit_length())) if k < c.n]
    return {k: bool(shorten_scan(c, k, first_only=True)) for k in ks}


def nonequivalence_certificate(
    c1: Code, c2: Code, ks: Sequence[int] | None = None
) -> NonequivalenceReport:
    """Differing shortening profiles certify that no permutation plus translation maps c1 to c2."""
    if c1.n != c2.n:
        raise ValueError("codes of different length are trivially nonequivalent")
    p1 = shortening_profile(c1, ks)
    p2 = shortening_profile(c2, ks)
    diff = [k for k in p1 if p1[k] != p2[k]]
    if diff:
        return NonequivalenceReport("NONEQUIVALENT", p1, p2, diff[0])
    return NonequivalenceReport("INCONCLUSIVE", p1, p2)


@dataclass
class TransitivityReport:
    ok: bool
    reached: int
    total: int
    failures: list = dc_field(default_factory=list)


def check_transitivity(c: Code, base: int = 0) -> TransitivityReport:
    """Walk from one codeword to every other with tau_{p'} o tau_p^{-1}.

    ``p`` and ``p'`` are the even endpoints of the two codewords' edges.
    Each automorphism must carry the base word to the target and the whole
    code onto itself.
    """
    if c.n > 8:
        raise ValueError("exhaustive transitivity walk is capped at n <= 8")
    words = list(c)
    word_set = set(words)
    r0 = words[base]
    p0 = _even(r0)
    inv0 = tau_z(c, p0).inverse()
    reached = 0
    failures = []
    for r in words:
        tau = tau_z(c, _even(r)).compose(inv0)
        if tau(r0) != r:
            failures.append(("misses target", str(r)))
            continue
        if {tau(w) for w in words} != word_set:
            failures.append(("image differs from code", str(r)))
            continue
        reached += 1
    return TransitivityReport(reached == len(words), reached, len(words), failures)


def _even(w: TernaryWord) -> int:
    lo = w.bits
    return lo if lo.bit_count() % 2 == 0 else lo | w.star_mask


@dataclass
class ColoringReport:
    ok: bool
    size_c1: int
    size_c2: int
    c1_counts: set
    c2_counts: set
    expected: tuple


def check_perfect_coloring(c: Code) -> ColoringReport:
    """Split F^n by distance 1 to the code and count neighbours in each part."""
    n = c.n
    if c.alphabet != "ternary" or n > 16:
        raise ValueError("coloring check needs a ternary code with n <= 16")
    xs = np.arange(1 << n, dtype=np.uint64)
    dmin = np.full(len(xs), np.iinfo(np.int64).max)
    for w in c:
        d = _pair_distances(n, xs, None, np.uint64(w.bits), np.array(w.star))
        dmin = np.minimum(dmin, d)
    in_c1 = dmin == 1
    c1_counts, c2_counts = set(), set()
    for x in range(1 << n):
        nb = [x ^ (1 << i) for i in range(n)]
        k1 = int(in_c1[nb].sum())
        (c1_counts if in_c1[x] else c2_counts).add((k1, n - k1))
    expected = ((1, n - 1), (n // 2, n // 2))
    ok = c1_counts == {expected[0]} and c2_counts == {expected[1]}
    return ColoringReport(ok, int(in_c1.sum()), int((~in_c1).sum()), c1_counts, c2_counts, expected)


def _max_clique(adj: list[int], cand: int) -> int:
    """Largest clique inside the vertex bitset ``cand`` (greedy-colouring bound)."""
    best = 0

    def colour_sort(p: int):
        order, bounds = [], []
        colour = 0
        while p:
            colour += 1
            q = p
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~adj[v] & ~(1 << v)
                p &= ~(1 << v)
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def expand(size: int, p: int):
        nonlocal best
        order, bounds = colour_sort(p)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if size + bound <= best:
                return
            newp = p & adj[v]
            if newp:
                expand(size + 1, newp)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    expand(0, cand)
    return best


def max_anticode_size(n: int, D: int) -> int:
    """Largest set in X^n with all pairwise distances at most ``D`` (exact clique search).

    X^n is vertex-transitive, so the search fixes one word in the clique.
    """
    if not 2 <= n <= 8 or D not in (2, 3, 4):
        raise ValueError("max_anticode_size supports 2 <= n <= 8 and D in {2, 3, 4}")
    words = list(all_ternary_words(n))
    N = len(words)
    stars = np.array([w.star for w in words])
    bits = np.array([w.bits for w in words], dtype=np.uint64)
    adj = []
    for k in range(N):
        d = _pair_distances(n, bits, stars, bits[k], np.array(stars[k]))
        near = np.nonzero((d <= D) & (np.arange(N) != k))[0]
        mask = 0
        for v in near.tolist():
            mask |= 1 << v
        adj.append(mask)
    return 1 + _max_clique(adj, adj[0])


def check_cf_distance(spec: FieldSpec, f: MOperator) -> int | None:
    """Minimum distance of the binary code cut out by parity, sum x_i a_i and sum x_i f(a_i).

    The code is linear, so this is its minimum nonzero weight; ``None`` if
    the code is {0}.  Enumerates all of F^n (n <= 16).
    """
    n = spec.n
    if n > 16:
        raise ValueError("C_f enumeration is capped at n <= 16")
    xs = np.arange(1 << n, dtype=np.int64)
    s1 = np.zeros_like(xs)
    s2 = np.zeros_like(xs)
    for i in range(n):
        bit = (xs >> i) & 1
        s1 ^= bit * i
        s2 ^= bit * f.apply(i)
    weight = np.bitwise_count(xs.astype(np.uint64)).astype(np.int64)
    member = (weight % 2 == 0) & (s1 == 0) & (s2 == 0) & (xs != 0)
    if not member.any():
        return None
    return int(weight[member].min())


def pair_q_by_search(p: int, Q: Coset) -> int:
    """Neighbour of ``p`` in ``Q`` found by scanning the radius-1 ball.

    Membership is tested straight from the defining equations.
    """
    cols = Q.columns.columns
    hits = []
    for i in range(Q.n):
        w = p ^ (1 << i)
        s = 0
        for j in range(Q.n):
            if w >> j & 1:
                s ^= cols[j]
        if w.bit_count() % 2 == Q.parity and s == Q.syndrome:
            hits.append(w)
    if len(hits) != 1:
        raise AssertionError(f"expected one neighbour in Q, found {len(hits)}")
    return hits[0]


def timed(fn, *args, **kw):
    """``(result, milliseconds)``."""
    t = time.perf_counter()
    out = fn(*args, **kw)
    return out, (time.perf_counter() - t) * 1000
