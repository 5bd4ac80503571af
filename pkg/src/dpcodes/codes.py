"""Builders for every code family, plus shortening and the automorphisms tau_z.

Ternary codes live in X^n and are stored as two parallel arrays: ``stars``
(1-based star coordinate) and ``bits`` (with 0 under the star).  Binary
codes use ``bits`` alone.  Codes above :data:`MATERIALIZE_CAP` words come
back as :class:`LazyCode`, which supports membership, streaming and random
sampling but never lists its words.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .gf2field import FieldSpec
from .hamming import ColumnMap, Coset, pair_arrays
from .operators import (
    MOperator,
    OperatorError,
    is_apn,
    is_bijective,
    is_f_plus_id_bijective,
    satisfies_propf,
)
from .words import Automorphism, BinaryWord, TernaryWord, Word, space_size

__all__ = [
    "CONFERENCE_MATRIX",
    "Code",
    "ConstructionError",
    "LazyCode",
    "MATERIALIZE_CAP",
    "SizeLimitError",
    "build_d3",
    "build_d4_conference",
    "build_d5",
    "build_preparata",
    "build_preparata_evf",
    "d4_length_admissible",
    "d3_length_admissible",
    "shorten",
    "tau_z",
]

MATERIALIZE_CAP = 1 << 20

CONFERENCE_MATRIX = (
    (0, 1, 1, 1, 1, 1),
    (1, 0, 1, -1, -1, 1),
    (1, 1, 0, 1, -1, -1),
    (1, -1, 1, 0, 1, -1),
    (1, -1, -1, 1, 0, 1),
    (1, 1, -1, -1, 1, 0),
)


class ConstructionError(ValueError):
    """The operator or parameters do not meet a construction's requirements."""


class SizeLimitError(ConstructionError):
    """The requested code is too large to build."""


def _lex_order(n: int, bits: np.ndarray, stars: np.ndarray | None) -> np.ndarray:
    # symbol ranks follow ASCII: '*' < '0' < '1'
    keys = []
    for i in range(n):
        sym = ((bits >> np.uint64(i)) & np.uint64(1)).astype(np.int8) + 1
        if stars is not None:
            sym[stars == i + 1] = 0
        keys.append(sym)
    return np.lexsort(keys[::-1]) if keys else np.arange(len(bits))


@dataclass
class Code:
    """A finite set of words of one length and alphabet, with provenance."""

    n: int
    alphabet: str
    bits: np.ndarray
    stars: np.ndarray | None
    claimed_distance: int
    claimed_cardinality: int
    meta: dict = dc_field(default_factory=dict)
    spec: FieldSpec | None = None
    operator: MOperator | None = None

    def __post_init__(self):
        if self.alphabet not in ("binary", "ternary"):
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        if (self.alphabet == "ternary") != (self.stars is not None):
            raise ValueError("ternary codes need stars, binary codes must not have them")
        bits = np.asarray(self.bits, dtype=np.uint64)
        stars = None if self.stars is None else np.asarray(self.stars, dtype=np.int64)
        order = _lex_order(self.n, bits, stars)
        self.bits = bits[order]
        self.stars = None if stars is None else stars[order]

    @classmethod
    def from_words(cls, words: Iterable[Word], claimed_distance: int = 0, **kw) -> "Code":
        words = list(dict.fromkeys(words))
        if not words:
            raise ValueError("cannot infer the length of an empty code; pass arrays")
        n = words[0].n
        ternary = isinstance(words[0], TernaryWord)
        if any(w.n != n or isinstance(w, TernaryWord) != ternary for w in words):
            raise ValueError("all words must share length and alphabet")
        bits = np.array([w.bits for w in words], dtype=np.uint64)
        stars = np.array([w.star for w in words], dtype=np.int64) if ternary else None
        return cls(
            n,
            "ternary" if ternary else "binary",
            bits,
            stars,
            claimed_distance=claimed_distance,
            claimed_cardinality=kw.pop("claimed_cardinality", len(words)),
            **kw,
        )

    def __len__(self) -> int:
        return len(self.bits)

    def word(self, k: int) -> Word:
        if self.stars is None:
            return BinaryWord(self.n, int(self.bits[k]))
        return TernaryWord(self.n, int(self.stars[k]), int(self.bits[k]))

    def __iter__(self) -> Iterator[Word]:
        for k in range(len(self)):
            yield self.word(k)

    @cached_property
    def _keys(self) -> frozenset:
        stars = self.stars if self.stars is not None else np.zeros(len(self), dtype=np.int64)
        return frozenset(zip(stars.tolist(), self.bits.tolist()))

    def __contains__(self, w: Word) -> bool:
        if w.n != self.n:
            return False
        star = w.star if isinstance(w, TernaryWord) else 0
        if (star == 0) != (self.alphabet == "binary"):
            return False
        return (star, w.bits) in self._keys

    def word_set(self) -> set[Word]:
        return set(self)

    @property
    def family(self) -> str:
        return self.meta.get("family", "custom")

    def issues(self) -> list[str]:
        """Violations of the code invariants (empty when none)."""
        out = []
        if len(self) != self.claimed_cardinality:
            out.append(f"has {len(self)} words, claims {self.claimed_cardinality}")
        if len(self) < 2:
            out.append("fewer than 2 words")
        if len(self._keys) != len(self):
            out.append("duplicate words")
        return out

    def replace_words(self, words: Iterable[Word], **meta) -> "Code":
        """A copy holding ``words`` instead, with extra metadata."""
        new = Code.from_words(
            words,
            claimed_distance=self.claimed_distance,
            meta={**self.meta, **meta},
            spec=self.spec,
            operator=self.operator,
        )
        return new

    def sample(self, count: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray | None]:
        idx = rng.integers(0, len(self), size=count)
        return self.bits[idx], None if self.stars is None else self.stars[idx]


@dataclass
class LazyCode:
    """A ternary code too large to list: membership, streaming and sampling only."""

    n: int
    claimed_distance: int
    claimed_cardinality: int
    meta: dict
    spec: FieldSpec
    operator: MOperator
    _contains: object = dc_field(repr=False)
    _stream: object = dc_field(repr=False)
    _sample: object = dc_field(repr=False)

    alphabet = "ternary"

    def __len__(self) -> int:
        return self.claimed_cardinality

    def __contains__(self, w: TernaryWord) -> bool:
        return w.n == self.n and isinstance(w, TernaryWord) and self._contains(w)

    def __iter__(self) -> Iterator[TernaryWord]:
        return self._stream()

    @property
    def family(self) -> str:
        return self.meta["family"]

    def sample(self, count: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
        """``count`` uniformly random codewords as ``(bits, stars)`` arrays."""
        return self._sample(count, rng)


def _meta(family: str, spec: FieldSpec | None, f: MOperator | None, **extra) -> dict:
    meta = {"family": family}
    if spec is not None:
        meta.update(m=spec.m, modulus=hex(spec.modulus), generator=hex(spec.generator))
    if f is not None:
        meta["operator"] = f.name
    meta.update(extra)
    return meta


def _require(ok: bool, what: str, f: MOperator) -> None:
    if not ok:
        raise ConstructionError(f"operator {f.name} fails: {what}")


def _even_endpoint(w: TernaryWord) -> tuple[int, int]:
    """``(even, odd)`` binary endpoints of the edge of ``w``."""
    lo, hi = w.bits, w.bits | w.star_mask
    return (lo, hi) if lo.bit_count() % 2 == 0 else (hi, lo)


def d3_length_admissible(n: int) -> bool:
    """Necessary condition for a perfect distance-3 code in X^n: n divides 2^(n-1)."""
    return n >= 2 and (1 << (n - 1)) % n == 0


def d4_length_admissible(n: int) -> bool:
    """Necessary condition for a diameter perfect distance-4 code: (3n-2) | n 2^(n-1)."""
    return n >= 2 and space_size(n) % (3 * n - 2) == 0


def build_d3(spec: FieldSpec, f: MOperator) -> Code | LazyCode:
    """Union over beta of R(H0_beta, H1_f(beta)) for identity columns.

    ``f`` must be one-to-one with ``f + Id`` one-to-one.  The result has
    2^(n-1) words; the block for ``beta`` uses the single star coordinate
    ``i`` with ``alpha_i = beta + f(beta)`` (``meta['directions']``).
    """
    if f.m != spec.m:
        raise ConstructionError(f"operator degree {f.m} does not match m={spec.m}")
    _require(is_bijective(f), "one-to-one", f)
    _require(is_f_plus_id_bijective(f), "f + Id one-to-one", f)
    ident = ColumnMap.identity(spec)
    n = spec.n
    table = f.table
    directions = {beta: int(ident.position_of(beta ^ int(table[beta]))) for beta in range(n)}
    meta = _meta("d3", spec, f, directions=directions)
    size = 1 << (n - 1)
    blocks = [(Coset(ident, 0, beta), Coset(ident, 1, int(table[beta]))) for beta in range(n)]

    if size > MATERIALIZE_CAP:
        def contains(w: TernaryWord) -> bool:
            p, _ = _even_endpoint(w)
            beta = 0
            for i in range(n):
                if p >> i & 1:
                    beta ^= i
            return w.star == directions[beta]

        def stream() -> Iterator[TernaryWord]:
            for P, Q in blocks:
                for start in range(0, P.size, 1 << 16):
                    stars, bits = pair_arrays(P.members(start, start + (1 << 16)), Q)
                    for s, b in zip(stars.tolist(), bits.tolist()):
                        yield TernaryWord(n, s, b)

        def sample(count, rng):
            betas = rng.integers(0, n, size=count)
            idx = rng.integers(0, blocks[0][0].size, size=count, dtype=np.uint64)
            bits = np.zeros(count, dtype=np.uint64)
            stars = np.zeros(count, dtype=np.int64)
            for beta in np.unique(betas):
                sel = betas == beta
                P, Q = blocks[int(beta)]
                stars[sel], bits[sel] = pair_arrays(P.members_at(idx[sel]), Q)
            return bits, stars

        return LazyCode(n, 3, size, meta, spec, f, contains, stream, sample)

    all_bits, all_stars = [], []
    for P, Q in blocks:
        stars, bits = pair_arrays(P.to_array(), Q)
        all_stars.append(stars)
        all_bits.append(bits)
    return Code(
        n, "ternary", np.concatenate(all_bits), np.concatenate(all_stars),
        claimed_distance=3, claimed_cardinality=size, meta=meta, spec=spec, operator=f,
    )


def build_d5(spec: FieldSpec, f: MOperator, syndrome: int = 0) -> Code | LazyCode:
    """R(P, Q) with P the Hamming code over ``alpha_i`` and Q an odd coset over ``f(alpha_i)``.

    ``f`` must be a one-to-one APN map; ``syndrome`` selects Q.
    """
    if f.m != spec.m:
        raise ConstructionError(f"operator degree {f.m} does not match m={spec.m}")
    _require(is_bijective(f), "one-to-one", f)
    _require(is_apn(f), "APN", f)
    n = spec.n
    P = Coset(ColumnMap.identity(spec), 0, 0)
    Q = Coset(ColumnMap.from_table(spec, f.table, f.name), 1, syndrome)
    meta = _meta("d5", spec, f, syndrome=syndrome)
    if P.size > MATERIALIZE_CAP:
        def contains(w: TernaryWord) -> bool:
            p, q = _even_endpoint(w)
            return p in P and q in Q

        def stream() -> Iterator[TernaryWord]:
            for start in range(0, P.size, 1 << 16):
                stars, bits = pair_arrays(P.members(start, start + (1 << 16)), Q)
                for s, b in zip(stars.tolist(), bits.tolist()):
                    yield TernaryWord(n, s, b)

        def sample(count, rng):
            idx = rng.integers(0, P.size, size=count, dtype=np.uint64)
            stars, bits = pair_arrays(P.members_at(idx), Q)
            return bits, stars

        return LazyCode(n, 5, P.size, meta, spec, f, contains, stream, sample)
    stars, bits = pair_arrays(P.to_array(), Q)
    return Code(
        n, "ternary", bits, stars,
        claimed_distance=5, claimed_cardinality=P.size, meta=meta, spec=spec, operator=f,
    )


def build_d4_conference() -> Code:
    """The 12-word distance-4 code in X^6 read off the rows of a 6x6 conference matrix.

    Each row gives two words: ``0 -> *`` with ``(1, -1) -> (0, 1)`` and with
    ``(1, -1) -> (1, 0)``.
    """
    words = []
    for row in CONFERENCE_MATRIX:
        for one, minus_one in ((0, 1), (1, 0)):
            text = "".join("*" if v == 0 else str(one if v == 1 else minus_one) for v in row)
            star = text.index("*") + 1
            bits = sum(1 << i for i, ch in enumerate(text) if ch == "1")
            words.append(TernaryWord(6, star, bits))
    return Code.from_words(words, claimed_distance=4, meta={"family": "d4conf"})


def _preparata_parts(spec: FieldSpec, f: MOperator):
    if f.m != spec.m:
        raise ConstructionError(f"operator degree {f.m} does not match m={spec.m}")
    _require(is_bijective(f), "one-to-one", f)
    _require(is_apn(f), "APN", f)
    _require(satisfies_propf(f, fast=f.m > 8), "the six-element sum property", f)
    n = spec.n
    P = Coset(ColumnMap.identity(spec), 0, 0)
    Q = Coset(ColumnMap.from_table(spec, f.table, f.name), 1, 0)
    if P.size ** 2 > MATERIALIZE_CAP or 2 * n > 64:
        raise SizeLimitError(f"Preparata-like code of size {P.size ** 2} is too large")
    members = P.to_array()
    stars, _ = pair_arrays(members, Q)
    q = members ^ (np.uint64(1) << (stars - 1).astype(np.uint64))
    a = members[:, None]
    b = members[None, :]
    qb = q[None, :]
    return n, P, a, b, qb


def build_preparata(spec: FieldSpec, f: MOperator) -> Code:
    """Binary code {(a + b + q(b), a + q(b)) : a, b in P} of length 2n.

    Coordinates 1..n hold the first half.  ``f`` must be a one-to-one APN
    map with the six-element sum property.
    """
    n, P, a, b, qb = _preparata_parts(spec, f)
    left = (a ^ b ^ qb).ravel()
    right = (a ^ qb).ravel()
    words = left | (right << np.uint64(n))
    return Code(
        2 * n, "binary", words, None,
        claimed_distance=6, claimed_cardinality=P.size ** 2,
        meta=_meta("preparata", spec, f), spec=spec, operator=f,
    )


def build_preparata_evf(spec: FieldSpec, f: MOperator) -> Code:
    """The same code written as {(a + w(b), a + b + w(b))} with w(b) = b + q(b)."""
    n, P, a, b, qb = _preparata_parts(spec, f)
    omega = b ^ qb
    left = (a ^ omega).ravel()
    right = (a ^ b ^ omega).ravel()
    words = left | (right << np.uint64(n))
    return Code(
        2 * n, "binary", words, None,
        claimed_distance=6, claimed_cardinality=P.size ** 2,
        meta=_meta("preparata-evf", spec, f), spec=spec, operator=f,
    )


def shorten(c: Code, fixed: dict[int, int] | Iterable[tuple[int, int]]) -> Code:
    """Keep the words agreeing with ``fixed`` (coordinate -> bit) and delete those coordinates.

    A result with fewer than two words is flagged in ``meta['degenerate']``.
    """
    fixed = dict(fixed)
    if any(not 1 <= i <= c.n for i in fixed) or any(v not in (0, 1) for v in fixed.values()):
        raise ValueError(f"bad fixing {fixed}")
    if not fixed:
        return c
    mask = sum(1 << (i - 1) for i in fixed)
    want = sum(v << (i - 1) for i, v in fixed.items())
    keep = (c.bits & np.uint64(mask)) == np.uint64(want)
    if c.stars is not None:
        keep &= (np.uint64(1) << (c.stars - 1).astype(np.uint64)) & np.uint64(mask) == 0
    kept = [i for i in range(1, c.n + 1) if i not in fixed]
    bits = np.zeros(int(keep.sum()), dtype=np.uint64)
    src = c.bits[keep]
    for j, i in enumerate(kept):
        bits |= ((src >> np.uint64(i - 1)) & np.uint64(1)) << np.uint64(j)
    stars = None
    if c.stars is not None:
        rank = np.zeros(c.n + 1, dtype=np.int64)
        rank[kept] = np.arange(1, len(kept) + 1)
        stars = rank[c.stars[keep]]
    meta = {**c.meta, "shortened": sorted(fixed.items())}
    if len(bits) < 2:
        meta["degenerate"] = True
    return Code(
        len(kept), c.alphabet, bits, stars,
        claimed_distance=c.claimed_distance, claimed_cardinality=len(bits),
        meta=meta, spec=c.spec, operator=c.operator,
    )


def tau_z(c: Code | LazyCode, z: int | BinaryWord) -> Automorphism:
    """The automorphism ``(pi_z, z)`` of a distance-3 code built by :func:`build_d3`.

    ``pi_z`` sends coordinate ``i`` to the coordinate of
    ``alpha_i + s_z + f(s_z)``, where ``s_z`` is the sum of ``alpha_j`` over
    the one-coordinates of ``z``.
    """
    if c.family != "d3" or c.operator is None:
        raise ValueError("tau_z needs a code built by build_d3")
    bits = z.bits if isinstance(z, BinaryWord) else int(z)
    if bits.bit_count() % 2:
        raise ValueError("z must have even weight")
    s = 0
    for j in range(c.n):
        if bits >> j & 1:
            s ^= j  # alpha_{j+1} has bit pattern j
    shift = s ^ c.operator.apply(s)
    perm = tuple(((i - 1) ^ shift) + 1 for i in range(1, c.n + 1))
    return Automorphism(perm, bits)
