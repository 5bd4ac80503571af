"""Extended Hamming codes of length n = 2^m, their cosets, and the distance-1 pairing.

A word ``w`` of length n is an integer whose bit ``i - 1`` is coordinate
``i``.  A :class:`ColumnMap` assigns a field element to each coordinate; the
syndrome of ``w`` is its weight parity together with the XOR of the columns
at its one-coordinates.  A coset is the set of words with a given syndrome.

For an even coset ``P`` and an odd coset ``Q`` every ``p`` in ``P`` has
exactly one neighbour ``q(p)`` in ``Q``; the flipped coordinate is read off
from the syndrome, never searched for.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .gf2field import FieldSpec
from .words import BinaryWord, TernaryWord

__all__ = [
    "ColumnMap",
    "Coset",
    "MATERIALIZE_CAP",
    "pair_q",
    "pair_r",
    "syndrome",
]

# Largest coset that to_array() will build in one piece.
MATERIALIZE_CAP = 1 << 22


@dataclass(frozen=True)
class ColumnMap:
    """Column ``i`` (1-based) is ``columns[i - 1]``; all columns distinct."""

    spec: FieldSpec
    columns: tuple[int, ...]
    name: str = "id"

    def __post_init__(self):
        if len(self.columns) != self.spec.n:
            raise ValueError(f"expected {self.spec.n} columns, got {len(self.columns)}")
        if len(set(self.columns)) != len(self.columns):
            raise ValueError(f"columns of {self.name} are not pairwise distinct")

    @classmethod
    def identity(cls, spec: FieldSpec) -> "ColumnMap":
        return cls(spec, tuple(range(spec.n)), "id")

    @classmethod
    def from_table(cls, spec: FieldSpec, table: Sequence[int], name: str) -> "ColumnMap":
        """Columns ``table[alpha_i]``, i.e. an operator applied to the enumeration."""
        return cls(spec, tuple(int(table[a]) for a in range(spec.n)), name)

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def m(self) -> int:
        return self.spec.m

    @cached_property
    def _position(self) -> dict[int, int]:
        return {c: i + 1 for i, c in enumerate(self.columns)}

    def position_of(self, value: int) -> int:
        """The coordinate whose column equals ``value``."""
        return self._position[value]

    @cached_property
    def column_array(self) -> np.ndarray:
        return np.array(self.columns, dtype=np.int64)

    @cached_property
    def position_array(self) -> np.ndarray:
        """``position_array[v]`` is the 1-based coordinate carrying column ``v``."""
        out = np.zeros(self.n, dtype=np.int64)
        out[self.column_array] = np.arange(1, self.n + 1)
        return out

    def syndromes(self, words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Vectorised :func:`syndrome` over an array of words."""
        words = np.asarray(words, dtype=np.uint64)
        s = np.zeros(words.shape, dtype=np.int64)
        for i, col in enumerate(self.columns):
            if col:
                s ^= ((words >> np.uint64(i)) & np.uint64(1)).astype(np.int64) * col
        parity = (np.bitwise_count(words) & 1).astype(np.int64)
        return parity, s


def _bits_of(w: int | BinaryWord) -> int:
    return w.bits if isinstance(w, BinaryWord) else int(w)


def syndrome(w: int | BinaryWord, cm: ColumnMap) -> tuple[int, int]:
    """``(weight mod 2, XOR of the columns where w is 1)``."""
    if isinstance(w, BinaryWord) and w.n != cm.n:
        raise ValueError(f"length mismatch: word {w.n}, columns {cm.n}")
    bits = _bits_of(w)
    if bits >> cm.n:
        raise ValueError(f"word {bits:#x} longer than {cm.n}")
    s = 0
    i = 0
    while bits:
        if bits & 1:
            s ^= cm.columns[i]
        bits >>= 1
        i += 1
    return _bits_of(w).bit_count() & 1, s


@dataclass(frozen=True)
class Coset:
    """``{w : syndrome(w, columns) == (parity, syndrome)}``, of size 2^n / 2n.

    Members are listed by an information set: the coordinates outside a
    pivot set (chosen greedily in coordinate order) run over all values in
    increasing numeric order and the pivots are solved for.
    """

    columns: ColumnMap
    parity: int
    syndrome: int
    _cache: dict = dc_field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")
        if not 0 <= self.syndrome < self.columns.spec.n:
            raise ValueError(f"syndrome {self.syndrome} is not a field element")

    @property
    def n(self) -> int:
        return self.columns.n

    @property
    def m(self) -> int:
        return self.columns.m

    @property
    def size(self) -> int:
        return 1 << (self.n - self.m - 1)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, w: int | BinaryWord) -> bool:
        return syndrome(w, self.columns) == (self.parity, self.syndrome)

    def _ext(self, i: int) -> int:
        return 1 | (self.columns.columns[i] << 1)

    def _setup(self):
        if "pivots" in self._cache:
            return self._cache["pivots"], self._cache["free"], self._cache["solve"]
        basis: dict[int, int] = {}  # leading bit -> reduced vector
        pivots = []
        for i in range(self.n):
            v = self._ext(i)
            for lead in sorted(basis, reverse=True):
                if v >> lead & 1:
                    v ^= basis[lead]
            if v:
                basis[v.bit_length() - 1] = v
                pivots.append(i)
            if len(pivots) == self.m + 1:
                break
        free = [i for i in range(self.n) if i not in pivots]
        solve = np.zeros(1 << (self.m + 1), dtype=np.uint64)
        for subset in range(1 << len(pivots)):
            ext, mask = 0, 0
            for j, i in enumerate(pivots):
                if subset >> j & 1:
                    ext ^= self._ext(i)
                    mask |= 1 << i
            solve[ext] = mask
        self._cache.update(pivots=pivots, free=free, solve=solve)
        return pivots, free, solve

    def members(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        """Members with index in ``[start, stop)`` as a uint64 array."""
        stop = self.size if stop is None else min(stop, self.size)
        return self.members_at(np.arange(start, stop, dtype=np.uint64))

    def members_at(self, indices: np.ndarray) -> np.ndarray:
        """Random access by information-set index (vectorised)."""
        _, free, solve = self._setup()
        u = np.asarray(indices, dtype=np.uint64)
        words = np.zeros(u.shape, dtype=np.uint64)
        ext = np.zeros(u.shape, dtype=np.int64)
        for j, i in enumerate(free):
            bit = (u >> np.uint64(j)) & np.uint64(1)
            words |= bit << np.uint64(i)
            ext ^= bit.astype(np.int64) * self._ext(i)
        target = self.parity | (self.syndrome << 1)
        return words | solve[ext ^ target]

    def __iter__(self) -> Iterator[int]:
        """Stream all members in index order, chunk by chunk."""
        chunk = 1 << 16
        for start in range(0, self.size, chunk):
            yield from (int(w) for w in self.members(start, start + chunk))

    def to_array(self) -> np.ndarray:
        if self.size > MATERIALIZE_CAP:
            raise MemoryError(f"coset of size {self.size} exceeds cap {MATERIALIZE_CAP}")
        return self.members()


def _check_pair(P: Coset, Q: Coset) -> None:
    if P.parity != 0:
        raise ValueError("P must be an even coset")
    if Q.parity != 1:
        raise ValueError("Q must be an odd coset")
    if P.n != Q.n:
        raise ValueError("P and Q have different lengths")


def _flip_position(p: int, Q: Coset) -> int:
    _, s = syndrome(p, Q.columns)
    return Q.columns.position_of(s ^ Q.syndrome)


def pair_q(p: int | BinaryWord, P: Coset, Q: Coset) -> int:
    """The unique word of ``Q`` at distance 1 from ``p``."""
    _check_pair(P, Q)
    p = _bits_of(p)
    if p not in P:
        raise ValueError(f"{p:#x} is not in P")
    return p ^ (1 << (_flip_position(p, Q) - 1))


def pair_r(p: int | BinaryWord, P: Coset, Q: Coset) -> TernaryWord:
    """The ternary word of the edge ``{p, q(p)}``."""
    q = pair_q(p, P, Q)
    p = _bits_of(p)
    diff = p ^ q
    return TernaryWord(P.n, diff.bit_length(), p & ~diff)


def pair_arrays(ps: np.ndarray, Q: Coset) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised pairing for words already known to lie in an even coset.

    Returns ``(stars, bits)`` of the ternary words ``r(p)``.
    """
    if Q.parity != 1:
        raise ValueError("Q must be an odd coset")
    ps = np.asarray(ps, dtype=np.uint64)
    _, s = Q.columns.syndromes(ps)
    stars = Q.columns.position_array[s ^ Q.syndrome]
    masks = np.uint64(1) << (stars - 1).astype(np.uint64)
    return stars.astype(np.int64), ps & ~masks
