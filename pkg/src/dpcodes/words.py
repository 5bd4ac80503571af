"""The spaces F^n = {0,1}^n and X^n, edges of the binary cube, and automorphisms.

Coordinates are numbered 1..n.  Internally coordinate ``i`` is bit ``i - 1``
of an integer.  Text renders coordinate 1 leftmost, so ``01*0`` has its star
at coordinate 3.  A ternary word stores 0 in the bit under its star, which
makes equality and hashing plain field comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Union

__all__ = [
    "Automorphism",
    "BinaryWord",
    "Edge",
    "TernaryWord",
    "Word",
    "all_binary_words",
    "all_edges",
    "all_ternary_words",
    "anticode_A",
    "apply_automorphism",
    "ball",
    "chi",
    "chi_inv",
    "diameter",
    "edge_distance",
    "hamming_distance",
    "parse_word",
    "space_size",
    "square_anticode",
]


def _render(n: int, bits: int, star: int = 0) -> str:
    chars = []
    for i in range(1, n + 1):
        if i == star:
            chars.append("*")
        else:
            chars.append("1" if bits >> (i - 1) & 1 else "0")
    return "".join(chars)


@dataclass(frozen=True, slots=True)
class BinaryWord:
    n: int
    bits: int

    def __post_init__(self):
        if self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.n}")

    def __str__(self) -> str:
        return _render(self.n, self.bits)

    def __getitem__(self, i: int) -> int:
        """Symbol at 1-based coordinate ``i``."""
        return self.bits >> (i - 1) & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def flip(self, i: int) -> "BinaryWord":
        return BinaryWord(self.n, self.bits ^ (1 << (i - 1)))


@dataclass(frozen=True, slots=True)
class TernaryWord:
    """A word of X^n: one ``*`` at coordinate ``star``, bits elsewhere."""

    n: int
    star: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.star <= self.n:
            raise ValueError(f"star position {self.star} outside 1..{self.n}")
        if self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.n}")
        if self.bits >> (self.star - 1) & 1:
            raise ValueError("bit under the star must be 0")

    def __str__(self) -> str:
        return _render(self.n, self.bits, self.star)

    def __getitem__(self, i: int) -> int | str:
        return "*" if i == self.star else self.bits >> (i - 1) & 1

    @property
    def star_mask(self) -> int:
        return 1 << (self.star - 1)

    def fill(self, value: int) -> BinaryWord:
        """The binary word obtained by writing ``value`` under the star."""
        return BinaryWord(self.n, self.bits | (self.star_mask if value else 0))


Word = Union[BinaryWord, TernaryWord]


def parse_word(text: str) -> Word:
    """Parse ``0``/``1``/``*`` text, coordinate 1 first."""
    text = text.strip()
    n = len(text)
    if n == 0 or set(text) - set("01*"):
        raise ValueError(f"not a word over 0, 1, *: {text!r}")
    stars = [i + 1 for i, ch in enumerate(text) if ch == "*"]
    bits = sum(1 << i for i, ch in enumerate(text) if ch == "1")
    if not stars:
        return BinaryWord(n, bits)
    if len(stars) > 1:
        raise ValueError(f"more than one star in {text!r}")
    return TernaryWord(n, stars[0], bits)


def _star_mask(w: Word) -> int:
    return w.star_mask if isinstance(w, TernaryWord) else 0


def hamming_distance(a: Word, b: Word) -> int:
    """Number of coordinates where the symbols differ; ``*`` differs from 0 and 1."""
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")
    sa, sb = _star_mask(a), _star_mask(b)
    return ((a.bits ^ b.bits) & ~(sa | sb)).bit_count() + (sa ^ sb).bit_count()


def space_size(n: int) -> int:
    """``|X^n| = n * 2**(n-1)``."""
    return n << (n - 1)


def all_binary_words(n: int) -> Iterator[BinaryWord]:
    for bits in range(1 << n):
        yield BinaryWord(n, bits)


def all_ternary_words(n: int) -> Iterator[TernaryWord]:
    for star in range(1, n + 1):
        mask = 1 << (star - 1)
        for bits in range(1 << n):
            if not bits & mask:
                yield TernaryWord(n, star, bits)


@dataclass(frozen=True, slots=True)
class Edge:
    """Edge ``{base, base + e_direction}`` of the binary n-cube."""

    n: int
    base: int
    direction: int

    def __post_init__(self):
        if not 1 <= self.direction <= self.n:
            raise ValueError(f"direction {self.direction} outside 1..{self.n}")
        if self.base >> (self.direction - 1) & 1:
            raise ValueError("base must have 0 at the edge direction")

    @classmethod
    def between(cls, x: BinaryWord, y: BinaryWord) -> "Edge":
        diff = x.bits ^ y.bits
        if x.n != y.n or diff.bit_count() != 1:
            raise ValueError(f"{x} and {y} are not adjacent")
        return cls(x.n, x.bits & ~diff, diff.bit_length())

    @property
    def endpoints(self) -> tuple[BinaryWord, BinaryWord]:
        top = self.base | (1 << (self.direction - 1))
        return BinaryWord(self.n, self.base), BinaryWord(self.n, top)

    def __str__(self) -> str:
        x, y = self.endpoints
        return f"{{{x},{y}}}"


def all_edges(n: int) -> Iterator[Edge]:
    for d in range(1, n + 1):
        for base in range(1 << n):
            if not base >> (d - 1) & 1:
                yield Edge(n, base, d)


def chi(e: Edge) -> TernaryWord:
    """Replace the direction coordinate of an edge by ``*``."""
    return TernaryWord(e.n, e.direction, e.base)


def chi_inv(t: TernaryWord) -> Edge:
    return Edge(t.n, t.bits, t.star)


def edge_distance(e1: Edge, e2: Edge) -> int:
    """Distance between edges: closest endpoint pair, plus 2 unless parallel."""
    if e1.n != e2.n:
        raise ValueError(f"length mismatch: {e1.n} != {e2.n}")
    # minimum over all four endpoint pairs; with one endpoint of e1 held
    # fixed the non-parallel case can come out one too large
    d = min(hamming_distance(x, y) for x in e1.endpoints for y in e2.endpoints)
    return d if e1.direction == e2.direction else d + 2


def ball(z: Word, radius: int = 1) -> set[TernaryWord]:
    """All words of X^n within Hamming distance ``radius`` of ``z``.

    ``z`` may be binary or ternary.
    """
    n = z.n
    out = set()
    for star in range(1, n + 1):
        smask = 1 << (star - 1)
        if isinstance(z, TernaryWord) and star != z.star:
            # star moves: both old and new star coordinates differ
            cost = 2
            fixed = smask | z.star_mask
            bases = [z.bits & ~smask, (z.bits & ~smask) | z.star_mask]
        elif isinstance(z, TernaryWord):
            cost, fixed, bases = 0, smask, [z.bits]
        else:
            cost, fixed, bases = 1, smask, [z.bits & ~smask]
        if cost > radius:
            continue
        free = [i for i in range(n) if not fixed >> i & 1]
        for base in bases:
            for k in range(radius - cost + 1):
                for flips in combinations(free, k):
                    bits = base
                    for i in flips:
                        bits ^= 1 << i
                    out.add(TernaryWord(n, star, bits))
    return out


def anticode_A(z: TernaryWord) -> set[TernaryWord]:
    """``B_z`` together with the balls around both binary fillings of ``z``."""
    if z.n < 2:
        raise ValueError("anticode needs n >= 2")
    return ball(z, 1) | ball(z.fill(0), 1) | ball(z.fill(1), 1)


def square_anticode(n: int) -> set[TernaryWord]:
    """The 4-word diameter-2 anticode {*0.., 0*.., *1.., 1*..}."""
    if n < 2:
        raise ValueError("square anticode needs n >= 2")
    return {
        TernaryWord(n, 1, 0b00),
        TernaryWord(n, 2, 0b00),
        TernaryWord(n, 1, 0b10),
        TernaryWord(n, 2, 0b01),
    }


def diameter(words: Iterable[Word]) -> int:
    """Maximum pairwise distance (0 for a single word)."""
    words = list(words)
    best = 0
    for i, a in enumerate(words):
        for b in words[i + 1:]:
            best = max(best, hamming_distance(a, b))
    return best


@dataclass(frozen=True)
class Automorphism:
    """``tau = (pi, z)`` acting by ``x -> pi(x) + z``, where ``*`` absorbs addition.

    ``perm[i - 1]`` is ``pi(i)``; the symbol at coordinate ``i`` moves to
    coordinate ``pi(i)``.
    """

    perm: tuple[int, ...]
    shift: int

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{len(self.perm)}")
        if self.shift >> len(self.perm):
            raise ValueError("shift longer than the permutation")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "Automorphism":
        return cls(tuple(range(1, n + 1)), 0)

    def permute_bits(self, bits: int) -> int:
        out = 0
        for i, target in enumerate(self.perm):
            if bits >> i & 1:
                out |= 1 << (target - 1)
        return out

    def __call__(self, w: Word) -> Word:
        return apply_automorphism(self, w)

    def inverse(self) -> "Automorphism":
        inv = [0] * self.n
        for i, target in enumerate(self.perm, start=1):
            inv[target - 1] = i
        inv_t = Automorphism(tuple(inv), 0)
        return Automorphism(inv_t.perm, inv_t.permute_bits(self.shift))

    def compose(self, first: "Automorphism") -> "Automorphism":
        """``self o first``: apply ``first``, then ``self``."""
        perm = tuple(self.perm[first.perm[i] - 1] for i in range(self.n))
        return Automorphism(perm, self.permute_bits(first.shift) ^ self.shift)


def apply_automorphism(t: Automorphism, w: Word) -> Word:
    if t.n != w.n:
        raise ValueError(f"length mismatch: {t.n} != {w.n}")
    bits = t.permute_bits(w.bits) ^ t.shift
    if isinstance(w, TernaryWord):
        star = t.perm[w.star - 1]
        return TernaryWord(w.n, star, bits & ~(1 << (star - 1)))
    return BinaryWord(w.n, bits)
