"""Arithmetic in GF(2^m) with elements stored as m-bit integers.

Bit ``j`` of an element is the coefficient of ``x**j`` in its polynomial
residue.  The canonical enumeration of the field is by bit pattern:
``alpha_i`` is the element whose integer value is ``i - 1``, so
``alpha_1 == 0``.  Every code construction in the package indexes columns
through this enumeration.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "DEFAULT_MODULI",
    "FieldError",
    "FieldSpec",
    "GaloisField",
    "default_spec",
    "field",
    "is_irreducible",
    "poly_mod",
    "poly_mul",
]

# Primitive polynomials, so that x (bit pattern 0b10) generates the
# multiplicative group.
DEFAULT_MODULI = {
    2: 0x7,  # x^2 + x + 1
    3: 0xB,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x83,  # x^7 + x + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}

MIN_M = 2
MAX_M = 16


class FieldError(ValueError):
    """Raised for an invalid field description."""


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, mod: int) -> int:
    """Remainder of ``a`` modulo ``mod`` in GF(2)[x]."""
    dm = mod.bit_length()
    while a.bit_length() >= dm:
        a ^= mod << (a.bit_length() - dm)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1 << 1, 1 << (deg // 2 + 1)):
        if poly_mod(poly, d) == 0:
            return False
    return True


def _prime_factors(k: int) -> list[int]:
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """Description of GF(2^m): degree, modulus and a primitive element.

    The text form ``m=3,mod=0xb,gen=0x2`` is accepted by :meth:`parse`;
    ``mod`` and ``gen`` may be omitted to take the defaults.
    """

    m: int
    modulus: int
    generator: int = 0b10

    def __str__(self) -> str:
        return f"m={self.m},mod={self.modulus:#x},gen={self.generator:#x}"

    @property
    def n(self) -> int:
        """Number of field elements, ``2**m``."""
        return 1 << self.m

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        fields = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            match = re.fullmatch(r"(m|mod|gen)\s*=\s*(\w+)", part)
            if match is None:
                raise FieldError(f"cannot parse field component {part!r}")
            fields[match.group(1)] = int(match.group(2), 0)
        if "m" not in fields:
            raise FieldError(f"field description {text!r} lacks m=")
        m = fields["m"]
        if m not in DEFAULT_MODULI:
            raise FieldError(f"m={m} outside supported range {MIN_M}..{MAX_M}")
        spec = cls(m, fields.get("mod", DEFAULT_MODULI[m]), fields.get("gen", 0b10))
        spec.validate()
        return spec

    def validate(self) -> None:
        if not MIN_M <= self.m <= MAX_M:
            raise FieldError(f"m={self.m} outside supported range {MIN_M}..{MAX_M}")
        if self.modulus.bit_length() - 1 != self.m:
            raise FieldError(f"modulus {self.modulus:#x} does not have degree {self.m}")
        if not is_irreducible(self.modulus):
            raise FieldError(f"modulus {self.modulus:#x} is reducible")
        if not 0 < self.generator < self.n:
            raise FieldError(f"generator {self.generator:#x} is not a nonzero element")
        order = self.n - 1
        for p in _prime_factors(order):
            if _pow(self.generator, order // p, self.modulus) == 1:
                raise FieldError(
                    f"generator {self.generator:#x} is not primitive mod {self.modulus:#x}"
                )


def _pow(a: int, k: int, mod: int) -> int:
    result = 1
    while k:
        if k & 1:
            result = poly_mod(poly_mul(result, a), mod)
        a = poly_mod(poly_mul(a, a), mod)
        k >>= 1
    return result


def default_spec(m: int) -> FieldSpec:
    if m not in DEFAULT_MODULI:
        raise FieldError(f"m={m} outside supported range {MIN_M}..{MAX_M}")
    return FieldSpec(m, DEFAULT_MODULI[m], 0b10)


class GaloisField:
    """GF(2^m) for a validated :class:`FieldSpec`.

    Multiplication goes through log/antilog tables built from the
    generator, so the spec is validated on construction.
    """

    def __init__(self, spec: FieldSpec):
        spec.validate()
        self.spec = spec
        self.m = spec.m
        self.order = spec.n
        exp = [0] * (2 * (self.order - 1))
        log = [0] * self.order
        x = 1
        for k in range(self.order - 1):
            exp[k] = x
            log[x] = k
            x = poly_mod(poly_mul(x, spec.generator), spec.modulus)
        for k in range(self.order - 1, 2 * (self.order - 1)):
            exp[k] = exp[k - (self.order - 1)]
        self._exp = exp
        self._log = log

    def __repr__(self) -> str:
        return f"GaloisField({self.spec})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GaloisField) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def elements(self) -> list[int]:
        """``(alpha_1, ..., alpha_n)``; ``alpha_i`` has bit pattern ``i - 1``."""
        return list(range(self.order))

    def index_of(self, a: int) -> int:
        """1-based position of ``a`` in :meth:`elements`."""
        self._check(a)
        return a + 1

    def _check(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise FieldError(f"{a} is not an element of GF(2^{self.m})")

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def pow(self, a: int, k: int) -> int:
        """Square-and-multiply; negative ``k`` raises the inverse."""
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = 1
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        """Multiplicative inverse, with ``inv(0) == 0``."""
        return self.pow(a, self.order - 2)

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element, by repeated multiplication."""
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def mul_slow(self, a: int, b: int) -> int:
        """Long-hand polynomial product and reduction (no tables)."""
        return poly_mod(poly_mul(a, b), self.spec.modulus)


@lru_cache(maxsize=None)
def _field(spec: FieldSpec) -> GaloisField:
    return GaloisField(spec)


def field(spec: FieldSpec | int) -> GaloisField:
    """Cached :class:`GaloisField` for a spec, or for the default spec of degree ``m``."""
    if isinstance(spec, int):
        spec = default_spec(spec)
    return _field(spec)
