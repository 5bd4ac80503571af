"""Maps F^m -> F^m used by the constructions, and brute-force checks of their properties.

Every check here runs over the full value table.  They are the trusted
layer under the code constructions, so they stay simple.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .gf2field import FieldSpec, default_spec, field

__all__ = [
    "MATRIX2",
    "MATRIX3",
    "MOperator",
    "OperatorError",
    "differential_uniformity",
    "direct_sum",
    "gold",
    "identity",
    "inverse",
    "is_apn",
    "is_bijective",
    "is_f_plus_id_bijective",
    "matrix",
    "parse_operator",
    "power",
    "primitive_mul",
    "propf_solutions",
    "satisfies_propf",
    "table_operator",
]

# Row i is a bitmask whose bit j is entry (i, j); vector component i is bit i.
MATRIX2 = (0b11, 0b01)  # [[1,1],[1,0]]
MATRIX3 = (0b011, 0b110, 0b001)  # [[1,1,0],[0,1,1],[1,0,0]]


class OperatorError(ValueError):
    """An operator literal or operator parameters are invalid."""


@dataclass(frozen=True)
class MOperator:
    """A map on GF(2^m) given symbolically, with a lazily built value table.

    ``kind`` is one of ``matrix``, ``primitive_mul``, ``power``, ``inverse``,
    ``direct_sum`` or ``table``; ``params`` holds the kind-specific data.
    ``name`` is the provenance string carried into code metadata.
    """

    spec: FieldSpec
    kind: str
    params: tuple
    name: str

    @property
    def m(self) -> int:
        return self.spec.m

    def __str__(self) -> str:
        return self.name

    def __call__(self, x: int) -> int:
        return self.apply(x)

    def apply(self, x: int) -> int:
        if not 0 <= x < self.spec.n:
            raise OperatorError(f"{x} is not in F^{self.m}")
        return self._eval(x)

    def _eval(self, x: int) -> int:
        kind = self.kind
        if kind == "matrix":
            return sum(((row & x).bit_count() & 1) << i for i, row in enumerate(self.params))
        gf = field(self.spec)
        if kind == "primitive_mul":
            return gf.mul(self.spec.generator, x)
        if kind == "power":
            return gf.pow(x, self.params[0])
        if kind == "inverse":
            return gf.inv(x)
        if kind == "direct_sum":
            left, right = self.params
            low = x & ((1 << left.m) - 1)
            return left._eval(low) | (right._eval(x >> left.m) << left.m)
        if kind == "table":
            return self.params[x]
        raise OperatorError(f"unknown operator kind {kind!r}")

    @cached_property
    def table(self) -> np.ndarray:
        return np.array([self._eval(x) for x in range(self.spec.n)], dtype=np.int64)


def matrix(rows: Sequence[int], spec: FieldSpec | None = None, name: str | None = None) -> MOperator:
    """Linear operator from bitmask rows: output bit i is parity(rows[i] & x)."""
    rows = tuple(int(r) for r in rows)
    m = len(rows)
    spec = spec or default_spec(m)
    if spec.m != m or any(r >> m for r in rows):
        raise OperatorError(f"matrix rows {rows} do not form a {spec.m}x{spec.m} matrix")
    if name is None:
        name = "matrix:" + ",".join(f"{r:x}" for r in rows)
    return MOperator(spec, "matrix", rows, name)


def identity(spec: FieldSpec) -> MOperator:
    return matrix(tuple(1 << i for i in range(spec.m)), spec, "id")


def primitive_mul(spec: FieldSpec) -> MOperator:
    """``x -> gamma * x`` for the spec's primitive element gamma."""
    return MOperator(spec, "primitive_mul", (), "gamma")


def power(spec: FieldSpec, k: int) -> MOperator:
    if k < 1:
        raise OperatorError("power exponent must be positive")
    return MOperator(spec, "power", (k,), f"pow:{k}")


def inverse(spec: FieldSpec) -> MOperator:
    """``x -> x^-1`` with ``0 -> 0``."""
    return MOperator(spec, "inverse", (), "inv")


def direct_sum(left: MOperator, right: MOperator, spec: FieldSpec | None = None) -> MOperator:
    """``(x', x'') -> (left(x'), right(x''))``; ``x'`` is the low ``left.m`` bits."""
    m = left.m + right.m
    spec = spec or default_spec(m)
    if spec.m != m:
        raise OperatorError(f"direct sum of degrees {left.m}+{right.m} needs m={m}")
    return MOperator(spec, "direct_sum", (left, right), f"sum({left.name},{right.name})")


def table_operator(spec: FieldSpec, values: Sequence[int], name: str = "table") -> MOperator:
    values = tuple(int(v) for v in values)
    if len(values) != spec.n or any(not 0 <= v < spec.n for v in values):
        raise OperatorError("table must list one field element per input")
    return MOperator(spec, "table", values, name)


def gold(spec: FieldSpec, l: int) -> MOperator:
    """The Gold map ``x -> x^(2^l + 1)``; requires gcd(l, m) == 1."""
    if l < 1 or math.gcd(l, spec.m) != 1:
        raise OperatorError(f"gold map needs gcd(l, m) = 1, got l={l}, m={spec.m}")
    k = (1 << l) + 1
    return MOperator(spec, "power", (k,), f"gold(m={spec.m},l={l})")


def is_bijective(f: MOperator) -> bool:
    return len(np.unique(f.table)) == f.spec.n


def is_f_plus_id_bijective(f: MOperator) -> bool:
    shifted = f.table ^ np.arange(f.spec.n)
    return len(np.unique(shifted)) == f.spec.n


def differential_uniformity(f: MOperator) -> int:
    """Max over a != 0 and b of #{x : f(x) + f(x + a) = b}."""
    n = f.spec.n
    t = f.table
    xs = np.arange(n)
    best = 0
    for a in range(1, n):
        counts = np.bincount(t ^ t[xs ^ a], minlength=n)
        best = max(best, int(counts.max()))
    return best


def is_apn(f: MOperator) -> bool:
    """Every nonzero input difference gives each output difference 0 or 2 times."""
    if f.m > 12:
        raise OperatorError("APN scan is capped at m <= 12")
    return differential_uniformity(f) == 2


def _distinct6(a, b, c, d, e, t):
    vals = (a, b, c, d, e, t)
    ok = np.ones(np.broadcast_shapes(*(np.shape(v) for v in vals)), dtype=bool)
    for i in range(6):
        for j in range(i + 1, 6):
            ok &= vals[i] != vals[j]
    return ok


def propf_solutions(f: MOperator, limit: int = 1, fast: bool = False) -> list[tuple[int, ...]]:
    """Solutions ``(a, b, c, d, e, t)`` in pairwise distinct elements of

        a + b + c + d = 0,  a + b + e + t = 0,
        f(a) + f(b) + f(c) + f(d) + f(e) + f(t) = 0.

    The scan runs over ``(a, b, c, e)`` with ``d = a+b+c`` and ``t = a+b+e``
    and stops after ``limit`` hits.  ``fast=True`` fixes ``a = 0, b = 1``;
    that reduction is only sound for Gold maps and is refused otherwise.
    """
    n = f.spec.n
    tab = f.table
    c = np.arange(n)[:, None]
    e = np.arange(n)[None, :]
    found: list[tuple[int, ...]] = []
    if fast:
        if not f.name.startswith("gold(") and not (
            f.kind == "power" and bin(f.params[0] - 1).count("1") == 1
        ):
            raise OperatorError("fast propf mode applies to Gold maps only")
        pairs = [(0, 1)]
    else:
        # the system is symmetric in a and b
        pairs = ((a, b) for a in range(n) for b in range(a + 1, n))
    for a, b in pairs:
        d = a ^ b ^ c
        t = a ^ b ^ e
        s = tab[a] ^ tab[b] ^ tab[c] ^ tab[d] ^ tab[e] ^ tab[t]
        hit = (s == 0) & _distinct6(a, b, c, d, e, t)
        if hit.any():
            for ci, ei in zip(*np.nonzero(hit)):
                ci, ei = int(ci), int(ei)
                found.append((a, b, ci, a ^ b ^ ci, ei, a ^ b ^ ei))
                if len(found) >= limit:
                    return found
    return found


def satisfies_propf(f: MOperator, fast: bool = False) -> bool:
    if f.m > 8 and not fast:
        raise OperatorError("unnormalised propf scan is capped at m <= 8")
    return not propf_solutions(f, limit=1, fast=fast)


_NAMED = {"matrix2": MATRIX2, "matrix3": MATRIX3}


def _split_args(body: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in body:
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def parse_operator(text: str, spec: FieldSpec | int) -> MOperator:
    """Parse an operator literal for the field ``spec``.

    Literals: ``matrix:<hex rows>`` (comma separated), ``matrix2``,
    ``matrix3``, ``gamma``, ``pow:<k>``, ``gold:<l>``, ``inv``, ``id`` and
    ``sum(<op>,<op>)``.  Inside ``sum`` a non-matrix operand names its degree
    with ``@<m>``, e.g. ``sum(gamma@2,matrix2)``.
    """
    if isinstance(spec, int):
        spec = default_spec(spec)
    text = text.strip()
    match = re.fullmatch(r"sum\((.*)\)", text)
    if match:
        args = _split_args(match.group(1))
        if len(args) != 2:
            raise OperatorError(f"sum takes two operands: {text!r}")
        left, right = (_parse_operand(a) for a in args)
        return direct_sum(left, right, spec)
    if "@" in text:
        text, _, m = text.partition("@")
        if int(m) != spec.m:
            raise OperatorError(f"operand degree {m} does not match m={spec.m}")
    if text in _NAMED:
        rows = _NAMED[text]
        if len(rows) != spec.m:
            raise OperatorError(f"{text} is a {len(rows)}x{len(rows)} matrix, m={spec.m}")
        return matrix(rows, spec, text)
    if text.startswith("matrix:"):
        rows = [int(r, 16) for r in text[len("matrix:"):].split(",") if r.strip()]
        return matrix(rows, spec)
    if text == "gamma":
        return primitive_mul(spec)
    if text == "inv":
        return inverse(spec)
    if text == "id":
        return identity(spec)
    if text.startswith("pow:"):
        return power(spec, int(text[4:], 0))
    if text.startswith("gold:"):
        return gold(spec, int(text[5:], 0))
    match = re.fullmatch(r"gold\(m=(\d+),l=(\d+)\)", text)
    if match:
        if int(match.group(1)) != spec.m:
            raise OperatorError(f"{text} does not match m={spec.m}")
        return gold(spec, int(match.group(2)))
    raise OperatorError(f"cannot parse operator literal {text!r}")


def _parse_operand(text: str) -> MOperator:
    if text.startswith("sum("):
        raise OperatorError("nested sums need an explicit degree; write the matrix instead")
    if "@" in text:
        m = int(text.partition("@")[2])
    elif text in _NAMED:
        m = len(_NAMED[text])
    elif text.startswith("matrix:"):
        m = len([r for r in text[len("matrix:"):].split(",") if r.strip()])
    else:
        raise OperatorError(f"operand {text!r} needs a degree suffix @<m>")
    return parse_operator(text, default_spec(m))
