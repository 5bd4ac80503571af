"""Plain-text code files: ``#`` header lines, then one word per line.

    # family: d3
    # m: 3
    # modulus: 0xb
    # generator: 0x2
    # operator: matrix3
    # n: 8
    # alphabet: ternary
    # claimed_distance: 3
    *0000000
    ...

Words use ``0``, ``1`` and ``*`` with coordinate 1 first, sorted
lexicographically so files diff cleanly.
"""

from __future__ import annotations

from pathlib import Path

from .codes import Code
from .gf2field import FieldSpec
from .operators import OperatorError, parse_operator
from .words import parse_word

__all__ = ["CodeFileError", "read_code", "write_code", "format_code"]

_HEADER_KEYS = ("family", "m", "modulus", "generator", "operator", "syndrome")


class CodeFileError(ValueError):
    pass


def format_code(c: Code) -> str:
    lines = []
    for key in _HEADER_KEYS:
        if key in c.meta:
            lines.append(f"# {key}: {c.meta[key]}")
    if "shortened" in c.meta:
        fixing = ",".join(f"{i}={v}" for i, v in c.meta["shortened"])
        lines.append(f"# shortened: {fixing}")
    lines.append(f"# n: {c.n}")
    lines.append(f"# alphabet: {c.alphabet}")
    lines.append(f"# claimed_distance: {c.claimed_distance}")
    lines.append(f"# claimed_cardinality: {c.claimed_cardinality}")
    lines.extend(str(w) for w in c)
    return "\n".join(lines) + "\n"


def write_code(c: Code, path: str | Path) -> None:
    Path(path).write_text(format_code(c))


def read_code(path: str | Path) -> Code:
    """Parse a code file; field and operator are rebuilt when the header names them."""
    header: dict[str, str] = {}
    words = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].partition(":")
            if sep:
                header[key.strip()] = value.strip()
            continue
        try:
            words.append(parse_word(line))
        except ValueError as exc:
            raise CodeFileError(f"{path}:{lineno}: {exc}") from None
    if not words:
        raise CodeFileError(f"{path}: no words")
    if any(w.n != words[0].n or type(w) is not type(words[0]) for w in words):
        raise CodeFileError(f"{path}: words differ in length or alphabet")
    spec = operator = None
    if "m" in header and "modulus" in header:
        spec = FieldSpec(int(header["m"]), int(header["modulus"], 0), int(header.get("generator", "0x2"), 0))
        spec.validate()
        if "operator" in header:
            try:
                operator = parse_operator(header["operator"], spec)
            except OperatorError:
                operator = None
    meta = {k: header[k] for k in _HEADER_KEYS if k in header}
    for key in ("m", "syndrome"):
        if key in meta:
            meta[key] = int(meta[key])
    claimed = int(header.get("claimed_distance", 0))
    cardinality = int(header.get("claimed_cardinality", len(words)))
    return Code.from_words(
        words,
        claimed_distance=claimed,
        claimed_cardinality=cardinality,
        meta=meta,
        spec=spec,
        operator=operator,
    )
