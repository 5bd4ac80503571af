"""Named verification suites producing :class:`CheckReport` records."""

from __future__ import annotations

import time

import numpy as np

from .codes import Code, LazyCode
from .reports import CheckReport
from .verifier import (
    check_matching,
    check_perfect_coloring,
    check_transitivity,
    is_diameter_perfect,
    is_perfect_d3,
    min_distance,
)
from .words import BinaryWord, TernaryWord, anticode_A, ball

__all__ = ["SUITES", "NotApplicable", "anticode_for", "applicable_suites", "run_suite"]

SUITES = ("distance", "perfect", "diameter-perfect", "matching", "transitivity", "coloring", "membership")


class NotApplicable(ValueError):
    """The requested check does not apply to this code."""


def anticode_for(c: Code) -> tuple[set[TernaryWord], str]:
    """The anticode whose size certifies diameter perfectness at the claimed distance."""
    n = c.n
    d = c.claimed_distance
    if d == 3:
        return ball(TernaryWord(n, 1, 0), 1), "radius-1 ball B_z"
    if d == 4:
        return anticode_A(TernaryWord(n, 1, 0)), "A_z = B_z + B_z0 + B_z1"
    if d == 5:
        return ball(BinaryWord(n, 0), 2), "radius-2 ball around 0^n"
    raise NotApplicable(f"no anticode for claimed distance {d}")


def applicable_suites(c: Code | LazyCode) -> list[str]:
    if isinstance(c, LazyCode):
        return ["distance", "membership"]
    if c.alphabet == "binary":
        return ["distance"]
    out = ["distance"]
    if c.n <= 16 and c.claimed_distance == 3:
        out.append("perfect")
    if c.claimed_distance in (3, 4, 5):
        out.append("diameter-perfect")
    if c.n <= 16:
        out.append("matching")
    if c.family == "d3" and c.operator is not None and c.n <= 8:
        out.append("transitivity")
    if c.claimed_distance == 4 and c.n <= 16:
        out.append("coloring")
    return out


def _timed(fn, *args, **kw):
    t = time.perf_counter()
    out = fn(*args, **kw)
    return out, (time.perf_counter() - t) * 1000


def run_suite(
    c: Code | LazyCode,
    suite: str,
    mode: str | None = None,
    samples: int = 10**6,
    seed: int = 2024,
) -> list[CheckReport]:
    """Run one suite (or ``all`` applicable ones) and return its reports."""
    if suite == "all":
        return [r for s in applicable_suites(c) for r in run_suite(c, s, mode, samples, seed)]
    if suite not in applicable_suites(c):
        raise NotApplicable(f"suite {suite!r} does not apply to a {c.family} code of length {c.n}")
    return [_RUNNERS[suite](c, mode=mode, samples=samples, seed=seed)]


def _distance(c, mode=None, samples=10**6, seed=2024, **_):
    mode = mode or ("sampled" if isinstance(c, LazyCode) else "exact")
    rep, ms = _timed(min_distance, c, mode, samples, seed)
    if rep.violation:
        verdict = "fail"
    else:
        verdict = "pass" if mode == "exact" else "inconclusive"
    return CheckReport(
        "distance",
        f"minimum distance is at least {c.claimed_distance}",
        mode,
        verdict,
        measured=rep.value,
        expected=c.claimed_distance,
        witness=[str(w) for w in rep.witness] if rep.witness else None,
        runtime_ms=ms,
    )


def _perfect(c, **_):
    ok, ms = _timed(is_perfect_d3, c)
    return CheckReport(
        "perfect",
        "radius-1 balls around codewords partition X^n",
        "exact",
        "pass" if ok else "fail",
        measured=ok,
        expected=True,
        witness=None if ok else "balls overlap or miss words",
        runtime_ms=ms,
    )


def _diameter_perfect(c, **_):
    anticode, name = anticode_for(c)
    rep, ms = _timed(is_diameter_perfect, c, anticode)
    return CheckReport(
        "diameter-perfect",
        f"|C| * |A| = |X^n| for the anticode {name}",
        "exact",
        "pass" if rep.ok else "fail",
        measured=f"{rep.code_size} * {rep.anticode_size} = {rep.code_size * rep.anticode_size}"
        f" (diam A = {rep.anticode_diameter}, d = {rep.code_distance})",
        expected=rep.space_size,
        witness=None if rep.ok else {"precondition": rep.precondition_ok, "bound": rep.bound_holds},
        runtime_ms=ms,
    )


def _matching(c, **_):
    rep, ms = _timed(check_matching, c)
    return CheckReport(
        "matching",
        "edges form a matching; perfect at 2^(n-1) words; parallel edges at distance >= 3",
        "exact",
        "pass" if rep.ok else "fail",
        measured={
            "matching": rep.is_matching,
            "perfect": rep.is_perfect,
            "min_parallel_distance": rep.min_parallel_distance,
        },
        expected={"matching": True, "parallel_distance_at_least": 3},
        witness=rep.witness,
        runtime_ms=ms,
    )


def _transitivity(c, **_):
    rep, ms = _timed(check_transitivity, c)
    return CheckReport(
        "transitivity",
        "automorphisms tau_z carry one codeword to every other",
        "exact",
        "pass" if rep.ok else "fail",
        measured=f"{rep.reached}/{rep.total}",
        expected=f"{rep.total}/{rep.total}",
        witness=rep.failures[:3] or None,
        runtime_ms=ms,
    )


def _coloring(c, **_):
    rep, ms = _timed(check_perfect_coloring, c)
    return CheckReport(
        "coloring",
        "words at distance 1 from C and the rest form a perfect coloring",
        "exact",
        "pass" if rep.ok else "fail",
        measured={"C1": sorted(rep.c1_counts), "C2": sorted(rep.c2_counts), "sizes": [rep.size_c1, rep.size_c2]},
        expected=rep.expected,
        witness=None if rep.ok else "neighbour counts vary",
        runtime_ms=ms,
    )


def _membership(c, samples=10**6, seed=2024, **_):
    count = min(samples, 10**4)
    t = time.perf_counter()
    rng = np.random.default_rng(seed)
    bits, stars = c.sample(count, rng)
    missing = None
    for b, s in zip(bits.tolist(), stars.tolist()):
        w = TernaryWord(c.n, s, b)
        if w not in c:
            missing = str(w)
            break
        # a neighbouring word at distance 1 must not be a codeword
        flip = 1 if s != 1 else 2
        if TernaryWord(c.n, s, b ^ (1 << (flip - 1))) in c:
            missing = f"neighbour of {w} also a codeword"
            break
    ms = (time.perf_counter() - t) * 1000
    return CheckReport(
        "membership",
        "sampled codewords pass the membership test; their neighbours fail it",
        "sampled",
        "fail" if missing else "inconclusive",
        measured=count,
        expected=count,
        witness=missing,
        runtime_ms=ms,
    )


_RUNNERS = {
    "distance": _distance,
    "perfect": _perfect,
    "diameter-perfect": _diameter_perfect,
    "matching": _matching,
    "transitivity": _transitivity,
    "coloring": _coloring,
    "membership": _membership,
}
