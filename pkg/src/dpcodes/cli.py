"""Command line front end: ``construct``, ``verify``, ``scan`` and ``cert``.

Exit codes: 0 all checks pass, 1 I/O error, 2 failed precondition,
3 resource cap, 4 at least one check failed.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import checks
from .codefile import CodeFileError, read_code, write_code
from .codes import (
    Code,
    ConstructionError,
    LazyCode,
    SizeLimitError,
    build_d3,
    build_d4_conference,
    build_d5,
    build_preparata,
)
from .gf2field import FieldError, FieldSpec, default_spec
from .operators import (
    OperatorError,
    is_apn,
    is_bijective,
    is_f_plus_id_bijective,
    parse_operator,
    satisfies_propf,
)
from .reports import CheckReport
from .verifier import nonequivalence_certificate, shorten_scan

EXIT_OK, EXIT_IO, EXIT_PRECONDITION, EXIT_RESOURCE, EXIT_FAILED = 0, 1, 2, 3, 4
LINEAR_KINDS = ("matrix", "primitive_mul", "direct_sum")
FAMILIES = ("d3", "d5", "d4conf", "preparata")
DEFAULT_OPS = {"d3": {2: "matrix2", 3: "matrix3", 4: "sum(matrix2,matrix2)"}, "d5": "pow:3", "preparata": "pow:3"}


class UsageError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _spec(args) -> FieldSpec:
    if getattr(args, "field", None):
        return FieldSpec.parse(args.field)
    if args.m is None:
        raise UsageError("--m or --field is required", EXIT_PRECONDITION)
    return default_spec(args.m)


def _default_op(family: str, m: int) -> str:
    op = DEFAULT_OPS[family]
    if isinstance(op, dict):
        if m not in op:
            raise UsageError(f"no default operator for {family} at m={m}; pass --op", EXIT_PRECONDITION)
        return op[m]
    return op


def build_family(family: str, args) -> Code | LazyCode:
    if family == "d4conf":
        return build_d4_conference()
    spec = _spec(args)
    op = parse_operator(args.op or _default_op(family, spec.m), spec)
    if family == "d3":
        return build_d3(spec, op)
    if family == "d5":
        return build_d5(spec, op, args.syndrome)
    if family == "preparata":
        return build_preparata(spec, op)
    raise UsageError(f"unknown family {family!r}", EXIT_PRECONDITION)


def _emit(reports: list[CheckReport], as_json: bool, out) -> None:
    for r in reports:
        print(r.to_json() if as_json else r.to_text(), file=out)


def cmd_construct(args, out) -> int:
    code = build_family(args.family, args)
    if isinstance(code, LazyCode):
        raise UsageError(
            f"{args.family} code has {len(code)} words; too large to write", EXIT_RESOURCE
        )
    print(f"family={code.family} n={code.n} words={len(code)} meta="
          + ",".join(f"{k}={v}" for k, v in code.meta.items() if k != "directions"), file=out)
    if args.out:
        write_code(code, args.out)
        print(f"wrote {args.out}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.file:
        try:
            code = read_code(args.file)
        except (OSError, CodeFileError, FieldError) as exc:
            print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
            return EXIT_IO
    elif args.family:
        code = build_family(args.family, args)
    else:
        raise UsageError("verify needs --file or --family", EXIT_PRECONDITION)
    if isinstance(code, LazyCode) and args.mode == "exact":
        raise UsageError("exact checks are out of reach for this code; use --mode sampled", EXIT_RESOURCE)
    try:
        reports = checks.run_suite(code, args.suite, args.mode, args.samples, args.seed)
    except checks.NotApplicable as exc:
        raise UsageError(str(exc), EXIT_PRECONDITION) from None
    return _finish(reports, args.json, out)


def cmd_scan(args, out) -> int:
    if args.what == "shorten":
        code = build_family(args.family, args)
        if isinstance(code, LazyCode):
            raise UsageError("shortening scan needs a materialised code", EXIT_RESOURCE)
        t = time.perf_counter()
        found = shorten_scan(code, args.k)
        ms = (time.perf_counter() - t) * 1000
        report = CheckReport(
            "shorten",
            f"fixings of {code.n - args.k} coordinates giving a perfect distance-3 code in X^{args.k}",
            "exact",
            "pass",
            measured=len(found),
            expected=None,
            witness=[{"positions": p, "values": v} for p, v in found[: args.limit]] or "none",
            runtime_ms=ms,
        )
        if args.json:
            print(report.to_json(), file=out)
        else:
            print(f"{len(found)} fixing(s) found" if found else "none found", file=out)
            for positions, values in found[: args.limit]:
                print("  " + " ".join(f"{p}={v}" for p, v in zip(positions, values)), file=out)
        return EXIT_OK
    left, right = (_code_arg(x, args) for x in (args.left, args.right))
    t = time.perf_counter()
    rep = nonequivalence_certificate(left, right)
    ms = (time.perf_counter() - t) * 1000
    if args.json:
        print(CheckReport(
            "noneq", "shortening profiles differ", "exact",
            "pass" if rep.verdict == "NONEQUIVALENT" else "inconclusive",
            measured={"left": rep.profile_left, "right": rep.profile_right},
            expected=None, witness=rep.witness_k, runtime_ms=ms,
        ).to_json(), file=out)
    else:
        print(rep.verdict, file=out)
        print(f"  left profile:  {rep.profile_left}", file=out)
        print(f"  right profile: {rep.profile_right}", file=out)
    return EXIT_OK


def _code_arg(text: str, args) -> Code:
    if Path(text).is_file():
        return read_code(text)
    spec = _spec(args)
    code = build_d3(spec, parse_operator(text, spec))
    if isinstance(code, LazyCode):
        raise UsageError("comparison needs materialised codes", EXIT_RESOURCE)
    return code


def cmd_cert(args, out) -> int:
    spec = _spec(args)
    f = parse_operator(args.op, spec)
    reports = []

    def add(name, claim, fn):
        t = time.perf_counter()
        value = fn(f)
        ms = (time.perf_counter() - t) * 1000
        reports.append(CheckReport(name, claim, "exact", "pass" if value else "fail",
                                   measured=value, expected=True, runtime_ms=ms))

    add("bijective", f"{f.name} is one-to-one", is_bijective)
    if f.kind in LINEAR_KINDS:
        add("f+id-bijective", f"{f.name} + Id is one-to-one", is_f_plus_id_bijective)
        return _finish(reports, args.json, out)
    if spec.m <= 12:
        add("apn", f"{f.name} is almost perfect nonlinear", is_apn)
    fast = spec.m > 6
    if spec.m <= 8 or f.kind == "power":
        try:
            add("propf", f"{f.name} has no six distinct elements with the zero-sum system",
                lambda g: satisfies_propf(g, fast=fast))
        except OperatorError:
            pass
    return _finish(reports, args.json, out)


def _finish(reports: list[CheckReport], as_json: bool, out) -> int:
    _emit(reports, as_json, out)
    return EXIT_FAILED if any(r.verdict == "fail" for r in reports) else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dpcodes", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=1, help="worker cap (checks run single-threaded)")
    sub = p.add_subparsers(dest="command", required=True)

    def field_args(sp):
        sp.add_argument("--m", type=int)
        sp.add_argument("--field", help="m=<int>,mod=0x<hex>,gen=0x<hex>")
        sp.add_argument("--op", help="operator literal, e.g. matrix3, gamma, pow:3, inv, sum(matrix2,matrix2)")
        sp.add_argument("--syndrome", type=lambda s: int(s, 0), default=0)
        sp.add_argument("--json", action="store_true")

    c = sub.add_parser("construct", help="build a code and optionally write it")
    c.add_argument("family", choices=FAMILIES)
    field_args(c)
    c.add_argument("--out")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--file")
    v.add_argument("--family", choices=FAMILIES)
    field_args(v)
    v.add_argument("--suite", default="all", choices=checks.SUITES + ("all",))
    v.add_argument("--mode", choices=("exact", "sampled"))
    v.add_argument("--samples", type=int, default=10**6)
    v.add_argument("--seed", type=int, default=2024)

    s = sub.add_parser("scan", help="shortening scan or nonequivalence certificate")
    s.add_argument("what", choices=("shorten", "noneq"))
    field_args(s)
    s.add_argument("--family", default="d3", choices=("d3",))
    s.add_argument("--k", type=int, default=4)
    s.add_argument("--left")
    s.add_argument("--right")
    s.add_argument("--limit", type=int, default=10, help="fixings to print")

    t = sub.add_parser("cert", help="certify operator properties")
    field_args(t)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    handler = {"construct": cmd_construct, "verify": cmd_verify, "scan": cmd_scan, "cert": cmd_cert}
    if args.command == "cert" and not args.op:
        print("error: cert needs --op", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.command == "scan" and args.what == "noneq" and not (args.left and args.right):
        print("error: scan noneq needs --left and --right", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        return handler[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ConstructionError, OperatorError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
