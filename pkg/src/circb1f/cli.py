"""Command-line front end: ``circb1f <command> ...``.

Exit codes: 0 success; 1 verification or expectation failure; 2 usage,
parameter or document errors; for ``enumerate`` 3 means the search was
exhaustive and found nothing and 4 means the node budget ran out first.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import re
import sys

from .balance import classify_balance, pair_types
from .cubic import CubicFamily, CubicKind, construct_cubic, expected_types_cubic
from .document import emit, parse
from .errors import B1FError, ParameterOutOfRange
from .graph import CycleType, connection_sets_isomorphic, make_circulant, units, distance
from .onethree import construct_13, expected_types_13
from .onetwo import construct_12_order8, construct_12_rotation
from .rotation import RotationParams, Variant, construct_general, expected_types_general
from .search import Outcome, SearchOptions, enumerate_factorisations, existence_table, exists_mb1f

EXIT_FAIL = 1
EXIT_ERROR = 2
EXIT_NOT_FOUND = 3
EXIT_UNKNOWN = 4

BUDGET_ENV = "B1F_NODE_BUDGET"


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _default_budget():
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return None
    return _positive(raw)


def parse_types(text: str) -> set[CycleType]:
    """Parse ``"[10],[6,4]"`` or ``"[10];[6,4]"`` into a set of types."""
    found = re.findall(r"\[[^\]]*\]", text)
    if not found:
        raise ValueError(f"no types in {text!r}")
    return {CycleType.parse(t) for t in found}


def _types_meta(types) -> list[str]:
    return [str(t) for t in sorted(types, key=tuple, reverse=True)]


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n for n in missing)
        raise ParameterOutOfRange(f"family {args.family}", f"missing {flags}")


def build(args):
    """Return (factorisation, meta) for the ``construct`` arguments."""
    fam = args.family
    if fam in ("one-n", "two-n"):
        _need(args, "n")
        family = CubicFamily(CubicKind(fam), args.n)
        F = construct_cubic(family)
        return F, {"family": fam, "n": args.n, "types": _types_meta(expected_types_cubic(family))}
    if fam == "c12":
        _need(args, "n")
        F = construct_12_order8() if args.n == 4 else construct_12_rotation(args.n)
        return F, {"family": fam, "n": args.n, "types": _types_meta(set(pair_types(F).values()))}
    if fam == "c13":
        _need(args, "m", "n")
        F = construct_13(args.m, args.n)
        expected = set(expected_types_13(args.m, args.n).values())
        return F, {"family": fam, "m": args.m, "n": args.n, "types": _types_meta(expected)}
    _need(args, "ell", "a")
    p = RotationParams(args.ell, args.a, Variant(args.variant))
    F = construct_general(p)
    meta = {"family": fam, "ell": p.ell, "a": p.a, "variant": p.variant.value}
    meta["types"] = _types_meta(expected_types_general(p))
    return F, meta


def _write(text: str, path: str | None, out):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_construct(args, out, err):
    F, meta = build(args)
    _write(emit(F, meta), args.output, out)
    return 0


def _load(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _report(F, out):
    for (i, j), t in pair_types(F).items():
        print(f"F{i} u F{j}: {t}", file=out)
    rep = classify_balance(F)
    print(rep.summary(), file=out)
    return rep


def cmd_verify(args, out, err):
    F, _ = _load(args.file)
    print(f"valid 1-factorisation of {F.graph} with {len(F)} factors", file=out)
    _report(F, out)
    return 0


def cmd_classify(args, out, err):
    F, _ = _load(args.file)
    rep = _report(F, out)
    ok = True
    if args.expect_m is not None and rep.m != args.expect_m:
        print(f"expected a {args.expect_m}-B1F, got {rep.verdict}", file=err)
        ok = False
    if args.expect_types is not None:
        want = parse_types(args.expect_types)
        if rep.types != want:
            print(f"expected types {_types_meta(want)}, got {_types_meta(rep.types)}", file=err)
            ok = False
    if args.expect_m is None and args.expect_types is None and not rep.balanced:
        ok = False
    return 0 if ok else EXIT_FAIL


def _options(args, limit=None):
    return SearchOptions(limit=limit, node_budget=args.budget, workers=args.workers)


def cmd_enumerate(args, out, err):
    g = make_circulant(args.order, args.set)
    if args.find_m is not None:
        res = exists_mb1f(g, args.find_m, _options(args))
        if res.kind is Outcome.FOUND:
            print(f"found a {args.find_m}-B1F of {g} after {res.nodes} nodes", file=err)
            out.write(emit(res.witness, {"m": args.find_m}))
            return 0
        if res.kind is Outcome.UNKNOWN:
            print(f"unknown: node budget exhausted after {res.nodes} nodes", file=out)
            return EXIT_UNKNOWN
        why = "m does not divide C(r,2)" if res.kind is Outcome.INFEASIBLE else f"exhaustive, {res.nodes} nodes"
        print(f"none: no {args.find_m}-B1F of {g} ({why})", file=out)
        return EXIT_NOT_FOUND
    run = enumerate_factorisations(g, _options(args, args.limit))
    count = 0
    for F in run:
        count += 1
        if not args.quiet:
            print(f"{count}: {classify_balance(F).verdict} {F.edge_lists()}", file=out)
    if run.budget_hit:
        print(f"unknown: {count} factorisations before the budget ran out ({run.nodes} nodes)", file=out)
        return EXIT_UNKNOWN
    state = "complete" if run.complete else "stopped at limit"
    print(f"{state}: {count} factorisations of {g} ({run.nodes} nodes)", file=out)
    return 0


def table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    ms = list(rows[0].cells) if rows else [1, 2, 3, 6]
    w.writerow(["order", "connection_set"] + [f"m{m}" for m in ms])
    for row in rows:
        conns = ";".join(map(str, row.connections))
        w.writerow([row.order, conns] + [row.cells[m].kind.value for m in ms])
    return buf.getvalue()


def cmd_table(args, out, err):
    rows = existence_table(args.max_order, _options(args))
    _write(table_csv(rows), args.output, out)
    return 0


def cmd_iso(args, out, err):
    iso = connection_sets_isomorphic(args.order, args.set1, args.set2)
    if iso:
        target = {distance(0, d, args.order) for d in args.set1}
        m = next(
            u for u in units(args.order)
            if {distance(0, u * d, args.order) for d in args.set2} == target
        )
        print(f"isomorphic (multiplier {m})", file=out)
        return 0
    print("not isomorphic", file=out)
    return EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circb1f", description="Balanced 1-factorisations of circulant graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit an explicit factorisation")
    c.add_argument("--family", required=True, choices=["one-n", "two-n", "c12", "c13", "general"])
    c.add_argument("--m", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--ell", type=int)
    c.add_argument("--a", type=int)
    c.add_argument("--variant", default="span", choices=[v.value for v in Variant])
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="validate a document and report pair types")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("classify", help="check a document against an expected verdict")
    k.add_argument("file")
    k.add_argument("--expect-m", type=int)
    k.add_argument("--expect-types", help='e.g. "[10],[6,4]"')
    k.set_defaults(func=cmd_classify)

    budget = _default_budget()
    e = sub.add_parser("enumerate", help="exhaustive search")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--set", type=_int_list, required=True)
    e.add_argument("--find-m", type=int)
    e.add_argument("--limit", type=_positive)
    e.add_argument("--budget", type=_positive, default=budget)
    e.add_argument("--workers", type=_positive, default=1)
    e.add_argument("-q", "--quiet", action="store_true", help="print only the summary")
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("table", help="CSV existence table")
    t.add_argument("--max-order", type=int, required=True)
    t.add_argument("--budget", type=_positive, default=budget)
    t.add_argument("--workers", type=_positive, default=1)
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_table)

    i = sub.add_parser("iso", help="connection-set isomorphism")
    i.add_argument("--order", type=int, required=True)
    i.add_argument("--set1", type=_int_list, required=True)
    i.add_argument("--set2", type=_int_list, required=True)
    i.set_defaults(func=cmd_iso)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        parser = make_parser()
    except argparse.ArgumentTypeError as exc:
        print(f"error: {BUDGET_ENV}: {exc}", file=err)
        return EXIT_ERROR
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return args.func(args, out, err)
    except ParameterOutOfRange as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    except B1FError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_FAIL if args.command in ("verify", "classify") else EXIT_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
