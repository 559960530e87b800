"""Command-line interface.

One executable, ``dinv``, with subcommands:

    dinv lens P Q [--orientation +|-]       d-invariants of a lens space
    dinv surgery R                          d-invariants of S^3_{R/2}(unknot)
    dinv sharp FILE                         d-invariants from a sharp form file
    dinv forms enum --k K --det D --odd N   half-integer surgery type forms
    dinv match {u1,uc1,cstar1} SPEC --det D --sigma S
    dinv obstruct cstar --k K SPEC --det D --sigma S [--splits ...]
    dinv lt (--torus P Q | --seifert FILE) --angle A/B
    dinv report TABLE.csv --checks u1,uc1,... [--out DIR] [--cache DIR]

Verdicts go to stdout / report files; the exit code only signals whether the
command ran (0) or failed to run (nonzero).  All behavior is controlled by
flags; no environment variables are consulted.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import data as _data
from .exact import IntMatrix
from .profiles import lens_d, unknot_half_surgery_d, serialize_profile
from .lattice import (QuadForm, d_from_sharp, enumerate_half_integer_forms,
                      parse_form, serialize_form)
from .obstruct import (KnotRecord, parse_cover_spec, resolve_profile, run_checks,
                       check_cstar_k, CHECK_FUNCTIONS)
from .signatures import SeifertData, levine_tristram
from .ingest import ProfileCache, parse_table, run_report

BUILTIN_TABLE = "builtin"


def _data_dir() -> str:
    return os.path.dirname(os.path.abspath(_data.__file__))


def _cmd_lens(args):
    P = lens_d(args.p, args.q, +1 if args.orientation == "+" else -1)
    sys.stdout.write(serialize_profile(P))


def _cmd_surgery(args):
    sp = unknot_half_surgery_d(args.r)
    sys.stdout.write(serialize_profile(sp.as_profile()))


def _cmd_sharp(args):
    with open(args.file) as fh:
        Q = parse_form(fh.read())
    if args.sign and ((args.sign == "+") != (Q.sign > 0)):
        raise SystemExit(f"--sign {args.sign} contradicts the file header")
    sys.stdout.write(serialize_profile(d_from_sharp(Q)))


def _cmd_forms(args):
    forms = enumerate_half_integer_forms(args.k, args.det, args.odd)
    sys.stdout.write(f"# {len(forms)} forms of rank {2 * args.k}, det {args.det}, "
                     f"{args.odd} odd diagonal entries\n")
    for Q in forms:
        sys.stdout.write(serialize_form(Q))
        sys.stdout.write("\n")


def _record_from_args(args) -> KnotRecord:
    kind, _, rest = args.spec.partition(":")
    cover = parse_cover_spec(kind, rest)
    return KnotRecord(args.name, args.det, args.sigma, cover)


def _cmd_match(args):
    rec = _record_from_args(args)
    verdict = CHECK_FUNCTIONS[args.engine](rec, base_dir=args.base_dir)
    sys.stdout.write(f"knot: {rec.name}\n")
    sys.stdout.write(verdict.to_text())


def _cmd_obstruct(args):
    rec = _record_from_args(args)
    splits = None
    if args.splits:
        splits = []
        for part in args.splits.split(";"):
            rp, rm = part.split(",")
            splits.append((int(rp), int(rm)))
    verdict = check_cstar_k(rec, args.k, splits=splits, base_dir=args.base_dir)
    sys.stdout.write(f"knot: {rec.name}\n")
    sys.stdout.write(verdict.to_text())


def _cmd_lt(args):
    a, _, b = args.angle.partition("/")
    a, b = int(a), int(b) if b else 1
    if args.torus:
        S = SeifertData(torus=(args.torus[0], args.torus[1]))
    else:
        with open(args.seifert) as fh:
            rows = [[int(x) for x in ln.split()] for ln in fh
                    if ln.strip() and not ln.lstrip().startswith("#")]
        S = SeifertData(matrix=IntMatrix(rows))
    sigma, nullity = levine_tristram(S, a, b)
    sys.stdout.write(f"signature: {sigma}\nnullity: {nullity}\n")


def _cmd_report(args):
    table = args.table
    if table == BUILTIN_TABLE:
        table = os.path.join(_data_dir(), "knots.csv")
    records = parse_table(table)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    cache = ProfileCache(args.cache) if args.cache else None
    base_dir = os.path.dirname(os.path.abspath(table))
    summary = run_report(records, checks, args.out, base_dir=base_dir, cache=cache)
    for row in summary:
        cells = [str(row["name"])] + [str(row.get(c, "")) for c in checks]
        sys.stdout.write(" ".join(cells) + "\n")
    sys.stdout.write(f"# reports written to {args.out}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dinv",
                                 description="exact d-invariant obstructions for "
                                             "double branched covers of knots")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lens", help="d-invariants of L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--orientation", choices=["+", "-"], default="+")
    p.set_defaults(func=_cmd_lens)

    p = sub.add_parser("surgery", help="d-invariants of S^3_{r/2}(unknot)")
    p.add_argument("r", type=int)
    p.set_defaults(func=_cmd_surgery)

    p = sub.add_parser("sharp", help="d-invariants from a sharp definite form file")
    p.add_argument("file")
    p.add_argument("--sign", choices=["+", "-"], default=None,
                   help="optional check against the file header")
    p.set_defaults(func=_cmd_sharp)

    p = sub.add_parser("forms", help="enumerate half-integer surgery type forms")
    sub2 = p.add_subparsers(dest="forms_command", required=True)
    pe = sub2.add_parser("enum")
    pe.add_argument("--k", type=int, required=True, help="half rank (form is 2k x 2k)")
    pe.add_argument("--det", type=int, required=True)
    pe.add_argument("--odd", type=int, required=True, help="odd diagonal entries of A")
    pe.set_defaults(func=_cmd_forms)

    def add_record_args(p):
        p.add_argument("spec", help="cover spec, e.g. lens:17,4 or goeritz:file.txt "
                                    "or sum:brieskorn:3,10;-brieskorn:5,6")
        p.add_argument("--name", default="knot")
        p.add_argument("--det", type=int, required=True)
        p.add_argument("--sigma", type=int, required=True)
        p.add_argument("--base-dir", default=".")

    p = sub.add_parser("match", help="run a matching obstruction on one knot")
    p.add_argument("engine", choices=["u1", "uc1", "cstar1"])
    add_record_args(p)
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("obstruct", help="form obstruction to k double points")
    sub3 = p.add_subparsers(dest="obstruct_command", required=True)
    pc = sub3.add_parser("cstar")
    pc.add_argument("--k", type=int, required=True)
    pc.add_argument("--splits", default=None,
                    help="semicolon-separated r+,r- pairs, e.g. '1,1'")
    add_record_args(pc)
    pc.set_defaults(func=_cmd_obstruct)

    p = sub.add_parser("lt", help="Levine-Tristram signature and nullity")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"))
    g.add_argument("--seifert", metavar="FILE")
    p.add_argument("--angle", required=True, help="rotation a/b for z = exp(2 pi i a/b)")
    p.set_defaults(func=_cmd_lt)

    p = sub.add_parser("report", help="batch obstruction report from a knot table")
    p.add_argument("table", help=f"CSV path, or '{BUILTIN_TABLE}' for the shipped table")
    p.add_argument("--checks", default="u1,uc1,cstar1")
    p.add_argument("--out", default="reports")
    p.add_argument("--cache", default=None, help="profile cache directory")
    p.set_defaults(func=_cmd_report)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.func(args)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
