"""Command-line front end.

    tracech verify      --generic 3 --r-max 6
    tracech verify      --random --n 4 --count 25 --r-max 6 --seed 7
    tracech enumerate   lsd --generic 2 --r 2
    tracech enumerate   walks --matrix m.json --k 3
    tracech involution  --generic 2 --r 2 --show-pairs [--dot]
    tracech export-dot  --generic 2 --r 2 --out-dir figs
    tracech charpoly    --matrix m.json

Exit status: 0 when every checked identity holds, 1 on a failed check,
2 on bad input or an exceeded cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import List, Sequence

from .enumeration import enumerate_closed_walks, enumerate_lsd, lsd_sign, lsd_weight, walk_weight
from .graph import (
    WeightedDigraph,
    arcs_to_dot,
    from_matrix,
    generic_matrix,
    load_matrix,
    to_dot,
)
from .identities import random_integer_matrices, verify_suite
from .invariants import c_walks, char_poly, char_poly_oracle, ell, f_minor_sum
from .involution import (
    classify,
    count_pairs,
    enumerate_pairs,
    good_pairs_of_lsd,
    pair_to_dot,
    phi,
    report_to_dict,
    signed_weight,
    verify_involution,
)
from .ring import format_expr

ORACLE_MAX_N = 6
ENUM_MAX_N = 6
ENUM_MAX_K = 10
PAIR_MAX_N = 4
PAIR_MAX_R = 8
DEFAULT_MAX_PAIRS = 5_000_000


class UsageError(Exception):
    """Bad input or exceeded cap; maps to exit status 2."""


def _add_input(p: argparse.ArgumentParser, random_ok: bool = False):
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--generic", type=int, metavar="N", help="fully symbolic N x N matrix (a_i_j)")
    grp.add_argument("--matrix", metavar="PATH", help='JSON file {"n": N, "entries": [[expr, ...], ...]}')
    if random_ok:
        grp.add_argument("--random", action="store_true", help="seeded random integer matrices")
        p.add_argument("--n", type=int, help="order of random matrices (default: drawn from 1..5)")
        p.add_argument("--count", type=int, default=10)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--lo", type=int, default=-9)
        p.add_argument("--hi", type=int, default=9)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--no-aliases", action="store_true", help="always print a_i_j names")
    p.add_argument("--force", action="store_true", help="lift the default size caps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tracech", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the trace identities for r = 1..r_max")
    _add_input(p, random_ok=True)
    p.add_argument("--r-max", type=int, help="largest r (default 2n)")

    p = sub.add_parser("enumerate", help="list linear subdigraphs or closed walks")
    p.add_argument("what", choices=["lsd", "walks"])
    _add_input(p)
    p.add_argument("--r", type=int, help="subdigraph length")
    p.add_argument("--k", type=int, help="walk length")

    p = sub.add_parser("involution", help="run the sign-reversing involution at total length r")
    _add_input(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--show-pairs", action="store_true")
    p.add_argument("--dot", action="store_true", help="emit before/after DOT for each BAD pair")

    p = sub.add_parser("export-dot", help="write DOT figures")
    _add_input(p)
    p.add_argument("--r", type=int, help="also write each length-r linear subdigraph")
    p.add_argument("--involution", action="store_true", help="also write before/after BAD pairs at --r")
    p.add_argument("--out-dir", default=".")

    p = sub.add_parser("charpoly", help="coefficient table r, l_r, f_r, d_r, c_r")
    _add_input(p)
    return parser


# ---------------------------------------------------------------------------
# input handling


def _load(args) -> List[List]:
    if args.generic is not None:
        if args.generic < 1:
            raise UsageError("--generic needs N >= 1")
        return [generic_matrix(args.generic)]
    if getattr(args, "random", False):
        if args.count < 1:
            raise UsageError("--count must be >= 1")
        if args.n is not None and args.n < 1:
            raise UsageError("--n must be >= 1")
        return random_integer_matrices(args.count, args.seed, lo=args.lo, hi=args.hi, n=args.n)
    try:
        return [load_matrix(args.matrix)]
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"cannot read matrix {args.matrix}: {exc}") from None


def _cap(args, value: int, limit: int, what: str):
    if value > limit and not args.force:
        raise UsageError(f"{what}={value} exceeds the default cap {limit}; pass --force to run anyway")


def _fmt(args, n: int):
    aliases = not args.no_aliases and n <= 3
    return lambda x: format_expr(x, n, aliases=aliases)


def _emit(lines: Sequence[str]):
    for line in lines:
        print(line)


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    mats = _load(args)
    all_ok = True
    payload = []
    for idx, m in enumerate(mats):
        n = len(m)
        _cap(args, n, ORACLE_MAX_N, "n")
        r_max = args.r_max if args.r_max is not None else 2 * n
        if r_max < 1:
            raise UsageError("--r-max must be >= 1")
        g = from_matrix(m)
        suite = verify_suite(g, r_max, m)
        all_ok &= suite.all_hold
        fmt = _fmt(args, n)
        if args.format == "json":
            payload.append(suite.to_dict(aliases=not args.no_aliases and n <= 3))
            continue
        if len(mats) > 1:
            print(f"# matrix {idx + 1}/{len(mats)} (n={n})")
        for rep in suite.reports:
            if rep.form != "combinatorial":
                continue
            status = "holds" if rep.holds else "FAILS"
            terms = " + ".join(label for label, _ in rep.terms)
            print(f"r={rep.r} [{rep.branch}] {terms} = {fmt(rep.lhs)}  {status}")
        for msg in suite.mismatches:
            print(f"mismatch: {msg}")
    if args.format == "json":
        print(json.dumps(payload if len(payload) > 1 else payload[0], ensure_ascii=False))
    else:
        print("all identities hold" if all_ok else "SOME IDENTITIES FAIL")
    return 0 if all_ok else 1


def _lsd_line(g: WeightedDigraph, gam, fmt) -> str:
    sign = "+1" if lsd_sign(gam) > 0 else "-1"
    return f"{gam} sign={sign} weight={fmt(lsd_weight(g, gam))}"


def cmd_enumerate(args) -> int:
    (m,) = _load(args)
    g = from_matrix(m)
    _cap(args, g.n, ENUM_MAX_N, "n")
    fmt = _fmt(args, g.n)
    if args.what == "lsd":
        if args.r is None:
            raise UsageError("enumerate lsd needs --r")
        if not 0 <= args.r <= g.n:
            raise UsageError(f"--r must satisfy 0 <= r <= n={g.n}")
        items = enumerate_lsd(g, args.r)
        rows = [_lsd_line(g, gam, fmt) for gam in items]
        footer = f"ℓ_{args.r} = {fmt(ell(g, args.r))}"
        json_items = [
            {"cycles": [list(c.vertices) for c in gam.cycles], "sign": lsd_sign(gam),
             "weight": fmt(lsd_weight(g, gam))} for gam in items
        ]
    else:
        if args.k is None:
            raise UsageError("enumerate walks needs --k")
        if args.k < 1:
            raise UsageError("--k must be >= 1")
        _cap(args, args.k, ENUM_MAX_K, "k")
        items = enumerate_closed_walks(g, args.k)
        rows = [f"{w} weight={fmt(walk_weight(g, w))}" for w in items]
        footer = f"c_{args.k} = {fmt(c_walks(g, args.k))}"
        json_items = [{"walk": list(w.vertices), "weight": fmt(walk_weight(g, w))} for w in items]
    if args.format == "json":
        print(json.dumps({"items": json_items, "count": len(items), "total": footer}, ensure_ascii=False))
    else:
        _emit(rows)
        print(footer)
    return 0


def _check_pair_caps(args, g: WeightedDigraph, r: int):
    _cap(args, g.n, PAIR_MAX_N, "n")
    _cap(args, r, PAIR_MAX_R, "r")
    hard = int(os.environ.get("TRACE_CH_MAX_PAIRS", DEFAULT_MAX_PAIRS))
    total = count_pairs(g, r)
    if total > hard:
        raise UsageError(f"{total} pairs exceed TRACE_CH_MAX_PAIRS={hard}")


def cmd_involution(args) -> int:
    (m,) = _load(args)
    g = from_matrix(m)
    if args.r < 1:
        raise UsageError("--r must be >= 1")
    _check_pair_caps(args, g, args.r)
    fmt = _fmt(args, g.n)
    pairs = enumerate_pairs(g, args.r)
    rep = verify_involution(g, args.r, pairs)
    aliases = not args.no_aliases and g.n <= 3
    if args.format == "json":
        print(json.dumps(report_to_dict(rep, aliases), ensure_ascii=False))
        return 0 if rep.passed else 1

    print(rep.summary())
    if args.show_pairs or args.dot:
        bad = [(p, classify(p)) for p in pairs]
        bad = [(p, c) for p, c in bad if c.is_bad]
        for k, (p, cls) in enumerate(bad):
            q = phi(p, cls)
            if args.show_pairs:
                print(f"BAD {p} {cls} W={fmt(signed_weight(g, p))} -> {q} W={fmt(signed_weight(g, q))}")
            if args.dot:
                print(pair_to_dot(g, p, name=f"bad{k}_before", aliases=aliases), end="")
                print(pair_to_dot(g, q, name=f"bad{k}_after", aliases=aliases), end="")
    if args.show_pairs and args.r <= g.n:
        for gam in enumerate_lsd(g, args.r):
            print(f"GOOD group of {gam}:")
            for p in good_pairs_of_lsd(gam):
                print(f"  {p} W={fmt(signed_weight(g, p))}")
    bad_note = "all cancel" if rep.bad_sum == 0 else f"sum {fmt(rep.bad_sum)}"
    print(f"BAD pairs: {bad_note}; GOOD pairs: {rep.good_count}")
    for msg in rep.failures:
        print(f"failure: {msg}")
    return 0 if rep.passed else 1


def cmd_export_dot(args) -> int:
    (m,) = _load(args)
    g = from_matrix(m)
    aliases = not args.no_aliases and g.n <= 3
    out = Path(args.out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        written = []

        def write(name: str, text: str):
            path = out / name
            path.write_text(text, encoding="utf-8")
            written.append(str(path))

        write("digraph.dot", to_dot(g, aliases=aliases))
        if args.r is not None:
            if not 0 <= args.r <= g.n:
                raise UsageError(f"--r must satisfy 0 <= r <= n={g.n}")
            _cap(args, g.n, ENUM_MAX_N, "n")
            for k, gam in enumerate(enumerate_lsd(g, args.r), start=1):
                arcs = [(a, "color=blue") for a in gam.arcs()]
                write(f"lsd_r{args.r}_{k}.dot",
                      arcs_to_dot(g, arcs, name=f"lsd{k}", aliases=aliases, caption=str(gam)))
            if args.involution and args.r >= 1:
                _check_pair_caps(args, g, args.r)
                bad = [p for p in enumerate_pairs(g, args.r) if classify(p).is_bad]
                for k, p in enumerate(bad, start=1):
                    q = phi(p)
                    write(f"pair_r{args.r}_{k}_before.dot", pair_to_dot(g, p, f"before{k}", aliases))
                    write(f"pair_r{args.r}_{k}_after.dot", pair_to_dot(g, q, f"after{k}", aliases))
    except OSError as exc:
        raise UsageError(f"cannot write DOT files: {exc}") from None
    _emit(written)
    return 0


def cmd_charpoly(args) -> int:
    (m,) = _load(args)
    g = from_matrix(m)
    _cap(args, g.n, ORACLE_MAX_N, "n")
    fmt = _fmt(args, g.n)
    cp = char_poly(g)
    oracle = char_poly_oracle(m)
    rows = []
    for r in range(1, g.n + 1):
        rows.append({
            "r": r,
            "l": fmt(ell(g, r)),
            "f": fmt(f_minor_sum(g, r)),
            "d": fmt(oracle.d(r)),
            "c": fmt(c_walks(g, r)),
        })
    agree = cp == oracle
    if args.format == "json":
        print(json.dumps({"n": g.n, "rows": rows, "oracle_agrees": agree}, ensure_ascii=False))
    else:
        print("r, ℓ_r, f_r, d_r, c_r")
        for row in rows:
            print(f"{row['r']}, {row['l']}, {row['f']}, {row['d']}, {row['c']}")
        print("subdigraph coefficients match Leibniz oracle" if agree else "MISMATCH with Leibniz oracle")
    return 0 if agree else 1


COMMANDS = {
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "involution": cmd_involution,
    "export-dot": cmd_export_dot,
    "charpoly": cmd_charpoly,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
