"""gstower command line.

    gstower analyze --p 2 --e 32 --f 1 --g 17
    gstower hminus --p 23 --s 1 --oracle
    gstower table --skip-slow
    gstower shanks --a-min 17279 --a-max 17279

JSON on stdout, diagnostics on stderr. Exit codes: 0 certified / all rows
match, 2 inconclusive or mismatch, 1 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .cohomology import CAVEAT_HPLUS, FieldParams, Verdict, analyze_tower
from .cyclo_class import cyclotomic_tower_params, maillet_hminus, relative_class_number
from .errors import DomainError
from .primes import is_prime
from .report import (
    certificate_to_dict,
    dumps,
    enc_int,
    hminus_to_dict,
    make_report,
    shanks_to_dict,
)
from .shanks import shanks_scan

log = logging.getLogger("gstower")

EXIT_OK, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2

# (p, s) -> h^- claimed exactly for Q(zeta_{p^s})
TABLE_EXACT = {(2, 6): 17, (3, 4): 2593, (5, 3): 57708445601}
SLOW_PHI = 256


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class TableRow:
    p: int
    s: int

    @property
    def modulus(self) -> int:
        return self.p**self.s

    @property
    def phi(self) -> int:
        return self.p ** (self.s - 1) * (self.p - 1)

    def expectation(self) -> Optional[tuple[str, int]]:
        if (self.p, self.s) in TABLE_EXACT:
            return "exact", TABLE_EXACT[(self.p, self.s)]
        if 7 <= self.p <= 23 and self.s == 2:
            return "atLeast", 43
        if self.p > 23 and self.s == 1:
            return "atLeast", 8
        return None


def default_rows() -> list[TableRow]:
    rows = [TableRow(2, 6), TableRow(3, 4), TableRow(5, 3)]
    rows += [TableRow(p, 2) for p in (7, 11, 13, 17, 19, 23)]
    rows += [TableRow(p, 1) for p in range(29, 200) if is_prime(p)]
    return rows


def parse_rows(spec: str) -> list[TableRow]:
    rows = []
    for item in spec.split(","):
        try:
            p, s = (int(x) for x in item.split(":"))
        except ValueError:
            raise UsageError(f"bad row {item!r}; expected p:s") from None
        if not is_prime(p) or s < 1 or p**s <= 2:
            raise UsageError(f"row {item!r} is not a prime power above 2")
        rows.append(TableRow(p, s))
    return rows


def _table_row(row: TableRow, exact_threshold: int) -> dict:
    h = relative_class_number(row.modulus)
    exp = row.expectation()
    if exp is None:
        matches = None
    elif exp[0] == "exact":
        matches = h.h_minus == exp[1]
    else:
        matches = h.h_minus >= exp[1]
    cert = analyze_tower(
        cyclotomic_tower_params(row.p, row.s, h.h_minus),
        exact_threshold=exact_threshold,
        extra_caveats=(CAVEAT_HPLUS,),
    )
    return {
        "p": row.p,
        "s": row.s,
        "modulus": enc_int(row.modulus),
        "hMinus": enc_int(h.h_minus),
        "expected": None if exp is None else {"kind": exp[0], "value": enc_int(exp[1])},
        "matches": matches,
        "certificate": certificate_to_dict(cert),
    }


def _table_row_star(args):
    return _table_row(*args)


def _executor(threads: int):
    return ProcessPoolExecutor(max_workers=threads) if threads > 1 else None


def cmd_analyze(args):
    params = FieldParams(p=args.p, e=args.e, f=args.f, g=args.g, dim_vs=args.dim_vs)
    cert = analyze_tower(params, exact_threshold=args.exact_threshold)
    code = EXIT_OK if cert.verdict is Verdict.INFINITE_BY_CUTTING else EXIT_INCONCLUSIVE
    inputs = {"p": args.p, "e": args.e, "f": args.f, "g": enc_int(args.g), "dimVS": args.dim_vs}
    return inputs, certificate_to_dict(cert), code, list(cert.caveats)


def cmd_hminus(args):
    if args.s < 1 or not is_prime(args.p) or args.p**args.s <= 2:
        raise UsageError("need a prime p and s >= 1 with p^s > 2")
    ex = _executor(args.threads)
    try:
        h = relative_class_number(args.p**args.s, executor=ex)
    finally:
        if ex is not None:
            ex.shutdown()
    results = hminus_to_dict(h)
    code = EXIT_OK
    caveats = []
    if args.oracle:
        if args.s == 1 and args.p > 2:
            m = maillet_hminus(args.p)
            results["maillet"] = enc_int(m)
            results["oracleAgrees"] = m == h.h_minus
            if m != h.h_minus:
                code = EXIT_INCONCLUSIVE
        else:
            caveats.append("Maillet oracle only applies to Q(zeta_p), p odd; not run")
    return {"p": args.p, "s": args.s, "oracle": args.oracle}, results, code, caveats


def cmd_table(args):
    rows = parse_rows(args.rows) if args.rows else default_rows()
    if args.skip_slow:
        rows = [r for r in rows if r.phi <= SLOW_PHI]
    work = [(r, args.exact_threshold) for r in rows]
    ex = _executor(args.threads)
    try:
        out = list(ex.map(_table_row_star, work)) if ex else [_table_row_star(w) for w in work]
    finally:
        if ex is not None:
            ex.shutdown()
    bad = [
        r for r in out
        if r["matches"] is False or r["certificate"]["verdict"] != Verdict.INFINITE_BY_CUTTING.value
    ]
    code = EXIT_INCONCLUSIVE if bad else EXIT_OK
    inputs = {"rows": [f"{r.p}:{r.s}" for r in rows], "skipSlow": args.skip_slow}
    return inputs, {"rows": out, "allMatch": not bad}, code, [CAVEAT_HPLUS]


def cmd_shanks(args):
    if args.a_min < 1 or args.a_max < args.a_min:
        raise UsageError(f"invalid range [{args.a_min}, {args.a_max}]")
    recs = shanks_scan(args.a_min, args.a_max)
    caveats = ["class-group ranks of the cubic fields are not computed"]
    return {"aMin": args.a_min, "aMax": args.a_max}, [shanks_to_dict(r) for r in recs], EXIT_OK, caveats


def shanks_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "p", "b", "c", "d", "discriminant", "is_prime", "discriminant_is_p_squared"])
    for r in records:
        w.writerow([r["a"], r["p"], *r["cubicCoeffs"], r["discriminant"],
                    r["isPrime"], r["discriminantIsPSquared"]])
    return buf.getvalue()


def _threshold(bits: str) -> int:
    b = int(bits)
    if not 1 <= b <= 64:
        raise argparse.ArgumentTypeError("exact threshold must be 1..64 bits")
    return 1 << b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv",
                     help="CSV output (shanks only)")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--no-timing", action="store_true", help="omit timingMs for byte-stable output")
    common.add_argument("--exact-threshold", type=_threshold, default=1 << 16, metavar="BITS",
                        help="exponents below 2^BITS are expanded exactly (default 16)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="gstower", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="certify a tower from (p, e, f, g)")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--e", type=int, required=True)
    a.add_argument("--f", type=int, required=True)
    a.add_argument("--g", type=int, required=True)
    a.add_argument("--dim-vs", type=int, default=0)
    a.set_defaults(func=cmd_analyze)

    h = sub.add_parser("hminus", parents=[common], help="relative class number of Q(zeta_{p^s})")
    h.add_argument("--p", type=int, required=True)
    h.add_argument("--s", type=int, required=True)
    h.add_argument("--oracle", action="store_true", help="cross-check with the Maillet determinant")
    h.set_defaults(func=cmd_hminus)

    t = sub.add_parser("table", parents=[common], help="recompute the cyclotomic table")
    t.add_argument("--rows", help="comma list of p:s (default: the full table)")
    t.add_argument("--skip-slow", action="store_true", help=f"omit rows with phi(p^s) > {SLOW_PHI}")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("shanks", parents=[common], help="scan Shanks primes a^2+3a+9")
    s.add_argument("--a-min", type=int, required=True)
    s.add_argument("--a-max", type=int, required=True)
    s.set_defaults(func=cmd_shanks)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    if args.fmt == "csv" and args.command != "shanks":
        print("gstower: --csv is only supported by shanks", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        inputs, results, code, caveats = args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"gstower {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = None if args.no_timing else int((time.perf_counter() - start) * 1000)
    log.info("%s finished in %.3fs", args.command, time.perf_counter() - start)
    if args.fmt == "csv":
        sys.stdout.write(shanks_csv(results))
    else:
        sys.stdout.write(dumps(make_report(args.command, inputs, results, caveats, elapsed)) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
