"""Command line front end.

Subcommands
-----------
``seq``        emit one counting family over an index range
``table``      rebuild one of the reference tables
``verify``     run the identity registry and write a JSON report
``conjecture`` run only the conjecture records (verify --filter "conjecture*")
``oracle``     list or count objects by exhaustive enumeration

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 refusal by
the enumeration resource guard.  All big integers print in plain decimal.
The environment variable ``TILINGKIT_ORACLE_CEILING`` overrides the
enumeration guard (an integer; empty means the default).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import compstats as cs
from . import identities, oracle, tables
from . import sequences as seq

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_ORACLE_SCALE = 3

SEQ_FORMATS = ("bfile", "csv", "json", "pretty-table")
TABLE_FORMATS = ("csv", "json", "pretty-table")


class _Family:
    def __init__(
        self,
        params: tuple[str, ...],
        fn: Callable[..., int],
        help: str,
        optional: tuple[str, ...] = (),
    ) -> None:
        self.params = params
        self.optional = optional
        self.fn = fn
        self.help = help

    @property
    def signature(self) -> str:
        parts = [f"--{p}" for p in self.params]
        parts += [f"[--{p}]" for p in self.optional]
        return " ".join(parts) if parts else "(no parameters)"


def _runs_family(n: int, k: int, j: int | None = None) -> int:
    if j is not None:
        return cs.runs_restricted(n, j, k)
    return cs.total_runs_restricted(n, k)


def _chat_family(n: int, k: int, m: int | None = None) -> int:
    if m is not None:
        return cs.C_hat_tilings(n, m, k)
    return cs.C_hat(n, k)


def _cb_family(n: int, k: int, p: int | None = None) -> int:
    if p is not None:
        return cs.C_b_exact(n, k, p)
    return cs.C_b(n, k)


FAMILIES: dict[str, _Family] = {
    "a": _Family(("r",), lambda n, r: seq.a(r, n),
                 "two-toned tilings with r reds and white total n"),
    "as": _Family(("s", "r"), lambda n, s, r: seq.a_s(s, r, n),
                  "s-fold cumulative sums of a(r,.)"),
    "ak": _Family(("r", "k"), lambda n, r, k: seq.a_k(r, n, k),
                  "tilings with white lengths capped at k"),
    "f": _Family(("k",), lambda n, k: seq.fibonacci_k(n, k),
                 "k-step Fibonacci numbers"),
    "fconv": _Family(("k", "r"), lambda n, k, r: seq.fibonacci_k_conv(n, k, r),
                     "r-th convolution of the k-step Fibonacci sequence"),
    "negf": _Family(("k",), lambda n, k: seq.neg_fibonacci_k(n, k),
                    "k-step Fibonacci numbers at any integer index"),
    "pell": _Family((), lambda n: seq.pell(n), "Pell numbers"),
    "L": _Family(("k",), lambda n, k: cs.L(n, k),
                 "compositions with at least one part k"),
    "Ep": _Family(("m", "k", "p"), lambda n, m, k, p: cs.E_p(n, m, k, p),
                  "compositions, parts <= k, exactly p parts m"),
    "S": _Family(("k",), lambda n, k: cs.S(n, k),
                 "occurrences of the part k over all compositions"),
    "G": _Family(("k",), lambda n, k: cs.G(n, k),
                 "compositions with largest part exactly k"),
    "Gr": _Family(("k", "r"), lambda n, k, r: cs.G_exact(n, k, r),
                  "compositions whose largest part k appears exactly r times"),
    "CF": _Family(("k",), lambda n, k: cs.CF(n, k),
                  "compositions with the copies of k frozen"),
    "Cb": _Family(("k",), _cb_family,
                  "compositions whose parts k are consecutive", optional=("p",)),
    "Chat": _Family(("k",), _chat_family,
                    "compositions avoiding the part k", optional=("m",)),
    "Cmult": _Family(("k",), lambda n, k: cs.C_multiples(n, k),
                     "compositions with no part divisible by k"),
    "R": _Family((), lambda n: cs.R_total(n), "runs over all compositions"),
    "Rk": _Family(("k",), lambda n, k: cs.R_runs(n, k),
                  "runs of the value k over all compositions"),
    "E": _Family((), lambda n: cs.E_total(n),
                 "parts over all compositions"),
    "m": _Family(("r",), lambda n, r: cs.m_pal(r, n),
                 "palindromic tilings with r reds"),
    "pal": _Family((), lambda n: cs.pal(n), "palindromic compositions"),
    "palhat": _Family(("k",), lambda n, k: cs.pal_hat(n, k),
                      "palindromic compositions avoiding the part k"),
    "Ca": _Family(("r",), lambda n, r: cs.C_a(r, n),
                  "tiles used by all tilings with r reds"),
    "runs": _Family(("k",), _runs_family,
                    "runs over compositions with parts <= k"
                    " (runs of j only, with --j)", optional=("j",)),
}


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like LO..HI")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from exc
    if hi_i < lo_i:
        raise argparse.ArgumentTypeError("range upper end below lower end")
    return lo_i, hi_i


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilingkit",
        description="Exact counts for two-toned tilings and composition"
                    " statistics, with identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    family_lines = "\n".join(
        f"  {name:8s} {fam.signature:24s} {fam.help}"
        for name, fam in FAMILIES.items()
    )
    p_seq = sub.add_parser(
        "seq",
        help="emit one counting family over an index range",
        description="Families and their parameters:\n" + family_lines,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_seq.add_argument("family", help="family name (see --help for the list)")
    p_seq.add_argument("--range", required=True, type=_parse_range,
                       metavar="LO..HI", help="inclusive index range for n")
    p_seq.add_argument("--format", choices=SEQ_FORMATS, default="bfile")
    for p in ("r", "s", "k", "m", "p", "j", "l"):
        p_seq.add_argument(f"--{p}", type=int, default=None)

    p_table = sub.add_parser("table", help="rebuild a reference table")
    p_table.add_argument("table_id", choices=tables.TABLE_IDS)
    p_table.add_argument("--format", choices=TABLE_FORMATS,
                         default="pretty-table")

    for name, extra_help in (
        ("verify", "run the identity registry"),
        ("conjecture", "run only the conjecture records"),
    ):
        p_v = sub.add_parser(name, help=extra_help)
        p_v.add_argument("--scale", choices=tuple(identities.SCALES),
                         default="default")
        if name == "verify":
            p_v.add_argument("--filter", default=None, metavar="GLOB",
                             help="only evaluate records whose id matches")
        p_v.add_argument("--out", default=None, metavar="PATH",
                         help="write the JSON report here instead of stdout")
        p_v.add_argument("--quiet", action="store_true",
                         help="suppress the per-record summary on stderr")

    p_oracle = sub.add_parser(
        "oracle", help="enumerate or count objects by brute force"
    )
    p_oracle.add_argument("kind", choices=("tilings", "compositions",
                                           "palindromes"))
    p_oracle.add_argument("--r", type=int, default=0, help="red squares")
    p_oracle.add_argument("--n", type=int, required=True,
                          help="white total / composition weight")
    p_oracle.add_argument("--max-white", type=int, default=None)
    p_oracle.add_argument("--forbid-white", type=int, default=None)
    p_oracle.add_argument("--suffix-white", type=int, default=0)
    p_oracle.add_argument("--max", type=int, default=None,
                          help="largest allowed part (compositions)")
    p_oracle.add_argument("--forbid", type=int, default=None,
                          help="forbidden part (compositions/palindromes)")
    p_oracle.add_argument("--allowed", default=None, metavar="A,B,...",
                          help="comma separated allowed parts (compositions)")
    p_oracle.add_argument("--no-multiple-of", type=int, default=None)
    p_oracle.add_argument("--count-only", action="store_true")
    return parser


def _emit_sequence(
    family: str, values: list[tuple[int, int]], fmt: str, params: dict
) -> str:
    if fmt == "bfile":
        return "".join(f"{i} {v}\n" for i, v in values)
    if fmt == "csv":
        return "n,value\n" + "".join(f"{i},{v}\n" for i, v in values)
    if fmt == "json":
        doc = {
            "schema": 1,
            "family": family,
            "params": {k: v for k, v in sorted(params.items()) if v is not None},
            "values": [[i, v] for i, v in values],
        }
        return json.dumps(doc, sort_keys=True) + "\n"
    width_i = max(len(str(i)) for i, _ in values)
    width_v = max(len(str(v)) for _, v in values)
    lines = [f"{'n'.rjust(width_i)}  {'value'.rjust(width_v)}"]
    lines += [f"{str(i).rjust(width_i)}  {str(v).rjust(width_v)}"
              for i, v in values]
    return "\n".join(lines) + "\n"


def _cmd_seq(args: argparse.Namespace) -> int:
    fam = FAMILIES.get(args.family)
    if fam is None:
        known = ", ".join(sorted(FAMILIES))
        print(f"tilingkit seq: unknown family {args.family!r};"
              f" known families: {known}", file=sys.stderr)
        return EXIT_USAGE
    params = {}
    for p in fam.params:
        value = getattr(args, p)
        if value is None:
            print(f"tilingkit seq: family {args.family!r} needs"
                  f" parameters: {fam.signature}", file=sys.stderr)
            return EXIT_USAGE
        params[p] = value
    for p in fam.optional:
        value = getattr(args, p)
        if value is not None:
            params[p] = value
    lo, hi = args.range
    try:
        values = [(i, fam.fn(i, **params)) for i in range(lo, hi + 1)]
    except ValueError as exc:
        print(f"tilingkit seq: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(_emit_sequence(args.family, values, args.format, params))
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    doc = tables.build_table(args.table_id)
    if args.format == "pretty-table":
        sys.stdout.write(tables.render_pretty(doc))
    elif args.format == "csv":
        sys.stdout.write(tables.render_csv(doc))
    else:
        sys.stdout.write(json.dumps(doc.to_doc(), sort_keys=True) + "\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, id_filter: str | None) -> int:
    report = identities.run_registry(args.scale, id_filter)
    payload = json.dumps(report.to_doc(), sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    if not args.quiet:
        for result in report.results:
            mark = "ok " if result.matches_expected else "FAIL"
            print(f"[{mark}] {result.id}: {result.status}"
                  f" ({result.points} points)", file=sys.stderr)
    return EXIT_OK if report.all_match else EXIT_VERIFY_FAILED


def _oracle_ceiling() -> int | None:
    raw = os.environ.get("TILINGKIT_ORACLE_CEILING", "").strip()
    if not raw:
        return oracle.DEFAULT_CEILING
    return int(raw)


def _cmd_oracle(args: argparse.Namespace) -> int:
    ceiling = _oracle_ceiling()
    if args.kind == "tilings":
        filt = oracle.TilingFilter(
            max_white_len=args.max_white,
            forbidden_white_len=args.forbid_white,
            suffix_white_tiles=args.suffix_white,
        )
        if args.count_only:
            print(oracle.count_tilings(args.r, args.n, filt, ceiling=ceiling))
            return EXIT_OK
        for tiling in oracle.enumerate_tilings(args.r, args.n, filt,
                                               ceiling=ceiling):
            print(tiling)
        return EXIT_OK
    if args.kind == "palindromes":
        if args.count_only:
            print(oracle.count_tilings(
                args.r, args.n, oracle.TilingFilter(palindromic=True),
                ceiling=ceiling,
            ))
            return EXIT_OK
        for tiling in oracle.enumerate_palindromic_tilings(
            args.r, args.n, ceiling=ceiling
        ):
            print(tiling)
        return EXIT_OK
    allowed = None
    if args.allowed:
        allowed = tuple(int(p) for p in args.allowed.split(","))
    kwargs = dict(
        max_part=args.max,
        forbidden_part=args.forbid,
        allowed_parts=allowed,
        no_multiple_of=args.no_multiple_of,
    )
    if args.count_only:
        print(oracle.count_compositions(args.n, ceiling=ceiling, **kwargs))
        return EXIT_OK
    for comp in oracle.enumerate_compositions(args.n, ceiling=ceiling, **kwargs):
        print(" ".join(str(p) for p in comp) if comp else "(empty)")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "seq":
            return _cmd_seq(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "verify":
            return _cmd_verify(args, args.filter)
        if args.command == "conjecture":
            return _cmd_verify(args, "conjecture*")
        if args.command == "oracle":
            return _cmd_oracle(args)
    except oracle.OracleScaleError as exc:
        print(f"tilingkit: {exc}", file=sys.stderr)
        return EXIT_ORACLE_SCALE
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
