"""Command-line surface.

Exit codes: 0 ok, 1 domain error (bad parameters, failed decode, golden
mismatch), 2 internal error.  All parameters are explicit flags.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import channel as channel_mod
from . import codebook as codebook_mod
from . import decoder as decoder_mod
from . import runlength
from . import tables as tables_mod
from .errors import LatdelError, ParameterError
from .gf2 import even_weight, hamming8, reed_muller, repetition
from .series import hat_coefficient, nu_series
from .z4 import bw16_code, golay_z4, klemm


def parse_code(tag: str):
    """Code names accepted on the command line: h8, bw16, golay24,
    klemm(s), rm(k,m), repetition(s), even(s)."""
    flat = {"h8": hamming8, "bw16": bw16_code, "golay24": golay_z4}
    if tag in flat:
        return flat[tag]()
    m = re.fullmatch(r"(klemm|rm|repetition|even)\(([-\d,]+)\)", tag)
    if not m:
        raise ParameterError(f"unknown code {tag!r}")
    kind, args = m.group(1), [int(v) for v in m.group(2).split(",")]
    if kind == "klemm" and len(args) == 1:
        return klemm(args[0])
    if kind == "rm" and len(args) == 2:
        return reed_muller(*args)
    if kind == "repetition" and len(args) == 1:
        return repetition(args[0])
    if kind == "even" and len(args) == 1:
        return even_weight(args[0])
    raise ParameterError(f"bad parameters for code {tag!r}")


def _cmd_encode(args, out):
    rv = runlength.phi(args.word)
    print(" ".join(str(x) for x in rv.runs), file=out)
    return 0


def _cmd_decode_runs(args, out):
    runs = [int(v) for v in args.runs.split()]
    print(runlength.phi_inverse(runs), file=out)
    return 0


def _cmd_nu(args, out):
    code = parse_code(args.code)
    construction = "hat" if args.hat else "plain"
    degree = args.max_N + code.modulus * code.length
    nu = nu_series(code, args.r, degree)
    print(
        f"# code={code.name} m={code.modulus} n={code.length} r={args.r} "
        f"construction={construction}",
        file=out,
    )
    print("N,coefficient", file=out)
    for N in range(args.min_N, args.max_N + 1, args.step):
        value = hat_coefficient(nu, args.r, N) if args.hat else nu.series.coeff(N)
        print(f"{N},{value}", file=out)
    return 0


def _cmd_codebook(args, out):
    cb = codebook_mod.generate(args.n, args.N, args.r)
    text = codebook_mod.format_codebook(cb)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {cb.size} codewords to {args.out}", file=sys.stderr)
    else:
        out.write(text)
    return 0


def _cmd_decode(args, out):
    cb = codebook_mod.parse_codebook(Path(args.codebook).read_text())
    received = [int(v) for v in args.received.split()]
    if len(received) != cb.n:
        raise ParameterError(f"received vector has {len(received)} coordinates, need {cb.n}")
    trace = decoder_mod.decode(received, cb.N)
    if not trace.ok:
        print(f"decode failure: {trace.failure}", file=sys.stderr)
        return 1
    print(" ".join(str(v) for v in trace.output), file=out)
    print(
        f"branch={trace.branch} additions={trace.additions_used} "
        f"parity_tests={trace.parity_tests_used}",
        file=out,
    )
    return 0


def _cmd_bounds(args, out):
    code = parse_code(args.code) if args.code else None
    nu = None
    if code is not None:
        nu = nu_series(code, args.r, args.max_N)
    header = ["N", "gilbert_I"] + (["nu"] if nu else []) + ["hamming_S", "johnson"]
    outside = [
        N
        for N in range(args.min_N, args.max_N + 1, args.step)
        if not bounds_mod.in_theorem_domain(args.n, args.d, N, args.r)
    ]
    if outside:
        print(f"# outside_theorem_domain N={','.join(str(v) for v in outside)}", file=out)
    print(",".join(header), file=out)
    for N in range(args.min_N, args.max_N + 1, args.step):
        report = bounds_mod.bound_report(
            args.n, args.d, N, args.r,
            nu_lower=nu.series.coeff(N) if nu else None,
        )
        row = [report.N, report.gilbert_lower]
        if nu:
            row.append(report.nu_lower)
        row.append(report.hamming_upper)
        row.append("" if report.johnson_upper is None else report.johnson_upper)
        print(",".join(str(v) for v in row), file=out)
    return 0


def _cmd_asymptotic(args, out):
    etas = [float(v) for v in args.etas.split(",")]
    steps = int(round(args.delta_max / args.delta_step))
    deltas = [i * args.delta_step for i in range(steps + 1)]
    print(f"# r={args.r}", file=out)
    print("eta,delta,f", file=out)
    for eta, delta, f in bounds_mod.curve_rows(args.r, etas, deltas):
        print(f"{eta:.4g},{delta:.4g},{f:.9f}", file=out)
    return 0


def _cmd_simulate(args, out):
    cb = codebook_mod.generate(args.n, args.N, args.r)
    config = channel_mod.ChannelConfig(
        max_deletions=args.t, model=args.model, seed=args.seed, trials=args.trials
    )
    report = channel_mod.run_pipeline(cb, config)
    print(report.to_json(), file=out)
    print(
        f"{report.successes}/{report.trials} decoded correctly "
        f"(rate {report.success_rate:.4f})",
        file=sys.stderr,
    )
    return 0


def _cmd_tables(args, out):
    ids = list(tables_mod.TABLE_IDS) if args.all else [args.id]
    if not args.all and args.id is None:
        raise ParameterError("pass --id or --all")
    failures = []
    for table_id in ids:
        text = tables_mod.reproduce_table(table_id)
        if args.check:
            if table_id not in tables_mod.INTEGER_TABLE_IDS:
                continue
            result = tables_mod.golden_diff(text, tables_mod.golden_text(table_id))
            status = "ok" if result.ok else f"MISMATCH ({result.message})"
            print(f"table {table_id}: {status}", file=out)
            if not result.ok:
                failures.append(table_id)
        elif args.outdir:
            path = Path(args.outdir) / f"table_{table_id}.csv"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
            print(f"wrote {path}", file=sys.stderr)
        elif args.out:
            Path(args.out).write_text(text)
            print(f"wrote {args.out}", file=sys.stderr)
        else:
            out.write(text)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latdel",
        description="Runlength lattice codes for bounded-deletion channels",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="binary word to run vector")
    p.add_argument("--word", required=True)
    p.set_defaults(fn=_cmd_encode)

    p = sub.add_parser("decode-runs", help="run vector back to binary word")
    p.add_argument("--runs", required=True, help="space-separated run lengths")
    p.set_defaults(fn=_cmd_decode_runs)

    p = sub.add_parser("nu", help="lattice point-count series as CSV")
    p.add_argument("--code", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--min-N", dest="min_N", type=int, required=True)
    p.add_argument("--max-N", dest="max_N", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--hat", action="store_true", help="append-coordinate construction")
    p.set_defaults(fn=_cmd_nu)

    p = sub.add_parser("codebook", help="generate an (n,d,N,r) codebook")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_codebook)

    p = sub.add_parser("decode", help="decode a received run vector")
    p.add_argument("--codebook", required=True, help="path to a codebook file")
    p.add_argument("--received", required=True, help="space-separated coordinates")
    p.set_defaults(fn=_cmd_decode)

    p = sub.add_parser("bounds", help="packing bounds as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--min-N", dest="min_N", type=int, required=True)
    p.add_argument("--max-N", dest="max_N", type=int, required=True)
    p.add_argument("--step", type=int, default=4)
    p.add_argument("--code", help="include the constructive nu column for this code")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("asymptotic", help="rate-exponent curves as CSV")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--etas", required=True, help="comma-separated run densities")
    p.add_argument("--delta-max", dest="delta_max", type=float, default=1.0)
    p.add_argument("--delta-step", dest="delta_step", type=float, default=0.02)
    p.set_defaults(fn=_cmd_asymptotic)

    p = sub.add_parser("simulate", help="bounded-deletion channel simulation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True, help="deletion budget")
    p.add_argument("--model", choices=("exhaustive", "uniform_random"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("tables", help="reproduce reference tables")
    p.add_argument("--id", choices=tables_mod.TABLE_IDS)
    p.add_argument("--all", action="store_true")
    p.add_argument("--check", action="store_true", help="diff against bundled goldens")
    p.add_argument("--out")
    p.add_argument("--outdir")
    p.set_defaults(fn=_cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except LatdelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
