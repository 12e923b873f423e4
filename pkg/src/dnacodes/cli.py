"""Command-line interface.

Exit codes: 0 success, 2 validation error, 3 decoding failure,
4 reproduction/acceptance mismatch.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import math
import random
import sys
from pathlib import Path

from . import __version__, engine, fasta, framing, oracles
from .channel import EditKind, MODES, apply_edit, random_edit, run_campaign
from .construction_one import C1Code, C1Params
from .constructions import (
    C2Code, C3Code, C4Code, CLEpsParams, ConcatParams, LocalParams, find_vt_class,
)
from .ecc import largest_prime_at_most
from .errors import DecodingError, ValidationError

EXIT_OK, EXIT_VALIDATION, EXIT_DECODE, EXIT_MISMATCH = 0, 2, 3, 4


def manifest(args, **extra) -> dict:
    params = {k: v for k, v in vars(args).items()
              if k not in ("func", "command", "action") and not callable(v)}
    params = {k: (str(v) if isinstance(v, Path) else v) for k, v in params.items()}
    out = {"subcommand": args.command, "action": getattr(args, "action", None),
           "params": params, "version": __version__, "seed": getattr(args, "seed", None)}
    out.update(extra)
    return out


def emit(obj, out: Path | None = None) -> None:
    text = json.dumps(obj, indent=2, default=str)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


# -- spec and code builders ------------------------------------------------------

def build_spec(args, n: int) -> engine.ConstraintSpec:
    kind = args.spec
    if kind == "s0":
        return engine.s0_spec(args.m)
    if kind == "rll":
        return engine.rll_spec(args.ell)
    if kind == "f":
        return engine.f_spec(args.ell)
    if kind == "f0":
        return engine.f0_spec(args.ell)
    if kind == "fi":
        return engine.fi_spec(args.ell, args.i)
    if kind == "balanced":
        return engine.balanced_spec(n, args.eps)
    raise ValidationError(f"unknown spec {kind}")


def concat_params(args) -> ConcatParams:
    inner = CLEpsParams(args.ell, args.eps, args.n)
    q = args.q
    if q is None:
        q = largest_prime_at_most(min(2 ** 13, inner.cardinality))
    return ConcatParams(inner, q, args.r)


def build_code(args):
    if args.command == "c1":
        return C1Code(C1Params(args.m, args.ell, args.n, args.t))
    p = concat_params(args)
    if args.command == "c2":
        return C2Code(p)
    if args.command == "c3":
        return C3Code(p, cap=args.cap, seed=args.seed)
    if args.command == "c4":
        if args.s0 is not None and args.s0 != p.N:
            raise ValidationError(f"--s0 {args.s0} does not match the inner code length {p.N}")
        s = args.s if args.s is not None else 2 * p.N + 1
        return C4Code(p, LocalParams(p.N, args.t, s, p.inner.eps), cap=args.cap, seed=args.seed)
    raise ValidationError(f"unknown construction {args.command}")


def code_summary(code) -> dict:
    out = {"construction": code.name, "length": code.length, "size": str(code.size)}
    if code.name == "c1":
        p = code.params
        out.update(m=p.m, ell=p.ell, n=p.n, t=p.t, x_count=str(p.x_count), rate=p.rate)
    else:
        p = code.params if code.name in ("c2", "c3") else code.inner
        out.update(ell=p.inner.ell, eps=str(p.inner.eps), n=p.inner.n, q=p.q, r=p.r,
                   hamming_length=p.t, S_size=str(p.S_size), block_length=p.block_length,
                   eps_effective=str(p.eps_effective), c2_rate=p.rate,
                   length_condition_holds=p.inner.length_condition())
    if code.name in ("c3", "c4"):
        out["vt_class"] = code.manifest()
        if code.size:
            out["rate"] = math.log2(code.size) / code.length
    if code.name == "c4":
        out.update(t=code.local.t, s=code.local.s, s0=code.local.s0, delta=str(code.delta),
                   delta_float=float(code.delta), local_code_size=str(code.base.size))
    return out


# -- subcommands -----------------------------------------------------------------

def cmd_tables(args) -> int:
    from .report import build_report, write_outputs

    rep = build_report(args.n_growth)
    if args.out_dir:
        files = write_outputs(rep, Path(args.out_dir), args.n_growth)
        rep["files"] = [str(f) for f in files]
    emit({"manifest": manifest(args), **rep})
    for w in rep["warnings"]:
        print(f"WARNING: {w}", file=sys.stderr)
    failed = [k for k, ok in rep["checks"].items() if not ok]
    if failed:
        print(f"mismatch against published values: {', '.join(failed)}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _count_record(spec, n):
    c = engine.count(spec, n)
    return {"n": n, "count": str(c), "log2_count": math.log2(c) if c else None}


def cmd_count(args) -> int:
    spec = build_spec(args, args.length)
    rec = _count_record(spec, args.length)
    emit({"manifest": manifest(args), "spec": spec.describe(), **rec})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = build_spec(args, args.length)
    words = engine.enumerate_words(spec, args.length, cap=args.cap)
    emit({"manifest": manifest(args), "spec": spec.describe(), **_count_record(spec, args.length),
          "words": ["".join(map(str, w)) for w in words]})
    return EXIT_OK


def cmd_growth(args) -> int:
    spec = build_spec(args, args.n_hi)
    g = engine.growth_rate(spec, args.n_lo, args.n_hi)
    emit({"manifest": manifest(args), "spec": spec.describe(), **_count_record(spec, args.n_hi),
          "growth_rate": g, "one_plus_log2_growth": 1 + math.log2(g)})
    return EXIT_OK


def cmd_construction(args) -> int:
    code = build_code(args)
    if args.action == "build":
        emit({"manifest": manifest(args), **code_summary(code)}, args.output)
        return EXIT_OK
    if args.action == "encode":
        data = Path(args.input).read_bytes()
        k = code.capacity_bits
        chunks = framing.to_chunks(data, k)
        records = []
        for i, v in enumerate(chunks):
            word = code.encode(code.message_from_int(v))
            desc = f"construction={code.name} length={len(word)}"
            if code.name != "c1":
                bl = (code.params if code.name in ("c2", "c3") else code.inner).block_length
                desc += f" block_len={bl} blocks={len(word) // bl}"
            records.append(fasta.Record(f"cw{i:06d}", word, desc))
        with _open_out(args.output) as fh:
            fasta.write(fh, records)
        return EXIT_OK
    # decode
    with open(args.input) as fh:
        records = fasta.parse(fh)
    values = []
    for rec in records:
        try:
            values.append(code.message_to_int(code.decode(rec.seq)))
        except DecodingError as exc:
            _diagnose(rec.name, exc)
            return EXIT_DECODE
    try:
        data = framing.from_chunks(values, code.capacity_bits)
    except DecodingError as exc:
        _diagnose(None, exc)
        return EXIT_DECODE
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK


def _diagnose(record, exc: DecodingError) -> None:
    print(json.dumps({"error": "decoding-failure", "record": record,
                      "constraint": exc.constraint, "message": str(exc)}), file=sys.stderr)


def _open_out(path):
    return open(path, "w") if path else contextlib.nullcontext(sys.stdout)


def _pair(text: str) -> tuple[int, float]:
    s, eps = text.split(",")
    return int(s), float(eps)


def cmd_verify(args) -> int:
    with open(args.input) as fh:
        records = fasta.parse(fh)
    results = []
    for rec in records:
        x = rec.seq
        row: dict = {"name": rec.name, "length": len(x)}
        if args.ssa is not None:
            row["ssa"] = oracles.is_m_ssa(x, args.ssa)
        if args.dominant is not None:
            row["tc_dominant"] = oracles.is_dominant(x, args.dominant)
        if args.rll is not None:
            row["rll"] = oracles.max_run_length(x) <= args.rll
        if args.gc_global is not None:
            row["gc_global"] = oracles.is_balanced(x, oracles.Global(args.gc_global))
        if args.gc_partition is not None:
            s, eps = args.gc_partition
            row["gc_partition"] = oracles.is_balanced(x, oracles.Partition(s, eps))
        if args.gc_local is not None:
            s, eps = args.gc_local
            row["gc_local"] = oracles.is_balanced(x, oracles.Local(s, eps))
        row["all"] = all(v for k, v in row.items() if isinstance(v, bool))
        results.append(row)
    emit({"manifest": manifest(args), "results": results}, args.output)
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.inject:
        rng = random.Random(args.seed)
        kinds = tuple(EditKind) if args.kind == "any" else (EditKind(args.kind),)
        with open(args.input) as fh:
            records = fasta.parse(fh)
        out = []
        log = []
        for rec in records:
            ev = random_edit(rec.seq, rng, kinds)
            out.append(fasta.Record(rec.name, apply_edit(rec.seq, ev), rec.description))
            log.append({"record": rec.name, **ev.to_dict()})
        with _open_out(args.output) as fh:
            fasta.write(fh, out)
        print(json.dumps({"manifest": manifest(args), "edits": log}), file=sys.stderr)
        return EXIT_OK
    args.command = args.codec
    code = build_code(args)
    args.command = "simulate"
    rep = run_campaign(code, args.mode, trials=args.trials, seed=args.seed, cap=args.exhaustive_cap)
    emit({"manifest": manifest(args), **rep.to_dict()}, args.output)
    return EXIT_OK if not rep.failures else EXIT_DECODE


def cmd_search_vt(args) -> int:
    with open(args.input) as fh:
        words = [r.seq for r in fasta.parse(fh)]
    res = find_vt_class(words, exhaustive=True)
    emit({"manifest": manifest(args), **res.to_dict(), "members": list(res.subcode)}, args.output)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def _spec_flags(p):
    p.add_argument("--spec", required=True, choices=["s0", "f", "f0", "fi", "rll", "balanced"])
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--ell", type=int, default=4)
    p.add_argument("--i", type=int, default=0, help="leading zeros for --spec fi")
    p.add_argument("--eps", type=float, default=0.1)


def _inner_flags(p, q_default=None):
    p.add_argument("--ell", type=int, default=4)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--n", type=int, default=10, help="inner length of C_{ell,eps}")
    p.add_argument("--q", type=int, default=q_default,
                   help="field size (prime); default: largest prime <= min(2^13, |S|)")
    p.add_argument("--r", type=int, default=2)


def _action_flags(p):
    p.add_argument("action", choices=["encode", "decode", "build"])
    p.add_argument("-i", "--input", type=Path)
    p.add_argument("-o", "--output", type=Path)
    p.add_argument("--seed", type=int, default=0)


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dnacodes", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="reproduce the published tables and rates")
    p.add_argument("--out-dir", type=Path, help="write JSON, CSV and PNG figures here")
    p.add_argument("--n-growth", type=int, default=400)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("count", help="exact size of a constrained set")
    _spec_flags(p)
    p.add_argument("--n", dest="length", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list a constrained set")
    _spec_flags(p)
    p.add_argument("--n", dest="length", type=int, required=True)
    p.add_argument("--cap", type=int, default=100_000)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("growth", help="growth-rate estimate count(n)/count(n-1)")
    _spec_flags(p)
    p.add_argument("--n-lo", type=int, default=11)
    p.add_argument("--n-hi", type=int, default=400)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("c1", help="m-SSA, ell-RLL code")
    _action_flags(p)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--ell", type=int, default=4)
    p.add_argument("--n", type=int, default=11)
    p.add_argument("--t", type=int, default=3)
    p.set_defaults(func=cmd_construction)

    p = sub.add_parser("c2", help="constrained code correcting one substitution")
    _action_flags(p)
    _inner_flags(p)
    p.set_defaults(func=cmd_construction)

    for name, helptext in (("c3", "constrained code correcting one edit"),
                           ("c4", "GC-locally balanced code correcting one edit")):
        p = sub.add_parser(name, help=helptext)
        _action_flags(p)
        _inner_flags(p, q_default=5 if name == "c3" else 3)
        p.add_argument("--cap", type=int, default=10 ** 6,
                       help="exhaustive VT-class search up to this many codewords")
        if name == "c4":
            p.add_argument("--t", type=int, default=4, help="number of inner codewords")
            p.add_argument("--s", type=int, help="local window (default 2*s0+1)")
            p.add_argument("--s0", type=int, help="inner length; checked against the inner code")
        p.set_defaults(func=cmd_construction)

    p = sub.add_parser("verify", help="check DNA sequences against constraints")
    p.add_argument("-i", "--input", type=Path, required=True)
    p.add_argument("-o", "--output", type=Path)
    p.add_argument("--ssa", type=int, metavar="M")
    p.add_argument("--dominant", type=int, metavar="M")
    p.add_argument("--rll", type=int, metavar="ELL")
    p.add_argument("--gc-global", type=float, metavar="EPS")
    p.add_argument("--gc-partition", type=_pair, metavar="S,EPS")
    p.add_argument("--gc-local", type=_pair, metavar="S,EPS")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="encode/corrupt/decode campaigns, or --inject edits")
    p.add_argument("--inject", action="store_true",
                   help="apply one random edit to every record of --input")
    p.add_argument("--kind", choices=["sub", "ins", "del", "any"], default="any")
    p.add_argument("-i", "--input", type=Path)
    p.add_argument("-o", "--output", type=Path)
    p.add_argument("--codec", choices=sorted(MODES), default="c2")
    p.add_argument("--mode", choices=["none", "sub", "edit", "exhaustive"], default="none")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive-cap", type=int, default=10 ** 7)
    # construction parameters (shared by all codecs)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--ell", type=int, default=4)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--q", type=int, default=None, help="default 5 (c2, c3) or 3 (c4)")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--s", type=int)
    p.add_argument("--s0", type=int)
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("search-vt", help="largest quaternary VT class inside a DNA code")
    p.add_argument("-i", "--input", type=Path, required=True)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_search_vt)
    return ap


def _simulate_defaults(args) -> None:
    if args.command != "simulate" or args.inject:
        return
    if args.n is None:
        args.n = 11 if args.codec == "c1" else 10
    if args.t is None:
        args.t = 3 if args.codec == "c1" else 4
    if args.q is None:
        args.q = 3 if args.codec == "c4" else 5


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.command in ("c1", "c2", "c3", "c4") and args.action in ("encode", "decode") \
            and args.input is None:
        parser.error(f"{args.command} {args.action} needs --input")
    if args.command == "simulate" and args.inject and args.input is None:
        parser.error("simulate --inject needs --input")
    try:
        _simulate_defaults(args)
        return args.func(args)
    except ValidationError as exc:
        print(json.dumps({"error": "validation", "message": str(exc)}), file=sys.stderr)
        return EXIT_VALIDATION
    except DecodingError as exc:
        _diagnose(None, exc)
        return EXIT_DECODE


if __name__ == "__main__":
    sys.exit(main())
