"""Command-line entry point.

One binary, subcommand style:

    gen legendre|msequence|twinprime   emit a sequence in the text format
    interleave build|decompose         array form <-> sequence
    build-u                            the period-4N construction
    corr / classify                    spectra and the optimality verdict
    predict-u                          closed-form values for the 4N construction
    verify theorem1|theorem2|corollaries|theorem3|theorem4
    search                             exhaustive rotation-class search
    export                             spectrum as CSV for external plotting

Exit codes: 0 success (verify: all rows match), 1 verification mismatch,
2 invalid input or violated hypothesis.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construct_u, correlation, generators, interleave, verify
from .core import read_sequence, format_sequence, BinarySequence
from .correlation import (
    autocorrelation_spectrum,
    classify,
    cross_correlation_spectrum,
    spectrum_to_dict,
    spectrum_to_json,
)
from .interleave import build, construction_a, construction_b, format_spec, read_spec, to_array


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_sequence(seq: BinarySequence, out: str | None) -> None:
    _emit(format_sequence(seq), out)


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "legendre":
        seq = generators.legendre(args.p, args.kind)
    elif args.family == "msequence":
        taps = int(args.taps, 0) if args.taps is not None else None
        seq = generators.m_sequence(args.degree, taps)
    else:
        seq = generators.twin_prime(args.p, args.modified)
    _emit_sequence(seq, args.out)
    return 0


def _cmd_interleave(args: argparse.Namespace) -> int:
    if args.action == "build":
        _emit_sequence(build(read_spec(args.spec)), args.out)
    else:
        spec = to_array(read_sequence(args.seq), args.k, args.t)
        _emit(format_spec(spec), args.out)
    return 0


def _cmd_build_u(args: argparse.Namespace) -> int:
    s = read_sequence(args.s)
    sp = read_sequence(args.sprime)
    _emit_sequence(construct_u.build_u(s, sp, args.eta), args.out)
    return 0


def _cmd_corr(args: argparse.Namespace) -> int:
    a = read_sequence(args.a)
    if args.b:
        spectrum = cross_correlation_spectrum(a, read_sequence(args.b))
    else:
        spectrum = autocorrelation_spectrum(a)
    if args.json:
        _emit(spectrum_to_json(spectrum) + "\n", args.out)
    else:
        _emit(" ".join(str(v) for v in spectrum.values) + "\n", args.out)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    spectrum = autocorrelation_spectrum(read_sequence(args.seq))
    verdict = classify(spectrum)
    if args.json:
        obj = {
            "period": spectrum.period,
            "residue": verdict.residue,
            "verdict": verdict.verdict,
            "out_of_phase_values": sorted(set(spectrum.out_of_phase())),
        }
        _emit(json.dumps(obj, indent=2) + "\n", args.out)
    else:
        _emit(
            f"period={spectrum.period} residue={verdict.residue} "
            f"verdict={verdict.verdict}\n",
            args.out,
        )
    return 0


def _cmd_predict_u(args: argparse.Namespace) -> int:
    spec = read_spec(args.spec)
    cols = spec.columns[1:]
    spec_a = construction_a(cols)
    predictor = construct_u.UPredictor(spec_a, args.eta, args.regime)
    if args.mu is not None:
        _emit(f"{predictor.predict(args.mu)}\n", args.out)
        return 0
    s = build(spec_a)
    sp = build(construction_b(cols))
    observed = autocorrelation_spectrum(construct_u.build_u(s, sp, args.eta))
    predicted = predictor.predict_all()
    obj = spectrum_to_dict(observed)
    obj["predicted"] = list(predicted)
    obj["mismatched_shifts"] = [
        mu for mu, (p, o) in enumerate(zip(predicted, observed.values)) if p != o
    ]
    _emit(json.dumps(obj, indent=2) + "\n", args.out)
    return 0


def _report_summary(report: verify.TheoremReport) -> str:
    inst = " ".join(f"{k}={v}" for k, v in report.instance.items())
    lines = [
        f"{report.theorem} {inst}: {report.verdict.upper()} "
        f"({len(report.rows)} rows, {report.mismatches} mismatches)"
    ]
    for row in report.mismatched_rows()[:10]:
        lines.append(
            f"  mismatch {row.quantity} shift={row.shift}: "
            f"predicted {row.predicted}, observed {row.observed}"
        )
    experiment = report.extras.get("index_experiment")
    if experiment:
        for branch, info in experiment.items():
            lines.append(
                f"  index experiment {branch}: proof({info['proof_index']}) "
                f"mismatches={info['proof_mismatches']}, "
                f"printed({info['printed_index']}) "
                f"mismatches={info['printed_mismatches']} -> matching: "
                + (", ".join(info["matching"]) or "none")
            )
    return "\n".join(lines) + "\n"


def _cmd_verify(args: argparse.Namespace) -> int:
    spec = read_spec(args.spec)
    if args.target == "theorem1":
        reports = [verify.verify_theorem1(spec)]
    elif args.target == "theorem2":
        reports = [verify.verify_theorem2(spec)]
    elif args.target == "corollaries":
        reports = [verify.verify_corollaries(spec)]
    elif args.target == "theorem3":
        reports = [verify.verify_theorem3(spec, args.eta, args.regime)]
    else:
        reports = [verify.verify_theorem4(spec, args.eta, args.condition)]
        if args.reverse_samples:
            reports.append(verify.theorem4_reverse_sample(
                samples=args.reverse_samples, seed=args.seed))
    if args.json:
        payload = reports[0].to_dict() if len(reports) == 1 else {
            "reports": [r.to_dict() for r in reports]
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit("".join(_report_summary(r) for r in reports), args.out)
    return 0 if all(r.verdict == verify.PASS for r in reports) else 1


def _cmd_search(args: argparse.Namespace) -> int:
    result = verify.exhaustive_search(
        args.period,
        args.target,
        budget=args.budget,
        dual_check=not args.skip_dual_check,
        jobs=args.jobs,
    )
    if args.json:
        _emit(result.to_json() + "\n", args.out)
    else:
        lines = [
            f"period={result.period} target={result.target} "
            f"count={result.count} enumerated={result.enumerated}"
        ]
        lines.extend(result.representatives)
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    a = read_sequence(args.seq)
    if args.b:
        spectrum = cross_correlation_spectrum(a, read_sequence(args.b))
    else:
        spectrum = autocorrelation_spectrum(a)
    rows = ["tau,value"] + [f"{tau},{v}" for tau, v in enumerate(spectrum.values)]
    _emit("\n".join(rows) + "\n", args.out)
    return 0


def _add_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optseq",
        description="Binary sequences with optimal periodic autocorrelation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a sequence")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    g_leg = gen_sub.add_parser("legendre", help="quadratic-residue sequence")
    g_leg.add_argument("--p", type=int, required=True, help="odd prime period")
    g_leg.add_argument("--kind", choices=[generators.FIRST, generators.SECOND],
                       required=True, help="value at t=0: first -> 1, second -> 0")
    _add_out(g_leg)
    g_leg.set_defaults(func=_cmd_gen)
    g_ms = gen_sub.add_parser("msequence", help="maximal-length LFSR sequence")
    g_ms.add_argument("--degree", type=int, required=True)
    g_ms.add_argument("--taps", help="feedback tap mask (e.g. 0x3 for x^4+x+1); "
                                     "defaults to the built-in table")
    _add_out(g_ms)
    g_ms.set_defaults(func=_cmd_gen)
    g_tp = gen_sub.add_parser("twinprime", help="twin-prime interleaved sequence")
    g_tp.add_argument("--p", type=int, required=True, help="p with p and p+2 prime")
    g_tp.add_argument("--modified", action="store_true",
                      help="all-one constant column instead of all-zero")
    _add_out(g_tp)
    g_tp.set_defaults(func=_cmd_gen)

    il = sub.add_parser("interleave", help="array form <-> sequence")
    il_sub = il.add_subparsers(dest="action", required=True)
    il_build = il_sub.add_parser("build", help="read a spec file, emit the sequence")
    il_build.add_argument("--spec", required=True)
    _add_out(il_build)
    il_build.set_defaults(func=_cmd_interleave)
    il_dec = il_sub.add_parser("decompose", help="slice a sequence into K x T columns")
    il_dec.add_argument("--seq", required=True)
    il_dec.add_argument("--k", type=int, required=True)
    il_dec.add_argument("--t", type=int, required=True)
    _add_out(il_dec)
    il_dec.set_defaults(func=_cmd_interleave)

    bu = sub.add_parser("build-u", help="period-4N construction from s and s'")
    bu.add_argument("--s", required=True, help="zero-column sequence file")
    bu.add_argument("--sprime", required=True, help="one-column sequence file")
    bu.add_argument("--eta", type=int, default=0)
    _add_out(bu)
    bu.set_defaults(func=_cmd_build_u)

    corr = sub.add_parser("corr", help="correlation spectrum")
    corr.add_argument("--a", required=True)
    corr.add_argument("--b", help="second sequence for a cross spectrum")
    corr.add_argument("--json", action="store_true")
    _add_out(corr)
    corr.set_defaults(func=_cmd_corr)

    cls = sub.add_parser("classify", help="optimality verdict of a sequence")
    cls.add_argument("--seq", required=True)
    cls.add_argument("--json", action="store_true")
    _add_out(cls)
    cls.set_defaults(func=_cmd_classify)

    pu = sub.add_parser("predict-u", help="closed-form autocorrelation of the"
                                          " period-4N construction")
    pu.add_argument("--spec", required=True,
                    help="spec file; column 0 is replaced by the constant column")
    pu.add_argument("--eta", type=int, default=0)
    pu.add_argument("--regime", choices=[construct_u.CONST, construct_u.ANTISYM],
                    required=True)
    group = pu.add_mutually_exclusive_group(required=True)
    group.add_argument("--mu", type=int, help="single shift")
    group.add_argument("--all", action="store_true",
                       help="emit predicted and observed spectra as JSON")
    _add_out(pu)
    pu.set_defaults(func=_cmd_predict_u)

    ver = sub.add_parser("verify", help="check an identity against brute force")
    ver.add_argument("target", choices=["theorem1", "theorem2", "corollaries",
                                        "theorem3", "theorem4"])
    ver.add_argument("--spec", required=True,
                     help="spec file; column 0 is replaced internally")
    ver.add_argument("--eta", type=int, default=0)
    ver.add_argument("--regime", choices=[construct_u.CONST, construct_u.ANTISYM],
                     default=construct_u.CONST)
    ver.add_argument("--condition", type=int, choices=[1, 2], default=1)
    ver.add_argument("--reverse-samples", type=int, default=0,
                     help="theorem4 only: also sample this many specs violating"
                          " both conditions")
    ver.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    ver.add_argument("--json", action="store_true")
    _add_out(ver)
    ver.set_defaults(func=_cmd_verify)

    srch = sub.add_parser("search", help="exhaustive rotation-class search")
    srch.add_argument("--period", type=int, required=True)
    srch.add_argument("--target", choices=[correlation.IDEAL, correlation.OPTIMAL],
                      required=True)
    srch.add_argument("--jobs", type=int, default=1)
    srch.add_argument("--budget", type=int, default=verify.SEARCH_BUDGET_DEFAULT)
    srch.add_argument("--skip-dual-check", action="store_true",
                      help="skip the definitional-sum recheck of every candidate")
    srch.add_argument("--json", action="store_true")
    _add_out(srch)
    srch.set_defaults(func=_cmd_search)

    exp = sub.add_parser("export", help="spectrum as CSV (tau,value)")
    exp.add_argument("--seq", required=True)
    exp.add_argument("--b", help="second sequence for a cross spectrum")
    exp.add_argument("--format", choices=["csv"], default="csv")
    _add_out(exp)
    exp.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"optseq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
