"""Command-line front end (``mseqcorr`` / ``python -m mseqcorr``)."""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from .arithcorr import arith_cross, arith_cross_shift, classical_cross, count_runs, m_via_lemma2
from .gf2field import FieldCtx
from .gf2poly import Poly2, PolyError, format_hex, list_primitive, parse_poly
from .msequence import SequenceError, add_seq, expand, max_zero_run, mseq_trace, shift
from .theorem import (
    TheoremError,
    crt_params,
    equality_condition,
    m_via_lemma4,
    predict,
    u1_closed,
    u2_closed,
    u_defn,
    v_closed,
    v_defn,
)
from .verify import (
    SweepError,
    census_matches,
    joint_views,
    phase_values,
    load_report,
    report_csv,
    rerun_report,
    run_sweep,
    write_report,
)


def _poly(text: str) -> Poly2:
    try:
        return parse_poly(text)
    except PolyError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(obj, as_json: bool, lines):
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_primpoly(args) -> int:
    degrees = range(1, args.degree + 1) if args.all else [args.degree]
    for n in degrees:
        for g in list_primitive(n):
            print(f"{g}\t{format_hex(g)}")
    return 0


def cmd_gen(args) -> int:
    s = mseq_trace(args.poly)
    if args.shift:
        s = shift(s, args.shift)
    if args.len is not None:
        s = expand(s, args.len)
    if args.format == "csv":
        print(s.to_csv())
    elif args.format == "json":
        print(json.dumps({"poly": str(args.poly), "period": s.period, "bits": str(s)}))
    else:
        print(s)
    return 0


def _prediction_lines(g1: Poly2, g2: Poly2) -> tuple[dict, list[str]]:
    p = predict(g1, g2)
    out = p.as_dict()
    out["bound"] = p.bound
    out["equality_condition"] = equality_condition(g1, g2) if p.n1 < p.n2 else None
    eq = "n/a (n1 >= n2)" if out["equality_condition"] is None else str(out["equality_condition"]).lower()
    lines = [
        f"g1 = {g1}  (n1 = {p.n1})",
        f"g2 = {g2}  (n2 = {p.n2})",
        f"F  = {p.F}  (l = {p.l}, f0 = {p.f0})",
        f"M  = {p.value}",
        f"bound 2^min(n1,n2) - 1 = {p.bound}",
        f"equality condition g2 = 1 mod g1: {eq}",
    ]
    return out, lines


def cmd_predict(args) -> int:
    forward, lines = _prediction_lines(args.g1, args.g2)
    backward, blines = _prediction_lines(args.g2, args.g1)
    _emit(
        {"forward": forward, "reversed": backward},
        args.json,
        ["M(A, B):", *("  " + x for x in lines), "M(B, A):", *("  " + x for x in blines)],
    )
    return 0


def cmd_corr(args) -> int:
    a0, b0 = mseq_trace(args.g1), mseq_trace(args.g2)
    n = a0.period * b0.period // gcd(a0.period, b0.period)
    a, b = expand(a0, n), expand(b0, n)
    if args.mode == "arith":
        cv = arith_cross_shift(a, b, args.tau)
        obj = {"mode": "arith", "tau": args.tau, "period": n, **cv.as_dict()}
        line = str(cv.value)
    else:
        value = classical_cross(a, b, args.tau)
        obj = {"mode": "classical", "tau": args.tau, "period": n, "value": value}
        line = str(value)
    _emit(obj, args.json, [line])
    return 0


def cmd_verify(args) -> int:
    if args.replay:
        report = rerun_report(load_report(args.replay))
    else:
        report = run_sweep(args.n1, args.n2, parallel=args.parallel, cap=args.cap)
    if args.out:
        write_report(report, args.out)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report_csv(report))
    s = report["summary"]
    for r in report["records"]:
        status = "ok" if r["first_failure"] is None else f"FAIL {r['first_failure']}"
        print(f"{r['g1']:>24} {r['g2']:>24}  F={r['F']:<12} M={r['M_predicted']:>4} brute={r['M_bruteforce']:>4}  {status}")
    print(f"{s['pairs_passed']}/{s['pairs_total']} pairs passed")
    return 0 if s["pairs_passed"] == s["pairs_total"] else 1


def lemma_breakdown(g1: Poly2, g2: Poly2, phases: bool = False) -> dict:
    p = predict(g1, g2)
    n1, n2 = p.n1, p.n2
    N1, N2 = (1 << n1) - 1, (1 << n2) - 1
    a, b = joint_views(g1, g2)
    m = arith_cross(a, b).value
    n01, n10 = count_runs(a, b, n1, n2)
    ctx1, ctx2 = FieldCtx(g1), FieldCtx(g2)
    rows = []
    for t in range(n1 + n2):
        u, v = u_defn(t, ctx1, ctx2), v_defn(t, ctx2)
        uc = u1_closed(t, n1, n2) + u2_closed(t, n1, n2, p.l, p.f0)
        rows.append(
            {
                "t": t,
                "N01": n01[t],
                "N10": n10[t],
                "U_defn": str(u),
                "U_closed": str(uc),
                "V_defn": str(v),
                "V_closed": str(v_closed(t, n2)),
                "ok": u == uc and v == v_closed(t, n2) and u - v == n01[t],
            }
        )
    crt = crt_params(N1, N2)
    out = {
        "prediction": p.as_dict(),
        "M_bruteforce": m,
        "lemma1": {
            "census_A": census_matches(mseq_trace(g1), n1) if n1 >= 2 else None,
            "census_B": census_matches(mseq_trace(g2), n2) if n2 >= 2 else None,
            "max_zero_run_of_sum": max_zero_run(add_seq(a, b)),
            "limit": n1 + n2,
        },
        "lemma2": m_via_lemma2(n01, n10, N1, N2),
        "lemma3": {"sum_N10": sum(n10), "sum_N01": sum(n01), "expected_sum_N10": (N2 - 1) * (N1 + 1) // 4},
        "lemma4": m_via_lemma4(n01, N1, N2),
        "lemma5": rows,
        "crt": {"r1": crt.r1, "r2": crt.r2},
    }
    if phases:
        out["phase_values"] = sorted(phase_values(g1, g2))
    return out


def cmd_lemmas(args) -> int:
    d = lemma_breakdown(args.g1, args.g2, phases=args.phases)
    if args.json:
        print(json.dumps(d, indent=2))
        return 0
    p = d["prediction"]
    print(f"g1 = {p['g1']}, g2 = {p['g2']}, F = {p['F']} (l = {p['l']}, f0 = {p['f0']})")
    print(f"M predicted = {p['M']}, brute force = {d['M_bruteforce']}")
    l1 = d["lemma1"]
    print(f"lemma 1: census A {l1['census_A']}, census B {l1['census_B']}, "
          f"longest zero run of A+B = {l1['max_zero_run_of_sum']} (< {l1['limit']})")
    print(f"lemma 2: M = {d['lemma2']}")
    l3 = d["lemma3"]
    print(f"lemma 3: sum N10 = {l3['sum_N10']} (expected {l3['expected_sum_N10']}), sum N01 = {l3['sum_N01']}")
    print(f"lemma 4: M = {d['lemma4']}")
    print(f"CRT: r1 = {d['crt']['r1']}, r2 = {d['crt']['r2']}")
    print(f"{'t':>3} {'N01':>6} {'N10':>6} {'U defn':>8} {'U closed':>9} {'V defn':>8} {'V closed':>9}  ok")
    for r in d["lemma5"]:
        print(f"{r['t']:>3} {r['N01']:>6} {r['N10']:>6} {r['U_defn']:>8} {r['U_closed']:>9} "
              f"{r['V_defn']:>8} {r['V_closed']:>9}  {r['ok']}")
    if "phase_values" in d:
        print(f"M over all phase pairs: {d['phase_values']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mseqcorr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("primpoly", help="list primitive polynomials")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--all", action="store_true", help="every degree from 1 up to --degree")
    p.set_defaults(func=cmd_primpoly)

    p = sub.add_parser("gen", help="print the canonical-phase m-sequence of a primitive polynomial")
    p.add_argument("--poly", type=_poly, required=True)
    p.add_argument("--len", type=int, help="output length, a multiple of the period")
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--format", choices=["bits", "csv", "json"], default="bits")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("predict", help="closed-form arithmetic crosscorrelation")
    p.add_argument("--g1", type=_poly, required=True)
    p.add_argument("--g2", type=_poly, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("corr", help="brute-force correlation over the joint period")
    p.add_argument("--g1", type=_poly, required=True)
    p.add_argument("--g2", type=_poly, required=True)
    p.add_argument("--tau", type=int, default=0)
    p.add_argument("--mode", choices=["arith", "classical"], default="arith")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_corr)

    p = sub.add_parser("verify", help="exhaustive sweep over all primitive pairs of two degrees")
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--csv", help="also write a flattened CSV report")
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--cap", type=int, help="override the n1 + n2 cap (env MSEQCORR_SWEEP_CAP)")
    p.add_argument("--replay", help="re-run the pairs listed in an existing JSON report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemmas", help="per-pair breakdown of every counting identity")
    p.add_argument("--g1", type=_poly, required=True)
    p.add_argument("--g2", type=_poly, required=True)
    p.add_argument("--phases", action="store_true", help="also evaluate M over every phase pair")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lemmas)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.replay and (args.n1 is None or args.n2 is None):
        parser.error("verify needs --n1 and --n2 (or --replay)")
    if args.command == "primpoly" and not 1 <= args.degree <= 16:
        parser.error("--degree must be in 1..16")
    try:
        return args.func(args)
    except (PolyError, SequenceError, TheoremError, SweepError, ValueError) as exc:
        print(f"mseqcorr: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
