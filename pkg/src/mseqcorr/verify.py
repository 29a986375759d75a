"""Exhaustive cross-checks of the closed form and its counting lemmas over primitive pairs."""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import gcd

from .arithcorr import (
    arith_cross,
    arith_cross_all_shifts,
    count_runs,
    disagreement_count,
    int_of_seq,
    m_via_lemma2,
)
from .arithcorr import _corr_of_ints
from .gf2field import FieldCtx
from .gf2poly import Poly2, list_primitive, parse_poly
from .msequence import BinarySeq, add_seq, expand, max_zero_run, mseq_trace, pattern_census
from .theorem import (
    equality_condition,
    m_via_lemma4,
    predict,
    u1_closed,
    u2_closed,
    u_defn,
    v_closed,
    v_defn,
)

DEFAULT_SWEEP_CAP = 14
FULL_SHIFT_MAX_DEGREE_SUM = 9
SHIFT_SAMPLES = 32

CHECKS = (
    "theorem_ok",
    "lemma1_ok",
    "lemma2_ok",
    "lemma3_ok",
    "lemma4_ok",
    "lemma5_ok",
    "bound_ok",
    "shift_constant_ok",
)


class SweepError(ValueError):
    pass


def sweep_cap() -> int:
    return int(os.environ.get("MSEQCORR_SWEEP_CAP", DEFAULT_SWEEP_CAP))


@lru_cache(maxsize=256)
def canonical(g: Poly2) -> BinarySeq:
    return mseq_trace(g)


def joint_views(g1: Poly2, g2: Poly2) -> tuple[BinarySeq, BinarySeq]:
    a, b = canonical(g1), canonical(g2)
    n = a.period * b.period
    return expand(a, n), expand(b, n)


def census_matches(s: BinarySeq, n: int) -> bool:
    """Window counts 2^(n-t) (nonzero) and 2^(n-t) - 1 (zero) for 1 <= t <= n."""
    for t in range(1, n + 1):
        for pat, count in pattern_census(s, t).items():
            want = (1 << (n - t)) - (0 if any(pat) else 1)
            if count != want:
                return False
    return True


def shift_taus(period: int, degree_sum: int) -> list[int]:
    if degree_sum <= FULL_SHIFT_MAX_DEGREE_SUM or period <= SHIFT_SAMPLES:
        return list(range(period))
    return sorted({k * period // SHIFT_SAMPLES for k in range(SHIFT_SAMPLES)})


def phase_values(g1: Poly2 | str, g2: Poly2 | str) -> set[int]:
    """M over every pair of independent phases (A shifted by s1, B shifted by s2)."""
    g1, g2 = parse_poly(g1), parse_poly(g2)
    a, b = joint_views(g1, g2)
    ia, ib = int_of_seq(a), int_of_seq(b)
    n1, n2 = canonical(g1).period, canonical(g2).period
    return {_corr_of_ints(ia.rotate(s1), ib.rotate(s2)).value for s1 in range(n1) for s2 in range(n2)}


@dataclass
class PairRecord:
    n1: int
    n2: int
    g1: str
    g2: str
    F: str
    l: int
    f0: int
    M_predicted: int
    M_bruteforce: int
    theorem_ok: bool
    lemma1_ok: bool
    lemma2_ok: bool
    lemma3_ok: bool
    lemma4_ok: bool
    lemma5_ok: bool
    bound_ok: bool
    shift_constant_ok: bool
    first_failure: str | None = None
    N01: list[int] = field(default_factory=list)
    N10: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(getattr(self, c) for c in CHECKS)


def check_pair(g1: Poly2 | str, g2: Poly2 | str) -> PairRecord:
    g1, g2 = parse_poly(g1), parse_poly(g2)
    pred = predict(g1, g2)
    n1, n2 = pred.n1, pred.n2
    N1, N2 = (1 << n1) - 1, (1 << n2) - 1
    a, b = joint_views(g1, g2)

    m = arith_cross(a, b).value
    n01, n10 = count_runs(a, b, n1, n2)

    lemma1 = max_zero_run(add_seq(a, b)) < n1 + n2
    for n, g in ((n1, g1), (n2, g2)):
        if n >= 2:
            lemma1 = lemma1 and census_matches(canonical(g), n)

    lemma2 = m_via_lemma2(n01, n10, N1, N2) == m
    lemma3 = 4 * sum(n10) == (N2 - 1) * (N1 + 1)
    lemma3 = lemma3 and sum(n01) + sum(n10) == disagreement_count(a, b)
    lemma4 = m_via_lemma4(n01, N1, N2) == m

    ctx1, ctx2 = FieldCtx(g1), FieldCtx(g2)
    lemma5 = True
    for t in range(n1 + n2):
        u, v = u_defn(t, ctx1, ctx2), v_defn(t, ctx2)
        if u != u1_closed(t, n1, n2) + u2_closed(t, n1, n2, pred.l, pred.f0):
            lemma5 = False
        elif v != v_closed(t, n2):
            lemma5 = False
        elif (u - v) != n01[t]:
            lemma5 = False
        if not lemma5:
            break

    bound = pred.bound
    bound_ok = abs(m) <= bound
    if n1 < n2:
        bound_ok = bound_ok and (abs(m) == bound) == equality_condition(g1, g2)

    taus = shift_taus(a.period, n1 + n2)
    shift_ok = set(arith_cross_all_shifts(a, b, taus)) == {m}

    rec = PairRecord(
        n1=n1,
        n2=n2,
        g1=str(g1),
        g2=str(g2),
        F=str(pred.F),
        l=pred.l,
        f0=pred.f0,
        M_predicted=pred.value,
        M_bruteforce=m,
        theorem_ok=pred.value == m,
        lemma1_ok=lemma1,
        lemma2_ok=lemma2,
        lemma3_ok=lemma3,
        lemma4_ok=lemma4,
        lemma5_ok=lemma5,
        bound_ok=bound_ok,
        shift_constant_ok=shift_ok,
        N01=list(n01),
        N10=list(n10),
    )
    rec.first_failure = next((c for c in CHECKS if not getattr(rec, c)), None)
    return rec


def sweep_pairs(n1: int, n2: int) -> list[tuple[Poly2, Poly2]]:
    return [(g1, g2) for g1 in list_primitive(n1) for g2 in list_primitive(n2)]


def _check_masks(masks: tuple[int, int]) -> PairRecord:
    return check_pair(Poly2(masks[0]), Poly2(masks[1]))


def run_sweep(n1: int, n2: int, *, parallel: int = 1, cap: int | None = None) -> dict:
    """Check every primitive pair of degrees (n1, n2); records are ordered by polynomial masks."""
    if n1 < 1 or n2 < 1 or gcd(n1, n2) != 1:
        raise SweepError(f"gcd({n1}, {n2}) != 1")
    cap = sweep_cap() if cap is None else cap
    if n1 + n2 > cap:
        raise SweepError(f"n1 + n2 = {n1 + n2} exceeds the sweep cap {cap}")
    jobs = sorted((g1.mask, g2.mask) for g1, g2 in sweep_pairs(n1, n2))
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            records = list(pool.map(_check_masks, jobs))
    else:
        records = [_check_masks(j) for j in jobs]
    return make_report(records)


def make_report(records: list[PairRecord]) -> dict:
    return {
        "records": [asdict(r) for r in records],
        "summary": {
            "pairs_total": len(records),
            "pairs_passed": sum(r.passed for r in records),
        },
    }


def write_report(report: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")


def load_report(path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def rerun_report(report: dict) -> dict:
    """Re-check every pair listed in a report."""
    return make_report([check_pair(r["g1"], r["g2"]) for r in report["records"]])


CSV_FIELDS = ["n1", "n2", "g1", "g2", "F", "l", "f0", "M_predicted", "M_bruteforce", *CHECKS, "first_failure"]


def report_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for r in report["records"]:
        writer.writerow(r)
    return buf.getvalue()
