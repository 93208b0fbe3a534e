"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import json
import math
import sys
import time
from fractions import Fraction

import pytest

from qgenocchi.cli import main as cli_main
from qgenocchi.closed import (
    ClosedVariant,
    ExactParams,
    ExpansionVariant,
    classical_euler_poly,
    classical_genocchi_poly,
    expand_from_numbers,
    expand_from_numbers_exact,
    ozden_y,
    s_poly_closed,
    s_poly_exact,
)
from qgenocchi.identities import adjudicate_closed_variant, run_audit, verify_q1_limit
from qgenocchi.qcore import EvalPoint, ExactScalar, ModelParams
from qgenocchi.report import audit_record, canonical_json
from qgenocchi.series import (
    genfun_eval,
    hq_genocchi_reference,
    q_genocchi_reference,
    s_poly_series,
)
from qgenocchi.zeta import zeta_eval

# Regression constants produced by the classical recurrences, then frozen.
EULER_E1_AT_0 = Fraction(-1, 2)
GENOCCHI_G2_AT_0_HALF = Fraction(-1, 2)
# Geometric-sum oracle at q=1/2, beta=1/3, a=1, b=1, k=1, x=1.
ZETA_AT_0 = 1.5
ZETA_AT_MINUS_1 = 1.8

EXACT_AUDIT_IDS = (
    "expansion_thm1",
    "umbral_cor1",
    "symmetry_thm4",
    "difference_thm5",
    "umbral_cor2",
    "distribution_thm6",
)


@pytest.fixture
def gate(record_property):
    """Record a PASS/FAIL line (printed by the terminal summary hook) and assert."""

    def _gate(label: str, ok: bool, detail: str) -> None:
        record_property("acceptance", f"[{'PASS' if ok else 'FAIL'}] criterion {label}: {detail}")
        assert ok, detail

    return _gate


@pytest.fixture(scope="module")
def full_runs():
    t0 = time.perf_counter()
    first = run_audit("full")
    t1 = time.perf_counter()
    second = run_audit("full")
    t2 = time.perf_counter()
    return first, second, t1 - t0, t2 - t1


def test_criterion_1_oracle_equivalence(gate):
    t0 = time.perf_counter()
    adj = adjudicate_closed_variant(full=True)
    elapsed = time.perf_counter() - t0
    winners = [v for v, c in adj.agree.items() if c == adj.points]
    ok = adj.points >= 100 and len(winners) == 1 and adj.winner is not None and elapsed < 10.0
    detail = (
        f"{adj.points} points, agreement {adj.agree}, winner {winners}, "
        f"max rel dev {adj.max_rel_dev}, {elapsed:.2f}s"
    )
    gate("1 oracle equivalence", ok, detail)


def test_criterion_2_zero_below_order(gate):
    bad = []
    checked = 0
    for k in range(1, 5):
        for n in range(min(k, 9)):
            fp = ModelParams(q=0.5, beta=0.3 + 0.2j, a=2.0, b=-1, k=k)
            ep = ExactParams(Fraction(1, 2), ExactScalar(Fraction(3, 10), Fraction(1, 5)), Fraction(2), -1, k)
            for x in (0, 1, 2):
                pt = EvalPoint(n, float(x))
                vals = [s_poly_series(fp, pt).value.value]
                for cv in ClosedVariant:
                    vals.append(s_poly_closed(fp, pt, cv).value)
                    vals.append(s_poly_exact(ep, n, x, cv))
                    for ev in ExpansionVariant:
                        vals.append(expand_from_numbers(fp, pt, ev, cv).value)
                        vals.append(expand_from_numbers_exact(ep, n, x, ev, cv))
                checked += len(vals)
                bad.extend((k, n, x, v) for v in vals if v != 0)
    gate("2 zero below order", not bad, f"{checked} values checked, {len(bad)} nonzero")


GENFUN_POINTS = [
    ModelParams(q=0.5, beta=1 / 3, a=1.0, b=1, k=1),
    ModelParams(q=0.3, beta=0.4, a=-1.0, b=1, k=1),
    ModelParams(q=0.8, beta=0.5, a=2.0, b=2, k=2),
    ModelParams(q=0.6, beta=2.0, a=1.5, b=-1, k=1),
    ModelParams(q=0.2, beta=0.3 + 0.4j, a=1.0, b=1, k=3),
    ModelParams(q=0.5, beta=-0.6, a=1.0, b=3, k=2),
    ModelParams(q=0.9, beta=0.5, a=1.0, b=1, k=1),
    ModelParams(q=0.4, beta=0.2, a=-0.5, b=1, k=2),
    ModelParams(q=0.7, beta=3.0, a=-2.0, b=-2, k=1),
    ModelParams(q=0.5, beta=0.25, a=0.5, b=2, k=3),
]


def test_criterion_3_generating_function(gate):
    worst = 0.0
    count = 0
    for p in GENFUN_POINTS:
        for t in (0.1, -0.1, 0.05, 0.1j, 0.06 - 0.08j):
            for x in (0.0, 0.5, 2.0):
                direct = genfun_eval(p, t, x).value.value
                taylor = sum(
                    s_poly_series(p, EvalPoint(n, x)).value.value * t**n / math.factorial(n) for n in range(21)
                )
                worst = max(worst, abs(direct - taylor))
                count += 1
    gate("3 generating function", worst <= 1e-10, f"{len(GENFUN_POINTS)} parameter points, {count} checks, max |diff| {worst:.3e}")


def test_criterion_4_identity_audit(full_runs, gate):
    first, second, t_a, t_b = full_runs
    same = canonical_json(audit_record(first)) == canonical_json(audit_record(second))
    passing = first.passing_variants()
    losers = {
        r["identity_id"]: r["max_abs_diff"]
        for r in first.summary()
        if r["identity_id"] in EXACT_AUDIT_IDS and not r["full_pass"]
    }
    exact_mode = all(v.mode == "exact" for v in first.verdicts if v.identity_id in EXACT_AUDIT_IDS)
    each_has_winner = all(passing.get(i) for i in EXACT_AUDIT_IDS)
    ok = same and exact_mode and each_has_winner and set(losers) == set(EXACT_AUDIT_IDS) and max(t_a, t_b) < 60.0
    detail = (
        f"winners {{{', '.join(f'{i}: {passing.get(i)}' for i in EXACT_AUDIT_IDS)}}}, "
        f"losing max dev {{{', '.join(f'{i}: {d:.3e}' for i, d in sorted(losers.items()))}}}, "
        f"byte-identical={same}, runs {t_a:.1f}s/{t_b:.1f}s"
    )
    gate("4 identity audit", ok, detail)


def test_criterion_5_specializations(gate):
    # literal reading: S equals the reference series with no normalization
    worst = 0.0
    failures = 0
    normalized_failures = 0
    total = 0
    for q in (0.3, 0.5, 0.8):
        for h in (2, 3, 4):
            p = ModelParams(q=q, beta=q ** (h - 1), a=-1.0, b=1, k=1)
            for n in range(7):
                for x in (0.0, 0.5, 1.0):
                    s = s_poly_series(p, EvalPoint(n, x)).value.value
                    if h == 2:
                        g = q_genocchi_reference(q, n, x).value.value
                    else:
                        g = hq_genocchi_reference(q, h, n, x).value.value
                    diff = abs(s - g)
                    worst = max(worst, diff)
                    total += 1
                    if diff > max(1e-9, 1e-9 * abs(g)):
                        failures += 1
                    # diagnostic only: the [2]_q-normalized comparison
                    if abs((1 + q) * s - g) > max(1e-9, 1e-9 * abs(g)):
                        normalized_failures += 1
    detail = (
        f"{total - failures}/{total} points with S = G within 1e-9, max |S - G| {worst:.3e} "
        f"(for reference, [2]_q S = G holds at {total - normalized_failures}/{total})"
    )
    gate("5 specializations", failures == 0, detail)


def test_criterion_6_q1_limits(full_runs, gate):
    first = full_runs[0]
    limits = [v for v in first.verdicts if v.identity_id == "q1_limit" and v.params.get("target") == "ozden"]
    param_set = {json.dumps(v.params, sort_keys=True) for v in limits}
    ns = {v.point["n"] for v in limits}
    limit_ok = len(param_set) >= 20 and ns == set(range(7)) and all(v.passed for v in limits)
    worst = max(float(v.abs_diff) for v in limits)

    e1 = ozden_y(1, 0, 0, -1, 1, 1)
    g2 = ozden_y(2, 0, 1, -1, 1, 1)
    classical_ok = (
        e1 == EULER_E1_AT_0 == classical_euler_poly(1, 0)
        and g2 == GENOCCHI_G2_AT_0_HALF == classical_genocchi_poly(2, 0) / 2
    )
    ve = verify_q1_limit("euler", 1, 0)
    vg = verify_q1_limit("genocchi", 2, 0)
    extrap_ok = ve.passed and vg.passed and ve.rhs == float(EULER_E1_AT_0) and vg.rhs == float(GENOCCHI_G2_AT_0_HALF)
    ok = limit_ok and classical_ok and extrap_ok
    detail = (
        f"{len(limits)} ozden checks on {len(param_set)} parameter sets, max |diff| {worst:.3e}; "
        f"E_1(0) -> {ve.lhs.real:.9f}, G_2/2 -> {vg.lhs.real:.9f}"
    )
    gate("6 q->1 limits", ok, detail)


def test_criterion_7_zeta_interpolation(full_runs, gate):
    first = full_runs[0]
    by_point: dict[str, dict[str, bool]] = {}
    for v in first.verdicts:
        if v.identity_id == "interpolation_thm8":
            key = canonical_json({"p": v.params, "pt": v.point})
            by_point.setdefault(key, {})[v.variant_id] = v.passed and v.error is None
    ks = {json.loads(k)["p"]["k"] for k in by_point}
    exactly_one = all(sum(d.values()) == 1 for d in by_point.values())
    winners = {next(var for var, ok in d.items() if ok) for d in by_point.values() if sum(d.values()) == 1}

    p0 = ModelParams(q=0.5, beta=1 / 3, a=1.0, b=1, k=1)
    z0 = zeta_eval(p0, 0, 1.0).value
    z1 = zeta_eval(p0, -1, 1.0).value
    hand_ok = abs(z0 - ZETA_AT_0) <= 1e-12 and abs(z1 - ZETA_AT_MINUS_1) <= 1e-12
    ok = exactly_one and len(winners) == 1 and ks == {1, 2, 3} and hand_ok and len(by_point) > 0
    detail = (
        f"{len(by_point)} admissible points, exactly-one={exactly_one}, winner {sorted(winners)}; "
        f"zeta(0)={z0.real!r}, zeta(-1)={z1.real!r}"
    )
    gate("7 zeta interpolation", ok, detail)


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue()


def test_criterion_8_cli_contract(gate):
    m = ["--q", "1/2", "--beta", "1/3", "--a", "1", "--b", "1", "--k", "1"]
    matrix = [
        (0, ["eval", *m, "--n", "2", "--x", "1"]),
        (1, ["eval", *m, "--n", "2"]),
        (2, ["zeta", *m, "--s", "0", "--x", "0"]),
        (3, ["eval", "--q", "1/2", "--beta", "1", "--a", "1", "--b", "1", "--k", "1", "--n", "1", "--x", "0"]),
        (4, ["limit", "--target", "ozden", "--beta", "11/10", "--a", "1", "--b", "1", "--k", "1", "--n", "6"]),
    ]
    codes_ok = all(_cli(*argv)[0] == want for want, argv in matrix)
    runs = [
        ["eval", *m, "--n", "3", "--x", "2"],
        ["zeta", *m, "--s", "-1", "--x", "1"],
        ["verify", "--identity", "symmetry", "--grid", "smoke"],
    ]
    deterministic = all(_cli(*a) == _cli(*a) for a in runs)
    round_trip = all(canonical_json(json.loads(_cli(*a)[1])) + "\n" == _cli(*a)[1] for a in runs)
    ok = codes_ok and deterministic and round_trip
    gate("8 CLI contract", ok, f"exit codes={codes_ok}, byte-deterministic={deterministic}, canonical round-trip={round_trip}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
