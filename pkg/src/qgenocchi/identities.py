"""Identity audit engine.

Every identity is registered in an as-printed form and one corrected
candidate.  Verdicts compare both sides against the definition-first
evaluators; exact mode uses rational arithmetic and passes only on exact
equality.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .closed import (
    ClosedVariant,
    ExactParams,
    ExpansionVariant,
    closed_sum,
    expand_from_numbers,
    expand_from_numbers_exact,
    ozden_y,
    s_numbers_exact,
    s_poly_closed,
    s_poly_exact,
)
from .grids import Grid, closed_oracle_points, get_grid
from .qcore import (
    DomainError,
    EvalPoint,
    ExactScalar,
    ModelParams,
    QGenocchiError,
    binomial,
)
from .series import SeriesConfig, hq_genocchi_reference, s_poly_series

__all__ = [
    "IdentityId",
    "IdentityVerdict",
    "ClosedAdjudication",
    "AuditReport",
    "adjudicate_closed_variant",
    "closed_form_winner",
    "verify_expansion",
    "verify_umbral_cor1",
    "verify_symmetry",
    "verify_difference",
    "verify_umbral_cor2",
    "verify_distribution",
    "verify_specializations",
    "verify_q1_limit",
    "richardson",
    "run_audit",
    "FLOAT_RTOL",
    "LIMIT_TOL",
]

FLOAT_RTOL = 1e-9
CLOSED_RTOL = 1e-9
LIMIT_TOL = 1e-6
LIMIT_LADDER = tuple(range(3, 11))
RICHARDSON_ORDER = len(LIMIT_LADDER) - 1


class IdentityId(str, Enum):
    EXPANSION_THM1 = "expansion_thm1"
    UMBRAL_COR1 = "umbral_cor1"
    SYMMETRY_THM4 = "symmetry_thm4"
    DIFFERENCE_THM5 = "difference_thm5"
    UMBRAL_COR2 = "umbral_cor2"
    DISTRIBUTION_THM6 = "distribution_thm6"
    SPECIALIZATION_Q = "specialization_q"
    SPECIALIZATION_HQ = "specialization_hq"
    Q1_LIMIT = "q1_limit"
    INTERPOLATION_THM8 = "interpolation_thm8"


# identity groups addressable from the command line
IDENTITY_GROUPS = {
    "expansion": (IdentityId.EXPANSION_THM1, IdentityId.UMBRAL_COR1),
    "symmetry": (IdentityId.SYMMETRY_THM4,),
    "difference": (IdentityId.DIFFERENCE_THM5, IdentityId.UMBRAL_COR2),
    "distribution": (IdentityId.DISTRIBUTION_THM6,),
    "specialization": (IdentityId.SPECIALIZATION_Q, IdentityId.SPECIALIZATION_HQ),
    "limit": (IdentityId.Q1_LIMIT,),
    "interpolation": (IdentityId.INTERPOLATION_THM8,),
}
IDENTITY_GROUPS["all"] = tuple(i for g in IDENTITY_GROUPS.values() for i in g)


@dataclass(frozen=True)
class IdentityVerdict:
    identity_id: str
    variant_id: str
    params: dict
    point: dict
    lhs: object
    rhs: object
    abs_diff: object
    passed: bool
    mode: str
    error: str | None = None

    def sort_key(self):
        from .report import canonical_json

        return (self.identity_id, self.variant_id, canonical_json(self.params), canonical_json(self.point))


def params_record(p) -> dict:
    if isinstance(p, ExactParams):
        return {"q": str(p.q), "beta": str(p.beta), "a": str(p.a), "b": p.b, "k": p.k}
    if isinstance(p, ModelParams):
        beta = complex(p.beta)
        return {"q": p.q, "beta": {"re": beta.real, "im": beta.imag}, "a": float(p.a), "b": p.b, "k": p.k}
    return dict(p)


def _exact_verdict(identity, variant, p, point, lhs, rhs) -> IdentityVerdict:
    lhs, rhs = ExactScalar.of(lhs), ExactScalar.of(rhs)
    diff = (lhs - rhs).max_norm()
    return IdentityVerdict(identity, str(variant), params_record(p), point, lhs, rhs, diff, diff == 0, "exact")


def _float_verdict(identity, variant, p, point, lhs, rhs, atol=FLOAT_RTOL, rtol=FLOAT_RTOL) -> IdentityVerdict:
    lhs, rhs = complex(lhs), complex(rhs)
    diff = abs(lhs - rhs)
    ok = diff <= max(atol, rtol * abs(lhs))
    return IdentityVerdict(identity, str(variant), params_record(p), point, lhs, rhs, diff, ok, "float")


def _error_verdict(identity, variant, p, point, exc, mode) -> IdentityVerdict:
    msg = f"{type(exc).__name__}: {exc}"
    return IdentityVerdict(identity, str(variant), params_record(p), point, None, None, None, False, mode, msg)


def _v(variant) -> str:
    return variant.value if isinstance(variant, Enum) else str(variant)


# ---------------------------------------------------------------------------
# closed-form adjudication against the series definition


@dataclass(frozen=True)
class ClosedAdjudication:
    points: int
    agree: dict
    max_rel_dev: dict
    winner: ClosedVariant | None
    grid: str

    def to_record(self) -> dict:
        return {
            "grid": self.grid,
            "points": self.points,
            "agree": dict(self.agree),
            "max_rel_dev": dict(self.max_rel_dev),
            "winner": self.winner.value if self.winner else None,
        }


def _rel_dev(ref: complex, val: complex) -> float:
    scale = max(abs(ref), abs(val))
    return 0.0 if scale == 0 else abs(ref - val) / scale


def adjudicate_closed_variant(full: bool = True, cfg: SeriesConfig = SeriesConfig()) -> ClosedAdjudication:
    """Compare both closed-form variants with the series on the committed float grid."""
    pts = closed_oracle_points(full)
    agree = {v.value: 0 for v in ClosedVariant}
    worst = {v.value: 0.0 for v in ClosedVariant}
    for p, n, x in pts:
        pt = EvalPoint(n, x)
        ref = s_poly_series(p, pt, cfg).value.value
        for v in ClosedVariant:
            dev = _rel_dev(ref, s_poly_closed(p, pt, v).value)
            worst[v.value] = max(worst[v.value], dev)
            if dev <= CLOSED_RTOL:
                agree[v.value] += 1
    winners = [v for v in ClosedVariant if agree[v.value] == len(pts)]
    winner = winners[0] if len(winners) == 1 else None
    return ClosedAdjudication(len(pts), agree, worst, winner, "full" if full else "smoke")


@functools.lru_cache(maxsize=None)
def closed_form_winner() -> ClosedVariant:
    """The closed-form variant that reproduces the series on the smoke grid."""
    adj = adjudicate_closed_variant(full=False)
    if adj.winner is None:
        raise RuntimeError(f"no unique closed-form variant matches the series: {adj.agree}")
    return adj.winner


def _cv(closed_variant):
    return closed_form_winner() if closed_variant is None else ClosedVariant(closed_variant)


def _exact_inputs(p):
    """Rational images of the parameters; float params map to their binary values."""
    if isinstance(p, ExactParams):
        return p, True
    if isinstance(p, ModelParams):
        return ExactParams.from_float(p), False
    raise TypeError(f"expected ExactParams or ModelParams, got {type(p).__name__}")


def _qpow(q: Fraction, x, exact: bool):
    if exact or float(x).is_integer():
        return q ** int(x)
    return Fraction(float(q) ** float(x))


def _verdict(identity, variant, p, point, lhs, rhs, exact):
    if exact:
        return _exact_verdict(identity, _v(variant), p, point, lhs, rhs)
    return _float_verdict(identity, _v(variant), p, point, complex(lhs), complex(rhs))


def _point(n, x=None, **extra) -> dict:
    out = {"n": n}
    if x is not None:
        out["x"] = x if isinstance(x, int) else float(x)
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# expansion in the numbers S_l(0)


def verify_expansion(p, n: int, x, variant, closed_variant=None, cfg: SeriesConfig = SeriesConfig()) -> IdentityVerdict:
    """Expansion of S_n(x) in the numbers S_l(0), printed or with q^(-kx)."""
    variant = ExpansionVariant(variant)
    cv = _cv(closed_variant)
    ep, exact = _exact_inputs(p)
    if exact:
        lhs = s_poly_exact(ep, n, x, cv)
        rhs = expand_from_numbers_exact(ep, n, x, variant, cv)
    else:
        pt = EvalPoint(n, x)
        lhs = s_poly_series(p, pt, cfg).value.value if p.converges() else s_poly_closed(p, pt, cv).value
        rhs = expand_from_numbers(p, pt, variant, cv).value
    return _verdict(IdentityId.EXPANSION_THM1.value, variant, p, _point(n, x), lhs, rhs, exact)


def _umbral_cor1(ep: ExactParams, numbers, n, qx, variant):
    xq = (1 - qx) / (1 - ep.q)
    if variant is ExpansionVariant.PRINTED:
        # (S + [x]_q)^n with S^l -> S_l
        return sum((binomial(n, l) * numbers[l] * xq ** (n - l) for l in range(n + 1)), ExactScalar(0))
    # q^(-kx) (q^x S + [x]_q)^n
    total = sum((binomial(n, l) * qx**l * numbers[l] * xq ** (n - l) for l in range(n + 1)), ExactScalar(0))
    return total / qx**ep.k


def verify_umbral_cor1(p, n: int, x, variant, closed_variant=None) -> IdentityVerdict:
    variant = ExpansionVariant(variant)
    cv = _cv(closed_variant)
    ep, exact = _exact_inputs(p)
    qx = _qpow(ep.q, x, exact)
    lhs = closed_sum(ep.q, qx, ep.beta_b, ep.a_b, ep.k, n, cv)
    rhs = _umbral_cor1(ep, s_numbers_exact(ep, n, cv), n, qx, variant)
    return _verdict(IdentityId.UMBRAL_COR1.value, variant, p, _point(n, x), lhs, rhs, exact)


# ---------------------------------------------------------------------------
# symmetry under (x, beta, q, a) -> (1-x, 1/beta, 1/q, 1/a)


def symmetry_factor(ep: ExactParams, n: int, variant: ExpansionVariant):
    """(-1)^(n-k-1) q^(n-1) a^(cb) beta^b with c = 3 (printed) or 1 (corrected)."""
    c = 3 if variant is ExpansionVariant.PRINTED else 1
    sign = -1 if (n - ep.k - 1) % 2 else 1
    return sign * ep.q ** (n - 1) * ep.a ** (c * ep.b) * ep.beta_b


def symmetry_lhs(ep: ExactParams, n: int, qx, cv: ClosedVariant):
    """S_{n, 1/beta, 1/q}(1 - x | k, 1/a, b) by formal substitution into the finite sum."""
    qinv = 1 / ep.q
    # (1/q)^(1-x) = q^(x-1)
    return closed_sum(qinv, qx / ep.q, 1 / ep.beta_b, 1 / ep.a_b, ep.k, n, cv)


def verify_symmetry(p, n: int, x, variant, closed_variant=None) -> IdentityVerdict:
    variant = ExpansionVariant(variant)
    cv = _cv(closed_variant)
    ep, exact = _exact_inputs(p)
    qx = _qpow(ep.q, x, exact)
    lhs = symmetry_lhs(ep, n, qx, cv)
    rhs = symmetry_factor(ep, n, variant) * closed_sum(ep.q, qx, ep.beta_b, ep.a_b, ep.k, n, cv)
    return _verdict(IdentityId.SYMMETRY_THM4.value, variant, p, _point(n, x), lhs, rhs, exact)


# ---------------------------------------------------------------------------
# difference relation


def _difference_rhs(ep: ExactParams, n: int):
    if n != ep.k:
        return ExactScalar(0)
    return (1 + ep.q) ** (1 - ep.k) * math.factorial(ep.k) / ep.a_b


def verify_difference(p, n: int, variant, closed_variant=None) -> IdentityVerdict:
    """Printed: S_n(0) - (beta/a) S_n(1).  Corrected: (beta/a)^b S_n(1) - S_n(0)."""
    variant = ExpansionVariant(variant)
    cv = _cv(closed_variant)
    ep, exact = _exact_inputs(p)
    s0 = closed_sum(ep.q, Fraction(1), ep.beta_b, ep.a_b, ep.k, n, cv)
    s1 = closed_sum(ep.q, ep.q, ep.beta_b, ep.a_b, ep.k, n, cv)
    if variant is ExpansionVariant.PRINTED:
        lhs = s0 - (ep.beta / ep.a) * s1
    else:
        lhs = ep.ratio * s1 - s0
    return _verdict(IdentityId.DIFFERENCE_THM5.value, variant, p, _point(n), lhs, _difference_rhs(ep, n), exact)


def verify_umbral_cor2(p, n: int, variant, closed_variant=None) -> IdentityVerdict:
    """Difference relation with S_n(1) written umbrally as q^(-k) (qS + 1)^n."""
    variant = ExpansionVariant(variant)
    cv = _cv(closed_variant)
    ep, exact = _exact_inputs(p)
    nums = s_numbers_exact(ep, n, cv)
    umbral = sum((binomial(n, l) * ep.q**l * nums[l] for l in range(n + 1)), ExactScalar(0)) / ep.q**ep.k
    if variant is ExpansionVariant.PRINTED:
        lhs = nums[n] - (ep.beta / ep.a) * umbral
    else:
        lhs = ep.ratio * umbral - nums[n]
    return _verdict(IdentityId.UMBRAL_COR2.value, variant, p, _point(n), lhs, _difference_rhs(ep, n), exact)


# ---------------------------------------------------------------------------
# distribution formula


def distribution_rhs(ep: ExactParams, n: int, x, d: int, variant: ExpansionVariant, cv: ClosedVariant, exact=True):
    q, k = ep.q, ep.k
    qd = q**d
    beta_d_b = ep.beta_b**d
    a_d_b = ep.a_b**d
    r = ep.ratio
    total = ExactScalar(0)
    for l in range(d):
        # (q^d)^((x+l)/d) = q^(x+l)
        qx = _qpow(q, x, exact) * q**l
        total = total + r**l * closed_sum(qd, qx, beta_d_b, a_d_b, k, n, cv)
    dq = (1 - qd) / (1 - q)
    factor = ((1 + q) / (1 + qd)) ** (1 - k) * dq ** (n - k)
    out = factor * total
    if variant is ExpansionVariant.CORRECTED:
        out = out * ep.a ** ((d - 1) * ep.b)
    return out


def verify_distribution(p, n: int, x, d: int, variant, closed_variant=None) -> IdentityVerdict:
    if int(d) != d or d < 1:
        raise DomainError(f"d must be a positive integer, got {d!r}")
    variant = ExpansionVariant(variant)
    cv = _cv(closed_variant)
    ep, exact = _exact_inputs(p)
    lhs = closed_sum(ep.q, _qpow(ep.q, x, exact), ep.beta_b, ep.a_b, ep.k, n, cv)
    rhs = distribution_rhs(ep, n, x, int(d), variant, cv, exact)
    return _verdict(IdentityId.DISTRIBUTION_THM6.value, variant, p, _point(n, x, d=int(d)), lhs, rhs, exact)


# ---------------------------------------------------------------------------
# specializations to q-Genocchi and (h,q)-Genocchi


def specialization_params(q: float, h: int = 2) -> ModelParams:
    return ModelParams(q=q, beta=q ** (h - 1), a=-1.0, b=1, k=1)


def verify_specializations(
    q: float, n: int, x: float, cfg: SeriesConfig = SeriesConfig(), hs=(2,)
) -> list[IdentityVerdict]:
    """S_{n,q^(h-1),q}(x|1,-1,1) against the (h,q)-Genocchi series.

    ``printed`` asserts plain equality; ``corrected`` asserts [2]_q S = G,
    the normalization obtained by matching the two series term by term.
    """
    out = []
    for h in hs:
        p = specialization_params(q, h)
        s = s_poly_series(p, EvalPoint(n, x), cfg).value.value
        g = hq_genocchi_reference(q, h, n, x, cfg).value.value
        ident = IdentityId.SPECIALIZATION_Q if h == 2 else IdentityId.SPECIALIZATION_HQ
        rec = {"q": q, "h": h}
        pt = _point(n, x)
        out.append(_float_verdict(ident.value, "printed", rec, pt, s, g))
        out.append(_float_verdict(ident.value, "corrected", rec, pt, (1 + q) * s, g))
    return out


# ---------------------------------------------------------------------------
# q -> 1 limit


def richardson(values, hs, order: int | None = None):
    """Extrapolate values(h) to h = 0 by polynomial (Neville) elimination.

    Uses the last ``order + 1`` samples; works for Fractions and floats alike.
    """
    values, hs = list(values), list(hs)
    if order is not None:
        values, hs = values[-(order + 1):], hs[-(order + 1):]
    table = list(values)
    m = len(table)
    for j in range(1, m):
        for i in range(m - j):
            h0, h1 = hs[i], hs[i + j]
            table[i] = (h0 * table[i + 1] - h1 * table[i]) / (h0 - h1)
    return table[0]


LIMIT_TARGETS = {
    "euler": (Fraction(1), Fraction(-1), 1, 0),
    "genocchi": (Fraction(1), Fraction(-1), 1, 1),
}


def q1_ladder_values(beta, a, b: int, k: int, n: int, x: int, cv: ClosedVariant):
    beta_b = ExactScalar.of(beta) ** b
    a_b = Fraction(a) ** b
    hs, vals = [], []
    for j in LIMIT_LADDER:
        h = Fraction(1, 2**j)
        q = 1 - h
        hs.append(h)
        vals.append(closed_sum(q, q**x, beta_b, a_b, k, n, cv))
    return hs, vals


def verify_q1_limit(
    target: str,
    n: int,
    x: int = 0,
    beta=None,
    a=None,
    b: int | None = None,
    k: int | None = None,
    closed_variant=None,
    order: int = RICHARDSON_ORDER,
) -> IdentityVerdict:
    """Richardson-extrapolate S_{n,beta,q}(x|k,a,b) to q = 1 and compare with Ozden's y_n.

    ``euler`` and ``genocchi`` fix (beta, a, b, k) = (1, -1, 1, 0) and (1, -1, 1, 1).
    """
    cv = _cv(closed_variant)
    if target in LIMIT_TARGETS:
        beta, a, b, k = LIMIT_TARGETS[target]
    elif target != "ozden":
        raise DomainError(f"unknown limit target {target!r}")
    if None in (beta, a, b, k):
        raise DomainError("ozden target needs beta, a, b, k")
    if int(x) != x or x < 0:
        raise DomainError(f"x must be a non-negative integer, got {x!r}")
    x = int(x)
    rec = {"target": target, "beta": str(ExactScalar.of(beta)), "a": str(Fraction(a)), "b": int(b), "k": int(k)}
    pt = _point(n, x)
    ref = ozden_y(n, x, k, a, b, beta)
    hs, vals = q1_ladder_values(beta, a, int(b), int(k), n, x, cv)
    extrap = richardson(vals, hs, order)
    return _float_verdict(
        IdentityId.Q1_LIMIT.value, "printed", rec, pt, complex(extrap), complex(ExactScalar.of(ref)), LIMIT_TOL, 0.0
    )


# ---------------------------------------------------------------------------
# audit driver


@dataclass(frozen=True)
class AuditReport:
    grid_id: str
    verdicts: tuple[IdentityVerdict, ...]
    closed_adjudication: ClosedAdjudication

    def summary(self) -> list[dict]:
        groups: dict[tuple[str, str], list[IdentityVerdict]] = {}
        for v in self.verdicts:
            groups.setdefault((v.identity_id, v.variant_id), []).append(v)
        out = []
        for (ident, var), vs in sorted(groups.items()):
            errors = sum(1 for v in vs if v.error)
            admissible = len(vs) - errors
            passed = sum(1 for v in vs if v.passed)
            diffs = [float(v.abs_diff) for v in vs if v.abs_diff is not None]
            out.append(
                {
                    "identity_id": ident,
                    "variant_id": var,
                    "points": len(vs),
                    "errors": errors,
                    "passed": passed,
                    "failed": admissible - passed,
                    "full_pass": admissible > 0 and passed == admissible,
                    "max_abs_diff": max(diffs) if diffs else None,
                }
            )
        return out

    def identities(self) -> list[str]:
        return sorted({v.identity_id for v in self.verdicts})

    def passing_variants(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {i: [] for i in self.identities()}
        for row in self.summary():
            if row["full_pass"]:
                out[row["identity_id"]].append(row["variant_id"])
        return out

    def all_identities_pass(self) -> bool:
        return all(self.passing_variants().values())


def _guard(fn, identity, variant, p, point, mode):
    try:
        return fn()
    except QGenocchiError as exc:
        return _error_verdict(identity, _v(variant), p, point, exc, mode)


def _exact_audits(grid: Grid, wanted, cv) -> list[IdentityVerdict]:
    out = []
    variants = tuple(ExpansionVariant)
    for p in grid.exact_params:
        for n in grid.ns:
            for var in variants:
                if IdentityId.DIFFERENCE_THM5 in wanted:
                    out.append(_guard(lambda: verify_difference(p, n, var, cv), "difference_thm5", var, p, _point(n), "exact"))
                if IdentityId.UMBRAL_COR2 in wanted:
                    out.append(_guard(lambda: verify_umbral_cor2(p, n, var, cv), "umbral_cor2", var, p, _point(n), "exact"))
            for x in grid.xs:
                for var in variants:
                    pt = _point(n, x)
                    if IdentityId.EXPANSION_THM1 in wanted:
                        out.append(_guard(lambda: verify_expansion(p, n, x, var, cv), "expansion_thm1", var, p, pt, "exact"))
                    if IdentityId.UMBRAL_COR1 in wanted:
                        out.append(_guard(lambda: verify_umbral_cor1(p, n, x, var, cv), "umbral_cor1", var, p, pt, "exact"))
                    if IdentityId.SYMMETRY_THM4 in wanted:
                        out.append(_guard(lambda: verify_symmetry(p, n, x, var, cv), "symmetry_thm4", var, p, pt, "exact"))
                    if IdentityId.DISTRIBUTION_THM6 in wanted:
                        for d in grid.ds:
                            out.append(
                                _guard(
                                    lambda: verify_distribution(p, n, x, d, var, cv),
                                    "distribution_thm6",
                                    var,
                                    p,
                                    _point(n, x, d=d),
                                    "exact",
                                )
                            )
    return out


def _specialization_audits(grid: Grid, wanted) -> list[IdentityVerdict]:
    out = []
    hs = tuple(
        h
        for h in grid.spec_hs
        if (h == 2 and IdentityId.SPECIALIZATION_Q in wanted) or (h > 2 and IdentityId.SPECIALIZATION_HQ in wanted)
    )
    if not hs:
        return out
    for q in grid.spec_qs:
        for n in grid.spec_ns:
            for x in grid.spec_xs:
                out.extend(verify_specializations(q, n, x, hs=hs))
    return out


def _limit_audits(grid: Grid, cv) -> list[IdentityVerdict]:
    out = []
    for beta, a, b, k in grid.limit_params:
        for n in grid.limit_ns:
            for x in grid.limit_xs:
                rec = {"target": "ozden", "beta": str(ExactScalar.of(beta)), "a": str(Fraction(a)), "b": b, "k": k}
                out.append(
                    _guard(lambda: verify_q1_limit("ozden", n, x, beta, a, b, k, cv), "q1_limit", "printed", rec, _point(n, x), "float")
                )
    for target in ("euler", "genocchi"):
        for n in grid.limit_ns:
            for x in grid.limit_xs:
                out.append(verify_q1_limit(target, n, x, closed_variant=cv))
    return out


def _interpolation_audits(grid: Grid) -> list[IdentityVerdict]:
    from .zeta import InterpolationVariant, verify_interpolation

    out = []
    for p in grid.zeta_params:
        for n in grid.zeta_ns:
            if n < p.k:
                continue
            for x in grid.zeta_xs:
                for var in InterpolationVariant:
                    out.append(
                        _guard(lambda: verify_interpolation(p, n, x, var), "interpolation_thm8", var, p, _point(n, x), "float")
                    )
    return out


def run_audit(grid_id: str, identities=None) -> AuditReport:
    """Run the registered audits over a committed grid; ordering is canonical."""
    grid = get_grid(grid_id)
    wanted = set(IdentityId) if identities is None else {IdentityId(i) for i in identities}
    adjudication = adjudicate_closed_variant(full=grid.closed_full)
    if adjudication.winner is None:
        raise RuntimeError(f"no unique closed-form variant matches the series: {adjudication.agree}")
    cv = adjudication.winner
    verdicts = _exact_audits(grid, wanted, cv)
    if wanted & {IdentityId.SPECIALIZATION_Q, IdentityId.SPECIALIZATION_HQ}:
        verdicts += _specialization_audits(grid, wanted)
    if IdentityId.Q1_LIMIT in wanted:
        verdicts += _limit_audits(grid, cv)
    if IdentityId.INTERPOLATION_THM8 in wanted:
        verdicts += _interpolation_audits(grid)
    verdicts.sort(key=IdentityVerdict.sort_key)
    return AuditReport(grid.grid_id, tuple(verdicts), adjudication)
