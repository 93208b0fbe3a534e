"""Hurwitz-zeta-type interpolation function and its negative-integer audit."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .closed import s_poly_closed
from .qcore import DomainError, EvalPoint, ModelParams, NotConvergent, falling_ratio, principal_power, q_number
from .series import SeriesConfig, truncation_length

__all__ = ["ZetaPoint", "InterpolationVariant", "zeta_eval", "zeta_bound", "verify_interpolation"]


@dataclass(frozen=True)
class ZetaPoint:
    s: complex
    value: complex
    abs_error_bound: float
    terms_used: int


class InterpolationVariant(str, Enum):
    PRINTED = "printed"  # value at s = -n
    SHIFTED = "shifted"  # value at s = -(n-k)


def _check(p: ModelParams, x: float) -> complex:
    if not x > 0:
        raise DomainError(f"x must be > 0, got {x!r}")
    r = p.ratio
    if abs(r) >= 1.0:
        raise NotConvergent(f"|(beta/a)^b| = {abs(r)!r} >= 1: the zeta series diverges")
    return r


def zeta_eval(p: ModelParams, s: complex, x: float, cfg: SeriesConfig = SeriesConfig()) -> ZetaPoint:
    """[2]_q^(1-k) sum_m beta^(bm) a^(-bm-b) [m+x]_q^(-s), principal powers."""
    r = _check(p, x)
    s = complex(s)
    pref = q_number(2, p.q) ** (1 - p.k) * p.a ** (-p.b)
    # [x]_q <= [m+x]_q <= 1/(1-q) bounds |[m+x]_q^(-s)| = [m+x]_q^(-Re s)
    lo, hi = q_number(x, p.q), 1.0 / (1.0 - p.q)
    dom = max(lo ** (-s.real), hi ** (-s.real))
    terms, bound, _ = truncation_length(abs(pref) * dom, abs(r), cfg.tol, cfg.max_terms)
    vals = [r**m * principal_power(q_number(m + x, p.q), -s) for m in range(terms)]
    total = complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))
    return ZetaPoint(s, pref * total, bound, terms)


def zeta_bound(p: ModelParams, s: complex, x: float) -> float:
    """Crude a-priori bound on |zeta(s)| from geometric domination."""
    r = _check(p, x)
    base = max(q_number(x, p.q), 1.0 / (1.0 - p.q), 1.0 / q_number(x, p.q))
    pref = q_number(2, p.q) ** (1 - p.k) * abs(p.a) ** (-p.b)
    return pref * base ** abs(complex(s).real) / (1.0 - abs(r))


def verify_interpolation(p: ModelParams, n: int, x: float, variant, cfg: SeriesConfig = SeriesConfig(), closed_variant=None):
    """Compare the zeta value at a non-positive integer with -((n-k)!/n!) S_n(x)."""
    from .identities import FLOAT_RTOL, _cv, _float_verdict, _point

    variant = InterpolationVariant(variant)
    if n < p.k:
        raise DomainError(f"interpolation needs n >= k, got n={n}, k={p.k}")
    s = -n if variant is InterpolationVariant.PRINTED else -(n - p.k)
    lhs = zeta_eval(p, s, x, cfg).value
    sn = s_poly_closed(p, EvalPoint(n, x), _cv(closed_variant)).value
    rhs = -sn / falling_ratio(n, p.k)
    return _float_verdict("interpolation_thm8", variant.value, p, _point(n, x), lhs, rhs, FLOAT_RTOL, FLOAT_RTOL)
