"""Ground-truth evaluation of S_{n,beta,q}(x|k,a,b) by the defining series.

Every sum here is dominated by a geometric series, so truncation after M+1
terms comes with the rigorous tail bound  scale * rho^(M+1) / (1 - rho).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .qcore import (
    ApproxValue,
    DomainError,
    EvalPoint,
    Method,
    ModelParams,
    NotConvergent,
    falling_ratio,
    q_number,
)

__all__ = [
    "SeriesConfig",
    "SeriesResult",
    "s_poly_series",
    "genfun_eval",
    "q_genocchi_reference",
    "hq_genocchi_reference",
    "truncation_length",
]


@dataclass(frozen=True)
class SeriesConfig:
    tol: float = 1e-12
    max_terms: int = 10_000

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError(f"tol must be positive, got {self.tol!r}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms!r}")


@dataclass(frozen=True)
class SeriesResult:
    value: ApproxValue
    converged: bool


def truncation_length(scale: float, rho: float, tol: float, max_terms: int) -> tuple[int, float, bool]:
    """Smallest number of terms M+1 with scale*rho^(M+1)/(1-rho) <= tol.

    Returns (terms, bound, converged); terms is capped at max_terms.
    """
    if not (0 <= rho < 1):
        raise NotConvergent(f"geometric ratio {rho!r} is not < 1")

    def bound(terms: int) -> float:
        return scale * rho**terms / (1.0 - rho)

    if scale == 0 or rho == 0:
        return 1, 0.0, True
    need = math.log(tol * (1.0 - rho) / scale) / math.log(rho)
    terms = max(1, math.ceil(need))
    # guard against log rounding
    while terms > 1 and bound(terms - 1) <= tol:
        terms -= 1
    while bound(terms) > tol and terms < max_terms:
        terms += 1
    terms = min(terms, max_terms)
    b = bound(terms)
    return terms, b, b <= tol


def _csum(values) -> complex:
    values = list(values)
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def _zero(method: Method = Method.SERIES) -> SeriesResult:
    return SeriesResult(ApproxValue(0j, 0.0, method, 0), True)


def _ratio_or_raise(p: ModelParams) -> complex:
    r = p.ratio
    if abs(r) >= 1.0:
        raise NotConvergent(f"|(beta/a)^b| = {abs(r)!r} >= 1: the defining series diverges")
    return r


def s_poly_series(p: ModelParams, pt: EvalPoint, cfg: SeriesConfig = SeriesConfig()) -> SeriesResult:
    """S_{n,beta,q}(x|k,a,b) = -(n!/(n-k)!) [2]_q^(1-k) a^-b sum_m r^m [m+x]_q^(n-k)."""
    n, x = pt.n, pt.x
    if n < p.k:
        return _zero()
    r = _ratio_or_raise(p)
    e = n - p.k
    pref = falling_ratio(n, p.k) * q_number(2, p.q) ** (1 - p.k) * p.a ** (-p.b)
    scale = abs(pref) * (1.0 / (1.0 - p.q)) ** e
    terms, bound, ok = truncation_length(scale, abs(r), cfg.tol, cfg.max_terms)
    total = _csum(r**m * q_number(m + x, p.q) ** e for m in range(terms))
    return SeriesResult(ApproxValue(-pref * total, bound, Method.SERIES, terms), ok)


def genfun_eval(p: ModelParams, t: complex, x: float, cfg: SeriesConfig = SeriesConfig()) -> SeriesResult:
    """Generating function -[2]_q^(1-k) t^k sum_m beta^(bm) a^(-bm-b) e^([m+x]_q t)."""
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    t = complex(t)
    if t == 0:
        return _zero()
    r = _ratio_or_raise(p)
    pref = q_number(2, p.q) ** (1 - p.k) * t**p.k * p.a ** (-p.b)
    scale = abs(pref) * math.exp(abs(t) / (1.0 - p.q))
    terms, bound, ok = truncation_length(scale, abs(r), cfg.tol, cfg.max_terms)
    total = _csum(r**m * cmath.exp(q_number(m + x, p.q) * t) for m in range(terms))
    return SeriesResult(ApproxValue(-pref * total, bound, Method.SERIES, terms), ok)


def hq_genocchi_reference(q: float, h: int, n: int, x: float, cfg: SeriesConfig = SeriesConfig()) -> SeriesResult:
    """(h,q)-Genocchi G^(h)_{n,q}(x) = n [2]_q sum_l (-1)^l q^((h-1)l) [x+l]_q^(n-1)."""
    if not (0 < q < 1):
        raise DomainError(f"q must lie in (0, 1), got {q!r}")
    if h < 2:
        raise DomainError(f"h must be >= 2, got {h!r}")
    if n < 0 or x < 0:
        raise DomainError("n and x must be non-negative")
    if n == 0:
        return _zero()
    rho = q ** (h - 1)
    pref = n * q_number(2, q)
    scale = pref * (1.0 / (1.0 - q)) ** (n - 1)
    terms, bound, ok = truncation_length(scale, rho, cfg.tol, cfg.max_terms)
    total = math.fsum((-rho) ** l * q_number(x + l, q) ** (n - 1) for l in range(terms))
    return SeriesResult(ApproxValue(complex(pref * total), bound, Method.SERIES, terms), ok)


def q_genocchi_reference(q: float, n: int, x: float, cfg: SeriesConfig = SeriesConfig()) -> SeriesResult:
    """q-Genocchi G_{n,q}(x) = n [2]_q sum_l (-1)^l q^l [x+l]_q^(n-1)."""
    return hq_genocchi_reference(q, 2, n, x, cfg)
