"""Finite closed form for S_{n,beta,q}(x|k,a,b), exact mode, and classical oracles.

The closed form is

    k! [2]_q^(1-k) (1/(1-q))^(n-k) * sum_{l=k..n} C(n,l) C(l,k) (-1)^(l-k)
        q^((l-k)x) / (beta^b q^(l-k) - a^b)

optionally divided by a^b (the ``printed`` variant).  The ``corrected``
variant omits that division.  Which one matches the defining series is
decided by :mod:`qgenocchi.identities`, not here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .qcore import (
    ApproxValue,
    DegenerateRecurrence,
    DomainError,
    EvalPoint,
    ExactScalar,
    Method,
    ModelParams,
    PoleAtDenominator,
    binomial,
    falling_ratio,
)

__all__ = [
    "ClosedVariant",
    "ExpansionVariant",
    "ExactParams",
    "closed_sum",
    "s_poly_closed",
    "s_poly_exact",
    "s_numbers",
    "s_numbers_exact",
    "expand_from_numbers",
    "expand_from_numbers_exact",
    "classical_genocchi",
    "classical_genocchi_poly",
    "classical_euler_poly",
    "ozden_y",
]

FLOAT_POLE_RTOL = 1e-14
FLOAT_ROUNDING_BUDGET = 1e-13


class ClosedVariant(str, Enum):
    PRINTED = "printed"
    CORRECTED = "corrected"

    @property
    def description(self) -> str:
        if self is ClosedVariant.PRINTED:
            return "finite sum with the 1/a^b prefactor, as typeset"
        return "finite sum without the 1/a^b prefactor (printed times a^b)"

    @property
    def method(self) -> Method:
        return Method.CLOSED_PRINTED if self is ClosedVariant.PRINTED else Method.CLOSED_CORRECTED


class ExpansionVariant(str, Enum):
    PRINTED = "printed"
    CORRECTED = "corrected"


@dataclass(frozen=True)
class ExactParams:
    """Exact-mode mirror of ModelParams: every field rational (beta complex-rational)."""

    q: Fraction
    beta: ExactScalar
    a: Fraction
    b: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "beta", ExactScalar.of(self.beta))
        object.__setattr__(self, "a", Fraction(self.a))
        if not (0 < self.q < 1):
            raise DomainError(f"q must lie in (0, 1), got {self.q}")
        if int(self.b) != self.b or self.b == 0:
            raise DomainError(f"b must be a nonzero integer, got {self.b!r}")
        if int(self.k) != self.k or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")
        if self.a == 0 or not self.beta:
            raise DomainError("a and beta must be nonzero")
        object.__setattr__(self, "b", int(self.b))
        object.__setattr__(self, "k", int(self.k))

    @property
    def beta_b(self) -> ExactScalar:
        return self.beta**self.b

    @property
    def a_b(self) -> Fraction:
        return self.a**self.b

    @property
    def ratio(self) -> ExactScalar:
        return (self.beta / self.a) ** self.b

    def to_float(self) -> ModelParams:
        beta = complex(self.beta)
        return ModelParams(
            q=float(self.q),
            beta=beta if beta.imag else beta.real,
            a=float(self.a),
            b=self.b,
            k=self.k,
        )

    @classmethod
    def from_float(cls, p: ModelParams) -> "ExactParams":
        return cls(Fraction(p.q), ExactScalar.of(complex(p.beta)), Fraction(p.a), p.b, p.k)


def closed_sum(q, qx, beta_b, a_b, k: int, n: int, variant: ClosedVariant = ClosedVariant.CORRECTED):
    """Evaluate the finite closed form with raw (exact) inputs.

    ``qx`` stands for q^x, so non-integer x with q^x rational (as happens in
    the distribution formula at deformation q^d) is handled exactly.  q may be
    any rational other than 1 here, which the symmetry audit relies on.
    """
    if n < k:
        return ExactScalar(0)
    total = ExactScalar(0)
    qj = Fraction(1)
    qxj = Fraction(1) if not isinstance(qx, ExactScalar) else ExactScalar(1)
    for l in range(k, n + 1):
        j = l - k
        den = beta_b * qj - a_b
        if den == 0:
            raise PoleAtDenominator(l)
        coeff = binomial(n, l) * binomial(l, k) * (-1) ** j
        total = total + coeff * qxj / den
        qj = qj * q
        qxj = qxj * qx
    value = math.factorial(k) * (1 + q) ** (1 - k) * (1 / (1 - q)) ** (n - k) * total
    if variant is ClosedVariant.PRINTED:
        value = value / a_b
    return ExactScalar.of(value) if not isinstance(value, ExactScalar) else value


def _float_pole_check(p: ModelParams, n: int) -> None:
    bb, ab = p.beta_b, p.a_b
    for l in range(p.k, n + 1):
        if abs(bb * p.q ** (l - p.k) - ab) <= FLOAT_POLE_RTOL * abs(ab):
            raise PoleAtDenominator(l)


def _float_qx(q: float, x: float) -> Fraction:
    if float(x).is_integer():
        return Fraction(q) ** int(x)
    return Fraction(q**x)


def s_poly_closed(p: ModelParams, pt: EvalPoint, variant: ClosedVariant = ClosedVariant.CORRECTED) -> ApproxValue:
    """Float-mode closed form.

    The alternating sum loses roughly (1/(1-q))^(n-k) digits to cancellation,
    so the binary inputs are summed in exact rational arithmetic and rounded once.
    """
    if pt.n < p.k:
        return ApproxValue(0j, 0.0, variant.method, 0)
    _float_pole_check(p, pt.n)
    q = Fraction(p.q)
    beta = complex(p.beta)
    # real beta stays in Fraction, which halves the rational work
    beta_b = Fraction(beta.real) ** p.b if beta.imag == 0 else ExactScalar.of(beta) ** p.b
    a_b = Fraction(p.a) ** p.b
    value = complex(closed_sum(q, _float_qx(p.q, pt.x), beta_b, a_b, p.k, pt.n, variant))
    return ApproxValue(value, FLOAT_ROUNDING_BUDGET * abs(value), variant.method, pt.n - p.k + 1)


def _check_exact_x(x) -> int:
    if int(x) != x or x < 0:
        raise DomainError(f"exact mode needs an integer x >= 0, got {x!r}")
    return int(x)


def s_poly_exact(p: ExactParams, n: int, x: int, variant: ClosedVariant = ClosedVariant.CORRECTED) -> ExactScalar:
    x = _check_exact_x(x)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n!r}")
    return closed_sum(p.q, p.q**x, p.beta_b, p.a_b, p.k, n, variant)


def s_numbers(p: ModelParams, n_max: int, variant: ClosedVariant = ClosedVariant.CORRECTED) -> list[ApproxValue]:
    """[S_0, ..., S_{n_max}] at x = 0."""
    return [s_poly_closed(p, EvalPoint(n, 0.0), variant) for n in range(n_max + 1)]


def s_numbers_exact(p: ExactParams, n_max: int, variant: ClosedVariant = ClosedVariant.CORRECTED) -> list[ExactScalar]:
    return [s_poly_exact(p, n, 0, variant) for n in range(n_max + 1)]


def _expansion_sum(numbers, n, qx, xq, k, variant):
    total = sum((binomial(n, l) * qx**l * numbers[l] * xq ** (n - l) for l in range(n + 1)), ExactScalar(0))
    if variant is ExpansionVariant.CORRECTED:
        total = total / qx**k
    return total


def expand_from_numbers(
    p: ModelParams,
    pt: EvalPoint,
    variant: ExpansionVariant,
    closed_variant: ClosedVariant = ClosedVariant.CORRECTED,
) -> ApproxValue:
    """sum_l C(n,l) q^(lx) S_l [x]_q^(n-l), times q^(-kx) for the corrected variant."""
    variant = ExpansionVariant(variant)
    ep = ExactParams.from_float(p)
    qx = _float_qx(p.q, pt.x)
    xq = (1 - qx) / (1 - ep.q)
    numbers = [closed_sum(ep.q, Fraction(1), ep.beta_b, ep.a_b, p.k, l, closed_variant) for l in range(pt.n + 1)]
    value = complex(_expansion_sum(numbers, pt.n, qx, xq, p.k, variant))
    method = closed_variant.method
    return ApproxValue(value, FLOAT_ROUNDING_BUDGET * abs(value), method, pt.n + 1)


def expand_from_numbers_exact(
    p: ExactParams,
    n: int,
    x: int,
    variant: ExpansionVariant,
    closed_variant: ClosedVariant = ClosedVariant.CORRECTED,
) -> ExactScalar:
    variant = ExpansionVariant(variant)
    x = _check_exact_x(x)
    qx = p.q**x
    numbers = s_numbers_exact(p, n, closed_variant)
    return _expansion_sum(numbers, n, qx, (1 - qx) / (1 - p.q), p.k, variant)


def classical_genocchi(n: int) -> Fraction:
    """Genocchi number G_n from (e^t + 1) sum G_n t^n/n! = 2t."""
    return classical_genocchi_poly(n, Fraction(0))


def classical_genocchi_poly(n: int, x) -> Fraction:
    """G_n(x) from sum_j C(n,j) G_j(x) + G_n(x) = 2 n x^(n-1)."""
    x = Fraction(x)
    g: list[Fraction] = []
    for m in range(n + 1):
        rhs = 2 * m * x ** (m - 1) if m >= 1 else Fraction(0)
        acc = sum((binomial(m, j) * g[j] for j in range(m)), Fraction(0))
        g.append((rhs - acc) / 2)
    return g[n]


def classical_euler_poly(n: int, x) -> Fraction:
    """E_n(x) from sum_j C(n,j) E_j(x) + E_n(x) = 2 x^n."""
    x = Fraction(x)
    e: list[Fraction] = []
    for m in range(n + 1):
        acc = sum((binomial(m, j) * e[j] for j in range(m)), Fraction(0))
        e.append((2 * x**m - acc) / 2)
    return e[n]


def ozden_y(n: int, x, k: int, a, b: int, beta) -> Fraction | ExactScalar:
    """Unified Bernoulli/Euler/Genocchi value y_{n,beta}(x; k, a, b).

    Coefficients of 2^(1-k) t^k e^(xt) / (beta^b e^t - a^b), solved from

        beta^b sum_j C(n,j) y_j - a^b y_n = 2^(1-k) n!/(n-k)! x^(n-k).

    k = 0 is accepted (Euler specialization).
    """
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k!r}")
    x = Fraction(x)
    beta_b = ExactScalar.of(beta) ** int(b)
    a_b = Fraction(a) ** int(b)
    lead = beta_b - a_b
    if lead == 0:
        raise DegenerateRecurrence("beta^b == a^b makes the recurrence singular")
    scale = Fraction(2) ** (1 - k)
    y: list[ExactScalar] = []
    for m in range(n + 1):
        rhs = scale * falling_ratio(m, k) * x ** (m - k) if m >= k else Fraction(0)
        acc = sum((binomial(m, j) * y[j] for j in range(m)), ExactScalar(0))
        y.append((rhs - beta_b * acc) / lead)
    out = y[n]
    return out.re if out.is_real() else out
