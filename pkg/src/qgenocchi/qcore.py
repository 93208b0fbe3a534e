"""q-arithmetic, exact combinatorics and the shared parameter/value model."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational

__all__ = [
    "QGenocchiError",
    "DomainError",
    "NotConvergent",
    "BudgetExceeded",
    "PoleAtDenominator",
    "DegenerateRecurrence",
    "Method",
    "ModelParams",
    "EvalPoint",
    "ApproxValue",
    "ExactScalar",
    "q_number",
    "q_number_exact",
    "binomial",
    "falling_ratio",
]


class QGenocchiError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QGenocchiError, ValueError):
    pass


class NotConvergent(QGenocchiError):
    """The geometric ratio (beta/a)^b does not lie strictly inside the unit disc."""


class BudgetExceeded(QGenocchiError):
    pass


class PoleAtDenominator(QGenocchiError):
    def __init__(self, l: int, message: str | None = None):
        self.l = l
        super().__init__(message or f"beta^b q^(l-k) == a^b at l={l}")


class DegenerateRecurrence(QGenocchiError):
    pass


class Method(str, Enum):
    SERIES = "series"
    CLOSED_PRINTED = "closed_printed"
    CLOSED_CORRECTED = "closed_corrected"
    EXACT_DOWNCAST = "exact_downcast"


def _nonzero(value, name: str) -> None:
    if value == 0:
        raise DomainError(f"{name} must be nonzero")


@dataclass(frozen=True)
class ModelParams:
    """Parameter tuple (q, beta, a, b, k) of the unified q-Genocchi family.

    q is real in (0, 1); beta may be complex; a is a nonzero real and b a
    nonzero integer so that every power a^b, beta^b stays single-valued.
    """

    q: float
    beta: complex
    a: float
    b: int
    k: int

    def __post_init__(self):
        if not (0.0 < self.q < 1.0):
            raise DomainError(f"q must lie in (0, 1), got {self.q!r}")
        if isinstance(self.b, bool) or int(self.b) != self.b:
            raise DomainError(f"b must be an integer, got {self.b!r}")
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")
        if isinstance(self.a, complex):
            raise DomainError("a must be real")
        _nonzero(self.a, "a")
        _nonzero(self.b, "b")
        _nonzero(self.beta, "beta")
        object.__setattr__(self, "b", int(self.b))
        object.__setattr__(self, "k", int(self.k))

    @property
    def ratio(self) -> complex:
        """r = (beta/a)^b, the geometric ratio of the defining series."""
        return complex(self.beta / self.a) ** self.b

    @property
    def beta_b(self) -> complex:
        return complex(self.beta) ** self.b

    @property
    def a_b(self) -> float:
        return float(self.a) ** self.b

    def converges(self) -> bool:
        return abs(self.ratio) < 1.0


@dataclass(frozen=True)
class EvalPoint:
    n: int
    x: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DomainError(f"n must be a non-negative integer, got {self.n!r}")
        if self.x < 0:
            raise DomainError(f"x must be >= 0, got {self.x!r}")


@dataclass(frozen=True)
class ApproxValue:
    value: complex
    abs_error_bound: float
    method: Method
    terms_used: int = 0

    def __post_init__(self):
        if not (math.isfinite(self.abs_error_bound) and self.abs_error_bound >= 0):
            raise ValueError(f"invalid error bound {self.abs_error_bound!r}")


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot convert {type(v).__name__} to Fraction")


@dataclass(frozen=True)
class ExactScalar:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @classmethod
    def of(cls, v) -> "ExactScalar":
        if isinstance(v, ExactScalar):
            return v
        if isinstance(v, complex):
            return cls(Fraction(v.real), Fraction(v.imag))
        return cls(_frac(v))

    @staticmethod
    def _coerce(v):
        if isinstance(v, ExactScalar):
            return v
        if isinstance(v, (int, Fraction, complex)):
            return ExactScalar.of(v)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExactScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExactScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExactScalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("ExactScalar division by zero")
        return ExactScalar(
            (self.re * o.re + self.im * o.im) / den,
            (self.im * o.re - self.re * o.im) / den,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return ExactScalar(1) / (self ** (-e))
        result, base = ExactScalar(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def max_norm(self) -> Fraction:
        """max(|re|, |im|): exact, and zero iff the scalar is zero."""
        return max(abs(self.re), abs(self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"ExactScalar({self.re})"
        return f"ExactScalar({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _check_q(q) -> None:
    if not (0 < q < 1):
        raise DomainError(f"q must lie in (0, 1), got {q!r}")


def q_number(x: float, q: float) -> float:
    """[x]_q = (1 - q^x)/(1 - q)."""
    _check_q(q)
    # expm1 keeps relative accuracy for small x
    return -math.expm1(x * math.log(q)) / (1.0 - q)


def q_number_exact(x: int, q: Fraction) -> Fraction:
    q = _frac(q)
    _check_q(q)
    if int(x) != x or x < 0:
        raise DomainError(f"x must be a non-negative integer, got {x!r}")
    return (1 - q ** int(x)) / (1 - q)


def binomial(n: int, l: int) -> int:
    if l < 0 or l > n:
        return 0
    return math.comb(n, l)


def falling_ratio(n: int, k: int) -> int:
    """n!/(n-k)! = n(n-1)...(n-k+1)."""
    if k < 0 or n < k:
        raise DomainError(f"falling_ratio needs 0 <= k <= n, got n={n}, k={k}")
    return math.perm(n, k)


def principal_power(base: float, s: complex) -> complex:
    """base**s for base > 0 using the principal branch."""
    return cmath.exp(s * math.log(base))
