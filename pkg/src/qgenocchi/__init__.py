"""Unified q-extension Genocchi polynomials: evaluators, identity audits, zeta interpolation."""

from .closed import (
    ClosedVariant,
    ExactParams,
    ExpansionVariant,
    classical_euler_poly,
    classical_genocchi,
    classical_genocchi_poly,
    expand_from_numbers,
    expand_from_numbers_exact,
    ozden_y,
    s_numbers,
    s_poly_closed,
    s_poly_exact,
)
from .qcore import (
    ApproxValue,
    BudgetExceeded,
    DegenerateRecurrence,
    DomainError,
    EvalPoint,
    ExactScalar,
    Method,
    ModelParams,
    NotConvergent,
    PoleAtDenominator,
    binomial,
    falling_ratio,
    q_number,
    q_number_exact,
)
from .series import SeriesConfig, SeriesResult, genfun_eval, hq_genocchi_reference, q_genocchi_reference, s_poly_series
from .zeta import ZetaPoint, zeta_eval

__version__ = "0.1.0"
