"""Committed parameter grids for the audits.  Changing any of these changes report bytes."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction as F

from .closed import ExactParams
from .qcore import ExactScalar, ModelParams

__all__ = ["Grid", "GRIDS", "get_grid", "closed_oracle_points"]

# target ratios (beta/a)^b, cycled over the closed-form oracle grid
_RATIOS = (0.6, -0.45, 0.3 + 0.5j, 0.85)


def closed_oracle_points(full: bool = True) -> list[tuple[ModelParams, int, float]]:
    """Float points with |(beta/a)^b| < 1 for the closed-form vs series check."""
    if full:
        qs, ks, bs, as_ = (0.2, 0.5, 0.9), (1, 2, 3), (-2, -1, 1, 2, 3), (0.5, 1.0, 2.0, -1.5)
        ns, xs = range(9), (0.0, 0.25, 1.0, 2.5)
    else:
        qs, ks, bs, as_ = (0.5,), (1, 2), (-1, 1, 2), (1.0, 2.0, -1.5)
        ns, xs = range(6), (0.0, 1.0)
    out = []
    i = 0
    for q in qs:
        for k in ks:
            for b in bs:
                for a in as_:
                    r = _RATIOS[i % len(_RATIOS)]
                    i += 1
                    beta = a * cmath.exp(cmath.log(r) / b)
                    beta = beta.real if abs(beta.imag) < 1e-15 else beta
                    p = ModelParams(q=q, beta=beta, a=a, b=b, k=k)
                    for n in ns:
                        for x in xs:
                            out.append((p, n, x))
    return out


def _ex(q, beta, a, b, k) -> ExactParams:
    return ExactParams(F(q), ExactScalar.of(beta), F(a), b, k)


_C = ExactScalar(F(1, 4), F(1, 3))

_EXACT_BASE = (
    (F(1, 3), 1, 1, 1),
    (F(1, 3), 1, 1, 2),
    (F(1, 5), 2, 1, 1),
    (F(1, 5), 2, 1, 3),
    (F(-2, 7), F(3, 2), 2, 1),
    (_C, 1, 1, 1),
    (_C, -2, -1, 2),
    (F(3, 5), F(1, 2), -1, 1),
    (F(-1, 3), -2, 1, 2),
    (F(1, 7), 3, 2, 2),
    (F(5, 4), 2, 3, 1),
    (F(-3, 5), 1, -2, 1),
)

# (beta, a, b, k) for the q -> 1 extrapolation; 20 points.  Every pole of the
# closed form in q (beta^b q^j = a^b) stays at distance >= 0.12 from q = 1.
_LIMIT_BASE = (
    (F(1, 3), 1, 1, 1),
    (F(1, 3), 1, 1, 2),
    (F(1, 5), 2, 1, 1),
    (F(1, 5), 2, 1, 3),
    (F(-2, 7), F(3, 2), 2, 1),
    (F(-3, 5), F(1, 2), -1, 1),
    (F(-1, 3), -2, 1, 2),
    (F(1, 7), 3, 2, 2),
    (F(-1, 5), 1, -2, 1),
    (F(1, 4), 1, 1, 1),
    (F(1, 2), -1, 1, 1),
    (F(2, 5), 1, 3, 2),
    (F(1, 4), F(1, 2), 1, 3),
    (F(5), 1, -1, 1),
    (F(1, 3), -1, 2, 1),
    (F(2, 3), 2, -2, 2),
    (F(-1, 2), 3, 1, 1),
    (F(1, 6), F(-1, 2), 1, 2),
    (F(4, 5), -2, 1, 3),
    (F(1, 3), 1, -1, 2),
)

# (q, beta, a, b) with |(beta/a)^b| < 1 for the interpolation audit
_ZETA_BASE = (
    (0.5, 1 / 3, 1.0, 1),
    (0.3, 0.4, -1.0, 1),
    (0.8, 0.5, 2.0, 2),
    (0.6, 2.0, 1.5, -1),
)


@dataclass(frozen=True)
class Grid:
    grid_id: str
    exact_params: tuple[ExactParams, ...]
    ns: tuple[int, ...]
    xs: tuple[int, ...]
    ds: tuple[int, ...]
    closed_full: bool
    spec_qs: tuple[float, ...]
    spec_hs: tuple[int, ...]
    spec_ns: tuple[int, ...]
    spec_xs: tuple[float, ...]
    limit_params: tuple[tuple, ...]
    limit_ns: tuple[int, ...]
    limit_xs: tuple[int, ...]
    zeta_params: tuple[ModelParams, ...] = field(default=())
    zeta_ns: tuple[int, ...] = ()
    zeta_xs: tuple[float, ...] = ()


def _zeta_params(ks) -> tuple[ModelParams, ...]:
    return tuple(ModelParams(q, beta, a, b, k) for (q, beta, a, b) in _ZETA_BASE for k in ks)


GRIDS = {
    "smoke": Grid(
        grid_id="smoke",
        exact_params=tuple(_ex(F(1, 2), *t) for t in _EXACT_BASE[:4] + _EXACT_BASE[5:7]),
        ns=tuple(range(5)),
        xs=(0, 1),
        ds=(1, 2),
        closed_full=False,
        spec_qs=(0.5,),
        spec_hs=(2, 3),
        spec_ns=tuple(range(5)),
        spec_xs=(0.0, 0.5),
        limit_params=_LIMIT_BASE[:4],
        limit_ns=(0, 1, 2, 3),
        limit_xs=(0, 1),
        zeta_params=_zeta_params((1, 2)),
        zeta_ns=tuple(range(5)),
        zeta_xs=(1.0,),
    ),
    "full": Grid(
        grid_id="full",
        exact_params=tuple(_ex(q, *t) for q in (F(1, 2), F(1, 3), F(3, 4)) for t in _EXACT_BASE),
        ns=tuple(range(7)),
        xs=(0, 1, 2),
        ds=(1, 2, 3),
        closed_full=True,
        spec_qs=(0.3, 0.5, 0.8),
        spec_hs=(2, 3, 4),
        spec_ns=tuple(range(7)),
        spec_xs=(0.0, 0.5, 1.0),
        limit_params=_LIMIT_BASE,
        limit_ns=tuple(range(7)),
        limit_xs=(0, 1, 2),
        zeta_params=_zeta_params((1, 2, 3)),
        zeta_ns=tuple(range(7)),
        zeta_xs=(0.5, 1.0, 2.0),
    ),
}


def get_grid(grid_id: str) -> Grid:
    try:
        return GRIDS[grid_id]
    except KeyError:
        raise KeyError(f"unknown grid {grid_id!r}; choose from {sorted(GRIDS)}") from None
