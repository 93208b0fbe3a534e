"""Compare both closed-form variants with the defining series and report the worst points."""

from __future__ import annotations

import argparse
import heapq
from dataclasses import dataclass

from qgenocchi.closed import ClosedVariant, s_poly_closed
from qgenocchi.grids import closed_oracle_points
from qgenocchi.qcore import EvalPoint
from qgenocchi.series import SeriesConfig, s_poly_series


@dataclass(frozen=True)
class OracleConfig:
    full: bool = True
    tol: float = 1e-12
    worst: int = 5


def rel_dev(ref: complex, val: complex) -> float:
    scale = max(abs(ref), abs(val))
    return 0.0 if scale == 0 else abs(ref - val) / scale


def run(cfg: OracleConfig) -> dict[str, list[tuple[float, str]]]:
    worst: dict[str, list[tuple[float, str]]] = {v.value: [] for v in ClosedVariant}
    for p, n, x in closed_oracle_points(cfg.full):
        pt = EvalPoint(n, x)
        ref = s_poly_series(p, pt, SeriesConfig(tol=cfg.tol)).value.value
        for v in ClosedVariant:
            d = rel_dev(ref, s_poly_closed(p, pt, v).value)
            label = f"q={p.q} beta={p.beta:.4g} a={p.a} b={p.b} k={p.k} n={n} x={x}"
            heapq.heappush(worst[v.value], (d, label))
            if len(worst[v.value]) > cfg.worst:
                heapq.heappop(worst[v.value])
    return worst


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--smoke", action="store_true", help="use the small grid")
    ap.add_argument("--worst", type=int, default=5)
    a = ap.parse_args(argv)
    cfg = OracleConfig(full=not a.smoke, worst=a.worst)
    for variant, rows in run(cfg).items():
        print(f"{variant}: worst relative deviations")
        for d, label in sorted(rows, reverse=True):
            print(f"  {d:.3e}  {label}")


if __name__ == "__main__":
    main()
