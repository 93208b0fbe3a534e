"""Error of the q -> 1 extrapolant against the classical recurrence, per Richardson order."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from qgenocchi.closed import ClosedVariant, ozden_y
from qgenocchi.identities import LIMIT_LADDER, q1_ladder_values, richardson
from qgenocchi.qcore import ExactScalar


@dataclass(frozen=True)
class SweepConfig:
    beta: Fraction = Fraction(1, 3)
    a: Fraction = Fraction(1)
    b: int = 1
    k: int = 1
    x: int = 0
    n_max: int = 6


def sweep(cfg: SweepConfig) -> list[list[float]]:
    rows = []
    for n in range(cfg.n_max + 1):
        ref = complex(ExactScalar.of(ozden_y(n, cfg.x, cfg.k, cfg.a, cfg.b, cfg.beta)))
        hs, vals = q1_ladder_values(cfg.beta, cfg.a, cfg.b, cfg.k, n, cfg.x, ClosedVariant.CORRECTED)
        rows.append([abs(complex(richardson(vals, hs, order)) - ref) for order in range(len(LIMIT_LADDER))])
    return rows


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--beta", type=Fraction, default=Fraction(1, 3))
    ap.add_argument("--a", type=Fraction, default=Fraction(1))
    ap.add_argument("--b", type=int, default=1)
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--x", type=int, default=0)
    ap.add_argument("--n-max", type=int, default=6)
    a = ap.parse_args(argv)
    cfg = SweepConfig(a.beta, a.a, a.b, a.k, a.x, a.n_max)
    print("n  " + "  ".join(f"order {o:<3}" for o in range(len(LIMIT_LADDER))))
    for n, errs in enumerate(sweep(cfg)):
        print(f"{n:<2} " + "  ".join(f"{e:9.2e}" for e in errs))


if __name__ == "__main__":
    main()
