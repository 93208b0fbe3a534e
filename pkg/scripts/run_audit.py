"""Run the identity audit over a committed grid and write the canonical JSON report."""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from qgenocchi.identities import IDENTITY_GROUPS, run_audit
from qgenocchi.report import audit_record, canonical_json, envelope


@dataclass(frozen=True)
class AuditConfig:
    grid: str = "full"
    identity: str = "all"
    out: Path | None = None
    include_verdicts: bool = True


def parse_args(argv=None) -> AuditConfig:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", choices=("smoke", "full"), default="full")
    ap.add_argument("--identity", choices=sorted(IDENTITY_GROUPS), default="all")
    ap.add_argument("--out", type=Path, help="write the report here instead of stdout")
    ap.add_argument("--summary-only", action="store_true")
    a = ap.parse_args(argv)
    return AuditConfig(a.grid, a.identity, a.out, not a.summary_only)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    ids = [i.value for i in IDENTITY_GROUPS[cfg.identity]]
    t0 = time.perf_counter()
    report = run_audit(cfg.grid, ids)
    elapsed = time.perf_counter() - t0
    doc = envelope("verify", {"grid": cfg.grid, "identity": cfg.identity}, audit_record(report, cfg.include_verdicts))
    text = canonical_json(doc) + "\n"
    if cfg.out:
        cfg.out.write_text(text)
    else:
        sys.stdout.write(text)
    for row in report.summary():
        mark = "ok  " if row["full_pass"] else "fail"
        print(
            f"{mark} {row['identity_id']:<20} {row['variant_id']:<10} "
            f"{row['passed']:>5}/{row['points'] - row['errors']:<5} max diff {row['max_abs_diff']}",
            file=sys.stderr,
        )
    print(f"{len(report.verdicts)} verdicts in {elapsed:.1f}s", file=sys.stderr)
    return 0 if report.all_identities_pass() else 4


if __name__ == "__main__":
    sys.exit(main())
