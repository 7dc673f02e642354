#!/usr/bin/env python3
"""Density sweep: how large must a random E be before pairs and triples
shatter?

|E| is parametrized as q^alpha. The sweep samples E, prunes it, runs both
witness searches, and appends one CSV row per cell. Everything is seeded:
the per-cell seed ignores alpha, so one trial's samples are nested across
the density grid and a witness found at some alpha persists at larger
alpha. Rerunning a config reproduces the CSV byte-for-byte except the
elapsed_ms column.

The asymptotic thresholds live at alpha = 5/2 (pairs) and 11/4 (triples);
at desk-scale q the empirical curve saturates far earlier, which is
exactly the kind of gap the sweep is for.
"""

import tempfile
from fractions import Fraction
from pathlib import Path

from dotvc import SweepConfig, run_sweep

out = Path(tempfile.gettempdir()) / "dotvc_sweep_demo.csv"
cfg = SweepConfig(
    q_list=((11, 1),),
    trials=8,
    seed=7,
    alphas=(Fraction(1), Fraction(5, 4), Fraction(3, 2), Fraction(7, 4),
            Fraction(2), Fraction(5, 2), Fraction(3)),
    budget=100_000,
)
records = run_sweep(cfg, out_path=out)

print(f"{len(records)} cells -> {out}\n")
print(f"{'alpha':>6} {'|E|':>5} {'pruned':>6} {'vc2 rate':>9} {'vc3 rate':>9}")
for alpha in cfg.alphas:
    cells = [r for r in records if r.alpha == alpha]
    vc2 = sum(r.vc2_found for r in cells) / len(cells)
    vc3 = sum(r.vc3_found for r in cells) / len(cells)
    print(f"{float(alpha):>6.2f} {cells[0].actual_size:>5} "
          f"{cells[0].pruned_size:>6} {vc2:>9.2f} {vc3:>9.2f}")

print("""
Reading the curve: at q = 11 the pair witnesses appear around alpha ~ 1.2
and triples complete their transition around alpha ~ 1.75 - far below the
asymptotic exponents, whose constants only assert themselves as q grows.
The CSV has one row per (q, alpha, trial) and is ready for any plotting
tool.""")
print("first two rows:")
for line in out.read_text().splitlines()[:3]:
    print(" ", line)
